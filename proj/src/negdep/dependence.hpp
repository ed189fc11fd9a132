#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "negdep/core.hpp"
#include "negdep/flow.hpp"
#include "negdep/rng.hpp"
#include "negdep/upsets.hpp"

namespace negdep::dependence {

// Witnesses store upward-closed families by their generating antichain.
// Masks are always expressed in the indexing of the full ground set (bits of
// removed elements are simply never set), so certificates re-verify against
// the original distribution without re-indexing.

template <class S>
struct WnrWitness {
  int element = 0;
  std::vector<mask_t> upset_min;
  S margin = S(0);  // E[1_U(S\i) | i in S] - E[1_U(S\i) | i not in S]
};

template <class S>
struct NaWitness {
  mask_t set_a = 0, set_b = 0;
  std::vector<mask_t> upset_a_min, upset_b_min;
  S margin = S(0);  // Cov[1_{S∩A in U_A}, 1_{S∩B in U_B}]
};

template <class S>
struct NrWitness {
  mask_t cond_set = 0;   // T
  mask_t trace_lo = 0;   // R-
  mask_t trace_hi = 0;   // R+ = R- + {j}
  std::vector<mask_t> upset_min;
  S margin = S(0);  // E[1_U(S\T) | S∩T=R+] - E[1_U(S\T) | S∩T=R-]
};

template <class S>
struct NcdWitness {
  mask_t cylinder = 0;
  bool include_side = true;  // true: Pr[T ⊆ S] side, false: Pr[T ⊆ S^c] side
  S margin = S(0);           // probability excess over the product bound
};

template <class S>
using Witness = std::variant<WnrWitness<S>, NaWitness<S>, NrWitness<S>, NcdWitness<S>>;

template <class S>
struct Verdict {
  bool holds = true;
  std::optional<Witness<S>> witness;
};

namespace detail {

inline bool in_upset_full(const std::vector<mask_t>& gens, mask_t m) {
  for (mask_t g : gens)
    if ((g & ~m) == 0) return true;
  return false;
}

/// Re-indexes generator masks from a compressed lattice back to full-ground
/// indexing, scattering bit t into the t-th element of `kept`.
inline std::vector<mask_t> expand_generators(const std::vector<mask_t>& gens, mask_t kept) {
  std::vector<mask_t> out;
  out.reserve(gens.size());
  for (mask_t g : gens) out.push_back(expand_mask(g, kept));
  return out;
}

}  // namespace detail

/// WNR: for every element i with marginal strictly between 0 and 1, the law
/// of S\{i} given i absent must stochastically dominate the law given i
/// present. Elements with 0/1 marginals have one conditional undefined and
/// are skipped (vacuous truth).
template <class S>
Verdict<S> check_wnr(const core::Distribution<S>& d) {
  std::vector<S> x = core::marginals(d);
  const S tol = scalar_traits<S>::eq_tol();
  for (int i = 0; i < d.n; ++i) {
    if (x[i] <= tol || x[i] >= S(1) - tol) continue;
    auto absent = core::condition_on_element(d, i, false);
    auto present = core::condition_on_element(d, i, true);
    auto res = stochastic_dominance(absent, present);
    if (!res.dominates) {
      mask_t kept = full_mask(d.n) & ~(mask_t(1) << i);
      WnrWitness<S> w;
      w.element = i;
      w.upset_min = detail::expand_generators(res.upset_min, kept);
      w.margin = res.margin;
      return {false, Witness<S>(std::move(w))};
    }
  }
  return {};
}

/// Independent route for the same property, via the covariance form: WNR is
/// equivalent to Cov[f(S\i), 1_{i in S}] <= 0 for all monotone f. Covariance
/// is linear in f and every monotone 0/1-valued function is an upset
/// indicator, so checking all upset indicators over U\{i} is exhaustive.
/// Requires n <= 6 (upset enumeration over 5 elements).
template <class S>
Verdict<S> check_wnr_covariance(const core::Distribution<S>& d) {
  require(d.n <= 6, Errc::limit, "covariance WNR check supports n <= 6");
  std::vector<S> x = core::marginals(d);
  const S tol = scalar_traits<S>::eq_tol();
  for (int i = 0; i < d.n; ++i) {
    mask_t bit = mask_t(1) << i;
    mask_t kept = full_mask(d.n) & ~bit;
    int k = d.n - 1;
    // Joint table over (S\i compressed, 1_{i in S}).
    std::vector<S> with_i(std::size_t(1) << k, S(0)), total(std::size_t(1) << k, S(0));
    for (mask_t m = 0; m < d.size(); ++m) {
      if (d.pmf[m] == S(0)) continue;
      mask_t c = compress_mask(m, kept);
      total[c] += d.pmf[m];
      if (m & bit) with_i[c] += d.pmf[m];
    }
    for (upset_t u : all_upsets(k)) {
      if (u == 0 || u == upset_full(k)) continue;
      S joint(0), pu(0);
      for (mask_t c = 0; c < (mask_t(1) << k); ++c) {
        if (!upset_contains(u, c)) continue;
        joint += with_i[c];
        pu += total[c];
      }
      S cov = joint - pu * x[i];
      if (cov > tol) {
        WnrWitness<S> w;
        w.element = i;
        w.upset_min = detail::expand_generators(upset_minimal_sets(u, k), kept);
        // Report the Eq-(1)-style gap when conditionals exist, else raw cov.
        if (x[i] > S(0) && x[i] < S(1))
          w.margin = joint / x[i] - (pu - joint) / (S(1) - x[i]);
        else
          w.margin = cov;
        return {false, Witness<S>(std::move(w))};
      }
    }
  }
  return {};
}

/// NA: nonpositive covariance for every pair of monotone functions on
/// disjoint element sets. By bilinearity of covariance and the layer-cake
/// decomposition of monotone functions into upset indicators plus constants,
/// it suffices to check indicator pairs of upward-closed families, which are
/// the extreme points. Practical cap n <= 6 (Dedekind growth of the upset
/// count on the larger side).
template <class S>
Verdict<S> check_na(const core::Distribution<S>& d) {
  require(d.n <= 6, Errc::limit, "NA check supports n <= 6");
  const S tol = scalar_traits<S>::eq_tol();
  mask_t full = full_mask(d.n);
  for (mask_t A = 1; A <= full; ++A) {
    mask_t comp = full & ~A;
    // Iterate nonempty B disjoint from A; visit each unordered pair once.
    for (mask_t B = comp; B > 0; B = (B - 1) & comp) {
      if (!has_bit(A, lowest_bit_index(A | B))) continue;
      int a = popcount(A), b = popcount(B);
      // Joint law of (S∩A, S∩B), compressed.
      std::vector<std::vector<S>> joint(std::size_t(1) << a,
                                        std::vector<S>(std::size_t(1) << b, S(0)));
      for (mask_t m = 0; m < d.size(); ++m) {
        if (d.pmf[m] == S(0)) continue;
        joint[compress_mask(m, A)][compress_mask(m, B)] += d.pmf[m];
      }
      std::vector<S> pa(std::size_t(1) << a, S(0)), pb(std::size_t(1) << b, S(0));
      for (mask_t ma = 0; ma < (mask_t(1) << a); ++ma)
        for (mask_t mb = 0; mb < (mask_t(1) << b); ++mb) {
          pa[ma] += joint[ma][mb];
          pb[mb] += joint[ma][mb];
        }
      const auto& ups_a = all_upsets(a);
      const auto& ups_b = all_upsets(b);
      std::vector<S> colsum(std::size_t(1) << a);
      for (upset_t ub : ups_b) {
        if (ub == 0 || ub == upset_full(b)) continue;
        S prb(0);
        for (mask_t ma = 0; ma < (mask_t(1) << a); ++ma) colsum[ma] = S(0);
        for (mask_t mb = 0; mb < (mask_t(1) << b); ++mb) {
          if (!upset_contains(ub, mb)) continue;
          prb += pb[mb];
          for (mask_t ma = 0; ma < (mask_t(1) << a); ++ma) colsum[ma] += joint[ma][mb];
        }
        for (upset_t ua : ups_a) {
          if (ua == 0 || ua == upset_full(a)) continue;
          S pra(0), pj(0);
          for (mask_t ma = 0; ma < (mask_t(1) << a); ++ma) {
            if (!upset_contains(ua, ma)) continue;
            pra += pa[ma];
            pj += colsum[ma];
          }
          S cov = pj - pra * prb;
          if (cov > tol) {
            NaWitness<S> w;
            w.set_a = A;
            w.set_b = B;
            w.upset_a_min = detail::expand_generators(upset_minimal_sets(ua, a), A);
            w.upset_b_min = detail::expand_generators(upset_minimal_sets(ub, b), B);
            w.margin = cov;
            return {false, Witness<S>(std::move(w))};
          }
        }
      }
    }
  }
  return {};
}

/// NR: for every T and every trace pair R- ⊂ R+ ⊆ T, the law of S\T given
/// S∩T=R- must dominate the law given S∩T=R+. Adjacent pairs (R+ = R- + one
/// element) suffice: stochastic dominance is transitive, so a violation for
/// a distant pair forces one along any chain of adjacent steps between them.
template <class S>
Verdict<S> check_nr(const core::Distribution<S>& d) {
  mask_t full = full_mask(d.n);
  for (mask_t t = 1; t <= full; ++t) {
    mask_t rest = full & ~t;
    // Trace probabilities within T.
    std::vector<S> trace_pr(std::size_t(1) << popcount(t), S(0));
    for (mask_t m = 0; m < d.size(); ++m)
      if (!(d.pmf[m] == S(0))) trace_pr[compress_mask(m & t, t)] += d.pmf[m];

    for (mask_t hi_c = 0; hi_c < trace_pr.size(); ++hi_c) {
      if (hi_c == 0 || trace_pr[hi_c] == S(0)) continue;
      mask_t hi = expand_mask(hi_c, t);
      for (int jb = 0; jb < d.n; ++jb) {
        mask_t jbit = mask_t(1) << jb;
        if (!(hi & jbit)) continue;
        mask_t lo = hi & ~jbit;
        if (trace_pr[compress_mask(lo, t)] == S(0)) continue;
        auto law_lo = core::condition_on_trace(d, t, lo);
        auto law_hi = core::condition_on_trace(d, t, hi);
        auto res = stochastic_dominance(law_lo, law_hi);
        if (!res.dominates) {
          NrWitness<S> w;
          w.cond_set = t;
          w.trace_lo = lo;
          w.trace_hi = hi;
          w.upset_min = detail::expand_generators(res.upset_min, rest);
          w.margin = res.margin;
          return {false, Witness<S>(std::move(w))};
        }
      }
    }
  }
  return {};
}

/// NCD: joint inclusion and joint exclusion probabilities of every cylinder
/// T (|T| >= 2) bounded by the product-distribution values.
template <class S>
Verdict<S> check_ncd(const core::Distribution<S>& d) {
  std::vector<S> x = core::marginals(d);
  const S tol = scalar_traits<S>::eq_tol();
  mask_t full = full_mask(d.n);

  // Superset sums (Pr[T ⊆ S]) and subset sums over complements (Pr[T ⊆ S^c]).
  std::vector<S> incl = d.pmf, sub = d.pmf;
  for (int i = 0; i < d.n; ++i) {
    mask_t bit = mask_t(1) << i;
    for (mask_t m = 0; m <= full; ++m) {
      if (!(m & bit)) {
        incl[m] += incl[m | bit];
        sub[m | bit] += sub[m];
      }
    }
  }

  for (mask_t t = 0; t <= full; ++t) {
    if (popcount(t) < 2) continue;
    S prod_in(1), prod_out(1);
    for (int i = 0; i < d.n; ++i)
      if (has_bit(t, i)) {
        prod_in *= x[i];
        prod_out *= S(1) - x[i];
      }
    if (incl[t] > prod_in + tol)
      return {false, Witness<S>(NcdWitness<S>{t, true, incl[t] - prod_in})};
    S excl = sub[full & ~t];
    if (excl > prod_out + tol)
      return {false, Witness<S>(NcdWitness<S>{t, false, excl - prod_out})};
  }
  return {};
}

/// Recomputes a witness's violation directly from the defining inequality.
/// A valid certificate reproduces (at least) its stored margin.
template <class S>
S reverify(const core::Distribution<S>& d, const Witness<S>& witness) {
  return std::visit(
      [&](const auto& w) -> S {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, WnrWitness<S>>) {
          mask_t bit = mask_t(1) << w.element;
          S hit_in(0), mass_in(0), hit_out(0), mass_out(0);
          for (mask_t m = 0; m < d.size(); ++m) {
            if (d.pmf[m] == S(0)) continue;
            bool in = detail::in_upset_full(w.upset_min, m & ~bit);
            if (m & bit) {
              mass_in += d.pmf[m];
              if (in) hit_in += d.pmf[m];
            } else {
              mass_out += d.pmf[m];
              if (in) hit_out += d.pmf[m];
            }
          }
          require(mass_in > S(0) && mass_out > S(0), Errc::zero_probability,
                  "witness conditions on a zero-probability event");
          return hit_in / mass_in - hit_out / mass_out;
        } else if constexpr (std::is_same_v<W, NaWitness<S>>) {
          S e_ab(0), e_a(0), e_b(0);
          for (mask_t m = 0; m < d.size(); ++m) {
            if (d.pmf[m] == S(0)) continue;
            bool ia = detail::in_upset_full(w.upset_a_min, m & w.set_a);
            bool ib = detail::in_upset_full(w.upset_b_min, m & w.set_b);
            if (ia) e_a += d.pmf[m];
            if (ib) e_b += d.pmf[m];
            if (ia && ib) e_ab += d.pmf[m];
          }
          return e_ab - e_a * e_b;
        } else if constexpr (std::is_same_v<W, NrWitness<S>>) {
          S hit_hi(0), mass_hi(0), hit_lo(0), mass_lo(0);
          for (mask_t m = 0; m < d.size(); ++m) {
            if (d.pmf[m] == S(0)) continue;
            mask_t trace = m & w.cond_set;
            bool in = detail::in_upset_full(w.upset_min, m & ~w.cond_set);
            if (trace == w.trace_hi) {
              mass_hi += d.pmf[m];
              if (in) hit_hi += d.pmf[m];
            } else if (trace == w.trace_lo) {
              mass_lo += d.pmf[m];
              if (in) hit_lo += d.pmf[m];
            }
          }
          require(mass_hi > S(0) && mass_lo > S(0), Errc::zero_probability,
                  "witness conditions on a zero-probability event");
          return hit_hi / mass_hi - hit_lo / mass_lo;
        } else {
          static_assert(std::is_same_v<W, NcdWitness<S>>);
          std::vector<S> x = core::marginals(d);
          S pr(0), prod(1);
          for (mask_t m = 0; m < d.size(); ++m) {
            if (d.pmf[m] == S(0)) continue;
            if (w.include_side ? ((w.cylinder & ~m) == 0) : ((w.cylinder & m) == 0)) pr += d.pmf[m];
          }
          for (int i = 0; i < d.n; ++i)
            if (has_bit(w.cylinder, i)) prod *= w.include_side ? x[i] : S(1) - x[i];
          return pr - prod;
        }
      },
      witness);
}

/// Random pmf: i.i.d. positive uniform weights, normalized. Full support.
template <class S>
core::Distribution<S> random_distribution(int n, std::uint64_t seed) {
  core::check_ground_size(n);
  Rng rng(seed);
  std::vector<S> w(std::size_t(1) << n);
  S total(0);
  for (auto& v : w) {
    v = S(static_cast<long long>(1 + (rng.next_u64() >> 40)));
    total += v;
  }
  for (auto& v : w) v /= total;
  return core::Distribution<S>(n, std::move(w));
}

/// Proposal for the WNR rejection sampler: like random_distribution, but
/// each weight is damped by theta^{C(|S|,2)}. theta < 1 shifts mass toward
/// small sets, which raises the acceptance rate dramatically at n >= 4
/// (plain proposals pass at roughly 51% / 7% / 0.1% / <0.005% for n=2..5).
template <class S>
core::Distribution<S> random_tilted_distribution(int n, std::uint64_t seed, long long theta_num,
                                                 long long theta_den) {
  core::check_ground_size(n);
  Rng rng(seed);
  std::vector<S> w(std::size_t(1) << n);
  S total(0);
  S theta = scalar_traits<S>::ratio(theta_num, theta_den);
  for (mask_t m = 0; m < w.size(); ++m) {
    int pc = popcount(m);
    S tilt(1);
    for (int c = 0; c < pc * (pc - 1) / 2; ++c) tilt *= theta;
    w[m] = S(static_cast<long long>(1 + (rng.next_u64() >> 40))) * tilt;
    total += w[m];
  }
  for (auto& v : w) v /= total;
  return core::Distribution<S>(n, std::move(w));
}

/// Rejection-samples random distributions until one passes check_wnr.
/// The NCD check runs first as a cheap necessary-condition filter. At n >= 4
/// the proposal is tilted (1/2 at n=4, 1/3 at n=5) to keep the expected
/// attempt count in the hundreds; the default budget leaves orders of
/// magnitude of headroom at every supported n.
template <class S>
core::Distribution<S> random_wnr(int n, std::uint64_t seed, int max_attempts = 20000) {
  require(n <= 5, Errc::limit, "random_wnr supports n <= 5 (rejection viability)");
  long long theta_den = (n >= 5) ? 3 : (n == 4 ? 2 : 1);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    auto d = random_tilted_distribution<S>(n, derive_seed(seed, attempt), 1, theta_den);
    if (!check_ncd(d).holds) continue;
    if (check_wnr(d).holds) return d;
  }
  throw Error(Errc::limit, "random_wnr: attempt budget exhausted; lower n or raise the budget");
}

/// Independent thinning: keeps each element of the sample with probability
/// rho. Preserves WNR: both conditionals thin monotonely, and the absent-side
/// mixture only moves upward relative to the present side.
template <class S>
core::Distribution<S> thin(const core::Distribution<S>& d, const S& rho) {
  require(rho >= S(0) && rho <= S(1), Errc::invalid_argument, "thinning rate must be in [0,1]");
  std::vector<S> p = d.pmf;
  for (int i = 0; i < d.n; ++i) {
    mask_t bit = mask_t(1) << i;
    for (mask_t m = 0; m < p.size(); ++m) {
      if (m & bit) {
        S move = p[m] * (S(1) - rho);
        p[m] -= move;
        p[m & ~bit] += move;
      }
    }
  }
  return core::Distribution<S>(d.n, std::move(p));
}

}  // namespace negdep::dependence
