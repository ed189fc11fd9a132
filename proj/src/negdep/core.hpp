#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "negdep/bits.hpp"
#include "negdep/error.hpp"
#include "negdep/scalar.hpp"

namespace negdep::core {

/// Dense tables cover ground sets up to this size (2^20 entries).
inline constexpr int kMaxGroundSize = 20;

inline void check_ground_size(int n) {
  require(n >= 0 && n <= kMaxGroundSize, Errc::limit,
          "ground set size must be in [0, 20], got " + std::to_string(n));
}

/// Real-valued function on all subsets of an n-element ground set, stored as
/// a dense table indexed by bitmask.
template <class S>
struct SetFunction {
  int n = 0;
  std::vector<S> values;  // size 2^n

  SetFunction() = default;
  SetFunction(int n_, std::vector<S> vals) : n(n_), values(std::move(vals)) {
    check_ground_size(n);
    require(values.size() == (std::size_t(1) << n), Errc::invalid_argument,
            "set function table must have 2^n entries");
  }

  template <class F>
  static SetFunction from_fn(int n, F&& fn) {
    check_ground_size(n);
    std::vector<S> vals(std::size_t(1) << n);
    for (mask_t m = 0; m < vals.size(); ++m) vals[m] = fn(m);
    return SetFunction(n, std::move(vals));
  }

  const S& operator()(mask_t m) const { return values[m]; }
  std::size_t size() const { return values.size(); }
};

/// Explicit probability mass table over all subsets of the ground set.
template <class S>
struct Distribution {
  int n = 0;
  std::vector<S> pmf;  // size 2^n, nonnegative, sums to 1

  Distribution() = default;
  Distribution(int n_, std::vector<S> p) : n(n_), pmf(std::move(p)) {
    check_ground_size(n);
    require(pmf.size() == (std::size_t(1) << n), Errc::invalid_argument,
            "pmf table must have 2^n entries");
    S total(0);
    for (const S& v : pmf) {
      require(v >= S(0), Errc::invalid_argument, "pmf entries must be nonnegative");
      total += v;
    }
    S one(1);
    S diff = total - one;
    if (diff < 0) diff = -diff;
    require(diff <= (scalar_traits<S>::exact ? S(0) : S(1e-12)), Errc::invalid_argument,
            "pmf entries must sum to 1");
  }

  static Distribution point_mass(int n, mask_t m) {
    std::vector<S> p(std::size_t(1) << n, S(0));
    p[m] = S(1);
    return Distribution(n, std::move(p));
  }

  const S& operator()(mask_t m) const { return pmf[m]; }
  std::size_t size() const { return pmf.size(); }
};

/// x_i = Pr[i in S].
template <class S>
std::vector<S> marginals(const Distribution<S>& d) {
  std::vector<S> x(d.n, S(0));
  for (mask_t m = 0; m < d.size(); ++m) {
    if (d.pmf[m] == S(0)) continue;
    for (int i = 0; i < d.n; ++i)
      if (has_bit(m, i)) x[i] += d.pmf[m];
  }
  return x;
}

/// Weight of each subset under independent inclusion probabilities x:
/// w[m] = prod_{i in m} x_i * prod_{j not in m} (1 - x_j).
template <class S>
std::vector<S> product_weights(const std::vector<S>& x) {
  int n = static_cast<int>(x.size());
  check_ground_size(n);
  std::vector<S> w(std::size_t(1) << n);
  w[0] = S(1);
  for (int i = 0; i < n; ++i) {
    mask_t bit = mask_t(1) << i;
    S keep = x[i];
    S drop = S(1) - x[i];
    for (mask_t m = 0; m < bit; ++m) {
      w[m | bit] = w[m] * keep;
      w[m] = w[m] * drop;
    }
  }
  return w;
}

template <class S>
Distribution<S> product_distribution(const std::vector<S>& x) {
  for (const S& xi : x)
    require(xi >= S(0) && xi <= S(1), Errc::invalid_argument, "marginals must lie in [0,1]");
  return Distribution<S>(static_cast<int>(x.size()), product_weights(x));
}

template <class S>
S expect(const SetFunction<S>& f, const Distribution<S>& d) {
  require(f.n == d.n, Errc::dimension, "set function and distribution sizes differ");
  S acc(0);
  for (mask_t m = 0; m < d.size(); ++m)
    if (!(d.pmf[m] == S(0))) acc += d.pmf[m] * f.values[m];
  return acc;
}

/// Multilinear extension F(x): the expectation of f under the product
/// distribution with marginals x, evaluated by the exact 2^n sum.
template <class S>
S multilinear(const SetFunction<S>& f, const std::vector<S>& x) {
  require(f.n == static_cast<int>(x.size()), Errc::dimension,
          "set function and marginal vector sizes differ");
  std::vector<S> w = product_weights(x);
  S acc(0);
  for (mask_t m = 0; m < w.size(); ++m) acc += w[m] * f.values[m];
  return acc;
}

/// dF/dx_i = F(x with x_i=1) - F(x with x_i=0), computed exactly.
template <class S>
S partial_derivative(const SetFunction<S>& f, std::vector<S> x, int i) {
  require(i >= 0 && i < f.n, Errc::invalid_argument, "element index out of range");
  x[i] = S(1);
  S hi = multilinear(f, x);
  x[i] = S(0);
  S lo = multilinear(f, x);
  return hi - lo;
}

/// All n partial derivatives in one pass. Uses the identity
/// dF/dx_i = sum_{S w/o i} (f(S+i) - f(S)) * prod weights over U\{i};
/// the shared weight table is corrected per coordinate.
template <class S>
std::vector<S> multilinear_gradient(const SetFunction<S>& f, const std::vector<S>& x) {
  int n = f.n;
  require(n == static_cast<int>(x.size()), Errc::dimension,
          "set function and marginal vector sizes differ");
  std::vector<S> grad(n);
  std::vector<S> w = product_weights(x);
  for (int i = 0; i < n; ++i) {
    mask_t bit = mask_t(1) << i;
    S acc(0);
    if (x[i] == S(1)) {
      // Weight table over U\{i} built directly; w[] vanishes off {i in S}.
      std::vector<S> xi = x;
      xi[i] = S(0);
      std::vector<S> wi = product_weights(xi);
      for (mask_t m = 0; m < w.size(); ++m)
        if (!(m & bit)) acc += (f.values[m | bit] - f.values[m]) * wi[m];
    } else {
      S scale = S(1) / (S(1) - x[i]);
      for (mask_t m = 0; m < w.size(); ++m)
        if (!(m & bit)) acc += (f.values[m | bit] - f.values[m]) * w[m];
      acc *= scale;
    }
    grad[i] = acc;
  }
  return grad;
}

/// Distribution of S ∩ U', re-indexed onto |U'| bits (ascending order of the
/// kept elements).
template <class S>
Distribution<S> project(const Distribution<S>& d, mask_t keep) {
  require((keep & ~full_mask(d.n)) == 0, Errc::invalid_argument,
          "projection set is not a subset of the ground set");
  int k = popcount(keep);
  std::vector<S> p(std::size_t(1) << k, S(0));
  for (mask_t m = 0; m < d.size(); ++m)
    if (!(d.pmf[m] == S(0))) p[compress_mask(m, keep)] += d.pmf[m];
  return Distribution<S>(k, std::move(p));
}

/// Re-embeds a distribution over k elements into an n-element ground set,
/// mapping bit t to positions[t].
template <class S>
Distribution<S> embed(const Distribution<S>& d, int n, const std::vector<int>& positions) {
  require(static_cast<int>(positions.size()) == d.n, Errc::invalid_argument,
          "embedding must map every element");
  mask_t used = 0;
  for (int pos : positions) {
    require(pos >= 0 && pos < n, Errc::invalid_argument, "embedding position out of range");
    require(!has_bit(used, pos), Errc::invalid_argument, "embedding positions must be distinct");
    used |= mask_t(1) << pos;
  }
  std::vector<S> p(std::size_t(1) << n, S(0));
  for (mask_t m = 0; m < d.size(); ++m) {
    if (d.pmf[m] == S(0)) continue;
    mask_t target = 0;
    for (int t = 0; t < d.n; ++t)
      if (has_bit(m, t)) target |= mask_t(1) << positions[t];
    p[target] += d.pmf[m];
  }
  return Distribution<S>(n, std::move(p));
}

/// Product of two independent distributions on disjoint ground sets, where
/// the embeddings give each factor's elements in the combined bitmask.
template <class S>
Distribution<S> product(const Distribution<S>& a, const Distribution<S>& b, int n,
                        const std::vector<int>& pos_a, const std::vector<int>& pos_b) {
  mask_t ma = 0, mb = 0;
  for (int p : pos_a) ma |= mask_t(1) << p;
  for (int p : pos_b) mb |= mask_t(1) << p;
  require((ma & mb) == 0, Errc::invalid_argument, "product requires disjoint ground sets");
  Distribution<S> ea = embed(a, n, pos_a);
  Distribution<S> eb = embed(b, n, pos_b);
  std::vector<S> p(std::size_t(1) << n, S(0));
  for (mask_t s = 0; s < ea.size(); ++s) {
    if (ea.pmf[s] == S(0)) continue;
    for (mask_t t = 0; t < eb.size(); ++t) {
      if (eb.pmf[t] == S(0)) continue;
      p[s | t] += ea.pmf[s] * eb.pmf[t];
    }
  }
  return Distribution<S>(n, std::move(p));
}

/// Product with the second factor's elements stacked above the first's.
template <class S>
Distribution<S> product(const Distribution<S>& a, const Distribution<S>& b) {
  int n = a.n + b.n;
  check_ground_size(n);
  std::vector<int> pos_a(a.n), pos_b(b.n);
  for (int i = 0; i < a.n; ++i) pos_a[i] = i;
  for (int i = 0; i < b.n; ++i) pos_b[i] = a.n + i;
  return product(a, b, n, pos_a, pos_b);
}

/// Law of S \ {i} over the remaining n-1 elements, conditioned on i in S
/// (present=true) or i not in S, renormalized.
template <class S>
Distribution<S> condition_on_element(const Distribution<S>& d, int i, bool present) {
  require(i >= 0 && i < d.n, Errc::invalid_argument, "element index out of range");
  mask_t bit = mask_t(1) << i;
  std::vector<S> p(std::size_t(1) << (d.n - 1), S(0));
  S total(0);
  for (mask_t m = 0; m < d.size(); ++m) {
    if (((m & bit) != 0) != present) continue;
    if (d.pmf[m] == S(0)) continue;
    p[remove_bit(m, i)] += d.pmf[m];
    total += d.pmf[m];
  }
  require(total > S(0), Errc::zero_probability, "conditioning on a zero-probability event");
  for (S& v : p) v /= total;
  return Distribution<S>(d.n - 1, std::move(p));
}

/// Law of S \ T over the remaining elements, conditioned on S ∩ T = R.
template <class S>
Distribution<S> condition_on_trace(const Distribution<S>& d, mask_t t, mask_t r) {
  require((r & ~t) == 0, Errc::invalid_argument, "trace must be a subset of the conditioning set");
  mask_t rest = full_mask(d.n) & ~t;
  int k = popcount(rest);
  std::vector<S> p(std::size_t(1) << k, S(0));
  S total(0);
  for (mask_t m = 0; m < d.size(); ++m) {
    if ((m & t) != r) continue;
    if (d.pmf[m] == S(0)) continue;
    p[compress_mask(m, rest)] += d.pmf[m];
    total += d.pmf[m];
  }
  require(total > S(0), Errc::zero_probability, "conditioning on a zero-probability event");
  for (S& v : p) v /= total;
  return Distribution<S>(k, std::move(p));
}

/// Local characterization: f(S+i) + f(S+j) >= f(S+i+j) + f(S) for all S and
/// i != j outside S. Equivalent to the lattice definition.
template <class S>
bool is_submodular(const SetFunction<S>& f) {
  const S tol = scalar_traits<S>::eq_tol();
  for (int i = 0; i < f.n; ++i) {
    for (int j = i + 1; j < f.n; ++j) {
      mask_t bi = mask_t(1) << i, bj = mask_t(1) << j;
      for (mask_t m = 0; m < f.size(); ++m) {
        if (m & (bi | bj)) continue;
        if (f.values[m | bi] + f.values[m | bj] + tol < f.values[m | bi | bj] + f.values[m])
          return false;
      }
    }
  }
  return true;
}

template <class S>
bool is_monotone(const SetFunction<S>& f) {
  const S tol = scalar_traits<S>::eq_tol();
  for (int i = 0; i < f.n; ++i) {
    mask_t bit = mask_t(1) << i;
    for (mask_t m = 0; m < f.size(); ++m) {
      if (m & bit) continue;
      if (f.values[m] > f.values[m | bit] + tol) return false;
    }
  }
  return true;
}

template <class S>
bool is_nonnegative(const SetFunction<S>& f) {
  const S tol = scalar_traits<S>::eq_tol();
  for (const S& v : f.values)
    if (v < -tol) return false;
  return true;
}

/// f(∅)=0 and f additive over singletons.
template <class S>
bool is_modular(const SetFunction<S>& f) {
  if (!eq_tol(f.values[0], S(0))) return false;
  for (mask_t m = 0; m < f.size(); ++m) {
    S acc(0);
    for (int i = 0; i < f.n; ++i)
      if (has_bit(m, i)) acc += f.values[mask_t(1) << i];
    if (!eq_tol(acc, f.values[m])) return false;
  }
  return true;
}

template <class S, class T>
SetFunction<T> convert_function(const SetFunction<S>& f) {
  std::vector<T> vals(f.values.size());
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = static_cast<T>(to_double(f.values[i]));
  return SetFunction<T>(f.n, std::move(vals));
}

inline core::SetFunction<double> to_float(const SetFunction<Rational>& f) {
  std::vector<double> vals(f.values.size());
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = to_double(f.values[i]);
  return SetFunction<double>(f.n, std::move(vals));
}

inline core::Distribution<double> to_float(const Distribution<Rational>& d) {
  std::vector<double> p(d.pmf.size());
  double total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) total += (p[i] = to_double(d.pmf[i]));
  // Renormalize the rounded table so the float invariant holds exactly enough.
  for (double& v : p) v /= total;
  return Distribution<double>(d.n, std::move(p));
}

}  // namespace negdep::core
