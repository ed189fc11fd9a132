#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "negdep/dependence.hpp"
#include "negdep/fixtures.hpp"

using namespace negdep;
using namespace negdep::core;
using namespace negdep::dependence;

namespace {

Rational rat(long long p, long long q) { return Rational(p) / Rational(q); }

Distribution<Rational> uniform_over(int n, std::initializer_list<mask_t> sets) {
  std::vector<Rational> p(std::size_t(1) << n, Rational(0));
  for (mask_t m : sets) p[m] += Rational(1) / Rational((long long)sets.size());
  return Distribution<Rational>(n, std::move(p));
}

template <class S>
void check_witness_reverifies(const Distribution<S>& d, const Verdict<S>& v) {
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness.has_value());
  S recomputed = reverify(d, *v.witness);
  S stored = std::visit([](const auto& w) { return w.margin; }, *v.witness);
  CHECK(recomputed >= stored - scalar_traits<S>::eq_tol());
  CHECK(recomputed > S(0));
}

}  // namespace

TEST_CASE("upset enumeration sizes follow the Dedekind numbers") {
  CHECK(all_upsets(0).size() == 2);
  CHECK(all_upsets(1).size() == 3);
  CHECK(all_upsets(2).size() == 6);
  CHECK(all_upsets(3).size() == 20);
  CHECK(all_upsets(4).size() == 168);
  CHECK(all_upsets(5).size() == 7581);

  // Every enumerated family is upward closed.
  for (upset_t u : all_upsets(3)) {
    for (mask_t m = 0; m < 8; ++m) {
      if (!upset_contains(u, m)) continue;
      for (mask_t sup = m; sup < 8; sup = (sup + 1) | m) {
        CHECK(upset_contains(u, sup));
        if (sup == 7) break;
      }
    }
  }

  // Round trip through generators.
  for (upset_t u : all_upsets(4)) {
    auto gens = upset_minimal_sets(u, 4);
    CHECK(upset_from_generators(gens, 4) == u);
  }
}

TEST_CASE("stochastic dominance basics") {
  auto d = random_distribution<Rational>(3, 42);
  CHECK(stochastic_dominance(d, d).dominates);

  auto top = Distribution<Rational>::point_mass(3, 7);
  CHECK(stochastic_dominance(top, d).dominates);
  CHECK_FALSE(stochastic_dominance(d, top).dominates);

  // Two-element lattice: uniform{∅,{0}} does not dominate
  // uniform{∅,{0},{0,1}}; the witness upset is generated by {0,1}.
  auto d1 = uniform_over(2, {0u, 1u});
  auto d2 = uniform_over(2, {0u, 1u, 3u});
  auto res = stochastic_dominance(d1, d2);
  REQUIRE_FALSE(res.dominates);
  REQUIRE(res.upset_min.size() == 1);
  CHECK(res.upset_min[0] == 3u);
  CHECK(res.margin == rat(1, 3));

  CHECK_THROWS_AS(stochastic_dominance(d1, d), Error);
}

TEST_CASE("stochastic dominance is transitive on sampled triples") {
  // Build comparable chains by thinning: thin(d, rho) is always dominated.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto a = random_distribution<Rational>(3, seed);
    auto b = thin(a, rat(3, 4));
    auto c = thin(b, rat(1, 2));
    CHECK(stochastic_dominance(a, b).dominates);
    CHECK(stochastic_dominance(b, c).dominates);
    CHECK(stochastic_dominance(a, c).dominates);
  }
}

TEST_CASE("fixture marginals and expectations") {
  auto d4 = fixtures::get("ncd-counterexample-4");
  auto x = marginals(d4);
  for (const auto& xi : x) CHECK(xi == rat(1, 2));

  auto f = SetFunction<Rational>::from_fn(
      4, [](mask_t m) { return Rational(std::min(2, popcount(m))); });
  CHECK(expect(f, d4) == rat(12, 8));
  CHECK(multilinear(f, x) == rat(13, 8));

  auto d8 = fixtures::get("ncd-homogeneous-8");
  auto x8 = marginals(d8);
  for (const auto& xi : x8) CHECK(xi == rat(1, 2));
  auto inter = SetFunction<Rational>::from_fn(
      8, [](mask_t m) { return Rational(popcount(m & 0x0F)); });
  CHECK(expect(inter, d8) == 2);
  auto f8 = SetFunction<Rational>::from_fn(
      8, [](mask_t m) { return Rational(std::min(2, popcount(m & 0x0F))); });
  CHECK(expect(f8, d8) == rat(12, 8));
  CHECK(multilinear(f8, x8) == rat(13, 8));
}

TEST_CASE("check_wnr on the paper fixtures") {
  CHECK(check_wnr(fixtures::get("table2-wnr")).holds);

  auto d = fixtures::get("dominance-not-wnr");
  auto v = check_wnr(d);
  REQUIRE_FALSE(v.holds);
  const auto& w = std::get<WnrWitness<Rational>>(*v.witness);
  CHECK(w.element == 2);
  // Violating family is generated by the two singletons {0} and {1}.
  std::vector<mask_t> gens = w.upset_min;
  std::sort(gens.begin(), gens.end());
  CHECK(gens == std::vector<mask_t>{1u, 2u});
  CHECK(w.margin == rat(1, 4));
  check_witness_reverifies(d, v);

  auto prod = product_distribution(std::vector<Rational>{rat(1, 3), rat(2, 5), rat(1, 2)});
  CHECK(check_wnr(prod).holds);
}

TEST_CASE("check_wnr_covariance agrees and finds the same violation") {
  CHECK(check_wnr_covariance(fixtures::get("table2-wnr")).holds);

  auto d = fixtures::get("dominance-not-wnr");
  auto v = check_wnr_covariance(d);
  REQUIRE_FALSE(v.holds);
  CHECK(std::get<WnrWitness<Rational>>(*v.witness).element == 2);
  check_witness_reverifies(d, v);

  // Covariance of the canonical violating pair: f = max(1_{0 in S}, 1_{1 in
  // S}) against inclusion of element 2. E[f(S\2)*1] = 1/3, E[f(S\2)] = 5/6,
  // x_2 = 1/3, so Cov = 1/3 - 5/18 = 1/18.
  Rational e_joint(0), e_f(0), x2(0);
  for (mask_t m = 0; m < 8; ++m) {
    if (d.pmf[m] == 0) continue;
    Rational fv((m & 3u) ? 1 : 0);
    e_f += d.pmf[m] * fv;
    if (m & 4u) {
      e_joint += d.pmf[m] * fv;
      x2 += d.pmf[m];
    }
  }
  CHECK(e_joint - e_f * x2 == rat(1, 18));

  auto prod = product_distribution(std::vector<Rational>{rat(1, 4), rat(3, 4)});
  CHECK(check_wnr_covariance(prod).holds);
}

TEST_CASE("check_na on the paper fixtures") {
  auto t2 = fixtures::get("table2-wnr");
  auto v = check_na(t2);
  check_witness_reverifies(t2, v);

  // The canonical violating pair: X1*X2 against X3*X4 with covariance
  // exactly 577/10000 - (24/100)^2 = 1/10000.
  NaWitness<Rational> canonical;
  canonical.set_a = 0b0011;
  canonical.set_b = 0b1100;
  canonical.upset_a_min = {0b0011};
  canonical.upset_b_min = {0b1100};
  canonical.margin = rat(1, 10000);
  CHECK(reverify(t2, Witness<Rational>(canonical)) == rat(1, 10000));

  auto prod = product_distribution(std::vector<Rational>{rat(1, 3), rat(2, 5), rat(1, 2)});
  CHECK(check_na(prod).holds);

  CHECK(check_na(uniform_over(2, {1u, 2u})).holds);
}

TEST_CASE("check_nr on the paper fixtures") {
  auto t2 = fixtures::get("table2-wnr");
  auto v = check_nr(t2);
  check_witness_reverifies(t2, v);

  // Canonical violation: conditioning trace over T = {2,3} (X3, X4), with
  // E[X1X2 | X3=1, X4] increasing in X4: 577/2400 - 623/2600 = 1/1248.
  NrWitness<Rational> canonical;
  canonical.cond_set = 0b1100;
  canonical.trace_lo = 0b0100;
  canonical.trace_hi = 0b1100;
  canonical.upset_min = {0b0011};
  CHECK(reverify(t2, Witness<Rational>(canonical)) == rat(1, 1248));

  auto prod = product_distribution(std::vector<Rational>{rat(1, 3), rat(2, 5), rat(1, 2)});
  CHECK(check_nr(prod).holds);

  CHECK(check_nr(uniform_over(2, {1u, 2u})).holds);
}

TEST_CASE("check_ncd on the paper fixtures") {
  CHECK(check_ncd(fixtures::get("ncd-counterexample-4")).holds);
  CHECK(check_ncd(fixtures::get("ncd-homogeneous-8")).holds);

  auto pos = uniform_over(2, {0u, 3u});
  auto v = check_ncd(pos);
  REQUIRE_FALSE(v.holds);
  const auto& w = std::get<NcdWitness<Rational>>(*v.witness);
  CHECK(w.cylinder == 3u);
  CHECK(w.include_side);
  CHECK(w.margin == rat(1, 4));
  check_witness_reverifies(pos, v);
}

TEST_CASE("hierarchy and route agreement on random distributions") {
  for (int n = 2; n <= 4; ++n) {
    for (std::uint64_t t = 0; t < 25; ++t) {
      auto d = random_distribution<Rational>(n, derive_seed(1000 + n, t));
      auto wnr = check_wnr(d);
      auto cov = check_wnr_covariance(d);
      CHECK(wnr.holds == cov.holds);
      auto na = check_na(d);
      auto nr = check_nr(d);
      auto ncd = check_ncd(d);
      if (na.holds) CHECK(wnr.holds);
      if (nr.holds) CHECK(wnr.holds);
      if (wnr.holds) CHECK(ncd.holds);
      for (const auto* v : {&wnr, &cov, &na, &nr}) {
        if (!v->holds) check_witness_reverifies(d, *v);
      }
      if (!ncd.holds) check_witness_reverifies(d, ncd);
    }
  }
}

TEST_CASE("closure of WNR under projection and products") {
  for (std::uint64_t t = 0; t < 8; ++t) {
    auto d = random_wnr<Rational>(3, derive_seed(77, t));
    for (mask_t keep = 0; keep < 8; ++keep) CHECK(check_wnr(project(d, keep)).holds);
  }
  auto a = random_wnr<Rational>(2, 5);
  auto b = random_wnr<Rational>(2, 6);
  CHECK(check_wnr(product(a, b)).holds);
}

TEST_CASE("random generators are deterministic and honor budgets") {
  auto d1 = random_distribution<Rational>(3, 99);
  auto d2 = random_distribution<Rational>(3, 99);
  for (mask_t m = 0; m < 8; ++m) CHECK(d1.pmf[m] == d2.pmf[m]);

  auto w1 = random_wnr<Rational>(2, 123);
  auto w2 = random_wnr<Rational>(2, 123);
  for (mask_t m = 0; m < 4; ++m) CHECK(w1.pmf[m] == w2.pmf[m]);

  // Single element: every distribution is WNR.
  auto w = random_wnr<Rational>(1, 7, 1);
  CHECK(w.n == 1);

  CHECK_THROWS_AS(random_wnr<Rational>(4, 5, 0), Error);
}

TEST_CASE("thinning preserves WNR and scales marginals") {
  for (std::uint64_t t = 0; t < 6; ++t) {
    auto d = random_wnr<Rational>(3, derive_seed(31337, t));
    Rational rho = rat(2, 5);
    auto thinned = thin(d, rho);
    auto x = marginals(d);
    auto xt = marginals(thinned);
    for (int i = 0; i < 3; ++i) CHECK(xt[i] == x[i] * rho);
    CHECK(check_wnr(thinned).holds);
  }
}

TEST_CASE("float backend checkers agree with exact on the fixtures") {
  for (const auto& name : fixtures::names()) {
    auto exact = fixtures::get(name);
    auto approx = to_float(exact);
    CHECK(check_wnr(approx).holds == check_wnr(exact).holds);
    CHECK(check_ncd(approx).holds == check_ncd(exact).holds);
    if (exact.n <= 4) {
      CHECK(check_na(approx).holds == check_na(exact).holds);
      CHECK(check_nr(approx).holds == check_nr(exact).holds);
    }
  }
}
