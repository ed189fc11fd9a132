#include "negdep/fixtures.hpp"

#include <algorithm>

#include "negdep/error.hpp"

namespace negdep::fixtures {

namespace {

// Four Bernoulli coordinates (X1..X4 on bits 0..3). Cell weights over
// (X1+X2, X3+X4); the printed 4-decimal table sums to exactly 1, so the
// normalization below is exact and a no-op in value.
core::Distribution<Rational> table2_wnr() {
  static const int cell[3][3] = {{577, 623, 577}, {623, 677, 623}, {577, 623, 577}};
  std::vector<Rational> p(16);
  Rational total(0);
  for (mask_t m = 0; m < 16; ++m) {
    int a = int(has_bit(m, 0)) + int(has_bit(m, 1));
    int b = int(has_bit(m, 2)) + int(has_bit(m, 3));
    p[m] = Rational(cell[a][b]);
    total += p[m];
  }
  for (auto& v : p) v /= total;
  return core::Distribution<Rational>(4, std::move(p));
}

// Uniform over {∅, {0}, {1}, {0,1}, {0,2}, {1,2}} on three elements.
core::Distribution<Rational> dominance_not_wnr() {
  std::vector<Rational> p(8, Rational(0));
  for (mask_t m : {0u, 1u, 2u, 3u, 5u, 6u}) p[m] = Rational(1) / 6;
  return core::Distribution<Rational>(3, std::move(p));
}

// Pick i uniformly from four elements, then return {i} or its complement
// with equal probability: all singletons and all 3-sets, each 1/8.
core::Distribution<Rational> ncd_counterexample_4() {
  std::vector<Rational> p(16, Rational(0));
  for (int i = 0; i < 4; ++i) {
    mask_t s = mask_t(1) << i;
    p[s] = Rational(1) / 8;
    p[0xFu & ~s] = Rational(1) / 8;
  }
  return core::Distribution<Rational>(4, std::move(p));
}

// Homogeneous variant on eight elements split into A = bits 0..3 and
// B = bits 4..7: pick i in A and j in B uniformly, return {i} ∪ (B\{j}) or
// (A\{i}) ∪ {j} with equal probability. Every support set has size 4.
core::Distribution<Rational> ncd_homogeneous_8() {
  std::vector<Rational> p(256, Rational(0));
  const mask_t A = 0x0F, B = 0xF0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 4; j < 8; ++j) {
      mask_t bi = mask_t(1) << i, bj = mask_t(1) << j;
      p[bi | (B & ~bj)] += Rational(1) / 32;
      p[(A & ~bi) | bj] += Rational(1) / 32;
    }
  }
  return core::Distribution<Rational>(8, std::move(p));
}

}  // namespace

std::vector<std::string> names() {
  return {"table2-wnr", "dominance-not-wnr", "ncd-counterexample-4", "ncd-homogeneous-8"};
}

bool is_fixture(const std::string& name) {
  auto all = names();
  return std::find(all.begin(), all.end(), name) != all.end();
}

core::Distribution<Rational> get(const std::string& name) {
  if (name == "table2-wnr") return table2_wnr();
  if (name == "dominance-not-wnr") return dominance_not_wnr();
  if (name == "ncd-counterexample-4") return ncd_counterexample_4();
  if (name == "ncd-homogeneous-8") return ncd_homogeneous_8();
  throw Error(Errc::invalid_argument, "unknown fixture: " + name);
}

std::string comment(const std::string& name) {
  if (name == "table2-wnr")
    return "four Bernoulli coordinates; cells are the printed 4-decimal values divided by their "
           "exact sum 10000/10000, so no rounding discrepancy remains; WNR holds, NA and NR fail";
  if (name == "dominance-not-wnr")
    return "uniform over six sets on three elements; submodular dominance holds, WNR fails at "
           "element 2";
  if (name == "ncd-counterexample-4")
    return "uniform element i, then {i} or its complement; NCD holds, dominance fails for "
           "min(2,|S|)";
  if (name == "ncd-homogeneous-8")
    return "homogeneous on sets of size 4; NCD holds, dominance fails for min(2,|S intersect "
           "A|) with A the first four elements";
  throw Error(Errc::invalid_argument, "unknown fixture: " + name);
}

}  // namespace negdep::fixtures
