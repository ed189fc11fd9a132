#include "negdep/upsets.hpp"

#include <mutex>

#include "negdep/error.hpp"

namespace negdep::dependence {

namespace {

// An upset over [k] splits into the pair (members without element k-1,
// members with it); both halves are upsets over [k-1] and the first is
// contained in the second. Enumerating such pairs builds level k.
std::vector<upset_t> build_level(const std::vector<upset_t>& prev, int prev_k) {
  std::vector<upset_t> out;
  int shift = 1 << prev_k;
  for (upset_t with : prev) {
    for (upset_t without : prev) {
      if ((without & ~with) == 0) out.push_back(without | (with << shift));
    }
  }
  return out;
}

}  // namespace

const std::vector<upset_t>& all_upsets(int k) {
  require(k >= 0 && k <= 5, Errc::limit,
          "upset enumeration supports at most 5 elements, got " + std::to_string(k));
  static std::vector<std::vector<upset_t>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) {
    cache.resize(6);
    cache[0] = {0u, 1u};
    for (int level = 1; level <= 5; ++level)
      cache[level] = build_level(cache[level - 1], level - 1);
  }
  return cache[k];
}

std::vector<mask_t> upset_minimal_sets(upset_t u, int k) {
  std::vector<mask_t> out;
  mask_t limit = mask_t(1) << k;
  for (mask_t m = 0; m < limit; ++m) {
    if (!upset_contains(u, m)) continue;
    bool minimal = true;
    for (int i = 0; i < k && minimal; ++i)
      if (has_bit(m, i) && upset_contains(u, m & ~(mask_t(1) << i))) minimal = false;
    if (minimal) out.push_back(m);
  }
  return out;
}

upset_t upset_from_generators(const std::vector<mask_t>& gens, int k) {
  upset_t u = 0;
  mask_t limit = mask_t(1) << k;
  for (mask_t m = 0; m < limit; ++m)
    for (mask_t g : gens)
      if ((g & ~m) == 0) {
        u |= upset_t(1) << m;
        break;
      }
  return u;
}

}  // namespace negdep::dependence
