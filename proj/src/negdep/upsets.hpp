#pragma once

#include <cstdint>
#include <vector>

#include "negdep/bits.hpp"

namespace negdep::dependence {

/// An upward-closed family over 2^[k] packed as an indicator word: bit m is
/// set iff subset m belongs to the family. Valid for k <= 5 (2^k <= 32 bits,
/// stored in 64). The list for k is cached after the first request; sizes
/// follow the Dedekind numbers 2, 3, 6, 20, 168, 7581.
using upset_t = std::uint64_t;

/// All upward-closed families over a k-element ground set, constant families
/// included. k must be at most 5.
const std::vector<upset_t>& all_upsets(int k);

inline bool upset_contains(upset_t u, mask_t m) { return (u >> m) & 1u; }

inline upset_t upset_full(int k) {
  int bits = 1 << k;
  return bits >= 64 ? ~upset_t(0) : ((upset_t(1) << bits) - 1);
}

/// Minimal sets of the family (its generating antichain), as masks over [k].
std::vector<mask_t> upset_minimal_sets(upset_t u, int k);

/// Upward closure of a list of generator masks over [k].
upset_t upset_from_generators(const std::vector<mask_t>& gens, int k);

}  // namespace negdep::dependence
