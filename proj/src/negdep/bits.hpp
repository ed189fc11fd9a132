#pragma once

#include <bit>
#include <cstdint>

namespace negdep {

/// Subsets of the ground set are bitmasks: element i corresponds to bit i.
/// All tables (set functions, pmfs) are indexed by this encoding.
using mask_t = std::uint32_t;

inline int popcount(mask_t m) { return std::popcount(m); }

inline mask_t full_mask(int n) { return (n >= 32) ? ~mask_t(0) : ((mask_t(1) << n) - 1); }

inline bool has_bit(mask_t m, int i) { return (m >> i) & 1u; }

/// Packs the bits of `m` selected by `keep` into the low bits, preserving
/// order (software PEXT).
inline mask_t compress_mask(mask_t m, mask_t keep) {
  mask_t out = 0;
  int pos = 0;
  while (keep) {
    mask_t low = keep & (~keep + 1);
    if (m & low) out |= mask_t(1) << pos;
    keep ^= low;
    ++pos;
  }
  return out;
}

/// Inverse of compress_mask: scatters low bits of `m` into the positions
/// selected by `keep` (software PDEP).
inline mask_t expand_mask(mask_t m, mask_t keep) {
  mask_t out = 0;
  int pos = 0;
  while (keep) {
    mask_t low = keep & (~keep + 1);
    if ((m >> pos) & 1u) out |= low;
    keep ^= low;
    ++pos;
  }
  return out;
}

/// Removes bit i and shifts the higher bits down by one.
inline mask_t remove_bit(mask_t m, int i) {
  mask_t lowpart = m & ((mask_t(1) << i) - 1);
  mask_t highpart = (m >> (i + 1)) << i;
  return lowpart | highpart;
}

/// Inserts a bit (set iff `value`) at position i, shifting higher bits up.
inline mask_t insert_bit(mask_t m, int i, bool value) {
  mask_t lowpart = m & ((mask_t(1) << i) - 1);
  mask_t highpart = (m >> i) << (i + 1);
  return lowpart | highpart | (value ? (mask_t(1) << i) : 0);
}

inline int lowest_bit_index(mask_t m) { return std::countr_zero(m); }

}  // namespace negdep
