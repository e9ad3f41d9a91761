#pragma once

#include <bit>
#include <cstdint>

namespace bfa::bits {

// swap_masks[t]: bit positions whose index has bit t clear.
inline constexpr std::uint64_t swap_masks[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
    0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL,
};

// Permute bits of w by j -> j ^ low_mask (low_mask < 64).
inline std::uint64_t xor_permute_word(std::uint64_t w, unsigned low_mask) {
  for (unsigned t = 0; low_mask != 0; ++t, low_mask >>= 1) {
    if (low_mask & 1) {
      unsigned s = 1u << t;
      w = ((w & swap_masks[t]) << s) | ((w >> s) & swap_masks[t]);
    }
  }
  return w;
}

// Word `word_index` of the bit pattern p_j = bit (i-1) of j, for variable i (1-based).
// Bit j of the pattern is the {0,1} assignment a_i at input index j.
inline std::uint64_t var_pattern_word(int i, std::size_t word_index) {
  int t = i - 1;
  if (t < 6) return ~swap_masks[t];
  return ((word_index >> (t - 6)) & 1) ? ~0ULL : 0ULL;
}

inline int parity64(std::uint64_t v) { return std::popcount(v) & 1; }

}  // namespace bfa::bits
