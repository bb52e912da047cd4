#pragma once

#include <cstdint>

namespace reeder::bits {

// Scatters the low bits of `compact` onto the set bits of `mask`.
inline std::uint64_t deposit(std::uint64_t compact, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    if (compact & 1u) out |= m & (~m + 1);
    compact >>= 1;
  }
  return out;
}

// Gathers the bits of `value` selected by `mask` into the low bits.
inline std::uint64_t extract(std::uint64_t value, std::uint64_t mask) {
  std::uint64_t out = 0;
  int k = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1, ++k) {
    if (value & m & (~m + 1)) out |= std::uint64_t{1} << k;
  }
  return out;
}

}  // namespace reeder::bits
