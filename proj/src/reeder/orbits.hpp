#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace reeder::detail {

// Orbits of states 0..n_states-1 under `n_gens` involutions,
// step(x, g) -> y. Returns (orbit id per state, orbit count); orbits are
// numbered by their least state.
template <typename Step>
std::pair<std::vector<std::uint32_t>, std::uint32_t> label_orbits(std::uint64_t n_states, int n_gens, Step step) {
  // Linking the larger root under the smaller keeps parent[x] <= x.
  std::vector<std::uint32_t> parent(n_states);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::uint64_t x = 0; x < n_states; ++x) {
    for (int g = 0; g < n_gens; ++g) {
      const std::uint64_t y = step(x, g);
      if (y <= x) continue;
      std::uint32_t rx = find(static_cast<std::uint32_t>(x));
      std::uint32_t ry = find(static_cast<std::uint32_t>(y));
      if (rx == ry) continue;
      if (rx > ry) std::swap(rx, ry);
      parent[ry] = rx;
    }
  }

  // Roots precede their members, so one ascending pass assigns ids. The top
  // bit marks entries already rewritten.
  constexpr std::uint32_t kFlag = 0x80000000u;
  std::uint32_t next = 0;
  for (std::uint64_t x = 0; x < n_states; ++x) {
    const std::uint32_t p = parent[x];
    parent[x] = (p == x) ? (kFlag | next++) : parent[p];
  }
  for (auto& id : parent) id &= ~kFlag;
  return {std::move(parent), next};
}

}  // namespace reeder::detail
