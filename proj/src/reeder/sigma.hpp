#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "reeder/diagram.hpp"
#include "reeder/f2_matrix.hpp"
#include "reeder/moves.hpp"

namespace reeder {

// Lit-only sigma game: when a_i = 1, flip every neighbor of i. Defined on
// unpinned simply-laced diagrams only.
Labeling sigma_move(const Diagram& diagram, const Labeling& a, int i);

// I + N_i e_i^T, the matrix of sigma_move at i.
F2Matrix sigma_matrix(const Diagram& diagram, int i);

// A * T_i == S_i * A and S_i == T_i^T for every vertex i.
bool duality_check(const Diagram& diagram);

// Orbit index per state (vertex 0 = bit 0), numbered by least member.
std::pair<std::vector<std::uint32_t>, std::uint32_t> sigma_orbits(const Diagram& diagram,
                                                                  int max_free = kDefaultMaxFree);

struct DualityReport {
  int reeder_classes = 0;
  int sigma_orbits = 0;
  int det_A = 0;
  // det_A == 1; only then is the bijection checked.
  bool applicable = false;
  bool bijection_verified = false;
  // (Reeder class, sigma orbit containing A * class), one per class.
  std::vector<std::pair<int, int>> pairing;
};

// Enumerates both games and checks that a -> A a carries Reeder classes
// bijectively onto sigma orbits.
DualityReport orbit_bijection_check(const Diagram& diagram, int max_free = kDefaultMaxFree);

std::string to_json(const DualityReport& report);

}  // namespace reeder
