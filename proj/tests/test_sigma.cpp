#include "doctest.h"
#include "support.hpp"

#include "json.hpp"

#include "reeder/error.hpp"
#include "reeder/moves.hpp"
#include "reeder/sigma.hpp"

using namespace reeder;

namespace {

Diagram fam(Family f, int p) { return construct({f, p}); }

// Lit-only sigma move from the raw edge list.
std::uint64_t oracle_sigma(const Diagram& d, std::uint64_t a, int i) {
  if (!((a >> i) & 1u)) return a;
  for (const Edge& e : d.edges()) {
    if (e.u == i) a ^= std::uint64_t{1} << e.v;
    if (e.v == i) a ^= std::uint64_t{1} << e.u;
  }
  return a;
}

}  // namespace

TEST_CASE("sigma_move") {
  const Diagram a3 = fam(Family::A, 3);
  CHECK(sigma_move(a3, Labeling::from_string("010"), 1) == Labeling::from_string("111"));
  CHECK(sigma_move(a3, Labeling::from_string("101"), 1) == Labeling::from_string("101"));
  CHECK(sigma_move(fam(Family::A, 2), Labeling::from_string("10"), 0) == Labeling::from_string("11"));
  CHECK_THROWS_AS(sigma_move(fam(Family::B, 3), Labeling(3, 0), 0), PreconditionError);

  for (const Diagram& d : corpus::diagrams(10)) {
    if (!d.is_simply_laced() || d.pinned_mask() != 0) continue;
    for (std::uint64_t a : oracle::all_labelings(d)) {
      for (int i = 0; i < d.size(); ++i) {
        const Labeling x(d.size(), a);
        REQUIRE(sigma_move(d, x, i).bits() == oracle_sigma(d, a, i));
        REQUIRE(sigma_move(d, sigma_move(d, x, i), i) == x);
      }
    }
  }
}

TEST_CASE("sigma matrix is the transpose of the move matrix") {
  const Diagram a2 = fam(Family::A, 2);
  const F2Matrix s = sigma_matrix(a2, 0);
  CHECK(s == move_matrix(a2, 0).transpose());
  for (std::uint64_t a = 0; a < 4; ++a) CHECK(s.apply(a) == oracle_sigma(a2, a, 0));
  // A * T_0 = S_0 * A by hand: A = [[0,1],[1,0]], T_0 = [[1,1],[0,1]].
  CHECK((adjacency_matrix(a2) * move_matrix(a2, 0)) == (s * adjacency_matrix(a2)));
  CHECK(duality_check(a2));
  CHECK(duality_check(fam(Family::E6, 6)));
  CHECK_THROWS_AS(duality_check(fam(Family::B, 3)), PreconditionError);
}

TEST_CASE("orbit bijection") {
  const DualityReport a2 = orbit_bijection_check(fam(Family::A, 2));
  CHECK(a2.applicable);
  CHECK(a2.det_A == 1);
  CHECK(a2.reeder_classes == 2);
  CHECK(a2.sigma_orbits == 2);
  CHECK(a2.bijection_verified);

  const DualityReport a3 = orbit_bijection_check(fam(Family::A, 3));
  CHECK(oracle::dense_det(fam(Family::A, 3)) == 0);
  CHECK(a3.det_A == 0);
  CHECK_FALSE(a3.applicable);
  CHECK_FALSE(a3.bijection_verified);

  const auto doc = nlohmann::json::parse(to_json(a2));
  CHECK(doc["reeder_classes"] == 2);
  CHECK(doc["sigma_orbits"] == 2);
  CHECK(doc["det_A"] == 1);
  CHECK(doc["bijection_verified"] == true);
}

TEST_CASE("sigma orbits agree with a BFS oracle") {
  for (const Diagram& d : corpus::diagrams(10)) {
    if (!d.is_simply_laced() || d.pinned_mask() != 0) continue;
    const auto [ids, count] = sigma_orbits(d);
    std::map<std::uint64_t, int> seen;
    int orbits = 0;
    for (std::uint64_t start = 0; start < (std::uint64_t{1} << d.size()); ++start) {
      if (seen.contains(start)) continue;
      std::vector<std::uint64_t> stack{start};
      seen[start] = orbits;
      while (!stack.empty()) {
        const std::uint64_t a = stack.back();
        stack.pop_back();
        for (int i = 0; i < d.size(); ++i) {
          const std::uint64_t b = oracle_sigma(d, a, i);
          if (seen.emplace(b, orbits).second) stack.push_back(b);
        }
      }
      ++orbits;
    }
    CHECK(static_cast<int>(count) == orbits);
    std::map<std::uint32_t, int> forward;
    std::map<int, std::uint32_t> backward;
    bool consistent = true;
    for (const auto& [a, o] : seen) {
      consistent = consistent && forward.emplace(ids[a], o).first->second == o;
      consistent = consistent && backward.emplace(o, ids[a]).first->second == ids[a];
    }
    CHECK(consistent);
  }
}
