#include "doctest.h"
#include "support.hpp"

#include "reeder/classifiers.hpp"
#include "reeder/error.hpp"
#include "reeder/moves.hpp"

using namespace reeder;

namespace {

Diagram fam(Family f, int p) { return construct({f, p}); }

}  // namespace

TEST_CASE("classify_by_components") {
  const Diagram a7 = fam(Family::A, 7);
  CHECK(classify_by_components(a7, Labeling::from_string("1101000")) == 2);
  CHECK(classify_by_components(a7, xi(2, 7)) == classify_by_components(a7, eta(2, 7)));
  CHECK(classify_by_components(a7, Labeling(7, 0)) == 0);
  CHECK_THROWS_AS(classify_by_components(fam(Family::D, 5), Labeling(5, 0)), PreconditionError);
  CHECK(is_path(a7));
  CHECK_FALSE(is_path(fam(Family::B, 3)));
}

TEST_CASE("component count classifies A_n") {
  for (int n = 1; n <= 14; ++n) {
    const ClassPartition p = enumerate_classes(fam(Family::A, n));
    CHECK(matches_partition(p, [&](const Labeling& a) {
      return static_cast<std::uint64_t>(classify_by_components(p.diagram(), a));
    }));
    int highest = 0;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      highest = std::max(highest, classify_by_components(p.diagram(), Labeling(n, a)));
    }
    CHECK(highest == (n + 1) / 2);
  }
}

TEST_CASE("parity") {
  const Diagram e8 = fam(Family::E8, 8);
  CHECK(parity(e8, Labeling(8, 0)) == 0);
  CHECK(parity(e8, Labeling(8, 1)) == 1);
  // Four isolated 1s on E8 (chain 1..7, 8 on 5): vertices 1, 3, 5, 7.
  CHECK(parity(e8, Labeling::from_string("10101010")) == 0);
  CHECK_THROWS_AS(parity(corpus::cycle_counterexample(), Labeling(5, 0)), PreconditionError);
}

TEST_CASE("E6 tree classifier on the named diagrams") {
  struct Case {
    Family f;
    int p;
    std::uint64_t classes;
  };
  for (const Case& c : {Case{Family::affE6, 6, 4}, Case{Family::affE7, 7, 6}, Case{Family::affE8, 8, 4},
                        Case{Family::E6, 6, 3}}) {
    const Diagram d = fam(c.f, c.p);
    const E6TreePrediction pred = e6_tree_classify(d);
    CHECK(pred.class_count() == c.classes);
    CHECK(pred.guard_passed());
    CHECK(static_cast<int>(pred.class_count()) == oracle::bfs_partition(d).count);
    CHECK(matches_partition(enumerate_classes(d), [&](const Labeling& a) { return pred.key(a); }));
  }
  CHECK_THROWS_AS(e6_tree_classify(fam(Family::D, 6)), PreconditionError);
}

TEST_CASE("flower classifier") {
  CHECK(flower_classify(4).class_count() == 9);
  CHECK(flower_classify(1).class_count() == 2);
  CHECK(flower_classify(3).class_count() == 5);
  for (int d = 1; d <= 16; ++d) {
    const FlowerPrediction pred = flower_classify(d);
    CHECK(pred.class_count() == (std::uint64_t{1} << (d - 1)) + 1);
    const ClassPartition p = enumerate_classes(fam(Family::flower, d));
    CHECK(static_cast<std::uint64_t>(p.class_count()) == pred.class_count());
    CHECK(matches_partition(p, [&](const Labeling& a) { return pred.key(a); }));
  }
  CHECK(oracle::bfs_partition(fam(Family::flower, 3)).count == 5);
}

TEST_CASE("swallowing witness") {
  const Diagram b5 = fam(Family::B, 5);
  const auto w = swallowing_check(b5, Labeling::from_string("1000"));
  REQUIRE(w.has_value());
  CHECK(apply_sequence(b5, Labeling::from_string("10001"), *w) == Labeling::from_string("10000"));
  // The shortest witness found by BFS has 7 moves, which the script attains.
  const auto shortest = oracle::bfs_path(b5, 0b10001, 0b00001);
  REQUIRE(shortest.first);
  CHECK(shortest.second.size() == 7);
  CHECK(w->size() == 7);

  CHECK_FALSE(swallowing_check(b5, Labeling(4, 0)).has_value());
  CHECK_FALSE(are_equivalent(b5, Labeling(5, 0), Labeling::from_string("00001")));

  const auto w2 = swallowing_check(b5, Labeling::from_string("0101"));
  REQUIRE(w2.has_value());
  CHECK(oracle::bfs_path(b5, Labeling::from_string("01011").bits(), Labeling::from_string("01010").bits()).first);

  for (int n = 2; n <= 9; ++n) {
    const Diagram b = fam(Family::B, n);
    for (std::uint64_t tail = 1; tail < (std::uint64_t{1} << (n - 1)); ++tail) {
      const auto script = swallowing_check(b, Labeling(n - 1, tail));
      REQUIRE(script.has_value());
      CHECK(apply_sequence(b, Labeling(n, tail | (std::uint64_t{1} << (n - 1))), *script) == Labeling(n, tail));
    }
  }
  CHECK_THROWS_AS(swallowing_check(fam(Family::C, 5), Labeling(4, 1)), PreconditionError);
  CHECK_THROWS_AS(swallowing_check(b5, Labeling(3, 1)), IndexError);
}
