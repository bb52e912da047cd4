#include "doctest.h"
#include "support.hpp"

#include <set>

#include "json.hpp"

#include "reeder/error.hpp"
#include "reeder/moves.hpp"

using namespace reeder;

namespace {

Diagram fam(Family f, int p) { return construct({f, p}); }

// Engine partition and oracle partition induce the same equivalence.
bool same_partition(const ClassPartition& p, const oracle::Partition& q) {
  if (p.class_count() != q.count) return false;
  std::map<int, int> forward;
  std::map<int, int> backward;
  for (const auto& [bits, id] : q.class_of) {
    const int c = p.class_of(Labeling(p.diagram().size(), bits));
    if (forward.emplace(c, id).first->second != id) return false;
    if (backward.emplace(id, c).first->second != c) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("apply_move on A3 and B2") {
  const Diagram a3 = fam(Family::A, 3);
  const Labeling ones = Labeling::from_string("111");
  CHECK(apply_move(a3, ones, 1) == ones);
  CHECK(apply_move(a3, ones, 0) == Labeling::from_string("011"));
  CHECK_THROWS_AS(apply_move(a3, ones, 3), IndexError);

  const Diagram b2 = fam(Family::B, 2);
  const Labeling both = Labeling::from_string("11");
  CHECK(apply_move(b2, both, 0) == both);
  CHECK(apply_move(b2, both, 1) == Labeling::from_string("10"));
}

TEST_CASE("pinned vertices do not move") {
  const Diagram d = fam(Family::Abox_m, 3);
  const Labeling a = from_display(d, "0011");
  CHECK(apply_move(d, a, 3) == a);
  CHECK(apply_move(d, a, 1) == from_display(d, "0111"));
}

TEST_CASE("apply_sequence") {
  const Diagram a3 = fam(Family::A, 3);
  const Labeling a = Labeling::from_string("101");
  CHECK(apply_sequence(a3, a, {}) == a);
  const std::vector<int> twice{0, 0};
  CHECK(apply_sequence(a3, Labeling::from_string("111"), twice) == Labeling::from_string("111"));

  // B4: (1,1,0 => 1) to (1,1,0 => 0) by expand, swallow, shrink.
  const Diagram b4 = fam(Family::B, 4);
  const std::vector<int> script{2, 3, 2};
  CHECK(apply_sequence(b4, Labeling::from_string("1101"), script) == Labeling::from_string("1100"));
}

TEST_CASE("enumerate_classes on the worked examples") {
  const ClassPartition g2 = enumerate_classes(fam(Family::G2, 2));
  REQUIRE(g2.class_count() == 2);
  CHECK(g2.members(0) == std::vector<Labeling>{Labeling::from_string("00")});
  CHECK(g2.summary(1).size == 3);

  const ClassPartition x1 = enumerate_classes(fam(Family::X, 1));
  REQUIRE(x1.class_count() == 4);
  std::multiset<std::uint64_t> sizes;
  for (const ClassSummary& s : x1.summaries()) sizes.insert(s.size);
  CHECK(sizes == std::multiset<std::uint64_t>{1, 1, 2, 4});

  CHECK(enumerate_classes(fam(Family::flower, 4)).class_count() == 9);
}

TEST_CASE("class ordering, summaries and minimal representatives") {
  const ClassPartition p = enumerate_classes(fam(Family::D, 6));
  CHECK(p.summary(0).min_rep.bits() == 0);
  CHECK(p.summary(0).size == 1);
  CHECK(p.summary(0).singleton_fixed);
  for (int c = 1; c < p.class_count(); ++c) {
    const Labeling& prev = p.summary(c - 1).min_rep;
    const Labeling& cur = p.summary(c).min_rep;
    CHECK(prev.bits() < cur.bits());
  }
  for (int c = 0; c < p.class_count(); ++c) {
    const auto members = p.members(c);
    CHECK(members.size() == p.summary(c).size);
    CHECK(std::is_sorted(members.begin(), members.end(),
                         [](const Labeling& a, const Labeling& b) { return a.bits() < b.bits(); }));
    std::uint64_t histogram_total = 0;
    for (const auto& [comps, count] : p.summary(c).component_histogram) histogram_total += count;
    CHECK(histogram_total == p.summary(c).size);
    CHECK(minimal_representative(p, c) == p.summary(c).min_rep);
    CHECK(class_of(p, p.summary(c).min_rep) == c);
  }
  CHECK_THROWS_AS(p.summary(p.class_count()), IndexError);
  CHECK_THROWS_AS(p.summary(-1), IndexError);
}

TEST_CASE("are_equivalent") {
  const Diagram a8 = fam(Family::A, 8);
  for (std::uint64_t a = 0; a < 256; a += 7) {
    for (std::uint64_t b = 0; b < 256; b += 11) {
      const bool same = oracle::components(a8, a) == oracle::components(a8, b);
      CHECK(are_equivalent(a8, Labeling(8, a), Labeling(8, b)) == same);
    }
  }
  const Diagram b5 = fam(Family::B, 5);
  CHECK(are_equivalent(b5, Labeling::from_string("10000"), Labeling::from_string("10001")));
  const ClassPartition p = enumerate_classes(b5);
  CHECK(p.summary(p.class_of(Labeling(5, 0))).size == 1);
}

TEST_CASE("move matrices") {
  const F2Matrix t = move_matrix(fam(Family::A, 2), 0);
  CHECK(t.get(0, 0));
  CHECK(t.get(0, 1));
  CHECK_FALSE(t.get(1, 0));
  CHECK(t.get(1, 1));
  for (std::uint64_t a = 0; a < 4; ++a) CHECK(t.apply(a) == oracle::move(fam(Family::A, 2), a, 0));
  CHECK((t * t) == F2Matrix::identity(2));
  CHECK(move_matrix(Diagram(1, {}), 0) == F2Matrix::identity(1));
  CHECK(move_operator(fam(Family::A, 3), 2).vertex == 2);
}

TEST_CASE("enumeration agrees with the BFS oracle on the corpus") {
  for (const Diagram& d : corpus::diagrams(12)) {
    CAPTURE(d.name());
    CHECK(same_partition(enumerate_classes(d), oracle::bfs_partition(d)));
  }
}

TEST_CASE("state encoding round trips") {
  const Diagram d = fam(Family::Abox_1m, 5);
  for (std::uint64_t s = 0; s < 32; ++s) {
    const std::uint64_t bits = decode_state(d, s);
    CHECK((bits & d.pinned_mask()) == d.pinned_mask());
    CHECK(encode_state(d, bits) == s);
  }
}

TEST_CASE("cap is enforced") {
  CHECK_THROWS_AS(enumerate_classes(fam(Family::A, 10), 9), ResourceError);
  CHECK_NOTHROW(enumerate_classes(fam(Family::Abox_1m, 9), 9));
  CHECK_THROWS_AS(enumerate_classes(fam(Family::A, 40), 40), ResourceError);
}

TEST_CASE("exports") {
  const ClassPartition p = enumerate_classes(fam(Family::G2, 2));
  const auto doc = nlohmann::json::parse(partition_to_json(p, true));
  CHECK(doc["class_count"] == 2);
  CHECK(doc["classes"][0]["representative"] == "00");
  CHECK(doc["classes"][1]["members"].size() == 3);
  CHECK(doc["classes"][1]["size"] == 3);

  const std::string csv = partition_to_csv(p, false);
  CHECK(csv.rfind("index,size,representative,weight,components,singleton_fixed\n", 0) == 0);
  CHECK(csv.find("0,1,00,0,0:1,true") != std::string::npos);
  CHECK_FALSE(partition_to_text(p, true).empty());
  CHECK(partition_to_json(p, false) == partition_to_json(enumerate_classes(fam(Family::G2, 2)), false));
}
