#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "reeder/diagram.hpp"
#include "reeder/moves.hpp"

namespace reeder {

// Simply-laced, unpinned, connected, maximum degree <= 2, no cycle.
bool is_path(const Diagram& diagram);

// Component count; on a path it determines the class. Throws
// PreconditionError on anything but a path.
int classify_by_components(const Diagram& diagram, const Labeling& a);

// Component count mod 2. Requires an unpinned simply-laced tree.
int parity(const Diagram& diagram, const Labeling& a);

// Predicted partition for a tree containing E6: each fixed labeling is a
// singleton and the remaining labelings split by parity.
class E6TreePrediction {
 public:
  E6TreePrediction(Diagram diagram, int nullity, std::vector<std::uint64_t> fixed_bits, bool guard_passed,
                   std::optional<ClassPartition> fallback);

  const Diagram& diagram() const { return diagram_; }
  int nullity() const { return nullity_; }
  std::uint64_t class_count() const;
  const std::vector<std::uint64_t>& fixed_bits() const { return fixed_bits_; }

  // False when no non-fixed labeling of some parity was found; the
  // prediction then defers to the enumerated partition.
  bool guard_passed() const { return guard_passed_; }
  const std::string& warning() const { return warning_; }

  // Fixed labelings get keys 0..F-1 in increasing order; F is the odd class
  // and F+1 the even class. With the fallback the key is the class index.
  std::uint64_t key(const Labeling& a) const;

 private:
  Diagram diagram_;
  int nullity_ = 0;
  std::vector<std::uint64_t> fixed_bits_;
  bool guard_passed_ = true;
  std::string warning_;
  std::optional<ClassPartition> fallback_;
};

// Requires contains_e6(diagram).
E6TreePrediction e6_tree_classify(const Diagram& diagram, int max_free = kDefaultMaxFree);

// Predicted partition of the flower with d petals (center at index 0).
class FlowerPrediction {
 public:
  explicit FlowerPrediction(int d);

  int petals() const { return d_; }
  // 2 + sum over m >= 1 of C(d, 2m).
  std::uint64_t class_count() const;
  // Zero and even petal subsets with the center at 0 are singletons keyed by
  // their petal mask; every other labeling is in the odd class, keyed 2^d.
  std::uint64_t key(const Labeling& a) const;

 private:
  int d_;
};

FlowerPrediction flower_classify(int d);

// True iff `key` induces exactly the partition: equal keys <=> equal class.
bool matches_partition(const ClassPartition& partition, const std::function<std::uint64_t(const Labeling&)>& key);

// On B_n with the first n-1 labels `tail` (nonzero), returns moves taking
// (tail => 1) to (tail => 0): extend the last component to vertex n-1,
// swallow at n, shrink back. nullopt when tail is zero. Indices are 0-based.
std::optional<std::vector<int>> swallowing_check(const Diagram& diagram, const Labeling& tail);

}  // namespace reeder
