#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reeder/diagram.hpp"
#include "reeder/f2_matrix.hpp"

namespace reeder {

inline constexpr int kDefaultMaxFree = 26;
// The parent array is indexed by uint32.
inline constexpr int kHardMaxFree = 31;

// Returns a with bit i replaced by a_i + sum of effective neighbors; pinned
// vertices are left unchanged.
Labeling apply_move(const Diagram& diagram, const Labeling& a, int i);
Labeling apply_sequence(const Diagram& diagram, const Labeling& a, std::span<const int> moves);

// Same rule on raw full-width bits, without validation.
inline std::uint64_t apply_move_bits(const Diagram& diagram, std::uint64_t bits, int i) {
  if (diagram.is_pinned(i)) return bits;
  const std::uint64_t flip = static_cast<std::uint64_t>(std::popcount(bits & diagram.effective_mask(i)) & 1);
  return bits ^ (flip << i);
}

struct MoveOperator {
  int vertex = 0;
  F2Matrix as_matrix;
};

// Identity with row i replaced by e_i + effective-neighbor indicator. Acting
// on column vectors it reproduces apply_move. Pinned i gives the identity.
F2Matrix move_matrix(const Diagram& diagram, int i);
MoveOperator move_operator(const Diagram& diagram, int i);

// Maps between full labelings and the compact state index over free
// vertices (free vertex k in bit k).
std::uint64_t encode_state(const Diagram& diagram, std::uint64_t bits);
std::uint64_t decode_state(const Diagram& diagram, std::uint64_t state);

struct ClassSummary {
  std::uint64_t size = 0;
  Labeling min_rep;
  // (component count, number of members), ascending by count.
  std::vector<std::pair<int, std::uint64_t>> component_histogram;
  bool singleton_fixed = false;
};

class ClassPartition {
 public:
  ClassPartition(Diagram diagram, std::vector<std::uint32_t> class_id, std::vector<ClassSummary> summaries);

  const Diagram& diagram() const { return diagram_; }
  int class_count() const { return static_cast<int>(summaries_.size()); }
  std::uint64_t state_count() const { return class_id_.size(); }

  int class_of(const Labeling& a) const;
  int class_of_state(std::uint64_t state) const { return static_cast<int>(class_id_[state]); }

  const ClassSummary& summary(int c) const;
  std::span<const ClassSummary> summaries() const { return summaries_; }
  Labeling minimal_representative(int c) const { return summary(c).min_rep; }

  // Members of class c in increasing order.
  std::vector<Labeling> members(int c) const;
  // Members of every class, indexed by class.
  std::vector<std::vector<std::uint64_t>> all_member_bits() const;

 private:
  Diagram diagram_;
  std::vector<std::uint32_t> class_id_;
  std::vector<ClassSummary> summaries_;
};

// Union-find closure over all 2^f states. The minimal representative of a
// class has least weight, ties broken by least integer value; classes are
// numbered by the integer value of that representative. Throws ResourceError when f > max_free.
ClassPartition enumerate_classes(const Diagram& diagram, int max_free = kDefaultMaxFree);

// Breadth-first search from a; does not build the full partition.
bool are_equivalent(const Diagram& diagram, const Labeling& a, const Labeling& b, int max_free = kDefaultMaxFree);

int class_of(const ClassPartition& partition, const Labeling& a);
Labeling minimal_representative(const ClassPartition& partition, int c);

// Exports. Bitstrings follow the diagram's display order.
std::string partition_to_json(const ClassPartition& partition, bool include_members);
std::string partition_to_csv(const ClassPartition& partition, bool include_members);
std::string partition_to_text(const ClassPartition& partition, bool include_members);

}  // namespace reeder
