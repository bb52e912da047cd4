#include "reeder/classifiers.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "reeder/error.hpp"
#include "reeder/families.hpp"

namespace reeder {

namespace {

void require_simple_tree(const Diagram& d, const char* what) {
  if (!d.is_simply_laced() || d.pinned_mask() != 0 || !is_tree(d)) {
    throw PreconditionError(std::string(what) + " requires an unpinned simply-laced tree");
  }
}

}  // namespace

bool is_path(const Diagram& diagram) {
  return diagram.is_simply_laced() && diagram.pinned_mask() == 0 && is_tree(diagram) && max_degree(diagram) <= 2;
}

int classify_by_components(const Diagram& diagram, const Labeling& a) {
  if (!is_path(diagram)) throw PreconditionError("classify_by_components requires a path diagram");
  return count_components(diagram, a);
}

int parity(const Diagram& diagram, const Labeling& a) {
  require_simple_tree(diagram, "parity");
  return count_components(diagram, a) & 1;
}

// ------------------------------------------------------------------ E6 tree

E6TreePrediction::E6TreePrediction(Diagram diagram, int nullity, std::vector<std::uint64_t> fixed_bits,
                                   bool guard_passed, std::optional<ClassPartition> fallback)
    : diagram_(std::move(diagram)),
      nullity_(nullity),
      fixed_bits_(std::move(fixed_bits)),
      guard_passed_(guard_passed),
      fallback_(std::move(fallback)) {
  if (!guard_passed_) {
    warning_ = "no non-fixed labeling found for one parity; using the enumerated partition";
  }
}

std::uint64_t E6TreePrediction::class_count() const {
  if (fallback_) return static_cast<std::uint64_t>(fallback_->class_count());
  return fixed_bits_.size() + 2;
}

std::uint64_t E6TreePrediction::key(const Labeling& a) const {
  if (fallback_) return static_cast<std::uint64_t>(fallback_->class_of(a));
  const auto it = std::lower_bound(fixed_bits_.begin(), fixed_bits_.end(), a.bits());
  if (it != fixed_bits_.end() && *it == a.bits()) return static_cast<std::uint64_t>(it - fixed_bits_.begin());
  return fixed_bits_.size() + static_cast<std::uint64_t>(1 - parity(diagram_, a));
}

E6TreePrediction e6_tree_classify(const Diagram& diagram, int max_free) {
  if (!contains_e6(diagram)) throw PreconditionError("e6_tree_classify requires a tree containing E6");
  const int nullity = nullity_f2(adjacency_matrix(diagram));
  std::vector<std::uint64_t> fixed;
  for (const Labeling& l : fixed_labelings(diagram)) fixed.push_back(l.bits());

  // Witnesses: a single 1 is odd, two non-adjacent 1s are even.
  bool odd = false;
  bool even = false;
  const int n = diagram.size();
  for (int i = 0; i < n && !odd; ++i) odd = !is_fixed(diagram, Labeling(n, std::uint64_t{1} << i));
  for (int i = 0; i < n && !even; ++i) {
    for (int j = i + 1; j < n && !even; ++j) {
      if ((diagram.neighbor_mask(i) >> j) & 1u) continue;
      even = !is_fixed(diagram, Labeling(n, (std::uint64_t{1} << i) | (std::uint64_t{1} << j)));
    }
  }
  const bool guard = odd && even;
  std::optional<ClassPartition> fallback;
  if (!guard) fallback.emplace(enumerate_classes(diagram, max_free));
  return E6TreePrediction(diagram, nullity, std::move(fixed), guard, std::move(fallback));
}

// ------------------------------------------------------------------ flower

FlowerPrediction::FlowerPrediction(int d) : d_(d) {
  if (d < 1 || d >= kMaxVertices) throw ValidationError("flower needs 1 <= d <= 63, got " + std::to_string(d));
}

std::uint64_t FlowerPrediction::class_count() const {
  // Pascal row d.
  std::vector<std::uint64_t> row{1};
  for (int r = 1; r <= d_; ++r) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(r) + 1, 1);
    for (int k = 1; k < r; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  std::uint64_t total = 2;
  for (int m = 2; m <= d_; m += 2) total += row[static_cast<std::size_t>(m)];
  return total;
}

std::uint64_t FlowerPrediction::key(const Labeling& a) const {
  if (a.size() != d_ + 1) throw IndexError("labeling length does not match the flower");
  const std::uint64_t petal_mask = a.bits() >> 1;
  if (!a.test(0) && std::popcount(petal_mask) % 2 == 0) return petal_mask;
  return std::uint64_t{1} << d_;
}

FlowerPrediction flower_classify(int d) { return FlowerPrediction(d); }

bool matches_partition(const ClassPartition& partition, const std::function<std::uint64_t(const Labeling&)>& key) {
  const Diagram& d = partition.diagram();
  std::unordered_map<std::uint64_t, int> key_to_class;
  std::vector<std::optional<std::uint64_t>> class_to_key(static_cast<std::size_t>(partition.class_count()));
  for (std::uint64_t s = 0; s < partition.state_count(); ++s) {
    const Labeling a(d.size(), decode_state(d, s));
    const std::uint64_t k = key(a);
    const int c = partition.class_of_state(s);
    const auto [it, inserted] = key_to_class.emplace(k, c);
    if (!inserted && it->second != c) return false;
    auto& slot = class_to_key[static_cast<std::size_t>(c)];
    if (slot && *slot != k) return false;
    slot = k;
  }
  return true;
}

// -------------------------------------------------------------- swallowing

std::optional<std::vector<int>> swallowing_check(const Diagram& diagram, const Labeling& tail) {
  const int n = diagram.size();
  if (n < 2 || !diagram.same_structure(construct(FamilySpec{Family::B, n}))) {
    throw PreconditionError("swallowing_check requires a B_n diagram");
  }
  if (tail.size() != n - 1) {
    throw IndexError("tail has length " + std::to_string(tail.size()) + ", expected " + std::to_string(n - 1));
  }
  if (tail.bits() == 0) return std::nullopt;

  // Last 1 of the tail, 0-based; the short vertex is n-1.
  const int j = 63 - std::countl_zero(tail.bits());
  std::vector<int> moves;
  for (int m = j + 1; m <= n - 2; ++m) moves.push_back(m);
  moves.push_back(n - 1);
  for (int m = n - 2; m >= j + 1; --m) moves.push_back(m);

  const std::uint64_t short_bit = std::uint64_t{1} << (n - 1);
  const Labeling from(n, tail.bits() | short_bit);
  const Labeling to(n, tail.bits());
  if (apply_sequence(diagram, from, moves) != to) throw Error("swallowing script failed to reach its target");
  return moves;
}

}  // namespace reeder
