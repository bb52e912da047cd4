#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reeder/diagram.hpp"
#include "reeder/families.hpp"
#include "reeder/moves.hpp"

namespace reeder {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct VerifyReport {
  std::string diagram;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

// Runs every invariant that applies to the diagram: normalization, move
// involution and locality, fixed-labeling consistency, partition sanity,
// tree parity, the E6 prediction and duality. With a family spec it also
// checks the closed form and the canonical representatives.
VerifyReport verify_diagram(const Diagram& diagram, const std::optional<FamilySpec>& spec,
                            int max_free = kDefaultMaxFree);

struct RepresentativeCheck {
  struct Entry {
    std::string provenance;
    Labeling labeling;
    int class_index = -1;
    bool minimal_weight = false;
  };
  std::vector<Entry> entries;
  bool pairwise_inequivalent = false;
  bool complete = false;

  bool all_ok() const;
};

// Locates each representative in the partition.
RepresentativeCheck check_representatives(const ClassPartition& partition, const RepresentativeSet& reps);

std::string to_text(const VerifyReport& report);
std::string to_json(const VerifyReport& report);

}  // namespace reeder
