#include "reeder/verify.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "json.hpp"

#include "reeder/classifiers.hpp"
#include "reeder/sigma.hpp"

namespace reeder {

namespace {

// Exhaustive matrix-versus-move comparison costs n^2 2^f; above this many
// free vertices only the matrix identities are checked.
constexpr int kMatrixActionLimit = 16;

class Collector {
 public:
  void add(std::string name, bool ok, std::string detail = {}) {
    checks_.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
  }
  void skip(std::string name, std::string why) { checks_.push_back({std::move(name), CheckStatus::skip, std::move(why)}); }
  std::vector<CheckResult> take() { return std::move(checks_); }

 private:
  std::vector<CheckResult> checks_;
};

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
  }
  return "?";
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

bool RepresentativeCheck::all_ok() const {
  return pairwise_inequivalent && complete &&
         std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.minimal_weight; });
}

RepresentativeCheck check_representatives(const ClassPartition& partition, const RepresentativeSet& reps) {
  RepresentativeCheck out;
  std::set<int> hit;
  for (std::size_t k = 0; k < reps.labelings.size(); ++k) {
    RepresentativeCheck::Entry e;
    e.provenance = reps.provenance[k];
    e.labeling = reps.labelings[k];
    e.class_index = partition.class_of(e.labeling);
    e.minimal_weight = e.labeling.weight() == partition.summary(e.class_index).min_rep.weight();
    hit.insert(e.class_index);
    out.entries.push_back(std::move(e));
  }
  out.pairwise_inequivalent = hit.size() == reps.labelings.size();
  out.complete = static_cast<int>(hit.size()) == partition.class_count();
  return out;
}

VerifyReport verify_diagram(const Diagram& diagram, const std::optional<FamilySpec>& spec, int max_free) {
  Collector out;
  const Diagram& d = diagram;
  const int n = d.size();

  const Diagram once = normalize(d);
  out.add("normalization is idempotent", normalize(once).same_structure(once) && once.is_normalized());

  bool symmetric = true;
  for (const Edge& e : d.edges()) {
    if (e.multiplicity % 2 == 1) {
      symmetric = symmetric && ((d.effective_mask(e.u) >> e.v) & 1u) && ((d.effective_mask(e.v) >> e.u) & 1u);
    } else {
      symmetric = symmetric && !((d.effective_mask(e.u) >> e.v) & 1u) && ((d.effective_mask(e.v) >> e.u) & 1u);
    }
  }
  out.add("effective neighbors follow edge direction", symmetric);

  const ClassPartition partition = enumerate_classes(d, max_free);
  const std::uint64_t states = partition.state_count();

  // One pass over all states for the per-state properties.
  const bool tree = d.is_simply_laced() && d.pinned_mask() == 0 && is_tree(d);
  bool involution = true;
  bool locality = true;
  bool parity_kept = true;
  bool low_degree_kept = true;
  std::set<std::uint64_t> fixed_by_moves;
  std::vector<int> min_weight(static_cast<std::size_t>(partition.class_count()), 65);
  for (std::uint64_t s = 0; s < states; ++s) {
    const std::uint64_t a = decode_state(d, s);
    const int comps = count_components_bits(d, a);
    bool fixed = true;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t b = apply_move_bits(d, a, i);
      if (apply_move_bits(d, b, i) != a) involution = false;
      if ((a ^ b) & ~(std::uint64_t{1} << i)) locality = false;
      if (b != a) {
        fixed = false;
        if (tree) {
          const int after = count_components_bits(d, b);
          if ((after - comps) % 2 != 0) parity_kept = false;
          if (d.degree(i) <= 2 && after != comps) low_degree_kept = false;
        }
      }
    }
    if (fixed) fixed_by_moves.insert(a);
    int& w = min_weight[static_cast<std::size_t>(partition.class_of_state(s))];
    w = std::min(w, std::popcount(a));
  }
  out.add("moves are involutions", involution);
  out.add("moves change only their own vertex", locality);

  bool matrices = true;
  for (int i = 0; i < n; ++i) {
    const F2Matrix t = move_matrix(d, i);
    if (t * t != F2Matrix::identity(n)) matrices = false;
    if (d.free_count() <= kMatrixActionLimit) {
      for (std::uint64_t s = 0; s < states && matrices; ++s) {
        const std::uint64_t a = decode_state(d, s);
        if (t.apply(a) != apply_move_bits(d, a, i)) matrices = false;
      }
    }
  }
  out.add("move matrices square to the identity and act as the moves", matrices);

  const std::vector<Labeling> solved = fixed_labelings(d);
  std::set<std::uint64_t> solved_bits;
  for (const Labeling& l : solved) solved_bits.insert(l.bits());
  out.add("fixed labelings from the linear system match the moves", solved_bits == fixed_by_moves,
          std::to_string(solved.size()) + " fixed labelings");
  if (d.pinned_mask() == 0) {
    const int nullity = nullity_f2(effective_system(d));
    out.add("fixed labeling count is 2^nullity", solved.size() == (std::uint64_t{1} << nullity),
            "nullity " + std::to_string(nullity));
  } else {
    out.skip("fixed labeling count is 2^nullity", "diagram has pinned vertices");
  }

  std::uint64_t total = 0;
  bool singletons = true;
  bool minimal = true;
  for (int c = 0; c < partition.class_count(); ++c) {
    const ClassSummary& s = partition.summary(c);
    total += s.size;
    if ((s.size == 1) != fixed_by_moves.contains(s.min_rep.bits())) singletons = false;
    if (s.singleton_fixed != (s.size == 1)) singletons = false;
    if (s.min_rep.weight() != min_weight[static_cast<std::size_t>(c)]) minimal = false;
  }
  out.add("class sizes sum to the state count", total == states,
          std::to_string(partition.class_count()) + " classes over " + std::to_string(states) + " states");
  out.add("singleton classes are exactly the fixed labelings", singletons);
  out.add("minimal representatives have least weight", minimal);

  if (spec) {
    const auto formula = closed_form_count(*spec);
    if (formula) {
      out.add("closed-form class count", *formula == static_cast<std::uint64_t>(partition.class_count()),
              "formula " + std::to_string(*formula) + ", brute force " + std::to_string(partition.class_count()));
    } else {
      out.skip("closed-form class count", "no closed form; brute force gives " +
                                               std::to_string(partition.class_count()));
    }
    const auto reps = canonical_representatives(*spec);
    if (reps) {
      const RepresentativeCheck check = check_representatives(partition, *reps);
      const bool weight_ok =
          std::all_of(check.entries.begin(), check.entries.end(), [](const auto& e) { return e.minimal_weight; });
      out.add("canonical representatives are pairwise inequivalent", check.pairwise_inequivalent);
      out.add("canonical representatives cover every class", check.complete,
              std::to_string(reps->labelings.size()) + " representatives for " +
                  std::to_string(partition.class_count()) + " classes");
      out.add("canonical representatives have minimal weight", weight_ok);
    } else {
      out.skip("canonical representatives", "no explicit representative list");
    }
  }

  if (tree) {
    out.add("component parity is invariant on trees", parity_kept);
    out.add("degree <= 2 moves keep the component count", low_degree_kept);
  } else {
    out.skip("tree invariants", "not an unpinned simply-laced tree");
  }

  if (tree && contains_e6(d)) {
    const E6TreePrediction prediction = e6_tree_classify(d, max_free);
    const bool count_ok = prediction.class_count() == static_cast<std::uint64_t>(partition.class_count()) &&
                          prediction.class_count() == (std::uint64_t{1} << prediction.nullity()) + 2;
    const bool members_ok = matches_partition(partition, [&](const Labeling& a) { return prediction.key(a); });
    out.add("E6 tree prediction", count_ok && members_ok && prediction.guard_passed(),
            "predicted " + std::to_string(prediction.class_count()));
  } else {
    out.skip("E6 tree prediction", "diagram is not a tree containing E6");
  }

  if (d.is_simply_laced() && d.pinned_mask() == 0) {
    out.add("duality A T_i = S_i A and S_i = T_i^T", duality_check(d));
    const DualityReport report = orbit_bijection_check(d, max_free);
    if (report.applicable) {
      out.add("Reeder classes correspond to sigma orbits", report.bijection_verified,
              std::to_string(report.reeder_classes) + " classes, " + std::to_string(report.sigma_orbits) + " orbits");
    } else {
      out.skip("Reeder classes correspond to sigma orbits", "det A = 0");
    }
  } else {
    out.skip("duality", "not an unpinned simply-laced diagram");
  }

  VerifyReport report;
  report.diagram = d.name();
  report.checks = out.take();
  return report;
}

std::string to_text(const VerifyReport& report) {
  std::ostringstream os;
  for (const CheckResult& c : report.checks) {
    os << status_name(c.status) << "  " << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << '\n';
  }
  os << (report.all_passed() ? "all checks passed" : "some checks FAILED") << '\n';
  return os.str();
}

std::string to_json(const VerifyReport& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  }
  const nlohmann::ordered_json doc = {
      {"diagram", report.diagram}, {"passed", report.all_passed()}, {"checks", checks}};
  return doc.dump(2) + "\n";
}

}  // namespace reeder
