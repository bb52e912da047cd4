#include "reeder/sigma.hpp"

#include <algorithm>
#include <bit>

#include "json.hpp"

#include "reeder/error.hpp"
#include "reeder/orbits.hpp"

namespace reeder {

namespace {

void require_simply_laced(const Diagram& d) {
  if (!d.is_simply_laced()) throw PreconditionError("the sigma game is defined only on simply-laced diagrams");
  if (d.pinned_mask() != 0) throw PreconditionError("the sigma game is defined only on unpinned diagrams");
}

}  // namespace

Labeling sigma_move(const Diagram& diagram, const Labeling& a, int i) {
  require_simply_laced(diagram);
  check_labeling(diagram, a);
  if (!a.test(i)) return a;
  return Labeling(a.size(), a.bits() ^ diagram.neighbor_mask(i));
}

F2Matrix sigma_matrix(const Diagram& diagram, int i) {
  require_simply_laced(diagram);
  F2Matrix m = F2Matrix::identity(diagram.size());
  for (std::uint64_t nb = diagram.neighbor_mask(i); nb != 0; nb &= nb - 1) m.set(std::countr_zero(nb), i, true);
  return m;
}

bool duality_check(const Diagram& diagram) {
  require_simply_laced(diagram);
  const F2Matrix a = adjacency_matrix(diagram);
  for (int i = 0; i < diagram.size(); ++i) {
    const F2Matrix t = move_matrix(diagram, i);
    const F2Matrix s = sigma_matrix(diagram, i);
    if (s != t.transpose() || a * t != s * a) return false;
  }
  return true;
}

std::pair<std::vector<std::uint32_t>, std::uint32_t> sigma_orbits(const Diagram& diagram, int max_free) {
  require_simply_laced(diagram);
  if (diagram.size() > std::min(max_free, kHardMaxFree)) {
    throw ResourceError("sigma orbit enumeration needs 2^" + std::to_string(diagram.size()) +
                        " states; the cap is " + std::to_string(std::min(max_free, kHardMaxFree)) + " vertices");
  }
  std::vector<std::uint64_t> nb(static_cast<std::size_t>(diagram.size()));
  for (int i = 0; i < diagram.size(); ++i) nb[static_cast<std::size_t>(i)] = diagram.neighbor_mask(i);
  return detail::label_orbits(std::uint64_t{1} << diagram.size(), diagram.size(),
                              [&](std::uint64_t x, int i) { return ((x >> i) & 1u) ? x ^ nb[i] : x; });
}

DualityReport orbit_bijection_check(const Diagram& diagram, int max_free) {
  require_simply_laced(diagram);
  const F2Matrix a = adjacency_matrix(diagram);
  const ClassPartition reeder = enumerate_classes(diagram, max_free);
  const auto [orbit, orbit_count] = sigma_orbits(diagram, max_free);

  DualityReport report;
  report.reeder_classes = reeder.class_count();
  report.sigma_orbits = static_cast<int>(orbit_count);
  report.det_A = a.determinant();
  report.applicable = report.det_A == 1;
  if (!report.applicable) return report;

  // Each class must land in one orbit, and distinct classes in distinct
  // orbits; with equal counts that is a bijection.
  std::vector<int> image(static_cast<std::size_t>(reeder.class_count()), -1);
  bool ok = true;
  for (std::uint64_t s = 0; s < reeder.state_count() && ok; ++s) {
    const int c = reeder.class_of_state(s);
    const int o = static_cast<int>(orbit[a.apply(s)]);
    int& slot = image[static_cast<std::size_t>(c)];
    if (slot == -1) {
      slot = o;
    } else if (slot != o) {
      ok = false;
    }
  }
  if (ok) {
    std::vector<bool> hit(orbit_count, false);
    for (int o : image) {
      if (hit[static_cast<std::size_t>(o)]) ok = false;
      hit[static_cast<std::size_t>(o)] = true;
    }
    ok = ok && report.reeder_classes == report.sigma_orbits;
  }
  report.bijection_verified = ok;
  if (ok) {
    for (int c = 0; c < reeder.class_count(); ++c) report.pairing.emplace_back(c, image[static_cast<std::size_t>(c)]);
  }
  return report;
}

std::string to_json(const DualityReport& report) {
  nlohmann::ordered_json pairing = nlohmann::ordered_json::array();
  for (const auto& [c, o] : report.pairing) pairing.push_back({c, o});
  const nlohmann::ordered_json doc = {
      {"reeder_classes", report.reeder_classes},
      {"sigma_orbits", report.sigma_orbits},
      {"det_A", report.det_A},
      {"applicable", report.applicable},
      {"bijection_verified", report.bijection_verified},
      {"pairing", pairing},
  };
  return doc.dump(2) + "\n";
}

}  // namespace reeder
