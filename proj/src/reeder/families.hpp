#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reeder/diagram.hpp"

namespace reeder {

enum class Family {
  A, affA, B, affB, C, affC, D, affD,
  E6, E7, E8, affE6, affE7, affE8, F4, affF4, G2, affG2,
  X, A2_2, Y, Z, E6_2, D4_3, flower,
  Abox_m, Abox_1m, Bbox_1, Dbox_1,
};

struct FamilySpec {
  Family family = Family::A;
  int param = 1;

  bool operator==(const FamilySpec&) const = default;
};

std::span<const Family> all_families();
std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

// Fixed-size families accept only their natural rank as parameter.
bool is_fixed_size(Family family);
int min_param(Family family);

// Parses `NAME:PARAM`. Fixed-size families may omit the parameter; boxed A
// also accepts `Abox:M:ends=1` (one box) and `Abox:M:ends=2` (both ends).
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

// Throws ValidationError when the parameter is out of range.
void validate(const FamilySpec& spec);
int vertex_count(const FamilySpec& spec);

// Vertex layout in the standard Dynkin numbering: vertex p >= 1 sits at
// index p-1; vertex 0 (affine node, twisted end, or box) sits at the last
// index. Boxed A
// diagrams put their free vertices first, then the box(es). The display
// order lists indices in standard order. Results are normalized.
Diagram construct(const FamilySpec& spec);

// Closed-form class count, or nullopt for E6, E7, E8 and F4.
std::optional<std::uint64_t> closed_form_count(const FamilySpec& spec);

// Path labelings on n vertices: xi has r isolated 1s packed to the left
// (positions 1, 3, ...), eta packed to the right (n, n-2, ...).
Labeling xi(int r, int n);
Labeling eta(int r, int n);

struct RepresentativeSet {
  std::vector<Labeling> labelings;
  // Short ASCII tag naming each entry, e.g. "xi[2]" or "ell_l".
  std::vector<std::string> provenance;
};

// Canonical representative list in class-by-class form, or nullopt for the
// families without an explicit list (E6, E7, E8, F4).
std::optional<RepresentativeSet> canonical_representatives(const FamilySpec& spec);

// Labeling from a bitstring written in the diagram's display order.
Labeling from_display(const Diagram& diagram, std::string_view bits);

}  // namespace reeder
