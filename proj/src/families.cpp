#include "reeder/families.hpp"

#include <array>
#include <charconv>
#include <cctype>
#include <utility>

#include "reeder/error.hpp"

namespace reeder {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  int min_param;
  bool fixed_size;
};

constexpr std::array<FamilyInfo, 29> kFamilies{{
    {Family::A, "A", 1, false},          {Family::affA, "affA", 2, false},
    {Family::B, "B", 2, false},          {Family::affB, "affB", 4, false},
    {Family::C, "C", 3, false},          {Family::affC, "affC", 3, false},
    {Family::D, "D", 4, false},          {Family::affD, "affD", 5, false},
    {Family::E6, "E6", 6, true},         {Family::E7, "E7", 7, true},
    {Family::E8, "E8", 8, true},         {Family::affE6, "affE6", 6, true},
    {Family::affE7, "affE7", 7, true},   {Family::affE8, "affE8", 8, true},
    {Family::F4, "F4", 4, true},         {Family::affF4, "affF4", 4, true},
    {Family::G2, "G2", 2, true},         {Family::affG2, "affG2", 2, true},
    {Family::X, "X", 1, false},          {Family::A2_2, "A2_2", 2, true},
    {Family::Y, "Y", 4, false},          {Family::Z, "Z", 2, false},
    {Family::E6_2, "E6_2", 6, true},     {Family::D4_3, "D4_3", 4, true},
    {Family::flower, "flower", 1, false}, {Family::Abox_m, "Abox_m", 1, false},
    {Family::Abox_1m, "Abox_1m", 1, false}, {Family::Bbox_1, "Bbox_1", 2, false},
    {Family::Dbox_1, "Dbox_1", 4, false},
}};

const FamilyInfo& info(Family family) {
  for (const FamilyInfo& f : kFamilies) {
    if (f.family == family) return f;
  }
  throw ValidationError("unknown family");
}

std::vector<Family> family_list() {
  std::vector<Family> out;
  for (const FamilyInfo& f : kFamilies) out.push_back(f.family);
  return out;
}

bool iequal(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i]))) return false;
  }
  return true;
}

int ceil_half(int x) { return x <= 0 ? 0 : (x + 1) / 2; }

// ------------------------------------------------------------ construction

struct Builder {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<int> pinned;
  std::vector<int> order;

  explicit Builder(int vertices) : n(vertices) {}

  void line(int a, int b) { edges.push_back(Edge{a, b, 1, false}); }
  void path(int first, int last) {
    for (int i = first; i < last; ++i) line(i, i + 1);
  }
  void arrow(int longer, int shorter, int multiplicity = 2) {
    edges.push_back(Edge{longer, shorter, multiplicity, true});
  }
  // Standard order when the last index is the standard vertex 0.
  void zero_first() {
    order.push_back(n - 1);
    for (int i = 0; i + 1 < n; ++i) order.push_back(i);
  }
  Diagram build(const FamilySpec& spec) && {
    return normalize(Diagram(n, std::move(edges), std::move(pinned), std::move(order), to_string(spec)));
  }
};

// D_n on indices 0..n-1: path 0..n-2, index n-1 attached to n-3.
void add_d(Builder& b, int n) {
  b.path(0, n - 2);
  b.line(n - 1, n - 3);
}

// E-type chain 0..len-1 with a branch vertex attached at `at`.
void add_e(Builder& b, int len, int at) {
  b.path(0, len - 1);
  b.line(len, at);
}

// ---------------------------------------------------------- representatives

std::string xi_str(int r, int n) {
  std::string s(static_cast<std::size_t>(std::max(n, 0)), '0');
  for (int k = 0; k < r; ++k) s[static_cast<std::size_t>(2 * k)] = '1';
  return s;
}

std::string eta_str(int r, int n) {
  std::string s(static_cast<std::size_t>(std::max(n, 0)), '0');
  for (int k = 0; k < r; ++k) s[static_cast<std::size_t>(n - 1 - 2 * k)] = '1';
  return s;
}

std::string zeros(int n) { return std::string(static_cast<std::size_t>(std::max(n, 0)), '0'); }
std::string ones(int n) { return std::string(static_cast<std::size_t>(std::max(n, 0)), '1'); }

std::string tag(std::string_view base, int i) { return std::string(base) + "[" + std::to_string(i) + "]"; }

class RepBuilder {
 public:
  explicit RepBuilder(const Diagram& d) : d_(d) {}
  void add(const std::string& bits, std::string provenance) {
    out_.labelings.push_back(from_display(d_, bits));
    out_.provenance.push_back(std::move(provenance));
  }
  RepresentativeSet take() { return std::move(out_); }

 private:
  const Diagram& d_;
  RepresentativeSet out_;
};

// D_n representatives written over standard vertices 1..n.
std::vector<std::pair<std::string, std::string>> d_reps(int n) {
  std::vector<std::pair<std::string, std::string>> out;
  const int k = n / 2;
  if (n % 2 == 1) {
    for (int i = 0; i <= k; ++i) out.emplace_back(xi_str(i, n - 2) + "00", tag("xi", i));
  } else {
    for (int i = 0; i <= k - 1; ++i) out.emplace_back(xi_str(i, n - 2) + "00", tag("xi", i));
    out.emplace_back(xi_str(k - 1, n - 2) + "10", tag("xi", k - 1) + "+leaf_top");
    out.emplace_back(xi_str(k - 1, n - 2) + "01", tag("xi", k - 1) + "+leaf_bottom");
  }
  out.emplace_back(zeros(n - 2) + "11", "ell");
  return out;
}

// Boxed-D representatives over standard vertices 1..n (box excluded).
std::vector<std::pair<std::string, std::string>> dbox_reps(int n) {
  std::vector<std::pair<std::string, std::string>> out;
  const int k = n / 2;
  for (int i = 0; i <= k - 1; ++i) out.emplace_back("0" + xi_str(i, n - 3) + "00", tag("xi", i));
  if (n % 2 == 1) {
    out.emplace_back("0" + xi_str(k - 1, n - 3) + "10", tag("xi", k - 1) + "+leaf_top");
    out.emplace_back("0" + xi_str(k - 1, n - 3) + "01", tag("xi", k - 1) + "+leaf_bottom");
  }
  return out;
}

}  // namespace

std::span<const Family> all_families() {
  static const std::vector<Family> list = family_list();
  return list;
}

std::string_view family_name(Family family) { return info(family).name; }

std::optional<Family> family_from_name(std::string_view name) {
  for (const FamilyInfo& f : kFamilies) {
    if (iequal(f.name, name)) return f.family;
  }
  return std::nullopt;
}

bool is_fixed_size(Family family) { return info(family).fixed_size; }
int min_param(Family family) { return info(family).min_param; }

FamilySpec parse_family_spec(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.empty() || parts[0].empty() || parts.size() > 3) {
    throw ParseError("expected NAME:PARAM, got '" + std::string(text) + "'");
  }

  FamilySpec spec;
  int ends = 0;
  if (parts.size() == 3) {
    const std::string_view opt = parts[2];
    if (!iequal(parts[0], "Abox") || !opt.starts_with("ends=") || (opt != "ends=1" && opt != "ends=2")) {
      throw ParseError("unrecognized option '" + std::string(opt) + "' in '" + std::string(text) + "'");
    }
    ends = opt.back() - '0';
  }
  if (iequal(parts[0], "Abox")) {
    spec.family = ends == 2 ? Family::Abox_1m : Family::Abox_m;
  } else if (auto f = family_from_name(parts[0])) {
    spec.family = *f;
  } else {
    throw ParseError("unknown family '" + std::string(parts[0]) + "'");
  }

  if (parts.size() == 1) {
    if (!is_fixed_size(spec.family)) {
      throw ParseError("family " + std::string(family_name(spec.family)) + " needs a parameter, e.g. " +
                       std::string(family_name(spec.family)) + ":" + std::to_string(min_param(spec.family)));
    }
    spec.param = min_param(spec.family);
  } else {
    const std::string_view p = parts[1];
    const auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), spec.param);
    if (ec != std::errc() || ptr != p.data() + p.size()) {
      throw ParseError("invalid parameter '" + std::string(p) + "' in '" + std::string(text) + "'");
    }
  }
  validate(spec);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  return std::string(family_name(spec.family)) + ":" + std::to_string(spec.param);
}

void validate(const FamilySpec& spec) {
  const FamilyInfo& f = info(spec.family);
  if (f.fixed_size && spec.param != f.min_param) {
    throw ValidationError(std::string(f.name) + " is fixed-size; its parameter must be " +
                          std::to_string(f.min_param));
  }
  if (spec.param < f.min_param) {
    throw ValidationError(std::string(f.name) + " requires parameter >= " + std::to_string(f.min_param) + ", got " +
                          std::to_string(spec.param));
  }
  if (spec.param > kMaxVertices || vertex_count(spec) > kMaxVertices) {
    throw ValidationError(to_string(spec) + " exceeds the 64-vertex limit");
  }
}

int vertex_count(const FamilySpec& spec) {
  const int n = spec.param;
  switch (spec.family) {
    case Family::A: case Family::B: case Family::C: case Family::D:
      return n;
    case Family::affA: case Family::affB: case Family::affC: case Family::affD:
    case Family::Y: case Family::Z: case Family::flower: case Family::Abox_m:
    case Family::Bbox_1: case Family::Dbox_1:
      return n + 1;
    case Family::X: case Family::Abox_1m:
      return n + 2;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::affE6: return 7;
    case Family::affE7: return 8;
    case Family::affE8: return 9;
    case Family::F4: return 4;
    case Family::affF4: return 5;
    case Family::G2: return 2;
    case Family::affG2: return 3;
    case Family::A2_2: return 2;
    case Family::E6_2: return 5;
    case Family::D4_3: return 3;
  }
  throw ValidationError("unknown family");
}

Diagram construct(const FamilySpec& spec) {
  validate(spec);
  const int n = spec.param;
  Builder b(vertex_count(spec));
  switch (spec.family) {
    case Family::A:
      b.path(0, n - 1);
      break;
    case Family::affA:
      b.path(0, n - 1);
      b.line(n, 0);
      b.line(n, n - 1);
      b.zero_first();
      break;
    case Family::B:
      b.path(0, n - 2);
      b.arrow(n - 2, n - 1);
      break;
    case Family::affB:
      b.path(0, n - 2);
      b.arrow(n - 2, n - 1);
      b.line(n, 1);
      b.zero_first();
      break;
    case Family::C:
      b.path(0, n - 2);
      b.arrow(n - 1, n - 2);
      break;
    case Family::affC:
      b.path(0, n - 2);
      b.arrow(n - 1, n - 2);
      b.arrow(n, 0);
      b.zero_first();
      break;
    case Family::D:
      add_d(b, n);
      break;
    case Family::affD:
      add_d(b, n);
      b.line(n, 1);
      b.zero_first();
      break;
    case Family::E6:
      add_e(b, 5, 2);
      break;
    case Family::E7:
      add_e(b, 6, 3);
      break;
    case Family::E8:
      add_e(b, 7, 4);
      break;
    case Family::affE6:
      add_e(b, 5, 2);
      b.line(6, 5);
      b.zero_first();
      break;
    case Family::affE7:
      add_e(b, 6, 3);
      b.line(7, 5);
      b.zero_first();
      break;
    case Family::affE8:
      add_e(b, 7, 4);
      b.line(8, 0);
      b.zero_first();
      break;
    case Family::F4:
      b.line(0, 1);
      b.arrow(2, 1);
      b.line(2, 3);
      break;
    case Family::affF4:
      b.line(0, 1);
      b.arrow(2, 1);
      b.line(2, 3);
      b.line(3, 4);
      break;
    case Family::G2:
      b.arrow(1, 0, 3);
      break;
    case Family::affG2:
      b.arrow(1, 0, 3);
      b.line(1, 2);
      break;
    case Family::X:
      b.arrow(n + 1, 0);
      b.path(0, n - 1);
      b.arrow(n - 1, n);
      b.zero_first();
      break;
    case Family::A2_2:
      b.arrow(0, 1, 4);
      break;
    case Family::Y:
      add_d(b, n);
      b.arrow(n, 0);
      b.zero_first();
      break;
    case Family::Z:
      b.arrow(0, n);
      b.path(0, n - 2);
      b.arrow(n - 2, n - 1);
      b.zero_first();
      break;
    case Family::E6_2:
      b.line(4, 0);
      b.line(0, 1);
      b.arrow(2, 1);
      b.line(2, 3);
      b.zero_first();
      break;
    case Family::D4_3:
      b.line(2, 0);
      b.arrow(1, 0, 3);
      b.zero_first();
      break;
    case Family::flower:
      for (int p = 1; p <= n; ++p) b.line(0, p);
      break;
    case Family::Abox_m:
      b.path(0, n - 1);
      b.line(n - 1, n);
      b.pinned = {n};
      break;
    case Family::Abox_1m:
      b.path(0, n - 1);
      b.line(n, 0);
      b.line(n - 1, n + 1);
      b.pinned = {n, n + 1};
      b.order.push_back(n);
      for (int i = 0; i < n; ++i) b.order.push_back(i);
      b.order.push_back(n + 1);
      break;
    case Family::Bbox_1:
      b.path(0, n - 2);
      b.arrow(n - 2, n - 1);
      b.line(n, 0);
      b.pinned = {n};
      b.zero_first();
      break;
    case Family::Dbox_1:
      add_d(b, n);
      b.line(n, 0);
      b.pinned = {n};
      b.zero_first();
      break;
  }
  return std::move(b).build(spec);
}

std::optional<std::uint64_t> closed_form_count(const FamilySpec& spec) {
  validate(spec);
  const int n = spec.param;
  const int k = n / 2;
  const bool even = n % 2 == 0;
  auto u = [](int v) { return static_cast<std::uint64_t>(v); };
  switch (spec.family) {
    case Family::A: return u(ceil_half(n) + 1);
    case Family::affA: return u(even ? k + 2 : k + 4);
    case Family::B: return u(2 + ceil_half(n - 1));
    case Family::affB: return u(even ? k + 5 : k + 4);
    case Family::C: return u(n + 1);
    case Family::affC: return u(2 * n + 2);
    case Family::D: return u(even ? k + 3 : k + 2);
    case Family::affD: return u(even ? k + 7 : k + 4);
    case Family::E6: case Family::E7: case Family::E8: case Family::F4:
      return std::nullopt;
    case Family::affE6: return 4;
    case Family::affE7: return 6;
    case Family::affE8: return 4;
    case Family::affF4: return 4;
    case Family::G2: return 2;
    case Family::affG2: return 3;
    case Family::X: return u(n + 3);
    case Family::A2_2: return 3;
    case Family::Y: return u(n + 3);
    case Family::Z: return u(ceil_half(n - 1) + 4);
    case Family::E6_2: return 4;
    case Family::D4_3: return 3;
    case Family::flower: return (std::uint64_t{1} << (n - 1)) + 1;
    case Family::Abox_m: return u(ceil_half(n - 1) + 1);
    case Family::Abox_1m: return u(ceil_half(n - 2) + 2);
    case Family::Bbox_1: return u(1 + ceil_half(n - 2));
    case Family::Dbox_1: return u(even ? k : k + 2);
  }
  return std::nullopt;
}

Labeling xi(int r, int n) {
  if (n < 0 || n > kMaxVertices || r < 0 || r > ceil_half(n)) {
    throw ValidationError("xi(" + std::to_string(r) + ", " + std::to_string(n) + "): need 0 <= r <= ceil(n/2)");
  }
  return Labeling::from_string(xi_str(r, n));
}

Labeling eta(int r, int n) {
  if (n < 0 || n > kMaxVertices || r < 0 || r > ceil_half(n)) {
    throw ValidationError("eta(" + std::to_string(r) + ", " + std::to_string(n) + "): need 0 <= r <= ceil(n/2)");
  }
  return Labeling::from_string(eta_str(r, n));
}

Labeling from_display(const Diagram& diagram, std::string_view bits) {
  if (static_cast<int>(bits.size()) != diagram.size()) {
    throw IndexError("bitstring '" + std::string(bits) + "' has length " + std::to_string(bits.size()) +
                     ", expected " + std::to_string(diagram.size()));
  }
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1') {
      out |= std::uint64_t{1} << diagram.display_order()[k];
    } else if (bits[k] != '0') {
      throw ParseError("bitstring may only contain 0 and 1: " + std::string(bits));
    }
  }
  Labeling a(diagram.size(), out);
  check_labeling(diagram, a);
  return a;
}

std::optional<RepresentativeSet> canonical_representatives(const FamilySpec& spec) {
  const std::optional<std::uint64_t> expected = closed_form_count(spec);
  if (!expected) return std::nullopt;
  const Diagram d = construct(spec);
  RepBuilder r(d);
  const int n = spec.param;
  const int k = n / 2;
  const bool even = n % 2 == 0;

  switch (spec.family) {
    case Family::A:
      for (int i = 0; i <= ceil_half(n); ++i) r.add(xi_str(i, n), tag("xi", i));
      break;
    case Family::affA:
      // Display order: vertex 0 first, then 1..n.
      r.add(ones(n + 1), "ell_1");
      for (int i = 0; i <= ceil_half(n); ++i) r.add("0" + xi_str(i, n), tag("xi", i));
      if (!even) {
        std::string alt = "1";
        for (int p = 1; p <= n; ++p) alt += (p % 2 == 0) ? '1' : '0';
        r.add(alt, "ell_2");
      }
      break;
    case Family::B:
      r.add(zeros(n - 1) + "1", "xi[0]=>1");
      for (int i = 0; i <= ceil_half(n - 1); ++i) r.add(xi_str(i, n - 1) + "0", tag("xi", i) + "=>0");
      break;
    case Family::affB: {
      // Display order b0, b1, b2 .. b_n; the neck is b2 .. b_{n-1}.
      const int neck = n - 2;
      r.add(zeros(n + 1), "ell_0");
      r.add(zeros(n) + "1", "ell_1");
      r.add("11" + zeros(n - 1), "ell_2");
      r.add("11" + zeros(n - 2) + "1", "ell_3");
      const int last = even ? k - 1 : k;
      for (int i = 1; i <= last; ++i) r.add("00" + xi_str(i, neck) + "0", tag("xi", i) + "=>0");
      if (even) {
        r.add("10" + eta_str(k - 1, neck) + "0", "b0+" + tag("eta", k - 1) + "=>0");
        r.add("01" + eta_str(k - 1, neck) + "0", "b1+" + tag("eta", k - 1) + "=>0");
      }
      break;
    }
    case Family::C:
      for (int i = 0; i <= ceil_half(n - 1); ++i) r.add(xi_str(i, n - 1) + "0", tag("xi", i) + "<=0");
      for (int i = 0; i <= ceil_half(n - 2); ++i) r.add(xi_str(i, n - 1) + "1", tag("xi", i) + "<=1");
      break;
    case Family::affC:
      for (int i = 0; i <= ceil_half(n - 1); ++i) r.add("0" + xi_str(i, n - 1) + "0", "0=>" + tag("xi", i) + "<=0");
      for (int i = 0; i <= ceil_half(n - 2); ++i) {
        r.add("0" + eta_str(i, n - 2) + "01", "0=>" + tag("eta", i) + "0<=1");
      }
      for (int i = 0; i <= ceil_half(n - 2); ++i) {
        r.add("10" + xi_str(i, n - 2) + "0", "1=>0" + tag("xi", i) + "<=0");
      }
      for (int i = 0; i <= ceil_half(n - 3); ++i) {
        r.add("10" + xi_str(i, n - 3) + "01", "1=>0" + tag("xi", i) + "0<=1");
      }
      r.add(ones(n + 1), "all_ones");
      break;
    case Family::D:
      for (const auto& [bits, t] : d_reps(n)) r.add(bits, t);
      break;
    case Family::affD: {
      // Display order d0, d1, d2 .. d_n; d0, d1 hang off d2 and
      // d_{n-1}, d_n hang off d_{n-2}.
      r.add("11" + zeros(n - 1), "ell_l");
      r.add(zeros(n - 1) + "11", "ell_r");
      r.add("11" + zeros(n - 3) + "11", "ell_c");
      for (int i = 0; i <= k - 1; ++i) r.add("00" + xi_str(i, n - 3) + "00", tag("xi", i));
      if (!even) {
        r.add("00" + xi_str(k - 1, n - 4) + "0" + "10", "kappa");
      } else {
        const std::string mid = "0" + xi_str(k - 2, n - 5) + "0";
        // Leaf pairs written (d1/d0) and (d_{n-1}/d_n); d0 precedes d1 in the
        // display order.
        r.add("01" + mid + "10", "ell_1");
        r.add("10" + mid + "10", "ell_2");
        r.add("01" + mid + "01", "ell_3");
        r.add("10" + mid + "01", "ell_4");
      }
      break;
    }
    case Family::affE6:
      r.add("0000000", "zero");
      r.add("1101010", "ell");
      r.add("0100000", "odd");
      r.add("0101000", "even");
      break;
    case Family::affE7:
      r.add("00000000", "zero");
      r.add("01010001", "ell_l");
      r.add("10000101", "ell_r");
      r.add("11010100", "ell_c");
      r.add("01000000", "odd");
      r.add("01010000", "even");
      break;
    case Family::affE8:
      r.add("000000000", "zero");
      r.add("101010001", "ell_l");
      r.add("100000000", "odd");
      r.add("101000000", "even");
      break;
    case Family::affF4:
      r.add("00000", "zero");
      r.add("10000", "a1");
      r.add("00100", "a3");
      r.add("00101", "a3+a0");
      break;
    case Family::G2:
      r.add("00", "xi[0]");
      r.add("10", "xi[1]");
      break;
    case Family::affG2:
      r.add("000", "xi[0]");
      r.add("100", "xi[1]");
      r.add("101", "xi[2]");
      break;
    case Family::X:
      // Display order x0, x1 .. x_{n+1}.
      r.add("0" + xi_str(0, n) + "1", "0=>xi[0]=>1");
      for (int i = 0; i <= ceil_half(n); ++i) r.add("0" + xi_str(i, n) + "0", "0=>" + tag("xi", i) + "=>0");
      for (int i = 0; i <= ceil_half(n - 1); ++i) r.add("1" + eta_str(i, n) + "0", "1=>" + tag("eta", i) + "=>0");
      break;
    case Family::A2_2:
      r.add("00", "zero");
      r.add("01", "short");
      r.add("10", "long");
      break;
    case Family::Y:
      for (const auto& [bits, t] : d_reps(n)) r.add("0" + bits, "0=>" + t);
      for (const auto& [bits, t] : dbox_reps(n)) r.add("1" + bits, "1=>" + t);
      break;
    case Family::Z:
      r.add("1" + zeros(n), "ell_l");
      r.add(zeros(n) + "1", "ell_r");
      r.add("1" + zeros(n - 1) + "1", "ell_c");
      for (int i = 0; i <= ceil_half(n - 1); ++i) r.add("0" + xi_str(i, n - 1) + "0", "0<=" + tag("xi", i) + "=>0");
      break;
    case Family::E6_2:
      r.add("00000", "zero");
      r.add("10100", "fixed");
      r.add("10000", "odd");
      r.add("00001", "short");
      break;
    case Family::D4_3:
      r.add("000", "xi[0]");
      r.add("100", "xi[1]");
      r.add("101", "xi[2]");
      break;
    case Family::flower:
      r.add(zeros(n + 1), "zero");
      for (std::uint64_t petals = 1; petals < (std::uint64_t{1} << n); ++petals) {
        if (std::popcount(petals) % 2 != 0) continue;
        std::string s = "0";
        for (int p = 0; p < n; ++p) s += ((petals >> p) & 1u) ? '1' : '0';
        r.add(s, "petals");
      }
      r.add("1" + zeros(n), "odd");
      break;
    case Family::Abox_m:
      for (int i = 0; i <= ceil_half(n - 1); ++i) r.add(xi_str(i, n - 1) + "01", tag("xi", i) + "0[1]");
      break;
    case Family::Abox_1m:
      if (n == 1) {
        r.add("101", "[1]0[1]");
      } else {
        for (int i = 0; i <= ceil_half(n - 2); ++i) r.add("10" + xi_str(i, n - 2) + "01", "[1]0" + tag("xi", i) + "0[1]");
      }
      r.add(ones(n + 2), "all_ones");
      break;
    case Family::Bbox_1:
      for (int i = 0; i <= ceil_half(n - 2); ++i) r.add("1" + eta_str(i, n - 1) + "0", "[1]" + tag("eta", i) + "=>0");
      break;
    case Family::Dbox_1:
      for (const auto& [bits, t] : dbox_reps(n)) r.add("1" + bits, "[1]" + t);
      break;
    case Family::E6: case Family::E7: case Family::E8: case Family::F4:
      return std::nullopt;
  }
  return r.take();
}

}  // namespace reeder
