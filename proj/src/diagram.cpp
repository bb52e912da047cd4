#include "reeder/diagram.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "reeder/bits.hpp"
#include "reeder/error.hpp"

namespace reeder {

namespace {

std::string pair_name(int u, int v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

using bits::deposit;
using bits::extract;

}  // namespace

// ---------------------------------------------------------------- Labeling

Labeling::Labeling(int size, std::uint64_t bits) : size_(size), bits_(bits) {
  if (size < 0 || size > kMaxVertices) throw IndexError("labeling size out of range: " + std::to_string(size));
  if (size < 64 && (bits >> size) != 0) throw IndexError("labeling has bits beyond its size");
}

Labeling Labeling::from_string(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxVertices)) throw ParseError("labeling longer than 64 vertices");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (text[i] != '0') {
      throw ParseError("labeling may only contain 0 and 1: " + std::string(text));
    }
  }
  return Labeling(static_cast<int>(text.size()), bits);
}

Labeling Labeling::with(int i, bool value) const {
  if (i < 0 || i >= size_) throw IndexError("vertex " + std::to_string(i) + " out of range");
  const std::uint64_t bit = std::uint64_t{1} << i;
  return Labeling(size_, value ? (bits_ | bit) : (bits_ & ~bit));
}

int Labeling::weight() const { return std::popcount(bits_); }

std::string Labeling::to_string() const {
  std::string s(static_cast<std::size_t>(size_), '0');
  for (int i = 0; i < size_; ++i) {
    if (test(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

// ----------------------------------------------------------------- Diagram

Diagram::Diagram(int n_vertices, std::vector<Edge> edges, std::vector<int> pinned,
                 std::vector<int> display_order, std::string name)
    : n_(n_vertices),
      edges_(std::move(edges)),
      pinned_(std::move(pinned)),
      display_order_(std::move(display_order)),
      name_(std::move(name)) {
  if (n_ < 1 || n_ > kMaxVertices) {
    throw ConstructionError("vertex count must be in 1..64, got " + std::to_string(n_));
  }
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      throw ConstructionError("edge " + pair_name(e.u, e.v) + " has an endpoint out of range");
    }
    if (e.u == e.v) throw ConstructionError("self-loop at vertex " + std::to_string(e.u));
    if (e.multiplicity < 1) throw ConstructionError("edge " + pair_name(e.u, e.v) + " has multiplicity < 1");
    if (e.multiplicity % 2 == 0 && !e.directed) {
      throw ConstructionError("edge " + pair_name(e.u, e.v) + " has even multiplicity but no direction");
    }
    if (!seen.insert(std::minmax(e.u, e.v)).second) throw ConstructionError("duplicate edge " + pair_name(e.u, e.v));
  }
  for (int p : pinned_) {
    if (p < 0 || p >= n_) throw ConstructionError("pinned vertex " + std::to_string(p) + " out of range");
    const std::uint64_t bit = std::uint64_t{1} << p;
    if (pinned_mask_ & bit) throw ConstructionError("vertex " + std::to_string(p) + " pinned twice");
    pinned_mask_ |= bit;
  }
  std::sort(pinned_.begin(), pinned_.end());

  if (display_order_.empty()) {
    display_order_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) display_order_[static_cast<std::size_t>(i)] = i;
  } else {
    std::vector<int> sorted = display_order_;
    std::sort(sorted.begin(), sorted.end());
    bool ok = static_cast<int>(sorted.size()) == n_;
    for (int i = 0; ok && i < n_; ++i) ok = sorted[static_cast<std::size_t>(i)] == i;
    if (!ok) throw ConstructionError("display order is not a permutation of the vertices");
  }

  neighbors_.assign(static_cast<std::size_t>(n_), 0);
  effective_.assign(static_cast<std::size_t>(n_), 0);
  for (const Edge& e : edges_) {
    const std::uint64_t bu = std::uint64_t{1} << e.u;
    const std::uint64_t bv = std::uint64_t{1} << e.v;
    neighbors_[e.u] |= bv;
    neighbors_[e.v] |= bu;
    // The longer end of an even edge does not see the shorter end.
    effective_[e.v] |= bu;
    if (e.multiplicity % 2 == 1) effective_[e.u] |= bv;
  }
}

int Diagram::free_count() const { return std::popcount(free_mask()); }

void Diagram::check_vertex(int i) const {
  if (i < 0 || i >= n_) {
    throw IndexError("vertex " + std::to_string(i) + " out of range for a diagram with " + std::to_string(n_) +
                     " vertices");
  }
}

std::uint64_t Diagram::neighbor_mask(int i) const {
  check_vertex(i);
  return neighbors_[static_cast<std::size_t>(i)];
}

std::uint64_t Diagram::effective_mask(int i) const {
  check_vertex(i);
  return effective_[static_cast<std::size_t>(i)];
}

int Diagram::degree(int i) const { return std::popcount(neighbor_mask(i)); }

bool Diagram::is_normalized() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) {
    return (e.multiplicity == 1 && !e.directed) || (e.multiplicity == 2 && e.directed);
  });
}

bool Diagram::is_simply_laced() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.multiplicity % 2 == 1; });
}

Diagram Diagram::with_name(std::string name) const {
  Diagram d = *this;
  d.name_ = std::move(name);
  return d;
}

Diagram Diagram::with_display_order(std::vector<int> order) const {
  return Diagram(n_, edges_, pinned_, std::move(order), name_);
}

bool Diagram::same_structure(const Diagram& other) const {
  if (n_ != other.n_ || pinned_mask_ != other.pinned_mask_ || edges_.size() != other.edges_.size()) return false;
  auto key = [](const Edge& e) { return std::make_tuple(std::min(e.u, e.v), std::max(e.u, e.v), e.u, e.multiplicity, e.directed); };
  std::vector<std::tuple<int, int, int, int, bool>> a, b;
  for (const Edge& e : edges_) a.push_back(key(e));
  for (const Edge& e : other.edges_) b.push_back(key(e));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Diagram normalize(const Diagram& diagram) {
  std::vector<Edge> edges;
  edges.reserve(diagram.edges().size());
  for (Edge e : diagram.edges()) {
    if (e.multiplicity % 2 == 1) {
      e.multiplicity = 1;
      e.directed = false;
    } else {
      e.multiplicity = 2;
    }
    edges.push_back(e);
  }
  return Diagram(diagram.size(), std::move(edges), diagram.pinned(), diagram.display_order(), diagram.name());
}

std::vector<int> effective_neighbors(const Diagram& diagram, int i) {
  std::vector<int> out;
  for (std::uint64_t m = diagram.effective_mask(i); m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

void check_labeling(const Diagram& diagram, const Labeling& a) {
  if (a.size() != diagram.size()) {
    throw IndexError("labeling has length " + std::to_string(a.size()) + " but the diagram has " +
                     std::to_string(diagram.size()) + " vertices");
  }
  if ((a.bits() & diagram.pinned_mask()) != diagram.pinned_mask()) {
    throw PreconditionError("labeling " + a.to_string() + " has a pinned vertex labeled 0");
  }
}

Labeling make_labeling(const Diagram& diagram, std::uint64_t bits) {
  return Labeling(diagram.size(), (bits & diagram.vertex_mask()) | diagram.pinned_mask());
}

int count_components_bits(const Diagram& diagram, std::uint64_t bits) {
  std::uint64_t remaining = (bits | diagram.pinned_mask()) & diagram.vertex_mask();
  int components = 0;
  while (remaining != 0) {
    std::uint64_t frontier = remaining & (~remaining + 1);
    remaining &= ~frontier;
    while (frontier != 0) {
      std::uint64_t reached = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) reached |= diagram.neighbor_mask(std::countr_zero(f));
      frontier = reached & remaining;
      remaining &= ~frontier;
    }
    ++components;
  }
  return components;
}

int count_components(const Diagram& diagram, const Labeling& a) {
  check_labeling(diagram, a);
  return count_components_bits(diagram, a.bits());
}

bool is_fixed(const Diagram& diagram, const Labeling& a) {
  check_labeling(diagram, a);
  for (std::uint64_t m = diagram.free_mask(); m != 0; m &= m - 1) {
    const int i = std::countr_zero(m);
    if (std::popcount(a.bits() & diagram.effective_mask(i)) & 1) return false;
  }
  return true;
}

F2Matrix effective_system(const Diagram& diagram) {
  const std::uint64_t free = diagram.free_mask();
  const int f = std::popcount(free);
  F2Matrix m(f, f);
  int row = 0;
  for (std::uint64_t it = free; it != 0; it &= it - 1, ++row) {
    const int i = std::countr_zero(it);
    m.set_row_mask(row, extract(diagram.effective_mask(i), free));
  }
  return m;
}

std::vector<Labeling> fixed_labelings(const Diagram& diagram, int max_dimension) {
  const std::uint64_t free = diagram.free_mask();
  const F2Matrix system = effective_system(diagram);

  // Pinned neighbors contribute a constant to each equation.
  std::uint64_t rhs = 0;
  int row = 0;
  for (std::uint64_t it = free; it != 0; it &= it - 1, ++row) {
    const int i = std::countr_zero(it);
    if (std::popcount(diagram.effective_mask(i) & diagram.pinned_mask()) & 1) rhs |= std::uint64_t{1} << row;
  }

  std::uint64_t particular = 0;
  if (!system.solve(rhs, particular)) return {};
  const std::vector<std::uint64_t> basis = system.nullspace_basis();
  if (static_cast<int>(basis.size()) > max_dimension) {
    throw ResourceError("fixed-labeling space has dimension " + std::to_string(basis.size()) + ", above the cap of " +
                        std::to_string(max_dimension));
  }

  std::vector<Labeling> out;
  out.reserve(std::size_t{1} << basis.size());
  for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << basis.size()); ++combo) {
    std::uint64_t x = particular;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if ((combo >> b) & 1u) x ^= basis[b];
    }
    out.push_back(make_labeling(diagram, deposit(x, free)));
  }
  std::sort(out.begin(), out.end(), [](const Labeling& a, const Labeling& b) { return a.bits() < b.bits(); });
  return out;
}

F2Matrix adjacency_matrix(const Diagram& diagram) {
  F2Matrix m(diagram.size(), diagram.size());
  for (int i = 0; i < diagram.size(); ++i) m.set_row_mask(i, diagram.neighbor_mask(i));
  return m;
}

int nullity_f2(const F2Matrix& m) { return m.nullity(); }

bool is_connected(const Diagram& diagram) {
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t reached = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) reached |= diagram.neighbor_mask(std::countr_zero(f));
    frontier = reached & ~seen;
    seen |= frontier;
  }
  return seen == diagram.vertex_mask();
}

bool is_tree(const Diagram& diagram) {
  return static_cast<int>(diagram.edges().size()) == diagram.size() - 1 && is_connected(diagram);
}

int max_degree(const Diagram& diagram) {
  int best = 0;
  for (int i = 0; i < diagram.size(); ++i) best = std::max(best, diagram.degree(i));
  return best;
}

bool contains_e6(const Diagram& diagram) {
  if (!diagram.is_simply_laced()) throw PreconditionError("contains_e6 requires a simply-laced diagram");
  if (diagram.pinned_mask() != 0) throw PreconditionError("contains_e6 requires a diagram without pinned vertices");
  if (!is_tree(diagram)) throw PreconditionError("contains_e6 requires a tree");
  for (int c = 0; c < diagram.size(); ++c) {
    if (diagram.degree(c) < 3) continue;
    // In a tree the arm through neighbor v has length >= 2 iff v has another
    // neighbor besides c.
    int long_arms = 0;
    for (std::uint64_t m = diagram.neighbor_mask(c); m != 0; m &= m - 1) {
      if (diagram.degree(std::countr_zero(m)) >= 2) ++long_arms;
    }
    if (long_arms >= 2) return true;
  }
  return false;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  const int shift = a.size();
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (Edge e : b.edges()) {
    e.u += shift;
    e.v += shift;
    edges.push_back(e);
  }
  std::vector<int> pinned = a.pinned();
  for (int p : b.pinned()) pinned.push_back(p + shift);
  std::vector<int> order = a.display_order();
  for (int i : b.display_order()) order.push_back(i + shift);
  return Diagram(a.size() + b.size(), std::move(edges), std::move(pinned), std::move(order),
                 a.name() + "+" + b.name());
}

std::string display_string(const Diagram& diagram, const Labeling& a) {
  check_labeling(diagram, a);
  std::string s;
  s.reserve(static_cast<std::size_t>(a.size()));
  for (int i : diagram.display_order()) s.push_back(a.test(i) ? '1' : '0');
  return s;
}

// --------------------------------------------------------------------- DSL

namespace {

int parse_int(std::string_view token, int line, std::string_view what) {
  int value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("line " + std::to_string(line) + ": expected an integer for " + std::string(what) + ", got '" +
                     std::string(token) + "'");
  }
  return value;
}

}  // namespace

Diagram parse_dsl(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  std::vector<int> pinned;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;

    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tok[0] == "vertices") {
      if (tok.size() != 2) throw ParseError(where + "expected 'vertices N'");
      if (n >= 0) throw ParseError(where + "'vertices' declared twice");
      n = parse_int(tok[1], line_no, "vertex count");
      continue;
    }
    if (n < 0) throw ParseError(where + "'vertices N' must come first");

    if (tok[0] == "pin") {
      if (tok.size() != 2) throw ParseError(where + "expected 'pin P'");
      pinned.push_back(parse_int(tok[1], line_no, "pinned vertex"));
    } else if (tok[0] == "edge") {
      if (tok.size() < 3 || tok.size() > 5) throw ParseError(where + "expected 'edge U V [mult=M] [dir=U>V]'");
      Edge e;
      e.u = parse_int(tok[1], line_no, "edge endpoint");
      e.v = parse_int(tok[2], line_no, "edge endpoint");
      bool have_dir = false;
      int longer = -1;
      int shorter = -1;
      for (std::size_t k = 3; k < tok.size(); ++k) {
        const std::string_view opt = tok[k];
        if (opt.starts_with("mult=")) {
          e.multiplicity = parse_int(opt.substr(5), line_no, "multiplicity");
        } else if (opt.starts_with("dir=")) {
          const std::string_view spec = opt.substr(4);
          const auto gt = spec.find('>');
          if (gt == std::string_view::npos) throw ParseError(where + "dir= expects U>V");
          longer = parse_int(spec.substr(0, gt), line_no, "dir");
          shorter = parse_int(spec.substr(gt + 1), line_no, "dir");
          have_dir = true;
        } else {
          throw ParseError(where + "unknown edge option '" + std::string(opt) + "'");
        }
      }
      if (e.multiplicity < 1) throw ParseError(where + "multiplicity must be positive");
      if (have_dir) {
        if (std::minmax(longer, shorter) != std::minmax(e.u, e.v)) {
          throw ParseError(where + "dir= must name the edge's own endpoints");
        }
        e.u = longer;
        e.v = shorter;
        e.directed = true;
      } else if (e.multiplicity % 2 == 0) {
        throw ParseError(where + "even multiplicity requires dir=U>V");
      }
      edges.push_back(e);
    } else {
      throw ParseError(where + "unknown declaration '" + tok[0] + "'");
    }
  }
  if (n < 0) throw ParseError("missing 'vertices N' declaration");
  return normalize(Diagram(n, std::move(edges), std::move(pinned)));
}

Diagram load_dsl_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read diagram file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dsl(buffer.str()).with_name(path);
}

std::string to_dsl(const Diagram& diagram) {
  std::ostringstream os;
  os << "vertices " << diagram.size() << '\n';
  for (const Edge& e : diagram.edges()) {
    os << "edge " << e.u << ' ' << e.v;
    if (e.multiplicity != 1) os << " mult=" << e.multiplicity;
    if (e.directed) os << " dir=" << e.u << '>' << e.v;
    os << '\n';
  }
  for (int p : diagram.pinned()) os << "pin " << p << '\n';
  return os.str();
}

}  // namespace reeder
