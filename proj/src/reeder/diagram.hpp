#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reeder/f2_matrix.hpp"

namespace reeder {

// Diagrams are limited to 64 vertices so that a labeling fits one word.
inline constexpr int kMaxVertices = 64;

// An edge between two vertices. For a directed edge `u` is the longer vertex
// and `v` the shorter one (the arrow points at `v`).
struct Edge {
  int u = 0;
  int v = 0;
  int multiplicity = 1;
  bool directed = false;

  bool operator==(const Edge&) const = default;
};

// One state of the puzzle: a 0/1 label per vertex, vertex 0 in the least
// significant bit.
class Labeling {
 public:
  Labeling() = default;
  Labeling(int size, std::uint64_t bits);

  // Parses "10110" with the first character at vertex 0.
  static Labeling from_string(std::string_view text);

  int size() const { return size_; }
  std::uint64_t bits() const { return bits_; }
  bool test(int i) const { return (bits_ >> i) & 1u; }
  Labeling with(int i, bool value) const;
  int weight() const;

  // Vertex 0 first.
  std::string to_string() const;

  bool operator==(const Labeling&) const = default;

 private:
  int size_ = 0;
  std::uint64_t bits_ = 0;
};

// Immutable game board: vertices, edges with multiplicity and direction, and
// pinned vertices whose label is frozen at 1.
//
// Construction validates the edge list; normalize() reduces multiplicities to
// their parity class. A diagram also carries presentation data: a name and a
// display order listing internal indices in the order they are printed.
class Diagram {
 public:
  Diagram() = default;
  Diagram(int n_vertices, std::vector<Edge> edges, std::vector<int> pinned = {},
          std::vector<int> display_order = {}, std::string name = {});

  int size() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  const std::vector<int>& pinned() const { return pinned_; }
  const std::vector<int>& display_order() const { return display_order_; }
  const std::string& name() const { return name_; }

  std::uint64_t vertex_mask() const { return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1; }
  std::uint64_t pinned_mask() const { return pinned_mask_; }
  std::uint64_t free_mask() const { return vertex_mask() & ~pinned_mask_; }
  int free_count() const;
  bool is_pinned(int i) const { return (pinned_mask_ >> i) & 1u; }

  // All neighbors of i, ignoring direction and multiplicity.
  std::uint64_t neighbor_mask(int i) const;
  // Neighbors whose labels enter the move at i.
  std::uint64_t effective_mask(int i) const;
  int degree(int i) const;

  bool is_normalized() const;
  // Every edge has odd multiplicity.
  bool is_simply_laced() const;

  Diagram with_name(std::string name) const;
  Diagram with_display_order(std::vector<int> order) const;

  // Structural equality: vertex count, edges and pinned set.
  bool same_structure(const Diagram& other) const;

 private:
  void check_vertex(int i) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> pinned_;
  std::vector<int> display_order_;
  std::string name_;
  std::uint64_t pinned_mask_ = 0;
  std::vector<std::uint64_t> neighbors_;
  std::vector<std::uint64_t> effective_;
};

// Reduces each multiplicity to 1 (odd) or 2 (even); direction is kept only
// on double edges.
Diagram normalize(const Diagram& diagram);

// Effective neighbors of i as a sorted index list.
std::vector<int> effective_neighbors(const Diagram& diagram, int i);

// Throws unless `a` has the diagram's length and every pinned bit set.
void check_labeling(const Diagram& diagram, const Labeling& a);

// Labeling with the given bits on free vertices and 1 on pinned vertices.
Labeling make_labeling(const Diagram& diagram, std::uint64_t bits);

// Connected components of the subgraph induced on 1-labeled vertices.
int count_components(const Diagram& diagram, const Labeling& a);
int count_components_bits(const Diagram& diagram, std::uint64_t bits);

bool is_fixed(const Diagram& diagram, const Labeling& a);

// Every labeling fixed by all moves, in increasing integer order. Throws
// ResourceError when the solution space has dimension above `max_dimension`.
std::vector<Labeling> fixed_labelings(const Diagram& diagram, int max_dimension = 20);

// Symmetric 0/1 adjacency, zero diagonal.
F2Matrix adjacency_matrix(const Diagram& diagram);

// Linear system whose kernel (shifted by pinned contributions) is the set
// of fixed labelings: row i is the effective-neighbor indicator of free
// vertex i, restricted to free vertices.
F2Matrix effective_system(const Diagram& diagram);

int nullity_f2(const F2Matrix& m);

bool is_connected(const Diagram& diagram);
bool is_tree(const Diagram& diagram);
int max_degree(const Diagram& diagram);
// True iff the diagram is a simply-laced tree with a vertex of degree >= 3
// having at least two arms of length >= 2.
bool contains_e6(const Diagram& diagram);

// Disjoint union; vertices of `b` are shifted by a.size().
Diagram disjoint_union(const Diagram& a, const Diagram& b);

// Bitstring in the diagram's display order.
std::string display_string(const Diagram& diagram, const Labeling& a);

// Text DSL:
//   vertices N
//   edge U V [mult=M] [dir=U>V]
//   pin P
// '#' starts a comment. dir= names the longer vertex and is required iff M is
// even. The result is normalized.
Diagram parse_dsl(std::string_view text);
Diagram load_dsl_file(const std::string& path);
std::string to_dsl(const Diagram& diagram);

}  // namespace reeder
