#pragma once

// Independent oracles and the shared test corpus. Nothing here calls the
// engine's move, enumeration or elimination code: oracles read only the raw
// edge list of a Diagram.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "reeder/diagram.hpp"
#include "reeder/families.hpp"

namespace oracle {

// Move rule straight from the edge list: vertex i sums every neighbor k,
// except when the edge has even multiplicity and i is its longer end.
inline std::uint64_t move(const reeder::Diagram& d, std::uint64_t a, int i) {
  if (std::find(d.pinned().begin(), d.pinned().end(), i) != d.pinned().end()) return a;
  int sum = 0;
  for (const reeder::Edge& e : d.edges()) {
    int k = -1;
    if (e.v == i) k = e.u;
    if (e.u == i && e.multiplicity % 2 == 1) k = e.v;
    if (k >= 0) sum += static_cast<int>((a >> k) & 1u);
  }
  return a ^ (static_cast<std::uint64_t>(sum & 1) << i);
}

inline std::uint64_t pinned_bits(const reeder::Diagram& d) {
  std::uint64_t m = 0;
  for (int p : d.pinned()) m |= std::uint64_t{1} << p;
  return m;
}

// All valid labelings of d (pinned bits set), ascending.
inline std::vector<std::uint64_t> all_labelings(const reeder::Diagram& d) {
  const std::uint64_t pins = pinned_bits(d);
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = std::uint64_t{1} << d.size();
  for (std::uint64_t a = 0; a < limit; ++a) {
    if ((a & pins) == pins) out.push_back(a);
  }
  return out;
}

// Breadth-first partition. Class ids follow the order in which classes are
// discovered scanning labelings ascending, so they are not comparable with
// the engine's numbering; compare via same_partition().
struct Partition {
  std::map<std::uint64_t, int> class_of;
  int count = 0;
};

inline Partition bfs_partition(const reeder::Diagram& d) {
  Partition p;
  for (std::uint64_t start : all_labelings(d)) {
    if (p.class_of.contains(start)) continue;
    const int id = p.count++;
    std::deque<std::uint64_t> queue{start};
    p.class_of[start] = id;
    while (!queue.empty()) {
      const std::uint64_t a = queue.front();
      queue.pop_front();
      for (int i = 0; i < d.size(); ++i) {
        const std::uint64_t b = move(d, a, i);
        if (p.class_of.emplace(b, id).second) queue.push_back(b);
      }
    }
  }
  return p;
}

// Shortest move sequence from a to b, or empty optional-like flag.
inline std::pair<bool, std::vector<int>> bfs_path(const reeder::Diagram& d, std::uint64_t a, std::uint64_t b) {
  std::map<std::uint64_t, std::pair<std::uint64_t, int>> parent;
  parent[a] = {a, -1};
  std::deque<std::uint64_t> queue{a};
  while (!queue.empty()) {
    const std::uint64_t x = queue.front();
    queue.pop_front();
    if (x == b) break;
    for (int i = 0; i < d.size(); ++i) {
      const std::uint64_t y = move(d, x, i);
      if (parent.emplace(y, std::make_pair(x, i)).second) queue.push_back(y);
    }
  }
  if (!parent.contains(b)) return {false, {}};
  std::vector<int> path;
  for (std::uint64_t x = b; x != a; x = parent[x].first) path.push_back(parent[x].second);
  std::reverse(path.begin(), path.end());
  return {true, path};
}

// Components by union-find over the raw edge list.
inline int components(const reeder::Diagram& d, std::uint64_t a) {
  std::vector<int> parent(static_cast<std::size_t>(d.size()));
  for (int i = 0; i < d.size(); ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const reeder::Edge& e : d.edges()) {
    if (((a >> e.u) & 1u) && ((a >> e.v) & 1u)) parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
  }
  int count = 0;
  for (int i = 0; i < d.size(); ++i) {
    if (((a >> i) & 1u) && find(i) == i) ++count;
  }
  return count;
}

inline bool is_fixed(const reeder::Diagram& d, std::uint64_t a) {
  for (int i = 0; i < d.size(); ++i) {
    if (move(d, a, i) != a) return false;
  }
  return true;
}

inline int fixed_count(const reeder::Diagram& d) {
  int count = 0;
  for (std::uint64_t a : all_labelings(d)) count += is_fixed(d, a) ? 1 : 0;
  return count;
}

// Dense Gaussian elimination over GF(2) on a vector-of-vectors matrix.
inline int dense_rank(std::vector<std::vector<int>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != rank && m[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

inline std::vector<std::vector<int>> dense_adjacency(const reeder::Diagram& d) {
  const auto n = static_cast<std::size_t>(d.size());
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (const reeder::Edge& e : d.edges()) {
    m[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
    m[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
  }
  return m;
}

inline int dense_nullity(const reeder::Diagram& d) { return d.size() - dense_rank(dense_adjacency(d)); }

// Determinant over GF(2) by cofactor-free elimination: 1 iff full rank.
inline int dense_det(const reeder::Diagram& d) { return dense_rank(dense_adjacency(d)) == d.size() ? 1 : 0; }

}  // namespace oracle

namespace corpus {

inline reeder::Diagram family(reeder::Family f, int param) { return reeder::construct({f, param}); }

inline reeder::Diagram path(int n) {
  std::vector<reeder::Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1, false});
  return reeder::Diagram(n, edges, {}, {}, "path" + std::to_string(n));
}

// Uniform labeled tree on n vertices from a random Pruefer sequence.
inline reeder::Diagram random_tree(std::mt19937_64& rng, int n) {
  if (n == 1) return reeder::Diagram(1, {}, {}, {}, "tree1");
  if (n == 2) return reeder::Diagram(2, {{0, 1, 1, false}}, {}, {}, "tree2");
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (int& s : seq) s = pick(rng);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int s : seq) ++degree[static_cast<std::size_t>(s)];
  std::vector<reeder::Edge> edges;
  for (int s : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        edges.push_back({leaf, s, 1, false});
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(s)];
        break;
      }
    }
  }
  int u = -1;
  for (int i = 0; i < n; ++i) {
    if (degree[static_cast<std::size_t>(i)] == 1) {
      if (u < 0) {
        u = i;
      } else {
        edges.push_back({u, i, 1, false});
        break;
      }
    }
  }
  return reeder::Diagram(n, edges, {}, {}, "tree" + std::to_string(n));
}

// Random tree of 7..max_n vertices that contains E6, drawn by rejection.
inline reeder::Diagram random_e6_tree(std::mt19937_64& rng, int max_n) {
  std::uniform_int_distribution<int> size(7, max_n);
  while (true) {
    reeder::Diagram t = random_tree(rng, size(rng));
    if (reeder::contains_e6(t)) return t;
  }
}

// The five-vertex graph with a 4-cycle a1-a2-a3-a4 and pendant a0 on a1.
inline reeder::Diagram cycle_counterexample() {
  return reeder::Diagram(5, {{0, 1, 1, false}, {1, 2, 1, false}, {1, 4, 1, false}, {2, 3, 1, false}, {3, 4, 1, false}},
                         {}, {}, "cycle5");
}

// Every named family at small parameters, capped by vertex count.
inline std::vector<std::pair<reeder::FamilySpec, reeder::Diagram>> families(int max_vertices) {
  std::vector<std::pair<reeder::FamilySpec, reeder::Diagram>> out;
  for (reeder::Family f : reeder::all_families()) {
    const int lo = reeder::min_param(f);
    const int hi = reeder::is_fixed_size(f) ? lo : lo + 40;
    for (int p = lo; p <= hi; ++p) {
      const reeder::FamilySpec spec{f, p};
      if (reeder::vertex_count(spec) > max_vertices) break;
      out.emplace_back(spec, reeder::construct(spec));
    }
  }
  return out;
}

// Test corpus: all families up to max_vertices, 40 seeded random trees, the
// cycle counterexample, a pinned DSL diagram and a disconnected union.
inline std::vector<reeder::Diagram> diagrams(int max_vertices, std::uint64_t seed = 20261016) {
  std::vector<reeder::Diagram> out;
  for (auto& [spec, d] : families(max_vertices)) out.push_back(d);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, max_vertices);
  for (int k = 0; k < 40; ++k) out.push_back(random_tree(rng, size(rng)));
  out.push_back(cycle_counterexample());
  if (max_vertices >= 6) {
    out.push_back(reeder::parse_dsl("vertices 6\nedge 0 1\nedge 1 2 mult=2 dir=1>2\nedge 2 3\nedge 3 4 mult=3\n"
                                    "edge 4 5\npin 5\n"));
    out.push_back(reeder::disjoint_union(family(reeder::Family::A, 3), family(reeder::Family::G2, 2)));
  }
  return out;
}

}  // namespace corpus
