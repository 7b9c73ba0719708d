#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dichroma/bitset.hpp"
#include "dichroma/error.hpp"

namespace dichroma {

using Arc = std::pair<int, int>;

// Loop-free digraph on vertices 0..n-1 with a duplicate-free arc set.
// Immutable once built; neighbour lists are sorted ascending.
class Digraph {
 public:
  Digraph() = default;

  // Validates the arc list. Throws LoopArc, DuplicateArc or IndexOutOfRange.
  static Digraph build(int n, const std::vector<Arc>& arcs);
  static Digraph empty(int n) { return build(n, {}); }

  int n() const { return n_; }
  std::size_t m() const { return m_; }

  bool has_arc(int u, int v) const;
  bool has_digon(int u, int v) const { return has_arc(u, v) && has_arc(v, u); }
  bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
  int d_min(int v) const;
  int d_max(int v) const;
  int delta_min() const;
  int delta_max() const;
  bool is_oriented() const;
  bool is_symmetric() const;

  // Arcs in lexicographic order.
  std::vector<Arc> arcs() const;
  // Sorted union of in- and out-neighbours.
  std::vector<int> neighbours(int v) const;

  VertexSet out_set(int v) const;
  VertexSet in_set(int v) const;

  bool operator==(const Digraph& o) const { return n_ == o.n_ && out_ == o.out_; }

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  // Dense adjacency rows, kept only for n <= kDenseLimit.
  static constexpr int kDenseLimit = 128;
  std::vector<std::uint64_t> dense_;
};

// Bitset rows for algorithms that do heavy set arithmetic.
struct BitAdjacency {
  explicit BitAdjacency(const Digraph& d);
  std::vector<VertexSet> out;
  std::vector<VertexSet> in;
};

using VertexSetPartition = std::vector<std::vector<int>>;

// Throws InvalidPartition unless parts are disjoint, non-empty and cover 0..n-1.
void validate_partition(int n, const VertexSetPartition& parts);

// Strong components in topological order of the condensation (sources first).
VertexSetPartition strong_components(const Digraph& d);
bool is_strong(const Digraph& d);

// Components of the underlying graph, each sorted, ordered by least vertex.
VertexSetPartition weak_components(const Digraph& d);
bool is_weakly_connected(const Digraph& d);

// 2-connected components of the underlying graph. A bridge is its own block and
// an isolated vertex forms a singleton block. Blocks are sorted lexicographically.
std::vector<std::vector<int>> blocks(const Digraph& d);
std::vector<int> cut_vertices(const Digraph& d);
// Connected, at least two vertices, no cutvertex.
bool is_biconnected(const Digraph& d);

// Quotient digraph: part i becomes vertex i. Loops are dropped.
Digraph contract(const Digraph& d, const VertexSetPartition& parts);

// BFS over the underlying graph, neighbours in ascending order.
// Throws Disconnected when some vertex is unreachable from root.
std::vector<int> bfs_order(const Digraph& d, int root);

// Subdigraph induced by `vertices`; vertex i of the result is vertices[i].
Digraph induced_subdigraph(const Digraph& d, const std::vector<int>& vertices);
Digraph induced_subdigraph(const Digraph& d, const VertexSet& vertices);
Digraph reverse(const Digraph& d);
Digraph disjoint_union(const Digraph& a, const Digraph& b);

// Vertices of some directed cycle in traversal order; empty if acyclic.
std::vector<int> find_cycle(const Digraph& d);
bool is_acyclic(const Digraph& d);
// Topological order, or empty when a cycle exists.
std::vector<int> topological_order(const Digraph& d);

// Length of a shortest directed cycle, or 0 when acyclic.
int digirth(const Digraph& d);

// Standard families used throughout the library and its tests.
Digraph directed_cycle(int n);
Digraph symmetric_cycle(int n);
Digraph symmetric_complete(int n);
Digraph transitive_tournament(int n);
// Hub 0 joined by digons to a symmetric cycle on 1..n_rim.
Digraph symmetric_wheel(int n_rim);

}  // namespace dichroma
