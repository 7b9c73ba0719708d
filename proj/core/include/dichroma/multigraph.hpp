#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dichroma/error.hpp"

namespace dichroma {

using Edge = std::pair<int, int>;

// Undirected loop-free multigraph. Edge i keeps its input position, so
// colourings are plain vectors indexed by edge.
class Multigraph {
 public:
  Multigraph() = default;
  // Throws LoopArc or IndexOutOfRange.
  static Multigraph build(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  // Incident edge indices, ascending.
  const std::vector<int>& incident(int v) const { return inc_[v]; }
  int other(int e, int v) const { return edges_[e].first == v ? edges_[e].second : edges_[e].first; }

  int degree(int v) const { return static_cast<int>(inc_[v].size()); }
  int max_degree() const;
  int multiplicity(int u, int v) const;
  int max_multiplicity() const;
  bool is_simple() const { return max_multiplicity() <= 1; }
  // True when every vertex has degree r. An empty graph is 0-regular.
  bool is_regular(int r) const;
  // Vertices with at least one edge, grouped by connectivity; each sorted.
  std::vector<std::vector<int>> components() const;

  // Subgraph on the given edge indices, same vertex set.
  Multigraph edge_subgraph(const std::vector<int>& edge_ids) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> inc_;
};

// Shannon multigraph Sh(k) on vertices 0,1,2.
Multigraph shannon_multigraph(int k);
Multigraph complete_graph(int n);

// Result of euler_tour: either a closed trail or the reason none exists.
struct EulerTour {
  bool exists = false;
  std::vector<int> edges;     // edge indices in traversal order
  std::vector<int> vertices;  // start vertex, then the vertex reached after each edge
  std::optional<int> odd_vertex;
  // Two non-isolated vertices in different components.
  std::optional<std::pair<int, int>> disconnected;
};

// Hierholzer from the least non-isolated vertex, lowest edge index first.
EulerTour euler_tour(const Multigraph& g);

}  // namespace dichroma
