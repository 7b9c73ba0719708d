#include "dichroma/multigraph.hpp"

#include <algorithm>
#include <string>

namespace dichroma {

Multigraph Multigraph::build(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw Error(Errc::IndexOutOfRange, "negative vertex count");
  Multigraph g;
  g.n_ = n;
  g.inc_.assign(n, {});
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(Errc::IndexOutOfRange, "edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (u == v) throw Error(Errc::LoopArc, "loop at " + std::to_string(u));
    int id = static_cast<int>(g.edges_.size());
    g.edges_.emplace_back(u, v);
    g.inc_[u].push_back(id);
    g.inc_[v].push_back(id);
  }
  return g;
}

int Multigraph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

int Multigraph::multiplicity(int u, int v) const {
  int c = 0;
  for (int e : inc_[u])
    if (other(e, u) == v) ++c;
  return c;
}

int Multigraph::max_multiplicity() const {
  int best = 0;
  std::vector<int> count(n_, 0);
  for (int u = 0; u < n_; ++u) {
    for (int e : inc_[u]) best = std::max(best, ++count[other(e, u)]);
    for (int e : inc_[u]) count[other(e, u)] = 0;
  }
  return best;
}

bool Multigraph::is_regular(int r) const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) != r) return false;
  return true;
}

std::vector<std::vector<int>> Multigraph::components() const {
  std::vector<char> seen(n_, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n_; ++s) {
    if (seen[s] || inc_[s].empty()) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int e : inc_[comp[i]]) {
        int w = other(e, comp[i]);
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Multigraph Multigraph::edge_subgraph(const std::vector<int>& edge_ids) const {
  std::vector<Edge> es;
  es.reserve(edge_ids.size());
  for (int e : edge_ids) es.push_back(edges_[e]);
  return build(n_, es);
}

Multigraph shannon_multigraph(int k) {
  std::vector<Edge> es;
  for (int i = 0; i < (k + 1) / 2; ++i) es.emplace_back(0, 1);
  for (int i = 0; i < k / 2; ++i) es.emplace_back(1, 2);
  for (int i = 0; i < k / 2; ++i) es.emplace_back(0, 2);
  return Multigraph::build(3, es);
}

Multigraph complete_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Multigraph::build(n, es);
}

EulerTour euler_tour(const Multigraph& g) {
  EulerTour res;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) % 2) {
      res.odd_vertex = v;
      return res;
    }
  auto comps = g.components();
  if (comps.size() > 1) {
    res.disconnected = std::make_pair(comps[0][0], comps[1][0]);
    return res;
  }
  res.exists = true;
  if (comps.empty()) return res;

  std::vector<char> used(g.m(), 0);
  std::vector<std::size_t> ptr(g.n(), 0);
  // Stack of (vertex, edge used to arrive).
  std::vector<std::pair<int, int>> stack{{comps[0][0], -1}};
  std::vector<std::pair<int, int>> circuit;
  while (!stack.empty()) {
    int v = stack.back().first;
    auto& p = ptr[v];
    const auto& inc = g.incident(v);
    while (p < inc.size() && used[inc[p]]) ++p;
    if (p == inc.size()) {
      circuit.push_back(stack.back());
      stack.pop_back();
    } else {
      int e = inc[p];
      used[e] = 1;
      stack.emplace_back(g.other(e, v), e);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  res.vertices.push_back(circuit[0].first);
  for (std::size_t i = 1; i < circuit.size(); ++i) {
    res.edges.push_back(circuit[i].second);
    res.vertices.push_back(circuit[i].first);
  }
  return res;
}

}  // namespace dichroma
