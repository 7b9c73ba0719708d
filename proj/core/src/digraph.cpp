#include "dichroma/digraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace dichroma {

namespace {

std::string arc_str(int u, int v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

}  // namespace

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::LoopArc: return "LoopArc";
    case Errc::DuplicateArc: return "DuplicateArc";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::Disconnected: return "Disconnected";
    case Errc::PartialColouring: return "PartialColouring";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotDipolar: return "NotDipolar";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::BadK: return "BadK";
    case Errc::MissingArc: return "MissingArc";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::BadEmbeddingOrder: return "BadEmbeddingOrder";
    case Errc::MissingDigon: return "MissingDigon";
    case Errc::UnsupportedK: return "UnsupportedK";
    case Errc::ParityViolated: return "ParityViolated";
    case Errc::TooFewParts: return "TooFewParts";
    case Errc::BadVertex: return "BadVertex";
    case Errc::SizeCapExceeded: return "SizeCapExceeded";
    case Errc::NotStrong: return "NotStrong";
    case Errc::NotOriented: return "NotOriented";
    case Errc::EvenD: return "EvenD";
    case Errc::NotRegular: return "NotRegular";
    case Errc::OddK: return "OddK";
    case Errc::BadParameters: return "BadParameters";
    case Errc::FallbackToExact: return "FallbackToExact";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SemanticError: return "SemanticError";
    case Errc::UsageError: return "UsageError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

BudgetExceededError::BudgetExceededError(const std::string& what, int lower, std::optional<int> upper)
    : Error(Errc::BudgetExceeded, what), lower_(lower), upper_(upper) {}

Digraph Digraph::build(int n, const std::vector<Arc>& arcs) {
  if (n < 0) throw Error(Errc::IndexOutOfRange, "negative vertex count");
  Digraph d;
  d.n_ = n;
  d.out_.assign(n, {});
  d.in_.assign(n, {});
  for (auto [u, v] : arcs) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(Errc::IndexOutOfRange, "arc " + arc_str(u, v) + " with n=" + std::to_string(n));
    if (u == v) throw Error(Errc::LoopArc, "arc " + arc_str(u, v));
    d.out_[u].push_back(v);
    d.in_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& o = d.out_[v];
    std::sort(o.begin(), o.end());
    auto dup = std::adjacent_find(o.begin(), o.end());
    if (dup != o.end()) throw Error(Errc::DuplicateArc, "arc " + arc_str(v, *dup));
    std::sort(d.in_[v].begin(), d.in_[v].end());
  }
  d.m_ = arcs.size();
  if (n <= kDenseLimit) {
    d.dense_.assign(static_cast<std::size_t>(n) * 2, 0);
    for (int u = 0; u < n; ++u)
      for (int v : d.out_[u]) d.dense_[u * 2 + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  }
  return d;
}

bool Digraph::has_arc(int u, int v) const {
  if (!dense_.empty()) return (dense_[u * 2 + (v >> 6)] >> (v & 63)) & 1;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

int Digraph::d_min(int v) const { return std::min(out_degree(v), in_degree(v)); }
int Digraph::d_max(int v) const { return std::max(out_degree(v), in_degree(v)); }

int Digraph::delta_min() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, d_min(v));
  return best;
}

int Digraph::delta_max() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, d_max(v));
  return best;
}

bool Digraph::is_oriented() const {
  for (int u = 0; u < n_; ++u)
    for (int v : out_[u])
      if (u < v && has_arc(v, u)) return false;
  return true;
}

bool Digraph::is_symmetric() const {
  for (int u = 0; u < n_; ++u)
    for (int v : out_[u])
      if (!has_arc(v, u)) return false;
  return true;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : out_[u]) out.emplace_back(u, v);
  return out;
}

std::vector<int> Digraph::neighbours(int v) const {
  std::vector<int> out;
  std::set_union(out_[v].begin(), out_[v].end(), in_[v].begin(), in_[v].end(), std::back_inserter(out));
  return out;
}

VertexSet Digraph::out_set(int v) const { return VertexSet::of(n_, out_[v]); }
VertexSet Digraph::in_set(int v) const { return VertexSet::of(n_, in_[v]); }

BitAdjacency::BitAdjacency(const Digraph& d) {
  out.reserve(d.n());
  in.reserve(d.n());
  for (int v = 0; v < d.n(); ++v) {
    out.push_back(d.out_set(v));
    in.push_back(d.in_set(v));
  }
}

void validate_partition(int n, const VertexSetPartition& parts) {
  std::vector<char> seen(n, 0);
  int covered = 0;
  for (const auto& p : parts) {
    if (p.empty()) throw Error(Errc::InvalidPartition, "empty part");
    for (int v : p) {
      if (v < 0 || v >= n) throw Error(Errc::InvalidPartition, "vertex " + std::to_string(v) + " out of range");
      if (seen[v]) throw Error(Errc::InvalidPartition, "vertex " + std::to_string(v) + " in two parts");
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != n) throw Error(Errc::InvalidPartition, "parts do not cover every vertex");
}

VertexSetPartition strong_components(const Digraph& d) {
  // Iterative Tarjan; components come out in reverse topological order.
  const int n = d.n();
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::pair<int, std::size_t>> call;
  VertexSetPartition comps;
  int counter = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i < d.out(v).size()) {
        int w = d.out(v)[i++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      int vv = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[vv]);
      if (low[vv] == index[vv]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != vv);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
    }
  }
  std::reverse(comps.begin(), comps.end());
  return comps;
}

bool is_strong(const Digraph& d) { return d.n() > 0 && strong_components(d).size() == 1; }

VertexSetPartition weak_components(const Digraph& d) {
  const int n = d.n();
  std::vector<int> comp(n, -1);
  VertexSetPartition out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      int v = members[i];
      for (const auto* lst : {&d.out(v), &d.in(v)})
        for (int w : *lst)
          if (comp[w] == -1) {
            comp[w] = comp[s];
            members.push_back(w);
          }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_weakly_connected(const Digraph& d) { return d.n() > 0 && weak_components(d).size() == 1; }

namespace {

struct BlockResult {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cuts;
};

BlockResult biconnected(const Digraph& d) {
  // Hopcroft-Tarjan on the underlying simple graph, iterative.
  const int n = d.n();
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = d.neighbours(v);
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<char> is_cut(n, 0);
  std::vector<std::pair<int, int>> edge_stack;
  BlockResult res;
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    if (adj[root].empty()) {
      disc[root] = timer++;
      res.blocks.push_back({root});
      continue;
    }
    int root_children = 0;
    std::vector<std::pair<int, std::size_t>> call{{root, 0}};
    disc[root] = low[root] = timer++;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i < adj[v].size()) {
        int w = adj[v][i++];
        if (disc[w] == -1) {
          parent[w] = v;
          if (v == root) ++root_children;
          edge_stack.emplace_back(v, w);
          disc[w] = low[w] = timer++;
          call.emplace_back(w, 0);
        } else if (w != parent[v] && disc[w] < disc[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      int w = v;
      call.pop_back();
      if (call.empty()) break;
      int u = call.back().first;
      low[u] = std::min(low[u], low[w]);
      if (low[w] >= disc[u]) {
        if (u != root) is_cut[u] = 1;
        std::vector<int> block;
        while (true) {
          auto e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e.first == u && e.second == w) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        res.blocks.push_back(std::move(block));
      }
    }
    if (root_children > 1) is_cut[root] = 1;
  }
  std::sort(res.blocks.begin(), res.blocks.end());
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) res.cuts.push_back(v);
  return res;
}

}  // namespace

std::vector<std::vector<int>> blocks(const Digraph& d) { return biconnected(d).blocks; }
std::vector<int> cut_vertices(const Digraph& d) { return biconnected(d).cuts; }

bool is_biconnected(const Digraph& d) {
  return d.n() >= 2 && is_weakly_connected(d) && cut_vertices(d).empty();
}

Digraph contract(const Digraph& d, const VertexSetPartition& parts) {
  validate_partition(d.n(), parts);
  std::vector<int> owner(d.n());
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int v : parts[i]) owner[v] = static_cast<int>(i);
  std::vector<Arc> arcs;
  for (auto [u, v] : d.arcs())
    if (owner[u] != owner[v]) arcs.emplace_back(owner[u], owner[v]);
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return Digraph::build(static_cast<int>(parts.size()), arcs);
}

std::vector<int> bfs_order(const Digraph& d, int root) {
  if (root < 0 || root >= d.n()) throw Error(Errc::IndexOutOfRange, "root " + std::to_string(root));
  std::vector<char> seen(d.n(), 0);
  std::vector<int> order{root};
  seen[root] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : d.neighbours(order[i]))
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
  if (static_cast<int>(order.size()) != d.n())
    throw Error(Errc::Disconnected, "underlying graph not connected from " + std::to_string(root));
  return order;
}

Digraph induced_subdigraph(const Digraph& d, const std::vector<int>& vertices) {
  std::vector<int> pos(d.n(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (int w : d.out(vertices[i]))
      if (pos[w] != -1) arcs.emplace_back(static_cast<int>(i), pos[w]);
  return Digraph::build(static_cast<int>(vertices.size()), arcs);
}

Digraph induced_subdigraph(const Digraph& d, const VertexSet& vertices) {
  return induced_subdigraph(d, vertices.members());
}

Digraph reverse(const Digraph& d) {
  std::vector<Arc> arcs;
  for (auto [u, v] : d.arcs()) arcs.emplace_back(v, u);
  return Digraph::build(d.n(), arcs);
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  auto arcs = a.arcs();
  for (auto [u, v] : b.arcs()) arcs.emplace_back(u + a.n(), v + a.n());
  return Digraph::build(a.n() + b.n(), arcs);
}

std::vector<int> find_cycle(const Digraph& d) {
  const int n = d.n();
  std::vector<int> state(n, 0), parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (state[root]) continue;
    std::vector<std::pair<int, std::size_t>> call{{root, 0}};
    state[root] = 1;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i < d.out(v).size()) {
        int w = d.out(v)[i++];
        if (state[w] == 0) {
          state[w] = 1;
          parent[w] = v;
          call.emplace_back(w, 0);
        } else if (state[w] == 1) {
          std::vector<int> cyc;
          for (int x = v; x != w; x = parent[x]) cyc.push_back(x);
          cyc.push_back(w);
          std::reverse(cyc.begin(), cyc.end());
          return cyc;
        }
        continue;
      }
      state[v] = 2;
      call.pop_back();
    }
  }
  return {};
}

bool is_acyclic(const Digraph& d) { return find_cycle(d).empty(); }

std::vector<int> topological_order(const Digraph& d) {
  std::vector<int> indeg(d.n());
  for (int v = 0; v < d.n(); ++v) indeg[v] = d.in_degree(v);
  std::vector<int> order;
  std::vector<int> ready;
  for (int v = d.n() - 1; v >= 0; --v)
    if (indeg[v] == 0) ready.push_back(v);
  // Smallest ready vertex first keeps the order deterministic.
  while (!ready.empty()) {
    auto it = std::min_element(ready.begin(), ready.end());
    int v = *it;
    ready.erase(it);
    order.push_back(v);
    for (int w : d.out(v))
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (static_cast<int>(order.size()) != d.n()) return {};
  return order;
}

int digirth(const Digraph& d) {
  int best = 0;
  for (int s = 0; s < d.n(); ++s) {
    std::vector<int> dist(d.n(), -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      if (best && dist[v] + 1 >= best) break;
      for (int w : d.out(v)) {
        if (w == s) {
          if (!best || dist[v] + 1 < best) best = dist[v] + 1;
        } else if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          q.push_back(w);
        }
      }
    }
  }
  return best;
}

Digraph directed_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
  if (n < 2) arcs.clear();
  return Digraph::build(n, arcs);
}

Digraph symmetric_cycle(int n) {
  std::vector<Arc> arcs;
  if (n == 2) return Digraph::build(2, {{0, 1}, {1, 0}});
  if (n >= 3)
    for (int i = 0; i < n; ++i) {
      arcs.emplace_back(i, (i + 1) % n);
      arcs.emplace_back((i + 1) % n, i);
    }
  return Digraph::build(n, arcs);
}

Digraph symmetric_complete(int n) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) arcs.emplace_back(u, v);
  return Digraph::build(n, arcs);
}

Digraph transitive_tournament(int n) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) arcs.emplace_back(u, v);
  return Digraph::build(n, arcs);
}

Digraph symmetric_wheel(int n_rim) {
  std::vector<Arc> arcs;
  for (int i = 1; i <= n_rim; ++i) {
    arcs.emplace_back(0, i);
    arcs.emplace_back(i, 0);
    int j = i % n_rim + 1;
    if (n_rim >= 3 || (n_rim == 2 && i == 1)) {
      arcs.emplace_back(i, j);
      arcs.emplace_back(j, i);
    }
  }
  return Digraph::build(n_rim + 1, arcs);
}

}  // namespace dichroma
