#pragma once

// Hand-rolled random instance generators for property and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "dichroma/digraph.hpp"
#include "dichroma/extremal.hpp"
#include "dichroma/multigraph.hpp"

namespace gen {

using dichroma::Arc;
using dichroma::Digraph;
using dichroma::Edge;
using dichroma::Multigraph;
using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Ordered pairs (u, v), u != v, in row-major order; bit i of mask selects pair i.
inline std::vector<Arc> ordered_pairs(int n) {
  std::vector<Arc> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) pairs.emplace_back(u, v);
  return pairs;
}

inline Digraph from_mask(int n, std::uint64_t mask) {
  static thread_local std::vector<std::vector<Arc>> cache;
  if (static_cast<int>(cache.size()) <= n) cache.resize(n + 1);
  if (cache[n].empty()) cache[n] = ordered_pairs(n);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < cache[n].size(); ++i)
    if (mask >> i & 1) arcs.push_back(cache[n][i]);
  return Digraph::build(n, arcs);
}

inline Digraph random_digraph(Rng& rng, int n, double p) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng, p)) arcs.emplace_back(u, v);
  return Digraph::build(n, arcs);
}

inline Digraph random_oriented(Rng& rng, int n, double p) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng, p)) arcs.push_back(coin(rng, 0.5) ? Arc{u, v} : Arc{v, u});
  return Digraph::build(n, arcs);
}

inline Multigraph random_multigraph(Rng& rng, int n, int m) {
  std::vector<Edge> edges;
  while (static_cast<int>(edges.size()) < m) {
    int u = uniform(rng, 0, n - 1), v = uniform(rng, 0, n - 1);
    if (u != v) edges.emplace_back(u, v);
  }
  return Multigraph::build(n, edges);
}

inline Multigraph random_simple_graph(Rng& rng, int n, double p) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng, p)) edges.emplace_back(u, v);
  return Multigraph::build(n, edges);
}

// r-regular loopless multigraph by random stub pairing; n * r must be even.
inline Multigraph random_regular_multigraph(Rng& rng, int n, int r) {
  while (true) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < r; ++i) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
      ok = stubs[i] != stubs[i + 1];
      edges.emplace_back(stubs[i], stubs[i + 1]);
    }
    if (ok) return Multigraph::build(n, edges);
  }
}

// ------------------------------------------------------------ extremal digraphs

inline std::vector<Arc> digons(const Digraph& d) {
  std::vector<Arc> out;
  for (auto [u, v] : d.arcs())
    if (u < v && d.has_arc(v, u)) out.emplace_back(u, v);
  return out;
}

inline Digraph random_tree_join(Rng& rng, const std::vector<Digraph>& parts) {
  dichroma::TreeJoinSpec spec;
  const int edges = static_cast<int>(parts.size());
  spec.tree_vertices = edges + 1;
  for (int i = 1; i <= edges; ++i) spec.tree_edges.emplace_back(uniform(rng, 0, i - 1), i);
  for (const auto& p : parts) {
    auto ds = digons(p);
    Arc a = ds[uniform(rng, 0, static_cast<int>(ds.size()) - 1)];
    if (coin(rng, 0.5)) std::swap(a.first, a.second);
    spec.parts.push_back(p);
    spec.part_ends.push_back(a);
  }
  // Leaves in DFS order from vertex 0 follow a plane embedding.
  std::vector<std::vector<int>> adj(spec.tree_vertices);
  for (auto [u, v] : spec.tree_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> leaves;
  std::vector<std::pair<int, int>> stack{{0, -1}};
  while (!stack.empty()) {
    auto [v, parent] = stack.back();
    stack.pop_back();
    if (adj[v].size() == 1) leaves.push_back(v);
    for (auto it = adj[v].rbegin(); it != adj[v].rend(); ++it)
      if (*it != parent) stack.emplace_back(*it, v);
  }
  spec.cycle = leaves;
  return dichroma::hajos_tree_join(spec).digraph;
}

// Random composition of directed Hajós joins and Hajós tree joins over ↔K_4 and
// ↔W_5 leaves, depth <= max_depth, at most max_n vertices.
inline Digraph random_extremal(Rng& rng, int max_depth, int max_n) {
  while (true) {
    std::function<Digraph(int)> build = [&](int depth) -> Digraph {
      if (depth == 0 || coin(rng, 0.3))
        return coin(rng, 0.8) ? dichroma::symmetric_complete(4) : dichroma::symmetric_wheel(5);
      if (coin(rng, 0.5)) {
        Digraph a = build(depth - 1), b = build(depth - 1);
        auto aa = a.arcs(), ba = b.arcs();
        return dichroma::directed_hajos_join(a, aa[uniform(rng, 0, static_cast<int>(aa.size()) - 1)], b,
                                             ba[uniform(rng, 0, static_cast<int>(ba.size()) - 1)]);
      }
      std::vector<Digraph> parts(uniform(rng, 2, 4));
      for (auto& p : parts) p = build(depth - 1);
      return random_tree_join(rng, parts);
    };
    Digraph d = build(max_depth);
    if (d.n() <= max_n && d.n() > 4) return d;
  }
}

// Remove, add or reverse one arc.
inline Digraph perturb(Rng& rng, const Digraph& d) {
  auto arcs = d.arcs();
  int kind = uniform(rng, 0, 2);
  if (kind == 0) {
    arcs.erase(arcs.begin() + uniform(rng, 0, static_cast<int>(arcs.size()) - 1));
  } else if (kind == 1) {
    std::vector<Arc> missing;
    for (auto pr : ordered_pairs(d.n()))
      if (!d.has_arc(pr.first, pr.second)) missing.push_back(pr);
    if (missing.empty()) return perturb(rng, d);
    arcs.push_back(missing[uniform(rng, 0, static_cast<int>(missing.size()) - 1)]);
  } else {
    std::vector<int> single;
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
      if (!d.has_arc(arcs[i].second, arcs[i].first)) single.push_back(i);
    if (single.empty()) return perturb(rng, d);
    auto& a = arcs[single[uniform(rng, 0, static_cast<int>(single.size()) - 1)]];
    std::swap(a.first, a.second);
  }
  return Digraph::build(d.n(), arcs);
}

// ------------------------------------------------------------ local classes

// Out-neighbourhoods are forward intervals ]x, x + r_x] of a cyclic order, closed
// so that every y in x+ also sees the rest of x+. Oriented and locally out-transitive.
inline std::vector<int> interval_lengths(Rng& rng, int n) {
  const int cap = (n - 1) / 2;
  std::vector<int> r(n);
  for (auto& x : r) x = cap == 0 ? 0 : uniform(rng, 0, cap);
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int j = 1; j <= r[x]; ++j) {
        int y = (x + j) % n;
        if (r[y] < r[x] - j) {
          r[y] = r[x] - j;
          changed = true;
        }
      }
  }
  return r;
}

inline Digraph interval_digraph(int n, const std::vector<int>& r, const std::vector<int>& perm) {
  std::vector<Arc> arcs;
  for (int x = 0; x < n; ++x)
    for (int j = 1; j <= r[x]; ++j) arcs.emplace_back(perm[x], perm[(x + j) % n]);
  return Digraph::build(n, arcs);
}

// Replace vertex u by a transitive tournament on t vertices (appended at the end).
inline Digraph blow_up_tt(const Digraph& d, int u, int t) {
  const int n = d.n();
  std::vector<int> copies{u};
  for (int i = 1; i < t; ++i) copies.push_back(n + i - 1);
  std::vector<Arc> arcs;
  for (auto [x, y] : d.arcs()) {
    if (x != u && y != u) arcs.emplace_back(x, y);
    else if (x == u)
      for (int c : copies) arcs.emplace_back(c, y);
    else
      for (int c : copies) arcs.emplace_back(x, c);
  }
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) arcs.emplace_back(copies[i], copies[j]);
  return Digraph::build(n + t - 1, arcs);
}

struct LotInstance {
  Digraph d;
  std::vector<int> t;  // induces a transitive tournament
};

// Locally out-transitive oriented graph: interval pieces, TT blow-ups, extra
// source vertices whose out-neighbourhood is {x} ∪ x+.
inline LotInstance random_lot(Rng& rng, int max_n) {
  Digraph d = Digraph::empty(0);
  int pieces = uniform(rng, 1, 2);
  for (int p = 0; p < pieces; ++p) {
    int n = uniform(rng, 3, std::max(3, max_n / 2));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    d = dichroma::disjoint_union(d, interval_digraph(n, interval_lengths(rng, n), perm));
  }
  for (int b = uniform(rng, 0, 2); b > 0 && d.n() < max_n; --b)
    d = blow_up_tt(d, uniform(rng, 0, d.n() - 1), uniform(rng, 2, 3));
  for (int s = uniform(rng, 0, 2); s > 0 && d.n() < max_n; --s) {
    int x = uniform(rng, 0, d.n() - 1);
    auto arcs = d.arcs();
    const int src = d.n();
    arcs.emplace_back(src, x);
    for (int y : d.out(x)) arcs.emplace_back(src, y);
    d = Digraph::build(d.n() + 1, arcs);
  }
  LotInstance inst{d, {}};
  if (coin(rng, 0.8)) {
    int x = uniform(rng, 0, d.n() - 1);
    inst.t.push_back(x);
    for (int y : d.out(x))
      if (coin(rng, 0.5)) inst.t.push_back(y);
    std::sort(inst.t.begin(), inst.t.end());
  }
  return inst;
}

// Out-round oriented graph (out-neighbourhoods are forward intervals) with no
// directed cycle of length <= 3. Returns an empty digraph when the draw fails.
inline Digraph random_out_round_digirth4(Rng& rng, int n) {
  std::vector<int> r(n);
  for (auto& x : r) x = uniform(rng, 0, std::max(0, (n - 1) / 3));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return interval_digraph(n, r, perm);
}

// Chordal orientation without an induced TT_3: every new vertex is joined to a
// clique of size <= 2; joined to an edge a->b it closes the dicycle b->v->a.
inline Digraph random_tt3_free_chordal(Rng& rng, int n) {
  std::vector<Arc> arcs;
  std::vector<std::set<int>> und(n);
  for (int v = 1; v < n; ++v) {
    std::vector<Arc> edges;
    for (int u = 0; u < v; ++u)
      for (int w : und[u])
        if (u < w) edges.emplace_back(u, w);
    if (!edges.empty() && coin(rng, 0.6)) {
      auto [a, b] = edges[uniform(rng, 0, static_cast<int>(edges.size()) - 1)];
      if (std::find(arcs.begin(), arcs.end(), Arc{a, b}) == arcs.end()) std::swap(a, b);
      arcs.emplace_back(b, v);
      arcs.emplace_back(v, a);
      und[v].insert(a);
      und[v].insert(b);
      und[a].insert(v);
      und[b].insert(v);
    } else {
      int u = uniform(rng, 0, v - 1);
      arcs.push_back(coin(rng, 0.5) ? Arc{u, v} : Arc{v, u});
      und[v].insert(u);
      und[u].insert(v);
    }
  }
  return Digraph::build(n, arcs);
}

// Seven-vertex tree: leaves a,b,h,i,d = 0..4, inner e = 5, g = 6, with e adjacent
// to a, b, h, g and g adjacent to i, d. Every edge carries a ↔K_4 whose digon
// [0,1] is removed by the join. `crossed` swaps h and i in the leaf cycle, which
// breaks the plane embedding.
inline Digraph six_part_tree_join(bool crossed) {
  dichroma::TreeJoinSpec spec;
  spec.tree_vertices = 7;
  spec.tree_edges = {{5, 0}, {5, 1}, {5, 2}, {5, 6}, {6, 3}, {6, 4}};
  for (int i = 0; i < 6; ++i) {
    spec.parts.push_back(dichroma::symmetric_complete(4));
    spec.part_ends.emplace_back(0, 1);
  }
  spec.cycle = crossed ? std::vector<int>{0, 1, 3, 2, 4} : std::vector<int>{0, 1, 2, 3, 4};
  spec.allow_any_order = crossed;
  return dichroma::hajos_tree_join(spec).digraph;
}

}  // namespace gen
