#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "dichroma/extremal.hpp"

namespace dichroma {

namespace {

// Unit-capacity max-flow on the arcs of d.
class UnitFlow {
 public:
  explicit UnitFlow(const Digraph& d) : n_(d.n()), head_(n_, -1) {
    for (auto [u, v] : d.arcs()) {
      add(u, v, 1);
      add(v, u, 0);
    }
  }

  LocalConnectivity run(int s, int t) {
    for (std::size_t i = 0; i < cap_.size(); ++i) cap_[i] = base_[i];
    LocalConnectivity res;
    std::vector<int> via(n_);
    while (true) {
      std::fill(via.begin(), via.end(), -2);
      via[s] = -1;
      std::deque<int> q{s};
      while (!q.empty() && via[t] == -2) {
        int x = q.front();
        q.pop_front();
        for (int e = head_[x]; e != -1; e = next_[e])
          if (cap_[e] > 0 && via[to_[e]] == -2) {
            via[to_[e]] = e;
            q.push_back(to_[e]);
          }
      }
      if (via[t] == -2) break;
      for (int x = t; x != s; x = to_[via[x] ^ 1]) {
        --cap_[via[x]];
        ++cap_[via[x] ^ 1];
      }
      ++res.value;
    }
    for (int x = 0; x < n_; ++x)
      if (via[x] != -2) res.source_side.push_back(x);
    return res;
  }

 private:
  void add(int u, int v, int c) {
    to_.push_back(v);
    base_.push_back(c);
    cap_.push_back(c);
    next_.push_back(head_[u]);
    head_[u] = static_cast<int>(to_.size()) - 1;
  }

  int n_;
  std::vector<int> head_, next_, to_, cap_, base_;
};

}  // namespace

LocalConnectivity local_arc_connectivity(const Digraph& d, int u, int v) {
  if (u < 0 || v < 0 || u >= d.n() || v >= d.n() || u == v)
    throw Error(Errc::InvalidInput, "connectivity needs two distinct vertices");
  UnitFlow f(d);
  return f.run(u, v);
}

LambdaProfile lambda_profile(const Digraph& d, bool with_cuts) {
  LambdaProfile p;
  const int n = d.n();
  p.pair.assign(n, std::vector<int>(n, 0));
  if (with_cuts) p.cut.assign(n, std::vector<std::vector<int>>(n));
  UnitFlow f(d);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      auto r = f.run(u, v);
      p.pair[u][v] = r.value;
      p.lambda = std::max(p.lambda, r.value);
      if (with_cuts) p.cut[u][v] = std::move(r.source_side);
    }
  return p;
}

int lambda(const Digraph& d) { return lambda_profile(d, false).lambda; }

int dicut_size(const Digraph& d, const std::vector<int>& source_side) {
  VertexSet x = VertexSet::of(d.n(), source_side);
  int c = 0;
  for (int u : source_side)
    for (int w : d.out(u))
      if (!x.test(w)) ++c;
  return c;
}

namespace {

std::vector<Arc> without(std::vector<Arc> arcs, std::initializer_list<Arc> drop) {
  for (const auto& a : drop) {
    auto it = std::find(arcs.begin(), arcs.end(), a);
    if (it != arcs.end()) arcs.erase(it);
  }
  return arcs;
}

// Labels for the second operand: `merged` goes to `target`, the rest follow offset.
std::vector<int> merge_map(int n2, int merged, int target, int offset) {
  std::vector<int> map(n2);
  int next = offset;
  for (int y = 0; y < n2; ++y) map[y] = y == merged ? target : next++;
  return map;
}

bool same_component_without(const Digraph& d, int removed, int a, int b) {
  std::vector<char> seen(d.n(), 0);
  seen[removed] = 1;
  seen[a] = 1;
  std::vector<int> q{a};
  for (std::size_t i = 0; i < q.size(); ++i)
    for (int w : d.neighbours(q[i]))
      if (!seen[w]) {
        seen[w] = 1;
        q.push_back(w);
      }
  return seen[b];
}

void check_vertex(const Digraph& d, int v, const char* what) {
  if (v < 0 || v >= d.n()) throw Error(Errc::IndexOutOfRange, std::string(what) + " out of range");
}

}  // namespace

Digraph directed_hajos_join(const Digraph& d1, Arc uv1, const Digraph& d2, Arc v2w) {
  check_vertex(d1, uv1.first, "u");
  check_vertex(d1, uv1.second, "v1");
  check_vertex(d2, v2w.first, "v2");
  check_vertex(d2, v2w.second, "w");
  if (!d1.has_arc(uv1.first, uv1.second)) throw Error(Errc::MissingArc, "uv1 is not an arc of d1");
  if (!d2.has_arc(v2w.first, v2w.second)) throw Error(Errc::MissingArc, "v2w is not an arc of d2");
  auto map = merge_map(d2.n(), v2w.first, uv1.second, d1.n());
  auto arcs = without(d1.arcs(), {uv1});
  for (auto [x, y] : without(d2.arcs(), {v2w})) arcs.emplace_back(map[x], map[y]);
  arcs.emplace_back(uv1.first, map[v2w.second]);
  return Digraph::build(d1.n() + d2.n() - 1, arcs);
}

BijoinResult hajos_bijoin(const Digraph& d1, int t, int a1, int w, const Digraph& d2, int v, int a2, int u) {
  for (int x : {t, a1, w}) check_vertex(d1, x, "bijoin vertex");
  for (int x : {v, a2, u}) check_vertex(d2, x, "bijoin vertex");
  if (!d1.has_arc(t, a1) || !d1.has_arc(a1, w))
    throw Error(Errc::PreconditionViolated, "t->a1 and a1->w must be arcs of d1");
  if (!d2.has_arc(v, a2) || !d2.has_arc(a2, u))
    throw Error(Errc::PreconditionViolated, "v->a2 and a2->u must be arcs of d2");
  if (t != w && !same_component_without(d1, a1, t, w))
    throw Error(Errc::PreconditionViolated, "t and w lie in different components of d1 - a1");
  if (u != v && !same_component_without(d2, a2, u, v))
    throw Error(Errc::PreconditionViolated, "u and v lie in different components of d2 - a2");
  auto map = merge_map(d2.n(), a2, a1, d1.n());
  auto arcs = without(d1.arcs(), {{t, a1}, {a1, w}});
  for (auto [x, y] : without(d2.arcs(), {{v, a2}, {a2, u}})) arcs.emplace_back(map[x], map[y]);
  arcs.emplace_back(t, map[u]);
  arcs.emplace_back(map[v], w);
  BijoinResult res;
  res.digraph = Digraph::build(d1.n() + d2.n() - 1, arcs);
  res.bidirected = t == w && u == v;
  res.degenerate = (t == w) != (u == v);
  return res;
}

bool respects_embedding(int tree_vertices, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<int>& cycle) {
  const int len = static_cast<int>(cycle.size());
  std::vector<std::vector<int>> adj(tree_vertices);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto [a, b] : edges) {
    // Side of b after deleting edge ab.
    std::vector<char> side(tree_vertices, 0);
    side[b] = 1;
    std::vector<int> q{b};
    for (std::size_t i = 0; i < q.size(); ++i)
      for (int y : adj[q[i]])
        if (!side[y] && !(q[i] == b && y == a)) {
          side[y] = 1;
          q.push_back(y);
        }
    // Cyclically contiguous iff the side label changes at most twice around the cycle.
    int changes = 0;
    for (int i = 0; i < len; ++i)
      if (side[cycle[i]] != side[cycle[(i + 1) % len]]) ++changes;
    if (changes > 2) return false;
  }
  return true;
}

TreeJoinResult hajos_tree_join(const TreeJoinSpec& spec) {
  const int tn = spec.tree_vertices;
  const int ne = static_cast<int>(spec.tree_edges.size());
  if (ne < 2 || ne != tn - 1) throw Error(Errc::InvalidInput, "tree needs n-1 >= 2 edges");
  if (static_cast<int>(spec.parts.size()) != ne || static_cast<int>(spec.part_ends.size()) != ne)
    throw Error(Errc::InvalidInput, "one part per tree edge required");
  std::vector<int> degree(tn, 0);
  for (auto [a, b] : spec.tree_edges) {
    if (a < 0 || b < 0 || a >= tn || b >= tn || a == b) throw Error(Errc::InvalidInput, "bad tree edge");
    ++degree[a];
    ++degree[b];
  }
  {
    std::vector<Arc> arcs;
    for (auto [a, b] : spec.tree_edges) arcs.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(arcs.begin(), arcs.end());
    if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
      throw Error(Errc::InvalidInput, "repeated tree edge");
    if (!is_weakly_connected(Digraph::build(tn, arcs))) throw Error(Errc::InvalidInput, "tree is disconnected");
  }

  std::vector<int> seen(tn, 0);
  for (int x : spec.cycle) {
    if (x < 0 || x >= tn) throw Error(Errc::BadEmbeddingOrder, "cycle entry is not a tree vertex");
    if (++seen[x] > 1) throw Error(Errc::BadEmbeddingOrder, "cycle repeats vertex " + std::to_string(x));
    if (!spec.extended && degree[x] != 1)
      throw Error(Errc::BadEmbeddingOrder, "cycle visits internal vertex " + std::to_string(x));
  }
  for (int x = 0; x < tn; ++x)
    if (degree[x] == 1 && !seen[x]) throw Error(Errc::BadEmbeddingOrder, "leaf " + std::to_string(x) + " missing");
  if (spec.cycle.size() < 2) throw Error(Errc::BadEmbeddingOrder, "cycle needs two vertices");
  if (!spec.allow_any_order && !respects_embedding(tn, spec.tree_edges, spec.cycle))
    throw Error(Errc::BadEmbeddingOrder, "cycle order does not follow an embedding of the tree");

  TreeJoinResult res;
  std::vector<Arc> arcs;
  int next = tn;
  for (int i = 0; i < ne; ++i) {
    const Digraph& p = spec.parts[i];
    auto [pu, pv] = spec.part_ends[i];
    if (pu < 0 || pv < 0 || pu >= p.n() || pv >= p.n() || pu == pv)
      throw Error(Errc::InvalidInput, "part ends out of range");
    if (!p.has_digon(pu, pv)) throw Error(Errc::MissingDigon, "part " + std::to_string(i) + " lacks its digon");
    std::vector<int> map(p.n());
    for (int y = 0; y < p.n(); ++y)
      map[y] = y == pu ? spec.tree_edges[i].first : y == pv ? spec.tree_edges[i].second : next++;
    for (auto [x, y] : p.arcs()) {
      if ((x == pu && y == pv) || (x == pv && y == pu)) continue;
      arcs.emplace_back(map[x], map[y]);
    }
    res.part_map.push_back(std::move(map));
  }
  const int len = static_cast<int>(spec.cycle.size());
  for (int i = 0; i < len; ++i) arcs.emplace_back(spec.cycle[i], spec.cycle[(i + 1) % len]);
  res.digraph = Digraph::build(next, arcs);
  return res;
}

Digraph parallel_hajos_join(const Digraph& d_ac, int x, int t, int u, int v, int w, const Digraph& d_b, int a,
                            int b) {
  for (int y : {x, t, u, v, w}) check_vertex(d_ac, y, "parallel join vertex");
  check_vertex(d_b, a, "a");
  check_vertex(d_b, b, "b");
  if (!d_b.has_digon(a, b)) throw Error(Errc::PreconditionViolated, "[a,b] is not a digon of d_B");
  if (!d_ac.has_arc(t, u) || !d_ac.has_arc(v, w))
    throw Error(Errc::PreconditionViolated, "tu and vw must be arcs of d_AC");
  if (x == t || x == u || x == v || x == w) throw Error(Errc::PreconditionViolated, "x must differ from t,u,v,w");

  // Components of d_AC - x - {tu, vw}.
  const int n = d_ac.n();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (s == x || comp[s] != -1) continue;
    comp[s] = ncomp;
    std::vector<int> q{s};
    for (std::size_t i = 0; i < q.size(); ++i) {
      int y = q[i];
      for (int z : d_ac.neighbours(y)) {
        if (z == x || comp[z] != -1) continue;
        bool only_removed = true;
        if (d_ac.has_arc(y, z) && !((y == t && z == u) || (y == v && z == w))) only_removed = false;
        if (d_ac.has_arc(z, y) && !((z == t && y == u) || (z == v && y == w))) only_removed = false;
        if (only_removed) continue;
        comp[z] = ncomp;
        q.push_back(z);
      }
    }
    ++ncomp;
  }
  if (ncomp != 2 || comp[t] != comp[w] || comp[u] != comp[v] || comp[t] == comp[u])
    throw Error(Errc::PreconditionViolated, "d_AC - x - {tu, vw} must split into A (t, w) and C (u, v)");

  std::vector<int> map(n);
  int next = d_b.n();
  for (int y = 0; y < n; ++y) map[y] = y == x ? -1 : next++;
  auto arcs = without(d_b.arcs(), {{a, b}, {b, a}});
  for (auto [p, q] : d_ac.arcs()) {
    int other = p == x ? q : p;
    int xl = comp[other] == comp[t] ? a : b;
    int pp = p == x ? xl : map[p];
    int qq = q == x ? xl : map[q];
    arcs.emplace_back(pp, qq);
  }
  return Digraph::build(next, arcs);
}

Digraph generalized_wheel(const std::vector<std::vector<int>>& children) {
  const int n = static_cast<int>(children.size());
  if (n < 3) throw Error(Errc::ParityViolated, "generalized wheel needs at least 3 tree vertices");
  std::vector<int> depth(n, -1), order;
  std::vector<int> stack{0};
  depth[0] = 0;
  std::vector<Arc> arcs;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    order.push_back(x);
    const auto& ch = children[x];
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
      int c = *it;
      if (c < 0 || c >= n || depth[c] != -1) throw Error(Errc::InvalidInput, "children lists do not form a tree");
      depth[c] = depth[x] + 1;
      arcs.emplace_back(x, c);
      arcs.emplace_back(c, x);
      stack.push_back(c);
    }
  }
  if (static_cast<int>(order.size()) != n) throw Error(Errc::InvalidInput, "tree does not reach every vertex");
  std::vector<int> leaves;
  for (int x : order) {
    bool leaf = x == 0 ? children[0].size() == 1 : children[x].empty();
    if (leaf) leaves.push_back(x);
  }
  for (int x : leaves)
    if (depth[x] % 2 != depth[leaves[0]] % 2)
      throw Error(Errc::ParityViolated, "root-to-leaf paths have different parities");
  const int l = static_cast<int>(leaves.size());
  for (int i = 0; i < l; ++i) arcs.emplace_back(leaves[i], leaves[(i + 1) % l]);
  return Digraph::build(n, arcs);
}

}  // namespace dichroma
