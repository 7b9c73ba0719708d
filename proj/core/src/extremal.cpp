#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <tuple>

#include "dichroma/dicolour.hpp"
#include "dichroma/extremal.hpp"

namespace dichroma {

const char* cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::BaseSymmetricComplete: return "BaseSymmetricComplete";
    case CertKind::BaseSymmetricOddWheel: return "BaseSymmetricOddWheel";
    case CertKind::BaseDirectedCycle: return "BaseDirectedCycle";
    case CertKind::DirectedHajosJoin: return "DirectedHajosJoin";
    case CertKind::ParallelHajosJoin: return "ParallelHajosJoin";
    case CertKind::HajosStarJoin: return "HajosStarJoin";
  }
  return "?";
}

bool is_symmetric_complete(const Digraph& d, int order) {
  return d.n() == order && d.m() == static_cast<std::size_t>(order) * (order - 1);
}

bool is_directed_cycle(const Digraph& d) {
  if (d.n() < 2) return false;
  for (int v = 0; v < d.n(); ++v)
    if (d.out_degree(v) != 1 || d.in_degree(v) != 1) return false;
  return is_weakly_connected(d);
}

bool is_symmetric_odd_wheel(const Digraph& d) {
  const int n = d.n();
  if (n < 4 || (n - 1) % 2 == 0 || !d.is_symmetric()) return false;
  for (int h = 0; h < n; ++h) {
    if (d.out_degree(h) != n - 1) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (v != h && d.out_degree(v) != 3) ok = false;
    if (!ok) continue;
    std::vector<int> rim;
    for (int v = 0; v < n; ++v)
      if (v != h) rim.push_back(v);
    if (is_weakly_connected(induced_subdigraph(d, rim))) return true;
  }
  return false;
}

NecessaryReport check_extremal_necessary(const Digraph& d, int k) {
  NecessaryReport r;
  r.eulerian = true;
  for (int v = 0; v < d.n(); ++v)
    if (d.out_degree(v) != d.in_degree(v)) r.eulerian = false;
  r.strong = is_strong(d);
  r.biconnected = is_biconnected(d);
  r.lambda_all_k = true;
  auto prof = lambda_profile(d, false);
  for (int u = 0; u < d.n() && r.lambda_all_k; ++u)
    for (int v = 0; v < d.n(); ++v)
      if (u != v && prof.pair[u][v] != k) {
        r.lambda_all_k = false;
        break;
      }
  return r;
}

namespace {

// Component ids of the underlying graph of d with some vertices and arcs removed.
std::vector<int> components_without(const Digraph& d, const std::vector<char>& dead,
                                    const std::vector<Arc>& gone, int* count) {
  const int n = d.n();
  auto removed = [&](int x, int y) {
    return std::find(gone.begin(), gone.end(), Arc{x, y}) != gone.end();
  };
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (dead[s] || comp[s] != -1) continue;
    comp[s] = c;
    std::vector<int> q{s};
    for (std::size_t i = 0; i < q.size(); ++i) {
      int x = q[i];
      for (int y : d.out(x))
        if (!dead[y] && comp[y] == -1 && !removed(x, y)) {
          comp[y] = c;
          q.push_back(y);
        }
      for (int y : d.in(x))
        if (!dead[y] && comp[y] == -1 && !removed(y, x)) {
          comp[y] = c;
          q.push_back(y);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

// Bridges of the underlying multigraph formed by `arcs` over local vertices 0..n-1.
// Each arc is one edge, so a digon never contains a bridge. Returns, for each
// arc index, whether it is a bridge; tin/tout give subtree intervals.
struct BridgeInfo {
  bool connected = false;
  std::vector<char> bridge;
  std::vector<int> tin, tout, parent_edge;
  // For a bridge, the endpoint deeper in the DFS tree.
  std::vector<int> child;
};

BridgeInfo find_bridges(int n, const std::vector<Arc>& arcs) {
  BridgeInfo bi;
  const int m = static_cast<int>(arcs.size());
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int e = 0; e < m; ++e) {
    adj[arcs[e].first].emplace_back(arcs[e].second, e);
    adj[arcs[e].second].emplace_back(arcs[e].first, e);
  }
  bi.bridge.assign(m, 0);
  bi.child.assign(m, -1);
  bi.tin.assign(n, -1);
  bi.tout.assign(n, -1);
  bi.parent_edge.assign(n, -1);
  std::vector<int> low(n, 0);
  int timer = 0, visited = 0;
  if (n == 0) {
    bi.connected = true;
    return bi;
  }
  std::vector<std::pair<int, std::size_t>> st{{0, 0}};
  bi.tin[0] = low[0] = timer++;
  ++visited;
  while (!st.empty()) {
    auto& [x, i] = st.back();
    if (i < adj[x].size()) {
      auto [y, e] = adj[x][i++];
      if (e == bi.parent_edge[x]) continue;
      if (bi.tin[y] == -1) {
        bi.parent_edge[y] = e;
        bi.tin[y] = low[y] = timer++;
        ++visited;
        st.emplace_back(y, 0);
      } else {
        low[x] = std::min(low[x], bi.tin[y]);
      }
      continue;
    }
    int y = x;
    bi.tout[y] = timer - 1;
    st.pop_back();
    if (!st.empty()) {
      int p = st.back().first;
      low[p] = std::min(low[p], low[y]);
      if (low[y] > bi.tin[p]) {
        bi.bridge[bi.parent_edge[y]] = 1;
        bi.child[bi.parent_edge[y]] = y;
      }
    }
  }
  bi.connected = visited == n;
  return bi;
}

struct Recognizer {
  int k;
  Budget* budget;
  int next_label;

  void tick() {
    if (budget && !budget->tick()) throw BudgetExceededError("recognizer node budget exhausted", 0, std::nullopt);
  }

  static std::vector<Arc> labelled_arcs(const Digraph& g, const std::vector<int>& label) {
    std::vector<Arc> out;
    for (auto [x, y] : g.arcs()) out.emplace_back(label[x], label[y]);
    return out;
  }

  // Sub-instance on sorted local vertices `vs` plus extra arcs (local indices).
  static std::pair<Digraph, std::vector<int>> part(const Digraph& g, const std::vector<int>& label,
                                                   const std::vector<int>& vs, const std::vector<Arc>& extra) {
    std::vector<int> pos(g.n(), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
    std::vector<Arc> arcs;
    for (int x : vs)
      for (int y : g.out(x))
        if (pos[y] != -1) arcs.emplace_back(pos[x], pos[y]);
    for (auto [x, y] : extra) arcs.emplace_back(pos[x], pos[y]);
    std::vector<int> lab;
    for (int x : vs) lab.push_back(label[x]);
    return {Digraph::build(static_cast<int>(vs.size()), arcs), lab};
  }

  RecognitionResult run(const Digraph& g, const std::vector<int>& label) {
    RecognitionResult res;
    tick();
    auto nec = check_extremal_necessary(g, k);
    if (!nec.all()) {
      res.reason = !nec.strong        ? "not strong"
                   : !nec.biconnected ? "not biconnected"
                   : !nec.eulerian    ? "not Eulerian"
                                      : "some local arc-connectivity differs from k";
      return res;
    }
    DecompositionCertificate cert;
    cert.labels = label;
    cert.arcs = labelled_arcs(g, label);
    if (k >= 4 && is_symmetric_complete(g, k + 1)) {
      cert.kind = CertKind::BaseSymmetricComplete;
      return accept(std::move(cert));
    }
    if (k == 3 && is_symmetric_odd_wheel(g)) {
      cert.kind = CertKind::BaseSymmetricOddWheel;
      return accept(std::move(cert));
    }
    if (auto r = try_directed(g, label, cert)) return *r;
    if (auto r = try_parallel(g, label, cert)) return *r;
    if (auto r = try_star(g, label, cert)) return *r;
    res.reason = "NoDecomposition";
    return res;
  }

  static RecognitionResult accept(DecompositionCertificate cert) {
    RecognitionResult r;
    r.extremal = true;
    r.certificate = std::move(cert);
    return r;
  }

  // Recurse into parts; all must be extremal.
  std::optional<RecognitionResult> finish(DecompositionCertificate& cert,
                                          const std::vector<std::pair<Digraph, std::vector<int>>>& parts) {
    for (const auto& [pg, pl] : parts) {
      auto sub = run(pg, pl);
      if (!sub.extremal) {
        RecognitionResult r;
        r.reason = std::string(cert_kind_name(cert.kind)) + " part not extremal: " + sub.reason;
        return r;
      }
      cert.children.push_back(std::move(*sub.certificate));
    }
    return accept(std::move(cert));
  }

  std::optional<RecognitionResult> try_directed(const Digraph& g, const std::vector<int>& label,
                                                DecompositionCertificate base) {
    const int n = g.n();
    std::vector<char> dead(n, 0);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (v == u || g.has_arc(u, v)) continue;
        for (int w : g.out(u)) {
          if (w == v || g.has_arc(v, w)) continue;
          tick();
          dead[v] = 1;
          int count = 0;
          auto comp = components_without(g, dead, {{u, w}}, &count);
          dead[v] = 0;
          if (comp[u] == comp[w] || count != 2) continue;
          std::vector<int> ru, rw;
          for (int x = 0; x < n; ++x) {
            if (x == v) {
              ru.push_back(x);
              rw.push_back(x);
            } else if (comp[x] == comp[u]) {
              ru.push_back(x);
            } else {
              rw.push_back(x);
            }
          }
          base.kind = CertKind::DirectedHajosJoin;
          base.joint = {label[u], label[v], label[w]};
          return finish(base, {part(g, label, ru, {{u, v}}), part(g, label, rw, {{v, w}})});
        }
      }
    return std::nullopt;
  }

  std::optional<RecognitionResult> try_parallel(const Digraph& g, const std::vector<int>& label,
                                                DecompositionCertificate base) {
    const int n = g.n();
    using Cand = std::tuple<int, int, int, int, int, int>;  // t,u,v,w,a,b (local)
    std::optional<Cand> best;
    auto better = [&](const Cand& c) {
      auto lab = [&](const Cand& x) {
        return std::make_tuple(label[std::get<0>(x)], label[std::get<1>(x)], label[std::get<2>(x)],
                               label[std::get<3>(x)], label[std::get<4>(x)], label[std::get<5>(x)]);
      };
      return !best || lab(c) < lab(*best);
    };
    std::vector<char> dead(n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b || g.adjacent(a, b)) continue;
        tick();
        dead[a] = dead[b] = 1;
        int count = 0;
        auto comp = components_without(g, dead, {}, &count);
        dead[a] = dead[b] = 0;
        if (count < 2) continue;
        for (int c = 0; c < count; ++c) {
          std::vector<int> kv;
          for (int x = 0; x < n; ++x)
            if (comp[x] == c) kv.push_back(x);
          if (kv.size() < 2) continue;
          std::vector<int> loc(n, -1);
          for (std::size_t i = 0; i < kv.size(); ++i) loc[kv[i]] = static_cast<int>(i);
          std::vector<Arc> karcs;
          for (int x : kv)
            for (int y : g.out(x))
              if (loc[y] != -1) karcs.emplace_back(loc[x], loc[y]);
          for (std::size_t e1 = 0; e1 < karcs.size(); ++e1) {
            std::vector<Arc> rest;
            std::vector<int> ids;
            for (std::size_t e = 0; e < karcs.size(); ++e)
              if (e != e1) {
                rest.push_back(karcs[e]);
                ids.push_back(static_cast<int>(e));
              }
            auto bi = find_bridges(static_cast<int>(kv.size()), rest);
            if (!bi.connected) continue;
            for (std::size_t j = 0; j < rest.size(); ++j) {
              if (!bi.bridge[j]) continue;
              int ch = bi.child[j];
              auto in_sub = [&](int x) { return bi.tin[ch] <= bi.tin[x] && bi.tin[x] <= bi.tout[ch]; };
              int t = karcs[e1].first, u = karcs[e1].second;
              int v = rest[j].first, w = rest[j].second;
              // t, w on one side; u, v on the other.
              if (in_sub(t) != in_sub(w) || in_sub(u) != in_sub(v) || in_sub(t) == in_sub(u)) continue;
              bool side_t = in_sub(t);
              bool ok = true;
              for (int x : kv) {
                bool a_side = in_sub(loc[x]) == side_t;
                if (a_side && g.adjacent(b, x)) ok = false;
                if (!a_side && g.adjacent(a, x)) ok = false;
                if (!ok) break;
              }
              if (!ok) continue;
              Cand cand{kv[t], kv[u], kv[v], kv[w], a, b};
              if (better(cand)) best = cand;
            }
          }
        }
      }
    if (!best) return std::nullopt;

    auto [t, u, v, w, a, b] = *best;
    std::vector<char> dead2(n, 0);
    dead2[a] = dead2[b] = 1;
    int count = 0;
    auto comp = components_without(g, dead2, {{t, u}, {v, w}}, &count);
    int ca = comp[t], cc = comp[u];
    std::vector<int> ac_vertices, bside, aside_labels;
    for (int x = 0; x < n; ++x) {
      if (x == a || x == b) {
        bside.push_back(x);
      } else if (comp[x] == ca || comp[x] == cc) {
        ac_vertices.push_back(x);
        if (comp[x] == ca) aside_labels.push_back(label[x]);
      } else {
        bside.push_back(x);
      }
    }
    // D_AC: a and b merged into a fresh vertex x, appended last.
    const int xl = next_label++;
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < ac_vertices.size(); ++i) pos[ac_vertices[i]] = static_cast<int>(i);
    const int xi = static_cast<int>(ac_vertices.size());
    pos[a] = pos[b] = xi;
    std::vector<Arc> ac_arcs;
    for (int p = 0; p < n; ++p)
      for (int q : g.out(p)) {
        if (pos[p] == -1 || pos[q] == -1) continue;
        if ((p == a || p == b) && (q == a || q == b)) continue;
        ac_arcs.emplace_back(pos[p], pos[q]);
      }
    std::vector<int> ac_labels;
    for (int x : ac_vertices) ac_labels.push_back(label[x]);
    ac_labels.push_back(xl);
    Digraph dac = Digraph::build(xi + 1, ac_arcs);
    auto db = part(g, label, bside, {{a, b}, {b, a}});

    base.kind = CertKind::ParallelHajosJoin;
    base.joint = {label[t], label[u], label[v], label[w], label[a], label[b], xl};
    base.a_side = aside_labels;
    return finish(base, {{dac, ac_labels}, db});
  }

  std::optional<RecognitionResult> try_star(const Digraph& g, const std::vector<int>& label,
                                            DecompositionCertificate base) {
    const int n = g.n();
    for (int y = 0; y < n; ++y) {
      std::vector<int> loc(n, -1), glob;
      for (int x = 0; x < n; ++x)
        if (x != y) {
          loc[x] = static_cast<int>(glob.size());
          glob.push_back(x);
        }
      for (int pl = 0; pl < n; ++pl) {
        if (pl == y) continue;
        for (int p1 : g.out(pl)) {
          if (p1 == y) continue;
          tick();
          std::vector<Arc> rest;
          for (int x : glob)
            for (int z : g.out(x))
              if (z != y && !(x == pl && z == p1)) rest.emplace_back(loc[x], loc[z]);
          auto bi = find_bridges(static_cast<int>(glob.size()), rest);
          // Walk the bridge forest from p1 to pl.
          std::vector<std::vector<std::pair<int, int>>> forest(glob.size());
          for (std::size_t e = 0; e < rest.size(); ++e)
            if (bi.bridge[e]) {
              forest[rest[e].first].emplace_back(rest[e].second, static_cast<int>(e));
              forest[rest[e].second].emplace_back(rest[e].first, static_cast<int>(e));
            }
          std::vector<int> prev(glob.size(), -2);
          std::vector<int> q{loc[p1]};
          prev[loc[p1]] = -1;
          for (std::size_t i = 0; i < q.size(); ++i)
            for (auto [z, e] : forest[q[i]])
              if (prev[z] == -2) {
                prev[z] = q[i];
                q.push_back(z);
              }
          if (prev[loc[pl]] == -2) continue;
          std::vector<int> rim;
          for (int z = loc[pl]; z != -1; z = prev[z]) rim.push_back(glob[z]);
          std::reverse(rim.begin(), rim.end());
          bool forward = true;
          for (std::size_t i = 0; i + 1 < rim.size() && forward; ++i)
            if (!g.has_arc(rim[i], rim[i + 1])) forward = false;
          if (!forward || rim.size() < 2) continue;
          if (auto r = verify_star(g, label, y, rim, base)) return r;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<RecognitionResult> verify_star(const Digraph& g, const std::vector<int>& label, int x,
                                               const std::vector<int>& rim, DecompositionCertificate base) {
    const int n = g.n();
    const int l = static_cast<int>(rim.size());
    for (int p : rim)
      if (g.adjacent(x, p)) return std::nullopt;
    std::vector<Arc> cycle;
    for (int i = 0; i < l; ++i) cycle.emplace_back(rim[i], rim[(i + 1) % l]);
    std::vector<char> dead(n, 0);
    dead[x] = 1;
    int count = 0;
    auto comp = components_without(g, dead, cycle, &count);
    if (count != l) return std::nullopt;
    std::set<int> distinct;
    for (int p : rim) distinct.insert(comp[p]);
    if (static_cast<int>(distinct.size()) != l) return std::nullopt;
    std::vector<std::pair<Digraph, std::vector<int>>> parts;
    for (int p : rim) {
      std::vector<int> vs;
      for (int z = 0; z < n; ++z)
        if (z == x || comp[z] == comp[p]) vs.push_back(z);
      parts.push_back(part(g, label, vs, {{x, p}, {p, x}}));
    }
    base.kind = CertKind::HajosStarJoin;
    base.joint = {label[x]};
    for (int p : rim) base.joint.push_back(label[p]);
    return finish(base, parts);
  }
};

}  // namespace

RecognitionResult recognize_k_extremal(const Digraph& d, int k, Budget* budget) {
  if (k == 2) throw Error(Errc::UnsupportedK, "2-extremal recognition is not supported");
  if (k < 1) throw Error(Errc::UnsupportedK, "k must be 1 or at least 3");
  std::vector<int> label(d.n());
  for (int v = 0; v < d.n(); ++v) label[v] = v;
  if (k == 1) {
    RecognitionResult r;
    if (is_directed_cycle(d)) {
      DecompositionCertificate c;
      c.kind = CertKind::BaseDirectedCycle;
      c.labels = label;
      c.arcs = d.arcs();
      r.extremal = true;
      r.certificate = std::move(c);
    } else {
      r.reason = "not a directed cycle";
    }
    return r;
  }
  Recognizer rec{k, budget, d.n()};
  return rec.run(d, label);
}

std::vector<Arc> replay_certificate(const DecompositionCertificate& c) {
  std::vector<Arc> out;
  switch (c.kind) {
    case CertKind::BaseSymmetricComplete:
    case CertKind::BaseSymmetricOddWheel:
    case CertKind::BaseDirectedCycle:
      out = c.arcs;
      break;
    case CertKind::DirectedHajosJoin: {
      int u = c.joint[0], v = c.joint[1], w = c.joint[2];
      for (const auto& ch : c.children)
        for (auto a : replay_certificate(ch))
          if (a != Arc{u, v} && a != Arc{v, w}) out.push_back(a);
      out.emplace_back(u, w);
      break;
    }
    case CertKind::ParallelHajosJoin: {
      int a = c.joint[4], b = c.joint[5], x = c.joint[6];
      std::set<int> aside(c.a_side.begin(), c.a_side.end());
      for (auto [p, q] : replay_certificate(c.children[0])) {
        int other = p == x ? q : p;
        int to = aside.count(other) ? a : b;
        out.emplace_back(p == x ? to : p, q == x ? to : q);
      }
      for (auto arc : replay_certificate(c.children[1]))
        if (arc != Arc{a, b} && arc != Arc{b, a}) out.push_back(arc);
      break;
    }
    case CertKind::HajosStarJoin: {
      int x = c.joint[0];
      std::set<Arc> drop;
      for (std::size_t i = 1; i < c.joint.size(); ++i) {
        drop.insert({x, c.joint[i]});
        drop.insert({c.joint[i], x});
      }
      for (const auto& ch : c.children)
        for (auto a : replay_certificate(ch))
          if (!drop.count(a)) out.push_back(a);
      const int l = static_cast<int>(c.joint.size()) - 1;
      for (int i = 0; i < l; ++i) out.emplace_back(c.joint[1 + i], c.joint[1 + (i + 1) % l]);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

InducedCycleHypergraph induced_cycle_hypergraph(const Digraph& d, Budget* budget) {
  InducedCycleHypergraph h;
  h.n = d.n();
  std::vector<int> path;
  std::vector<char> on(d.n(), 0);
  std::function<void(int)> extend = [&](int s) {
    int last = path.back();
    const int j = static_cast<int>(path.size()) - 1;
    for (int w : d.out(last)) {
      if (w <= s || on[w]) continue;
      if (budget && !budget->tick())
        throw BudgetExceededError("induced cycle enumeration budget exhausted", 0, std::nullopt);
      bool chord = false;
      for (int i = 1; i < j && !chord; ++i)
        if (d.adjacent(w, path[i])) chord = true;
      if (chord) continue;
      if (j == 0) {
        if (d.has_arc(w, s)) {
          h.edges.push_back({s, w});
          continue;
        }
      } else {
        if (d.has_arc(w, last) || d.has_arc(s, w)) continue;
        if (d.has_arc(w, s)) {
          std::vector<int> e = path;
          e.push_back(w);
          std::sort(e.begin(), e.end());
          h.edges.push_back(std::move(e));
          continue;
        }
      }
      path.push_back(w);
      on[w] = 1;
      extend(s);
      on[w] = 0;
      path.pop_back();
    }
  };
  for (int s = 0; s < d.n(); ++s) {
    path = {s};
    on[s] = 1;
    extend(s);
    on[s] = 0;
  }
  std::sort(h.edges.begin(), h.edges.end());
  for (std::size_t i = 0; i < h.edges.size() && h.pairwise_small; ++i)
    for (std::size_t j = i + 1; j < h.edges.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(h.edges[i].begin(), h.edges[i].end(), h.edges[j].begin(), h.edges[j].end(),
                            std::back_inserter(common));
      if (common.size() > 1) {
        h.pairwise_small = false;
        h.violating_pair = std::make_pair(static_cast<int>(i), static_cast<int>(j));
        break;
      }
    }
  return h;
}

bool check_2_extremal(const Digraph& d, Budget* budget) {
  if (!is_strong(d) || !is_biconnected(d)) return false;
  if (lambda(d) != 2) return false;
  return exact_dichromatic(d, budget).chi == 3;
}

}  // namespace dichroma
