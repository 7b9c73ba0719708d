#include "dichroma/defective.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "dichroma/matching.hpp"

namespace dichroma {

EdgeColouring EdgeColouring::from(std::vector<int> colours) {
  EdgeColouring c;
  c.k = colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end());
  c.colour = std::move(colours);
  return c;
}

EdgeColouringCheck verify_edge_colouring(const Multigraph& g, const EdgeColouring& c, int d) {
  if (static_cast<int>(c.colour.size()) != g.m())
    throw Error(Errc::PartialColouring, "colouring has " + std::to_string(c.colour.size()) + " entries for " +
                                            std::to_string(g.m()) + " edges");
  for (int x : c.colour)
    if (x < 1) throw Error(Errc::PartialColouring, "every edge needs a colour >= 1");
  EdgeColouringCheck r;
  for (int v = 0; v < g.n(); ++v) {
    std::map<int, int> count;
    for (int e : g.incident(v)) ++count[c.colour[e]];
    for (auto [col, cnt] : count)
      if (cnt > d) {
        r.witness = Overload{v, col, cnt};
        return r;
      }
  }
  r.valid = true;
  return r;
}

namespace {

int ceil_div(long long a, long long b) { return static_cast<int>((a + b - 1) / b); }

int gamma_of(const Multigraph& g, const std::vector<char>& in, int size, int d) {
  long long denom = static_cast<long long>(d) * size / 2;
  if (denom == 0) return 0;
  long long e = 0;
  for (auto [u, v] : g.edges())
    if (in[u] && in[v]) ++e;
  return ceil_div(e, denom);
}

// Multigraph on the endpoints of `ids`; vertex i of the result is verts[i].
struct Compact {
  Multigraph g;
  std::vector<int> verts;
};

Compact compact(const Multigraph& g, const std::vector<int>& ids) {
  std::vector<int> local(g.n(), -1);
  Compact c;
  std::vector<Edge> es;
  for (int e : ids) {
    auto [u, v] = g.edge(e);
    for (int x : {u, v})
      if (local[x] == -1) {
        local[x] = static_cast<int>(c.verts.size());
        c.verts.push_back(x);
      }
    es.emplace_back(local[u], local[v]);
  }
  c.g = Multigraph::build(static_cast<int>(c.verts.size()), es);
  return c;
}

class EdgeSearch {
 public:
  EdgeSearch(const Multigraph& g, int d, int k, Budget* budget)
      : g_(g), d_(d), k_(k), budget_(budget), col_(g.m(), 0), cnt_(static_cast<std::size_t>(g.n()) * (k + 1), 0) {
    std::map<Edge, int> last;
    prev_.assign(g.m(), -1);
    for (int e = 0; e < g.m(); ++e) {
      auto [u, v] = g.edge(e);
      Edge key{std::min(u, v), std::max(u, v)};
      auto it = last.find(key);
      if (it != last.end()) prev_[e] = it->second;
      last[key] = e;
    }
  }

  std::optional<EdgeColouring> run() {
    for (int v = 0; v < g_.n(); ++v)
      if (g_.degree(v) > static_cast<long long>(k_) * d_) return std::nullopt;
    if (!dfs(0, 0)) return std::nullopt;
    return EdgeColouring::from(col_);
  }

 private:
  int& cnt(int v, int c) { return cnt_[static_cast<std::size_t>(v) * (k_ + 1) + c]; }

  bool allowed(int e, int c) {
    auto [u, v] = g_.edge(e);
    return cnt(u, c) < d_ && cnt(v, c) < d_;
  }

  bool dfs(int coloured, int used) {
    if (coloured == g_.m()) return true;
    if (budget_ && !budget_->tick())
      throw BudgetExceededError("defective edge search budget exhausted", 0, std::nullopt);
    int best = -1, best_opts = 0, best_sat = -1;
    for (int e = 0; e < g_.m(); ++e) {
      if (col_[e] || (prev_[e] != -1 && !col_[prev_[e]])) continue;
      int lo = prev_[e] != -1 ? col_[prev_[e]] : 1;
      int hi = std::min(k_, used + 1);
      int opts = 0;
      for (int c = lo; c <= hi; ++c)
        if (allowed(e, c)) ++opts;
      auto [u, v] = g_.edge(e);
      int sat = static_cast<int>(g_.degree(u) + g_.degree(v));
      if (best == -1 || opts < best_opts || (opts == best_opts && sat > best_sat)) {
        best = e;
        best_opts = opts;
        best_sat = sat;
      }
      if (opts == 0) return false;
    }
    const int e = best;
    auto [u, v] = g_.edge(e);
    int lo = prev_[e] != -1 ? col_[prev_[e]] : 1;
    int hi = std::min(k_, used + 1);
    for (int c = lo; c <= hi; ++c) {
      if (!allowed(e, c)) continue;
      col_[e] = c;
      ++cnt(u, c);
      ++cnt(v, c);
      if (dfs(coloured + 1, std::max(used, c))) return true;
      --cnt(u, c);
      --cnt(v, c);
      col_[e] = 0;
    }
    return false;
  }

  const Multigraph& g_;
  int d_, k_;
  Budget* budget_;
  std::vector<int> col_, cnt_, prev_;
};

int lower_bound_index(const Multigraph& g, int d) {
  if (g.m() == 0) return 0;
  return std::max(ceil_div(g.max_degree(), d), gamma_d(g, d));
}

DefectiveIndex search_index(const Multigraph& g, int d, Budget* budget, std::optional<EdgeColouring> upper) {
  DefectiveIndex r;
  r.lower = lower_bound_index(g, d);
  if (g.m() == 0) return r;
  int hi = upper ? upper->k : g.m();
  for (int k = r.lower; k < hi; ++k) {
    std::optional<EdgeColouring> c;
    try {
      c = EdgeSearch(g, d, k, budget).run();
    } catch (const BudgetExceededError&) {
      throw BudgetExceededError("exact defective index budget exhausted", k, hi);
    }
    if (c) {
      r.index = k;
      r.colouring = std::move(*c);
      return r;
    }
  }
  if (upper) {
    r.index = upper->k;
    r.colouring = std::move(*upper);
    return r;
  }
  // Every edge its own colour is always valid.
  std::vector<int> own(g.m());
  for (int e = 0; e < g.m(); ++e) own[e] = e + 1;
  r.index = g.m();
  r.colouring = EdgeColouring::from(own);
  return r;
}

}  // namespace

int gamma_d(const Multigraph& g, int d, int subset_cap, std::uint64_t seed) {
  if (d < 1) throw Error(Errc::BadParameters, "d must be at least 1");
  const int n = g.n();
  if (g.m() == 0) return 0;
  int best = 0;
  std::vector<char> in(n, 0);
  if (n <= subset_cap) {
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
      int size = 0;
      for (int v = 0; v < n; ++v) {
        in[v] = s >> v & 1;
        size += in[v];
      }
      best = std::max(best, gamma_of(g, in, size, d));
    }
    return best;
  }
  auto eval = [&](const std::vector<int>& xs) {
    std::fill(in.begin(), in.end(), 0);
    for (int x : xs) in[x] = 1;
    best = std::max(best, gamma_of(g, in, static_cast<int>(xs.size()), d));
  };
  for (auto [u, v] : g.edges()) {
    eval({u, v});
    for (int e : g.incident(u)) {
      int w = g.other(e, u);
      if (w != v) eval({u, v, w});
    }
  }
  for (const auto& comp : g.components()) eval(comp);
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  eval(all);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> xs;
    std::uniform_int_distribution<int> pct(5, 95);
    int p = pct(rng);
    for (int v = 0; v < n; ++v)
      if (static_cast<int>(rng() % 100) < p) xs.push_back(v);
    if (xs.size() >= 2) eval(xs);
  }
  return best;
}

std::optional<EdgeColouring> find_defective_colouring(const Multigraph& g, int d, int k, Budget* budget) {
  if (d < 1 || k < 0) throw Error(Errc::BadParameters, "need d >= 1 and k >= 0");
  if (g.m() == 0) return EdgeColouring{};
  if (k == 0) return std::nullopt;
  return EdgeSearch(g, d, k, budget).run();
}

DefectiveIndex exact_defective_index(const Multigraph& g, int d, Budget* budget, bool seed_upper) {
  if (d < 1) throw Error(Errc::BadParameters, "d must be at least 1");
  std::optional<EdgeColouring> upper;
  if (seed_upper && g.m() > 0) {
    try {
      upper = defective_colour(g, d, g.is_simple()).colouring;
    } catch (const Error& e) {
      if (e.code() != Errc::FallbackToExact) throw;
    }
  }
  return search_index(g, d, budget, std::move(upper));
}

std::vector<int> shannon_edge_order(int k) {
  if (k < 1) throw Error(Errc::BadParameters, "k must be at least 1");
  Multigraph sh = shannon_multigraph(k);
  // Pairs in rotation {0,1}, {1,2}, {0,2}; consecutive triples form triangles.
  std::vector<std::vector<int>> by_pair(3);
  for (int e = 0; e < sh.m(); ++e) {
    auto [u, v] = sh.edge(e);
    int p = (u == 0 && v == 1) ? 0 : (u == 1 && v == 2) ? 1 : 2;
    by_pair[p].push_back(e);
  }
  std::vector<int> order;
  std::vector<std::size_t> next(3, 0);
  for (int i = 0; static_cast<int>(order.size()) < sh.m(); i = (i + 1) % 3)
    if (next[i] < by_pair[i].size()) order.push_back(by_pair[i][next[i]++]);
  return order;
}

EdgeColouring colour_shannon_multigraph(int k, int d) {
  if (d < 1) throw Error(Errc::BadParameters, "d must be at least 1");
  if (d % 2 == 0) throw Error(Errc::EvenD, "block colouring needs odd d");
  auto order = shannon_edge_order(k);
  const int block = (3 * d - 1) / 2;
  std::vector<int> colour(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) colour[order[i]] = static_cast<int>(i) / block + 1;
  return EdgeColouring::from(colour);
}

EulerSplit split_euler(const Multigraph& g) {
  EulerSplit s;
  if (g.n() == 0) return s;
  const int r = g.degree(0);
  if (r % 2 != 0 || !g.is_regular(r)) throw Error(Errc::NotRegular, "split needs a 2k-regular multigraph");
  if (r == 0) return s;
  auto tour = euler_tour(g);
  if (!tour.exists) throw Error(Errc::Disconnected, "split needs a connected multigraph");
  const int m = static_cast<int>(tour.edges.size());
  const int used = m % 2 == 0 ? m : m - 1;
  for (int i = 0; i < used; ++i) (i % 2 == 0 ? s.a : s.b).push_back(tour.edges[i]);
  if (used != m) s.spare = tour.edges.back();
  std::sort(s.a.begin(), s.a.end());
  std::sort(s.b.begin(), s.b.end());
  return s;
}

std::optional<std::vector<int>> extract_f_factor(const Multigraph& g, const std::vector<int>& f) {
  const int n = g.n();
  if (static_cast<int>(f.size()) != n) throw Error(Errc::InvalidInput, "one target per vertex is required");
  // Outer vertex per (vertex, incident edge); deg - f inner vertices per vertex.
  std::vector<int> outer_base(n), inner_base(n);
  int total = 0;
  for (int v = 0; v < n; ++v) {
    if (f[v] < 0 || f[v] > g.degree(v)) return std::nullopt;
    outer_base[v] = total;
    total += g.degree(v);
    inner_base[v] = total;
    total += g.degree(v) - f[v];
  }
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < g.degree(v); ++j)
      for (int i = 0; i < g.degree(v) - f[v]; ++i) edges.emplace_back(outer_base[v] + j, inner_base[v] + i);
  auto slot = [&](int v, int e) {
    const auto& inc = g.incident(v);
    return outer_base[v] + static_cast<int>(std::lower_bound(inc.begin(), inc.end(), e) - inc.begin());
  };
  std::vector<std::pair<int, int>> edge_pair(g.m());
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge(e);
    edge_pair[e] = {slot(u, e), slot(v, e)};
    edges.push_back(edge_pair[e]);
  }
  auto mate = maximum_matching(total, edges);
  for (int x = 0; x < total; ++x)
    if (mate[x] == -1) return std::nullopt;
  std::vector<int> chosen;
  for (int e = 0; e < g.m(); ++e)
    if (mate[edge_pair[e].first] == edge_pair[e].second) chosen.push_back(e);
  std::vector<int> deg(n, 0);
  for (int e : chosen) {
    ++deg[g.edge(e).first];
    ++deg[g.edge(e).second];
  }
  if (deg != f) throw Error(Errc::Internal, "matching does not induce the requested factor");
  return chosen;
}

std::optional<FactorWitness> extract_factor(const Multigraph& g, int k) {
  if (k % 2 != 0) throw Error(Errc::OddK, "factor extraction is restricted to even k");
  auto e = extract_f_factor(g, std::vector<int>(g.n(), k));
  if (!e) return std::nullopt;
  return FactorWitness{std::move(*e), k};
}

Multigraph regularize(const Multigraph& g, int target) {
  if (target < g.max_degree()) throw Error(Errc::BadParameters, "target degree below the maximum degree");
  const int n = g.n();
  std::vector<Edge> es = g.edges();
  for (auto [u, v] : g.edges()) es.emplace_back(u + n, v + n);
  for (int v = 0; v < n; ++v)
    for (int i = g.degree(v); i < target; ++i) es.emplace_back(v, v + n);
  return Multigraph::build(2 * n, es);
}

EdgeColouring misra_gries(const Multigraph& g) {
  if (!g.is_simple()) throw Error(Errc::InvalidInput, "Misra-Gries needs a simple graph");
  const int n = g.n(), m = g.m();
  const int palette = g.max_degree() + 1;
  std::vector<int> col(m, 0);
  std::vector<std::vector<int>> at(n, std::vector<int>(palette + 1, -1));
  std::map<Edge, int> id;
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edge(e);
    id[{std::min(u, v), std::max(u, v)}] = e;
  }
  auto edge_id = [&](int a, int b) { return id.at({std::min(a, b), std::max(a, b)}); };
  auto is_free = [&](int v, int c) { return at[v][c] == -1; };
  auto first_free = [&](int v) {
    for (int c = 1; c <= palette; ++c)
      if (is_free(v, c)) return c;
    throw Error(Errc::Internal, "no free colour");
  };
  auto set_colour = [&](int e, int c) {
    auto [u, v] = g.edge(e);
    if (col[e]) at[u][col[e]] = at[v][col[e]] = -1;
    col[e] = c;
    if (c) at[u][c] = at[v][c] = e;
  };

  for (int e0 = 0; e0 < m; ++e0) {
    int u = g.edge(e0).first, v = g.edge(e0).second;
    std::vector<int> fan{v};
    std::vector<char> in_fan(n, 0);
    in_fan[v] = 1;
    for (bool grown = true; grown;) {
      grown = false;
      int last = fan.back();
      for (int f : g.incident(u)) {
        int w = g.other(f, u);
        if (in_fan[w] || !col[f] || !is_free(last, col[f])) continue;
        fan.push_back(w);
        in_fan[w] = 1;
        grown = true;
        break;
      }
    }
    const int c = first_free(u), dc = first_free(fan.back());
    if (c != dc) {
      // Invert the c/dc path starting at u with a dc edge.
      std::vector<int> path;
      int x = u, want = dc;
      while (at[x][want] != -1) {
        int e = at[x][want];
        path.push_back(e);
        x = g.other(e, x);
        want = want == dc ? c : dc;
      }
      std::vector<int> old(path.size());
      for (std::size_t i = 0; i < path.size(); ++i) {
        old[i] = col[path[i]];
        set_colour(path[i], 0);
      }
      for (std::size_t i = 0; i < path.size(); ++i) set_colour(path[i], old[i] == c ? dc : c);
    }
    // Longest prefix that is still a fan, then the first vertex on it with dc free.
    std::size_t w = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0) {
        int ci = col[edge_id(u, fan[i])];
        if (!ci || !is_free(fan[i - 1], ci)) break;
      }
      if (is_free(fan[i], dc)) {
        w = i;
        break;
      }
    }
    if (w == fan.size()) throw Error(Errc::Internal, "Misra-Gries found no rotation vertex");
    std::vector<int> shifted(w);
    for (std::size_t i = 0; i < w; ++i) shifted[i] = col[edge_id(u, fan[i + 1])];
    for (std::size_t i = 0; i <= w; ++i) set_colour(edge_id(u, fan[i]), 0);
    for (std::size_t i = 0; i < w; ++i) set_colour(edge_id(u, fan[i]), shifted[i]);
    set_colour(edge_id(u, fan[w]), dc);
  }
  return EdgeColouring::from(col);
}

int next_special(int delta, int d) {
  for (int i = 0;; ++i) {
    int s = (i + 1) * d - (i + 2) / 3;
    if (s >= delta) return s;
  }
}

namespace {

struct LadderFailure {};

// Colours of a 2d-factor split into two parts of max degree <= d plus a matching.
struct FactorSplit {
  std::vector<int> a, b, matching;
};

FactorSplit split_factor(const Multigraph& g, const std::vector<int>& factor) {
  FactorSplit out;
  Multigraph sub = g.edge_subgraph(factor);
  for (const auto& comp : sub.components()) {
    std::vector<char> inside(g.n(), 0);
    for (int v : comp) inside[v] = 1;
    std::vector<int> ids;
    for (int i = 0; i < sub.m(); ++i)
      if (inside[sub.edge(i).first]) ids.push_back(i);
    auto c = compact(sub, ids);
    auto s = split_euler(c.g);
    for (int i : s.a) out.a.push_back(factor[ids[i]]);
    for (int i : s.b) out.b.push_back(factor[ids[i]]);
    if (s.spare) out.matching.push_back(factor[ids[*s.spare]]);
  }
  return out;
}

std::vector<int> complement(int m, const std::vector<int>& ids) {
  std::vector<char> used(m, 0);
  for (int e : ids) used[e] = 1;
  std::vector<int> out;
  for (int e = 0; e < m; ++e)
    if (!used[e]) out.push_back(e);
  return out;
}

std::vector<int> factor_or_fail(const Multigraph& g, int k) {
  auto f = extract_factor(g, k);
  if (!f) throw LadderFailure{};
  return f->edges;
}

// Colour a delta-regular multigraph (delta special for odd d >= 3) with colours base, base+1, ...
void ladder(const Multigraph& g, int delta, int d, int base, std::vector<int>& colour);

// Colour the edges `ids` of g, which form an r-regular multigraph on the vertices they touch.
void ladder_on(const Multigraph& g, const std::vector<int>& ids, int r, int d, int base, std::vector<int>& colour) {
  if (ids.empty()) return;
  auto c = compact(g, ids);
  int rs = next_special(r, d);
  Multigraph h = rs == r ? c.g : regularize(c.g, rs);
  std::vector<int> local(h.m(), 0);
  ladder(h, rs, d, base, local);
  for (std::size_t i = 0; i < ids.size(); ++i) colour[ids[i]] = local[i];
}

void colour_three(const Multigraph& g, int d, int base, std::vector<int>& colour) {
  auto f = factor_or_fail(g, 2 * d);
  auto split = split_factor(g, f);
  for (int e : split.a) colour[e] = base;
  for (int e : split.b) colour[e] = base + 1;
  auto rest = complement(g.m(), f);
  rest.insert(rest.end(), split.matching.begin(), split.matching.end());
  for (int e : rest) colour[e] = base + 2;
}

void ladder(const Multigraph& g, int delta, int d, int base, std::vector<int>& colour) {
  if (delta == d) {
    std::fill(colour.begin(), colour.end(), base);
    return;
  }
  if (delta == 2 * d - 1) {
    auto f = factor_or_fail(g, d - 1);
    std::fill(colour.begin(), colour.end(), base + 1);
    for (int e : f) colour[e] = base;
    return;
  }
  if (delta == 3 * d - 1) {
    colour_three(g, d, base, colour);
    return;
  }
  if (delta == 4 * d - 1) {
    auto a = factor_or_fail(g, 2 * d);
    auto split = split_factor(g, a);
    for (int e : split.a) colour[e] = base;
    for (int e : split.b) colour[e] = base + 1;
    auto bm = complement(g.m(), a);
    bm.insert(bm.end(), split.matching.begin(), split.matching.end());
    Multigraph sub = g.edge_subgraph(bm);
    for (const auto& comp : sub.components()) {
      std::vector<char> inside(g.n(), 0);
      for (int v : comp) inside[v] = 1;
      std::vector<int> ids;
      for (int i = 0; i < sub.m(); ++i)
        if (inside[sub.edge(i).first]) ids.push_back(i);
      auto c = compact(sub, ids);
      Multigraph h = c.g.is_regular(2 * d) ? c.g : regularize(c.g, 2 * d);
      auto s = split_euler(h);
      if (s.spare) throw LadderFailure{};
      for (int i : s.a)
        if (i < static_cast<int>(ids.size())) colour[bm[ids[i]]] = base + 2;
      for (int i : s.b)
        if (i < static_cast<int>(ids.size())) colour[bm[ids[i]]] = base + 3;
    }
    return;
  }
  if (delta >= 5 * d - 2) {
    auto f = factor_or_fail(g, 3 * d - 1);
    Multigraph fg = compact(g, f).g;
    std::vector<int> fcol(fg.m(), 0);
    colour_three(fg, d, base, fcol);
    for (std::size_t i = 0; i < f.size(); ++i) colour[f[i]] = fcol[i];
    ladder_on(g, complement(g.m(), f), delta - (3 * d - 1), d, base + 3, colour);
    return;
  }
  throw Error(Errc::Internal, "degree " + std::to_string(delta) + " is not special");
}

std::vector<int> compress_colours(std::vector<int> colour) {
  std::vector<int> seen = colour;
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  for (int& c : colour) c = static_cast<int>(std::lower_bound(seen.begin(), seen.end(), c) - seen.begin()) + 1;
  return colour;
}

constexpr int kExactFallbackEdges = 40;

DefectiveColouring exact_route(const Multigraph& g, int d, int bound) {
  if (g.m() > kExactFallbackEdges)
    throw Error(Errc::FallbackToExact, "constructive route failed and the graph has " + std::to_string(g.m()) +
                                           " edges, above the exact-search limit");
  DefectiveColouring r;
  r.colouring = search_index(g, d, nullptr, std::nullopt).colouring;
  r.route = "exact";
  r.bound = bound;
  r.fell_back = true;
  return r;
}

// Colour g by colouring a regular supergraph whose first g.m() edges are g's.
EdgeColouring restrict_colouring(const std::vector<int>& colour, int m) {
  return EdgeColouring::from(compress_colours(std::vector<int>(colour.begin(), colour.begin() + m)));
}

DefectiveColouring even_route(const Multigraph& g, int d) {
  const int delta = g.max_degree();
  const int target = delta + (delta % 2);
  Multigraph h = g.is_regular(target) ? g : regularize(g, target);
  std::vector<int> colour(h.m(), 0);
  std::vector<int> remaining(h.m());
  for (int e = 0; e < h.m(); ++e) remaining[e] = e;
  int r = target, next = 1;
  while (r > 0) {
    int s = std::min(d, r);
    Multigraph sub = h.edge_subgraph(remaining);
    auto f = extract_factor(sub, s);
    if (!f) return exact_route(g, d, ceil_div(delta, d));
    std::vector<char> chosen(remaining.size(), 0);
    for (int i : f->edges) {
      colour[remaining[i]] = next;
      chosen[i] = 1;
    }
    std::vector<int> rest;
    for (std::size_t i = 0; i < remaining.size(); ++i)
      if (!chosen[i]) rest.push_back(remaining[i]);
    remaining = std::move(rest);
    r -= s;
    ++next;
  }
  DefectiveColouring out;
  out.colouring = restrict_colouring(colour, g.m());
  out.route = "even";
  out.bound = ceil_div(delta, d);
  return out;
}

DefectiveColouring odd_route(const Multigraph& g, int d) {
  const int delta = g.max_degree();
  const int bound = ceil_div(3LL * delta - 1, 3LL * d - 1);
  if (d == 1) return exact_route(g, d, bound);
  const int ds = next_special(delta, d);
  Multigraph h = g.is_regular(ds) ? g : regularize(g, ds);
  std::vector<int> colour(h.m(), 0);
  try {
    ladder(h, ds, d, 1, colour);
  } catch (const LadderFailure&) {
    return exact_route(g, d, bound);
  }
  DefectiveColouring out;
  out.colouring = restrict_colouring(colour, g.m());
  out.route = "odd-ladder";
  out.bound = bound;
  return out;
}

DefectiveColouring simple_route(const Multigraph& g, int d) {
  const int delta = g.max_degree();
  if (d % 2 == 0) return even_route(g, d);
  if (delta == 2 * d) {
    // Parity rule: two colours iff every 2d-regular component has even order.
    bool even_orders = true;
    for (const auto& comp : g.components()) {
      bool regular = true;
      for (int v : comp) regular = regular && g.degree(v) == 2 * d;
      if (regular && comp.size() % 2 == 1) even_orders = false;
    }
    if (even_orders) {
      Multigraph h = regularize(g, 2 * d);
      std::vector<int> colour(h.m(), 0);
      for (const auto& comp : h.components()) {
        std::vector<char> inside(h.n(), 0);
        for (int v : comp) inside[v] = 1;
        std::vector<int> ids;
        for (int e = 0; e < h.m(); ++e)
          if (inside[h.edge(e).first]) ids.push_back(e);
        auto c = compact(h, ids);
        auto s = split_euler(c.g);
        if (s.spare) throw Error(Errc::Internal, "component of odd size in the parity route");
        for (int i : s.a) colour[ids[i]] = 1;
        for (int i : s.b) colour[ids[i]] = 2;
      }
      DefectiveColouring out;
      out.colouring = restrict_colouring(colour, g.m());
      out.route = "parity";
      out.bound = 2;
      return out;
    }
  }
  auto proper = misra_gries(g);
  std::vector<int> colour(g.m());
  for (int e = 0; e < g.m(); ++e) colour[e] = (proper.colour[e] - 1) / d + 1;
  DefectiveColouring out;
  out.colouring = EdgeColouring::from(compress_colours(colour));
  out.route = "vizing";
  out.bound = ceil_div(delta + 1, d);
  return out;
}

}  // namespace

DefectiveColouring defective_colour(const Multigraph& g, int d, bool simple_hint) {
  if (d < 1) throw Error(Errc::BadParameters, "d must be at least 1");
  DefectiveColouring out;
  if (g.m() == 0) {
    out.route = "trivial";
    return out;
  }
  const int delta = g.max_degree();
  if (delta <= d) {
    out.colouring = EdgeColouring::from(std::vector<int>(g.m(), 1));
    out.route = "trivial";
    out.bound = 1;
    return out;
  }
  if (simple_hint && g.is_simple())
    out = simple_route(g, d);
  else if (d % 2 == 0)
    out = even_route(g, d);
  else
    out = odd_route(g, d);
  if (!verify_edge_colouring(g, out.colouring, d).valid)
    throw Error(Errc::Internal, "route '" + out.route + "' produced an invalid colouring");
  return out;
}

Multigraph defective_tower(int k, int d) {
  if (k < 1 || d < 1) throw Error(Errc::BadParameters, "tower needs k, d >= 1");
  Multigraph g = complete_graph(d + 1);
  for (int level = 1; level < k; ++level) {
    const int n = g.n();
    std::vector<Edge> es = g.edges();
    for (auto [u, v] : g.edges()) es.emplace_back(u + n, v + n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < d; ++j) es.emplace_back(i, n + (i + j) % n);
    g = Multigraph::build(2 * n, es);
  }
  return g;
}

namespace {

// (k, d)-colouring of the tower: K_{d+1} colour 1, joiner of level j colour j+1.
std::vector<int> tower_colouring(int k, int d) {
  std::vector<int> colour(static_cast<std::size_t>((d + 1) * d / 2), 1);
  int n = d + 1;
  for (int level = 1; level < k; ++level) {
    std::vector<int> next = colour;
    next.insert(next.end(), colour.begin(), colour.end());
    next.insert(next.end(), static_cast<std::size_t>(n) * d, level + 1);
    colour = std::move(next);
    n *= 2;
  }
  return colour;
}

}  // namespace

NpGadget np_gadget_defective(const Multigraph& g, int k, int d) {
  if (k < 3) throw Error(Errc::BadParameters, "gadget needs k >= 3");
  if (d < 3 || d % 2 == 0) throw Error(Errc::BadParameters, "gadget needs odd d >= 3");
  if (!g.is_simple() || !g.is_regular(k)) throw Error(Errc::BadParameters, "gadget needs a k-regular simple graph");
  NpGadget gad;
  gad.k = k;
  gad.d = d;
  gad.base_n = g.n();
  gad.per_vertex = k * (d - 1) / 2;

  // H: tower with edge 0 = {0, 1} subdivided by a new last vertex v.
  Multigraph tower = defective_tower(k, d);
  auto tcol = tower_colouring(k, d);
  const int v = tower.n();
  std::vector<Edge> hes;
  std::vector<int> hcol;
  for (int e = 1; e < tower.m(); ++e) {
    hes.push_back(tower.edge(e));
    hcol.push_back(tcol[e]);
  }
  hes.emplace_back(0, v);
  hes.emplace_back(1, v);
  hcol.push_back(tcol[0]);
  hcol.push_back(tcol[0]);
  gad.h = Multigraph::build(v + 1, hes);
  gad.h_colouring = EdgeColouring::from(hcol);

  std::vector<Edge> es = g.edges();
  int next = g.n();
  for (int u = 0; u < g.n(); ++u)
    for (int i = 0; i < gad.per_vertex; ++i) {
      std::vector<int> map(gad.h.n());
      for (int x = 0; x < v; ++x) map[x] = next++;
      map[v] = u;
      gad.copy_edge_offset.push_back(static_cast<int>(es.size()));
      for (auto [a, b] : gad.h.edges()) es.emplace_back(map[a], map[b]);
      gad.copies.push_back(std::move(map));
    }
  gad.graph = Multigraph::build(next, es);
  return gad;
}

EdgeColouring extend_gadget_colouring(const NpGadget& gad, const EdgeColouring& proper) {
  const int m0 = static_cast<int>(gad.copy_edge_offset.empty() ? gad.graph.m() : gad.copy_edge_offset.front());
  if (static_cast<int>(proper.colour.size()) != m0)
    throw Error(Errc::InvalidInput, "colouring does not match the base graph");
  for (int c : proper.colour)
    if (c < 1 || c > gad.k) throw Error(Errc::InvalidInput, "base colouring must use colours 1..k");
  std::vector<int> colour(gad.graph.m(), 0);
  for (int e = 0; e < m0; ++e) colour[e] = proper.colour[e];
  const int half = (gad.d - 1) / 2;
  for (int u = 0; u < gad.base_n; ++u)
    for (int i = 1; i <= gad.per_vertex; ++i) {
      // Copies ((c-1)(d-1)/2, c(d-1)/2] take colour c on av and bv.
      const int c = (i - 1) / half + 1;
      const int idx = u * gad.per_vertex + (i - 1);
      const int off = gad.copy_edge_offset[idx];
      for (int e = 0; e < gad.h.m(); ++e) {
        int x = gad.h_colouring.colour[e];
        colour[off + e] = x == 1 ? c : x == c ? 1 : x;
      }
    }
  return EdgeColouring::from(colour);
}

}  // namespace dichroma
