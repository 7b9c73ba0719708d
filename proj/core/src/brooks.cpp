#include "dichroma/brooks.hpp"

#include <algorithm>
#include <deque>

namespace dichroma {

const char* brooks_exception_name(BrooksException e) {
  switch (e) {
    case BrooksException::None: return "None";
    case BrooksException::DirectedCycle: return "DirectedCycle";
    case BrooksException::SymmetricOddCycle: return "SymmetricOddCycle";
    case BrooksException::SymmetricComplete: return "SymmetricComplete";
  }
  return "None";
}

BrooksException brooks_exception(const Digraph& g) {
  const int n = g.n();
  if (n == 0) return BrooksException::None;
  const int k = g.delta_max();
  if (k == 0) return n == 1 ? BrooksException::SymmetricComplete : BrooksException::None;
  for (int v = 0; v < n; ++v)
    if (g.out_degree(v) != k || g.in_degree(v) != k) return BrooksException::None;
  if (!is_weakly_connected(g)) return BrooksException::None;
  if (k == 1) return BrooksException::DirectedCycle;
  if (k == 2) return g.is_symmetric() && n % 2 == 1 ? BrooksException::SymmetricOddCycle : BrooksException::None;
  return n == k + 1 ? BrooksException::SymmetricComplete : BrooksException::None;
}

BrooksVerdict classify_brooks(const Digraph& d) {
  BrooksVerdict v;
  v.delta_max = d.delta_max();
  for (auto& comp : weak_components(d)) {
    BrooksComponent c;
    Digraph sub = induced_subdigraph(d, comp);
    c.k = sub.delta_max();
    c.tag = brooks_exception(sub);
    c.vertices = std::move(comp);
    if (c.k == v.delta_max && c.tag != BrooksException::None) v.tight = true;
    v.components.push_back(std::move(c));
  }
  return v;
}

namespace {

std::vector<int> reversed(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

bool connected_without(const Digraph& g, int a, int b) {
  int start = -1;
  for (int v = 0; v < g.n() && start == -1; ++v)
    if (v != a && v != b) start = v;
  if (start == -1) return true;
  std::vector<char> seen(g.n(), 0);
  seen[a] = seen[b] = 1;
  seen[start] = 1;
  std::vector<int> q{start};
  for (std::size_t i = 0; i < q.size(); ++i)
    for (int w : g.neighbours(q[i]))
      if (!seen[w]) {
        seen[w] = 1;
        q.push_back(w);
      }
  return static_cast<int>(q.size()) == g.n() - 2;
}

struct Ctx {
  bool fallback = false;
};

std::vector<int> brooks_components(const Digraph& d, Ctx& ctx);

// Colouring of a connected digraph with at most k colours, where
// Δ_max(h) <= k and h is not in B_k.
std::vector<int> colour_at_most(const Digraph& h, int k, Ctx& ctx) {
  const int n = h.n();
  if (n == 0) return {};
  if (h.delta_max() < k) return brooks_components(h, ctx);

  for (int u = 0; u < n; ++u)
    if (h.d_min(u) < k) return greedy_dicolour(h, reversed(bfs_order(h, u))).colour;

  // k-diregular from here on.
  if (h.is_symmetric()) {
    // Symmetric and bipartite: the two sides are independent, hence acyclic.
    std::vector<int> side(n, -1);
    side[0] = 0;
    std::vector<int> q{0};
    bool bipartite = true;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (int w : h.out(q[i])) {
        if (side[w] == -1) {
          side[w] = 1 - side[q[i]];
          q.push_back(w);
        } else if (side[w] == side[q[i]]) {
          bipartite = false;
        }
      }
    if (bipartite && k >= 2) {
      for (int& s : side) ++s;
      return side;
    }
  }
  auto cuts = cut_vertices(h);
  if (!cuts.empty()) {
    int u = cuts.front();
    std::vector<int> others;
    for (int v = 0; v < n; ++v)
      if (v != u) others.push_back(v);
    Digraph without = induced_subdigraph(h, others);
    auto comps = weak_components(without);
    std::vector<int> g1, g2;
    for (int x : comps.front()) g1.push_back(others[x]);
    for (std::size_t i = 1; i < comps.size(); ++i)
      for (int x : comps[i]) g2.push_back(others[x]);
    g1.push_back(u);
    g2.push_back(u);
    std::sort(g1.begin(), g1.end());
    std::sort(g2.begin(), g2.end());
    auto c1 = colour_at_most(induced_subdigraph(h, g1), k, ctx);
    auto c2 = colour_at_most(induced_subdigraph(h, g2), k, ctx);
    int cu1 = c1[std::lower_bound(g1.begin(), g1.end(), u) - g1.begin()];
    int cu2 = c2[std::lower_bound(g2.begin(), g2.end(), u) - g2.begin()];
    std::vector<int> colour(n, 0);
    for (std::size_t i = 0; i < g1.size(); ++i) colour[g1[i]] = c1[i];
    for (std::size_t i = 0; i < g2.size(); ++i) {
      int c = c2[i];
      if (c == cu2)
        c = cu1;
      else if (c == cu1)
        c = cu2;
      colour[g2[i]] = c;
    }
    return colour;
  }

  for (int x = 0; x < n; ++x) {
    for (const auto* nb : {&h.out(x), &h.in(x)}) {
      for (std::size_t i = 0; i < nb->size(); ++i)
        for (std::size_t j = i + 1; j < nb->size(); ++j) {
          int u = (*nb)[i], v = (*nb)[j];
          if (h.has_digon(u, v) || !connected_without(h, u, v)) continue;
          std::vector<int> keep;
          for (int y = 0; y < n; ++y)
            if (y != u && y != v) keep.push_back(y);
          Digraph rest = induced_subdigraph(h, keep);
          int xr = static_cast<int>(std::lower_bound(keep.begin(), keep.end(), x) - keep.begin());
          std::vector<int> order{v, u};
          for (int y : reversed(bfs_order(rest, xr))) order.push_back(keep[y]);
          auto col = greedy_dicolour(h, order);
          if (col.k <= k) return col.colour;
        }
    }
  }

  ctx.fallback = true;
  auto ex = exact_dichromatic(h);
  return ex.colouring.colour;
}

std::vector<int> brooks_components(const Digraph& d, Ctx& ctx) {
  std::vector<int> colour(d.n(), 0);
  for (const auto& comp : weak_components(d)) {
    Digraph sub = induced_subdigraph(d, comp);
    int k = sub.delta_max();
    std::vector<int> c;
    if (brooks_exception(sub) != BrooksException::None)
      c = greedy_dicolour(sub, bfs_order(sub, 0)).colour;
    else
      c = colour_at_most(sub, k, ctx);
    for (std::size_t i = 0; i < comp.size(); ++i) colour[comp[i]] = c[i];
  }
  return colour;
}

}  // namespace

BrooksColouring brooks_colour(const Digraph& d) {
  Ctx ctx;
  BrooksColouring res;
  res.colouring = Dicolouring::from(brooks_components(d, ctx));
  res.used_exact_fallback = ctx.fallback;
  return res;
}

Digraph deltamin_gadget(const Digraph& d, int k) {
  if (k < 2) throw Error(Errc::BadK, "gadget needs k >= 2");
  const int w = k + 1;
  std::vector<Arc> arcs;
  for (int u = 0; u < d.n(); ++u) {
    int base = u * w;
    int minus = base, plus = base + 1;
    std::vector<int> mid;
    for (int i = 1; i < k; ++i) mid.push_back(base + 1 + i);
    for (int a : mid)
      for (int b : mid)
        if (a != b) arcs.emplace_back(a, b);
    for (int side : {minus, plus})
      for (int a : mid) {
        arcs.emplace_back(a, side);
        arcs.emplace_back(side, a);
      }
    arcs.emplace_back(minus, plus);
  }
  for (auto [u, v] : d.arcs()) arcs.emplace_back(u * w + 1, v * w);
  return Digraph::build(d.n() * w, arcs);
}

}  // namespace dichroma
