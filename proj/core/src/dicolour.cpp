#include "dichroma/dicolour.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>

namespace dichroma {

Dicolouring Dicolouring::from(std::vector<int> colours) {
  Dicolouring c;
  c.k = colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end());
  c.colour = std::move(colours);
  return c;
}

DicolouringCheck verify_dicolouring(const Digraph& d, const Dicolouring& c) {
  if (static_cast<int>(c.colour.size()) != d.n())
    throw Error(Errc::PartialColouring, "colouring has " + std::to_string(c.colour.size()) +
                                            " entries for " + std::to_string(d.n()) + " vertices");
  int k = 0;
  for (int v = 0; v < d.n(); ++v) {
    if (c.colour[v] < 1) throw Error(Errc::PartialColouring, "vertex " + std::to_string(v) + " uncoloured");
    k = std::max(k, c.colour[v]);
  }
  std::vector<std::vector<int>> classes(k + 1);
  for (int v = 0; v < d.n(); ++v) classes[c.colour[v]].push_back(v);
  DicolouringCheck res;
  for (const auto& cls : classes) {
    if (cls.size() < 2) continue;
    auto cyc = find_cycle(induced_subdigraph(d, cls));
    if (!cyc.empty()) {
      for (int& x : cyc) x = cls[x];
      res.cycle = std::move(cyc);
      return res;
    }
  }
  res.valid = true;
  return res;
}

int dichromatic_lower_bound(const Digraph& d) {
  if (d.n() == 0) return 0;
  if (is_acyclic(d)) return 1;
  int best = 2;
  for (int s = 0; s < d.n(); ++s) {
    std::vector<int> cand;
    for (int w : d.out(s))
      if (d.has_arc(w, s)) cand.push_back(w);
    int size = 1;
    while (!cand.empty()) {
      int x = cand.front();
      ++size;
      std::vector<int> next;
      for (std::size_t i = 1; i < cand.size(); ++i)
        if (d.has_digon(x, cand[i])) next.push_back(cand[i]);
      cand = std::move(next);
    }
    best = std::max(best, size);
  }
  return best;
}

Dicolouring greedy_dicolour(const Digraph& d, const std::vector<int>& order) {
  std::vector<int> colour(d.n(), 0);
  std::vector<char> seen_out(d.n() + 2), seen_in(d.n() + 2);
  for (int v : order) {
    std::fill(seen_out.begin(), seen_out.end(), 0);
    std::fill(seen_in.begin(), seen_in.end(), 0);
    for (int w : d.out(v))
      if (colour[w]) seen_out[colour[w]] = 1;
    for (int w : d.in(v))
      if (colour[w]) seen_in[colour[w]] = 1;
    int a = 1, b = 1;
    while (seen_out[a]) ++a;
    while (seen_in[b]) ++b;
    colour[v] = std::min(a, b);
  }
  return Dicolouring::from(std::move(colour));
}

namespace {

std::vector<int> positions(int n, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != n) throw Error(Errc::InvalidInput, "ordering is not a permutation");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if (v < 0 || v >= n || pos[v] != -1) throw Error(Errc::InvalidInput, "ordering is not a permutation");
    pos[v] = i;
  }
  return pos;
}

std::vector<int> backward_depth(const Digraph& d, const std::vector<int>& order) {
  auto pos = positions(d.n(), order);
  std::vector<int> f(d.n(), 1);
  for (int i = d.n() - 1; i >= 0; --i) {
    int y = order[i];
    for (int x : d.in(y))
      if (pos[x] > pos[y]) f[y] = std::max(f[y], f[x] + 1);
  }
  return f;
}

}  // namespace

Dicolouring gallai_roy_colour(const Digraph& d, const std::vector<int>& order) {
  return Dicolouring::from(backward_depth(d, order));
}

int longest_backward_path(const Digraph& d, const std::vector<int>& order) {
  auto f = backward_depth(d, order);
  return f.empty() ? 0 : *std::max_element(f.begin(), f.end());
}

BackwardPathCertificate backward_certificate(const Digraph& d, const Dicolouring& c) {
  if (!verify_dicolouring(d, c).valid) throw Error(Errc::InvalidInput, "colouring is not a dicolouring");
  BackwardPathCertificate cert;
  for (int col = 1; col <= c.k; ++col) {
    std::vector<int> cls;
    for (int v = 0; v < d.n(); ++v)
      if (c.colour[v] == col) cls.push_back(v);
    for (int i : topological_order(induced_subdigraph(d, cls))) cert.ordering.push_back(cls[i]);
  }
  cert.max_backward_path = longest_backward_path(d, cert.ordering);
  return cert;
}

namespace {

// Branch and bound over one strong component. Vertices are chosen by fewest
// remaining options, ties broken by a static connectivity order.
class KColourSearch {
 public:
  KColourSearch(const Digraph& d, int k, Budget* budget)
      : d_(d), adj_(d), n_(d.n()), k_(k), budget_(budget), colour_(n_, 0), blocked_(n_, 0) {
    for (int c = 0; c <= k_; ++c) classes_.emplace_back(n_);
    static_rank();
  }

  // Returns true with colour() filled, false when no k-colouring exists.
  bool run() {
    if (n_ == 0) return true;
    if (k_ <= 0) return false;
    return dfs(0, 0);
  }
  const std::vector<int>& colour() const { return colour_; }
  bool exhausted() const { return exhausted_; }

 private:
  void static_rank() {
    rank_.assign(n_, 0);
    std::vector<int> conn(n_, 0);
    std::vector<char> placed(n_, 0);
    for (int i = 0; i < n_; ++i) {
      int best = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        if (best == -1 || conn[v] > conn[best] ||
            (conn[v] == conn[best] && d_.out_degree(v) + d_.in_degree(v) >
                                          d_.out_degree(best) + d_.in_degree(best)))
          best = v;
      }
      placed[best] = 1;
      rank_[best] = i;
      for (int w : d_.out(best)) ++conn[w];
      for (int w : d_.in(best)) ++conn[w];
    }
  }

  // Would adding v to class c close a directed cycle?
  bool closes_cycle(int v, const VertexSet& cls) const {
    VertexSet reach = adj_.out[v] & cls;
    if (reach.none()) return false;
    VertexSet frontier = reach;
    while (frontier.any()) {
      if (frontier.intersects(adj_.in[v])) return true;
      VertexSet next(n_);
      frontier.for_each([&](int w) { next |= adj_.out[w]; });
      next &= cls;
      next -= reach;
      reach |= next;
      frontier = std::move(next);
    }
    return false;
  }

  bool dfs(int done, int used) {
    if (done == n_) return true;
    // Pick the uncoloured vertex with the fewest options.
    int pick = -1, pick_opts = 0;
    std::uint32_t used_mask = used >= 32 ? ~0u : ((1u << used) - 1);
    for (int v = 0; v < n_; ++v) {
      if (colour_[v]) continue;
      int opts = std::popcount(~blocked_[v] & used_mask) + (used < k_ ? 1 : 0);
      if (opts == 0) return false;
      if (pick == -1 || opts < pick_opts || (opts == pick_opts && rank_[v] < rank_[pick])) {
        pick = v;
        pick_opts = opts;
      }
    }
    int v = pick;
    int limit = std::min(used + 1, k_);
    std::vector<std::pair<int, std::uint32_t>> undo;
    for (int c = 1; c <= limit; ++c) {
      std::uint32_t bit = 1u << (c - 1);
      if (blocked_[v] & bit) continue;
      if (budget_ && !budget_->tick()) {
        exhausted_ = true;
        return false;
      }
      colour_[v] = c;
      classes_[c].set(v);
      undo.clear();
      bool dead = false;
      int new_used = std::max(used, c);
      std::uint32_t full = new_used >= 32 ? ~0u : ((1u << new_used) - 1);
      for (int w = 0; w < n_ && !dead; ++w) {
        if (colour_[w] || (blocked_[w] & bit)) continue;
        if (closes_cycle(w, classes_[c])) {
          undo.emplace_back(w, blocked_[w]);
          blocked_[w] |= bit;
          if (new_used == k_ && (blocked_[w] & full) == full) dead = true;
        }
      }
      if (!dead && dfs(done + 1, new_used)) return true;
      for (auto [w, m] : undo) blocked_[w] = m;
      classes_[c].reset(v);
      colour_[v] = 0;
      if (exhausted_) return false;
    }
    return false;
  }

  const Digraph& d_;
  BitAdjacency adj_;
  int n_;
  int k_;
  Budget* budget_;
  std::vector<int> colour_;
  std::vector<std::uint32_t> blocked_;
  std::vector<VertexSet> classes_;
  std::vector<int> rank_;
  bool exhausted_ = false;
};

struct ComponentAttempt {
  bool ok = false;
  bool exhausted = false;
  std::vector<int> colour;
};

ComponentAttempt colour_component(const Digraph& d, const std::vector<int>& comp, int k, Budget* budget) {
  ComponentAttempt res;
  if (comp.size() == 1) {
    res.ok = k >= 1;
    res.colour = {1};
    return res;
  }
  Digraph sub = induced_subdigraph(d, comp);
  KColourSearch search(sub, k, budget);
  res.ok = search.run();
  res.exhausted = search.exhausted();
  if (res.ok) res.colour = search.colour();
  return res;
}

Dicolouring heuristic_colouring(const Digraph& d) {
  std::vector<int> natural(d.n());
  for (int v = 0; v < d.n(); ++v) natural[v] = v;
  Dicolouring best = greedy_dicolour(d, natural);
  std::vector<int> rev(natural.rbegin(), natural.rend());
  for (auto cand : {greedy_dicolour(d, rev), gallai_roy_colour(d, natural)})
    if (cand.k < best.k) best = cand;
  return best;
}

constexpr int kMaxColours = 32;

}  // namespace

std::optional<Dicolouring> find_k_dicolouring(const Digraph& d, int k, Budget* budget) {
  if (k > kMaxColours) throw Error(Errc::InvalidInput, "at most 32 colours supported by the exact search");
  std::vector<int> colour(d.n(), 0);
  for (const auto& comp : strong_components(d)) {
    auto att = colour_component(d, comp, k, budget);
    if (att.exhausted) {
      auto h = heuristic_colouring(d);
      throw BudgetExceededError("node budget exhausted while testing k=" + std::to_string(k), 0,
                                std::optional<int>(h.k));
    }
    if (!att.ok) return std::nullopt;
    for (std::size_t i = 0; i < comp.size(); ++i) colour[comp[i]] = att.colour[i];
  }
  return Dicolouring::from(std::move(colour));
}

ExactResult exact_dichromatic(const Digraph& d, Budget* budget) {
  ExactResult res;
  if (d.n() == 0) return res;
  int lower = dichromatic_lower_bound(d);
  Dicolouring heur = heuristic_colouring(d);
  if (heur.k == lower) {
    res.chi = lower;
    res.colouring = std::move(heur);
    return res;
  }
  int k = lower;
  std::vector<int> colour(d.n(), 0);
  for (const auto& comp : strong_components(d)) {
    while (true) {
      if (k > kMaxColours) throw Error(Errc::InvalidInput, "dichromatic number exceeds 32");
      auto att = colour_component(d, comp, k, budget);
      if (att.exhausted)
        throw BudgetExceededError("node budget exhausted while testing k=" + std::to_string(k), k,
                                  std::optional<int>(std::max(heur.k, k)));
      if (att.ok) {
        for (std::size_t i = 0; i < comp.size(); ++i) colour[comp[i]] = att.colour[i];
        break;
      }
      ++k;
      if (k == heur.k) {
        // The heuristic already meets the refuted bound.
        res.chi = k;
        res.colouring = heur;
        return res;
      }
    }
  }
  res.chi = k;
  res.colouring = Dicolouring::from(std::move(colour));
  return res;
}

OddFreeResult two_colour_odd_free(const Digraph& d) {
  OddFreeResult res;
  std::vector<int> side(d.n(), -1), parent(d.n(), -1), depth(d.n(), 0);
  for (const auto& comp : strong_components(d)) {
    VertexSet in_comp = VertexSet::of(d.n(), comp);
    int root = comp.front();
    side[root] = 0;
    std::deque<int> q{root};
    int ca = -1, cb = -1;
    while (!q.empty() && ca == -1) {
      int v = q.front();
      q.pop_front();
      for (int w : d.neighbours(v)) {
        if (!in_comp.test(w)) continue;
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          q.push_back(w);
        } else if (side[w] == side[v]) {
          ca = v;
          cb = w;
          break;
        }
      }
    }
    if (ca == -1) continue;

    // Odd cycle of the underlying graph: ca .. lca .. cb, closed by edge cb-ca.
    std::vector<int> pa{ca}, pb{cb};
    while (pa.back() != pb.back()) {
      if (depth[pa.back()] >= depth[pb.back()])
        pa.push_back(parent[pa.back()]);
      else
        pb.push_back(parent[pb.back()]);
    }
    std::vector<int> ucyc(pa.begin(), pa.end());
    for (int i = static_cast<int>(pb.size()) - 2; i >= 0; --i) ucyc.push_back(pb[i]);
    // ucyc walks ca -> lca -> cb; the closing edge cb-ca makes it odd.

    Digraph sub = induced_subdigraph(d, comp);
    std::vector<int> local(d.n(), -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    auto shortest = [&](int s, int t) {
      std::vector<int> par(sub.n(), -2);
      std::deque<int> bq{s};
      par[s] = -1;
      while (!bq.empty()) {
        int x = bq.front();
        bq.pop_front();
        if (x == t) break;
        for (int y : sub.out(x))
          if (par[y] == -2) {
            par[y] = x;
            bq.push_back(y);
          }
      }
      std::vector<int> path;
      for (int x = t; x != -1; x = par[x]) path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    };

    std::vector<int> walk;  // closed directed walk, local indices, last == first omitted
    const int len = static_cast<int>(ucyc.size());
    for (int i = 0; i < len; ++i) {
      int x = local[ucyc[i]], y = local[ucyc[(i + 1) % len]];
      if (sub.has_arc(x, y)) {
        walk.push_back(x);
        continue;
      }
      auto p = shortest(x, y);
      if (p.size() % 2 == 1) {
        // Dipath x..y plus the arc y->x is an odd dicycle.
        for (int z : p) res.odd_cycle.push_back(comp[z]);
        return res;
      }
      walk.insert(walk.end(), p.begin(), p.end() - 1);
    }
    // The walk has odd length; peel simple cycles until an odd one appears.
    std::vector<int> stack;
    std::vector<int> at(sub.n(), -1);
    for (int step = 0; step <= static_cast<int>(walk.size()); ++step) {
      int x = walk[step % walk.size()];
      if (at[x] != -1) {
        std::size_t from = at[x];
        std::vector<int> cyc(stack.begin() + from, stack.end());
        if (cyc.size() % 2 == 1) {
          for (int z : cyc) res.odd_cycle.push_back(comp[z]);
          return res;
        }
        for (std::size_t i = from; i < stack.size(); ++i) at[stack[i]] = -1;
        stack.resize(from);
      }
      at[x] = static_cast<int>(stack.size());
      stack.push_back(x);
    }
    throw Error(Errc::Internal, "odd closed walk without odd cycle");
  }
  std::vector<int> colour(d.n());
  for (int v = 0; v < d.n(); ++v) colour[v] = side[v] + 1;
  res.coloured = true;
  res.colouring = Dicolouring::from(std::move(colour));
  return res;
}

bool is_dipolar(const Digraph& d, const std::vector<int>& s) {
  VertexSet in_s = VertexSet::of(d.n(), s);
  for (int x : s) {
    bool out_in = std::all_of(d.out(x).begin(), d.out(x).end(), [&](int w) { return in_s.test(w); });
    bool in_in = std::all_of(d.in(x).begin(), d.in(x).end(), [&](int w) { return in_s.test(w); });
    if (!out_in && !in_in) return false;
  }
  return true;
}

Dicolouring dipolar_combine(const Digraph& d, const std::vector<int>& s_in, const Dicolouring& inner,
                            const Dicolouring& outer) {
  std::vector<int> s = s_in;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s)
    if (v < 0 || v >= d.n()) throw Error(Errc::InvalidInput, "vertex " + std::to_string(v) + " out of range");
  if (!is_dipolar(d, s)) throw Error(Errc::NotDipolar, "set is not dipolar");
  VertexSet in_s = VertexSet::of(d.n(), s);
  std::vector<int> rest;
  for (int v = 0; v < d.n(); ++v)
    if (!in_s.test(v)) rest.push_back(v);
  Digraph ds = induced_subdigraph(d, s), dr = induced_subdigraph(d, rest);
  if (static_cast<int>(inner.colour.size()) != ds.n() || !verify_dicolouring(ds, inner).valid)
    throw Error(Errc::InvalidInput, "inner colouring is not a dicolouring of d[s]");
  if (static_cast<int>(outer.colour.size()) != dr.n() || !verify_dicolouring(dr, outer).valid)
    throw Error(Errc::InvalidInput, "outer colouring is not a dicolouring of d - s");
  const int c = inner.k;
  if (outer.k > 2 * c && dr.n() > 0)
    throw Error(Errc::InvalidInput, "outer colouring uses more than 2c colours");

  std::vector<int> colour(d.n(), 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    int x = s[i];
    bool in_closed = std::all_of(d.in(x).begin(), d.in(x).end(), [&](int w) { return in_s.test(w); });
    colour[x] = in_closed ? inner.colour[i] : inner.colour[i] + c;
  }
  for (std::size_t i = 0; i < rest.size(); ++i) colour[rest[i]] = outer.colour[i];
  Dicolouring res;
  res.colour = std::move(colour);
  res.k = std::max(2 * c, outer.k);
  return res;
}

}  // namespace dichroma
