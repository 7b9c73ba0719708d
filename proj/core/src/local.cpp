#include "dichroma/local.hpp"

#include <algorithm>
#include <set>

namespace dichroma {

CyclicOrder CyclicOrder::canonical(std::vector<int> order) {
  if (!order.empty()) {
    auto it = std::min_element(order.begin(), order.end());
    std::rotate(order.begin(), it, order.end());
  }
  return CyclicOrder{std::move(order)};
}

std::vector<int> CyclicOrder::positions() const {
  int n = 0;
  for (int v : order) n = std::max(n, v + 1);
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  return pos;
}

namespace {

bool valid_permutation(const Digraph& d, const CyclicOrder& c) {
  if (static_cast<int>(c.order.size()) != d.n()) return false;
  std::vector<char> seen(d.n(), 0);
  for (int v : c.order) {
    if (v < 0 || v >= d.n() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool check_order(const Digraph& d, const CyclicOrder& c, bool round) {
  if (!valid_permutation(d, c)) return false;
  const int n = d.n();
  auto pos = c.positions();
  for (auto [x, y] : d.arcs())
    for (int i = (pos[x] + 1) % n; i != pos[y]; i = (i + 1) % n) {
      int z = c.order[i];
      if (!d.has_arc(z, y)) return false;
      if (round && !d.has_arc(x, z)) return false;
    }
  return true;
}

bool all_adjacent(const Digraph& d, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!d.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_tournament_on(const Digraph& d, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (d.has_arc(s[i], s[j]) == d.has_arc(s[j], s[i])) return false;
  return true;
}

bool acyclic_on(const Digraph& d, const std::vector<int>& s) { return is_acyclic(induced_subdigraph(d, s)); }

void fail(LocalFlag& f, int v) {
  if (f.holds) {
    f.holds = false;
    f.witness = v;
  }
}

std::optional<int> first_digon_vertex(const Digraph& d) {
  for (int u = 0; u < d.n(); ++u)
    for (int v : d.out(u))
      if (d.has_arc(v, u)) return u;
  return std::nullopt;
}

bool locally_out_transitive(const Digraph& d) {
  for (int x = 0; x < d.n(); ++x)
    if (!is_tournament_on(d, d.out(x)) || !acyclic_on(d, d.out(x))) return false;
  return true;
}

std::vector<int> members_of(const std::vector<int>& base, const std::vector<int>& local) {
  std::vector<int> out;
  for (int i : local) out.push_back(base[i]);
  std::sort(out.begin(), out.end());
  return out;
}

// Inclusion-maximal members of a candidate family, deduplicated and sorted by least vertex.
VertexSetPartition maximal_sets(std::vector<std::vector<int>> cands) {
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  VertexSetPartition out;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cands.size() && maximal; ++j)
      if (i != j && cands[j].size() > cands[i].size() &&
          std::includes(cands[j].begin(), cands[j].end(), cands[i].begin(), cands[i].end()))
        maximal = false;
    if (maximal) out.push_back(cands[i]);
  }
  return out;
}

// Strong components of D[s], mapped back to vertices of d.
std::vector<std::vector<int>> strong_pieces(const Digraph& d, const std::vector<int>& s) {
  std::vector<std::vector<int>> out;
  if (s.empty()) return out;
  for (const auto& comp : strong_components(induced_subdigraph(d, s))) out.push_back(members_of(s, comp));
  return out;
}

HubPartition hubs_unchecked(const Digraph& d) {
  std::vector<std::vector<int>> cands;
  for (int x = 0; x < d.n(); ++x)
    for (auto& p : strong_pieces(d, d.in(x))) cands.push_back(std::move(p));
  for (int v = 0; v < d.n(); ++v) cands.push_back({v});
  HubPartition hp;
  hp.parts = maximal_sets(std::move(cands));
  try {
    validate_partition(d.n(), hp.parts);
  } catch (const Error&) {
    throw Error(Errc::Internal, "maximal hubs do not partition the vertex set");
  }
  hp.quotient = contract(d, hp.parts);
  auto io = inround_order(hp.quotient);
  if (!io.order) throw Error(Errc::Internal, "hub quotient is not in-round: " + io.refutation);
  hp.order = *io.order;
  return hp;
}

// Round order of a connected round oriented graph.
std::optional<CyclicOrder> round_order(const Digraph& q) {
  if (q.n() == 0) return CyclicOrder{};
  if (is_strong(q)) {
    auto io = inround_order(q);
    if (io.order && is_round_order(q, *io.order)) return io.order;
    return std::nullopt;
  }
  // Acyclic case: follow first out-neighbours from the least source.
  int start = -1;
  for (int v = 0; v < q.n() && start == -1; ++v)
    if (q.in_degree(v) == 0) start = v;
  if (start == -1) return std::nullopt;
  std::vector<int> order{start};
  std::vector<char> used(q.n(), 0);
  used[start] = 1;
  while (static_cast<int>(order.size()) < q.n()) {
    int cur = order.back(), next = -1;
    for (int y : q.out(cur)) {
      if (used[y]) continue;
      bool first = true;
      for (int z : q.in(y))
        if (z != cur && !used[z] && q.has_arc(cur, z)) first = false;
      if (first) {
        next = y;
        break;
      }
    }
    if (next == -1) return std::nullopt;
    used[next] = 1;
    order.push_back(next);
  }
  auto c = CyclicOrder::canonical(order);
  if (!is_round_order(q, c)) return std::nullopt;
  return c;
}

std::vector<int> solve_lot(const Digraph& g, const std::vector<int>& t);

std::vector<int> solve_strong(const Digraph& g, const std::vector<int>& t) {
  const int n = g.n();
  if (n == 1) return {1};
  auto hp = hubs_unchecked(g);
  const int q = hp.quotient.n();
  std::vector<int> part_of(n);
  for (int i = 0; i < q; ++i)
    for (int v : hp.parts[i]) part_of[v] = i;

  int h1 = part_of[0];
  if (!t.empty()) {
    std::vector<char> in_t(n, 0);
    for (int v : t) in_t[v] = 1;
    for (int s : t) {
      bool source = true;
      for (int z : g.in(s))
        if (in_t[z]) source = false;
      if (source) {
        h1 = part_of[s];
        break;
      }
    }
  }

  // Quotient colouring: [h1, y] colour 1 and ]y, h1[ colour 2, h1 y a longest arc.
  auto pos = hp.order.positions();
  auto dist = [&](int a, int b) { return (pos[b] - pos[a] + q) % q; };
  int y = -1;
  for (int z : hp.quotient.out(h1))
    if (y == -1 || dist(h1, z) > dist(h1, y)) y = z;
  std::vector<int> qcol(q, 2);
  for (int z = 0; z < q; ++z)
    if (dist(h1, z) <= dist(h1, y)) qcol[z] = 1;

  std::vector<int> colour(n, 0);
  for (int i = 0; i < q; ++i) {
    const auto& part = hp.parts[i];
    std::vector<int> local(n, -1);
    for (std::size_t j = 0; j < part.size(); ++j) local[part[j]] = static_cast<int>(j);
    std::vector<int> prescribed;
    if (i == h1) {
      for (int v : t)
        if (local[v] != -1) prescribed.push_back(local[v]);
    } else {
      for (int v : part)
        for (int z : g.in(v))
          if (local[z] == -1) {
            prescribed.push_back(local[v]);
            break;
          }
    }
    std::sort(prescribed.begin(), prescribed.end());
    auto sub = solve_lot(induced_subdigraph(g, part), prescribed);
    for (std::size_t j = 0; j < part.size(); ++j)
      colour[part[j]] = qcol[i] == 1 ? sub[j] : 3 - sub[j];
  }
  return colour;
}

std::vector<int> solve_lot(const Digraph& g, const std::vector<int>& t) {
  std::vector<int> colour(g.n(), 1);
  std::vector<char> in_t(g.n(), 0);
  for (int v : t) in_t[v] = 1;
  for (const auto& comp : strong_components(g)) {
    if (comp.size() == 1) continue;
    std::vector<int> sorted = comp;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> local_t;
    for (std::size_t j = 0; j < sorted.size(); ++j)
      if (in_t[sorted[j]]) local_t.push_back(static_cast<int>(j));
    auto sub = solve_strong(induced_subdigraph(g, sorted), local_t);
    for (std::size_t j = 0; j < sorted.size(); ++j) colour[sorted[j]] = sub[j];
  }
  return colour;
}

}  // namespace

bool is_inround_order(const Digraph& d, const CyclicOrder& c) { return check_order(d, c, false); }
bool is_round_order(const Digraph& d, const CyclicOrder& c) { return check_order(d, c, true); }

LocalClassReport check_local_class(const Digraph& d) {
  LocalClassReport r;
  auto digon = first_digon_vertex(d);
  if (digon) {
    fail(r.inround_condition, *digon);
    fail(r.round_condition, *digon);
  }
  for (int x = 0; x < d.n(); ++x) {
    const auto& out = d.out(x);
    const auto& in = d.in(x);
    bool out_semi = all_adjacent(d, out), in_semi = all_adjacent(d, in);
    bool out_tour = is_tournament_on(d, out), in_tour = is_tournament_on(d, in);
    bool out_acyc = acyclic_on(d, out), in_acyc = acyclic_on(d, in);
    if (!out_semi) fail(r.locally_out_semicomplete, x);
    if (!(out_tour && out_acyc)) fail(r.locally_out_transitive, x);
    if (!in_tour) fail(r.locally_in_tournament, x);
    if (!(out_semi && in_semi)) fail(r.locally_semicomplete, x);
    if (!(out_tour && in_acyc)) fail(r.inround_condition, x);
    if (!(out_tour && out_acyc && in_tour && in_acyc)) fail(r.round_condition, x);
  }
  return r;
}

InroundResult inround_order(const Digraph& d) {
  if (!d.is_oriented()) throw Error(Errc::NotOriented, "in-round order needs an oriented graph");
  if (d.n() == 0 || !is_strong(d)) throw Error(Errc::NotStrong, "in-round order needs a strong digraph");
  InroundResult res;
  const int n = d.n();
  if (n == 1) {
    res.order = CyclicOrder{{0}};
    return res;
  }
  for (int x = 0; x < n; ++x) {
    if (!is_tournament_on(d, d.out(x))) {
      res.refutation = "out-neighbourhood of " + std::to_string(x) + " is not a tournament";
      res.witness = x;
      return res;
    }
    if (!acyclic_on(d, d.in(x))) {
      res.refutation = "in-neighbourhood of " + std::to_string(x) + " contains a directed cycle";
      res.witness = x;
      return res;
    }
  }
  // f(x): least vertex of x- with no out-neighbour inside x-.
  std::vector<int> f(n, -1);
  for (int x = 0; x < n; ++x) {
    const auto& in = d.in(x);
    for (int y : in) {
      bool sink = true;
      for (int z : d.out(y))
        if (std::binary_search(in.begin(), in.end(), z)) {
          sink = false;
          break;
        }
      if (sink) {
        f[x] = y;
        break;
      }
    }
  }
  std::vector<int> seen_at(n, -1), walk;
  int v = 0;
  while (seen_at[v] == -1) {
    seen_at[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    v = f[v];
  }
  std::vector<int> cycle(walk.begin() + seen_at[v], walk.end());
  if (static_cast<int>(cycle.size()) != n) {
    res.refutation = "cycle of f is not Hamiltonian";
    return res;
  }
  std::reverse(cycle.begin(), cycle.end());
  auto c = CyclicOrder::canonical(cycle);
  if (!is_inround_order(d, c)) {
    res.refutation = "cycle of f violates the in-round condition";
    return res;
  }
  res.order = std::move(c);
  return res;
}

HubPartition hub_decomposition(const Digraph& d) {
  if (!d.is_oriented()) throw Error(Errc::PreconditionViolated, "hub decomposition needs an oriented graph");
  if (d.n() == 0 || !is_strong(d)) throw Error(Errc::PreconditionViolated, "hub decomposition needs a strong digraph");
  if (!locally_out_transitive(d))
    throw Error(Errc::PreconditionViolated, "hub decomposition needs a locally out-transitive digraph");
  return hubs_unchecked(d);
}

VertexSetPartition maximal_hubs_bruteforce(const Digraph& d) {
  const int n = d.n();
  if (n > 20) throw Error(Errc::SizeCapExceeded, "subset enumeration is limited to 20 vertices");
  std::vector<std::uint32_t> in_mask(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y : d.in(x)) in_mask[x] |= 1u << y;
  std::vector<std::vector<int>> hubs;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    bool dominated = false;
    for (int x = 0; x < n && !dominated; ++x)
      if (!(s >> x & 1) && (s & in_mask[x]) == s) dominated = true;
    if (!dominated) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) vs.push_back(v);
    if (is_strong(induced_subdigraph(d, vs))) hubs.push_back(vs);
  }
  return maximal_sets(std::move(hubs));
}

Dicolouring two_dicolour_lot(const Digraph& d, const std::vector<int>& t) {
  if (!d.is_oriented()) throw Error(Errc::PreconditionViolated, "needs an oriented graph");
  if (!locally_out_transitive(d)) throw Error(Errc::PreconditionViolated, "needs a locally out-transitive digraph");
  std::vector<int> ts = t;
  std::sort(ts.begin(), ts.end());
  if (std::adjacent_find(ts.begin(), ts.end()) != ts.end())
    throw Error(Errc::PreconditionViolated, "prescribed set has repeated vertices");
  for (int v : ts)
    if (v < 0 || v >= d.n()) throw Error(Errc::PreconditionViolated, "prescribed vertex out of range");
  if (!is_tournament_on(d, ts) || !acyclic_on(d, ts))
    throw Error(Errc::PreconditionViolated, "prescribed set does not induce a transitive tournament");
  auto colour = solve_lot(d, ts);
  auto result = Dicolouring::from(colour);
  if (!verify_dicolouring(d, result).valid) throw Error(Errc::Internal, "2-dicolouring produced a monochromatic cycle");
  return result;
}

const char* structure_case_name(StructureCase c) {
  switch (c) {
    case StructureCase::UniversalVertex: return "UniversalVertex";
    case StructureCase::RoundBlowup: return "RoundBlowup";
    case StructureCase::FourSetPartition: return "FourSetPartition";
  }
  return "?";
}

VertexSetPartition maximal_weak_hubs(const Digraph& d) {
  std::vector<std::vector<int>> cands;
  for (int z = 0; z < d.n(); ++z) {
    std::vector<int> only_in, only_out;
    std::set_difference(d.in(z).begin(), d.in(z).end(), d.out(z).begin(), d.out(z).end(),
                        std::back_inserter(only_in));
    std::set_difference(d.out(z).begin(), d.out(z).end(), d.in(z).begin(), d.in(z).end(),
                        std::back_inserter(only_out));
    for (auto& p : strong_pieces(d, only_in)) cands.push_back(std::move(p));
    for (auto& p : strong_pieces(d, only_out)) cands.push_back(std::move(p));
  }
  return maximal_sets(std::move(cands));
}

bool is_mixed(const Digraph& d, const std::vector<int>& x) {
  std::vector<char> in_x(d.n(), 0);
  for (int v : x) in_x[v] = 1;
  for (int z = 0; z < d.n(); ++z) {
    if (in_x[z]) continue;
    bool to = false, from = false;
    for (int y : d.out(z)) to = to || in_x[y];
    for (int y : d.in(z)) from = from || in_x[y];
    if (to && from) return true;
  }
  return false;
}

SemicompleteStructure semicomplete_structure(const Digraph& d) {
  const int n = d.n();
  if (n == 0 || !is_weakly_connected(d)) throw Error(Errc::PreconditionViolated, "needs a connected digraph");
  for (int x = 0; x < n; ++x)
    if (!all_adjacent(d, d.out(x)) || !all_adjacent(d, d.in(x)))
      throw Error(Errc::PreconditionViolated, "needs a locally semicomplete digraph");
  SemicompleteStructure s;
  std::vector<int> all;
  for (int v = 0; v < n; ++v) all.push_back(v);
  if (all_adjacent(d, all))
    for (int x = 0; x < n; ++x)
      if (d.out_degree(x) == n - 1 && d.in_degree(x) == n - 1) {
        s.kind = StructureCase::UniversalVertex;
        s.universal = x;
        return s;
      }

  auto hubs = maximal_weak_hubs(d);
  for (const auto& x : hubs) {
    if (!is_mixed(d, x)) continue;
    std::vector<char> in_x(n, 0);
    for (int v : x) in_x[v] = 1;
    s.kind = StructureCase::FourSetPartition;
    s.e = x;
    for (int u = 0; u < n; ++u) {
      if (in_x[u]) continue;
      bool to = false, from = false;
      for (int y : d.out(u)) to = to || in_x[y];
      for (int y : d.in(u)) from = from || in_x[y];
      if (to && from)
        s.g.push_back(u);
      else if (to)
        s.h.push_back(u);
      else if (from)
        s.f.push_back(u);
      else
        throw Error(Errc::Internal, "vertex with no neighbour in the mixed weak hub");
    }
    s.fh_nonempty_and_e_or_g = !s.f.empty() && !s.h.empty() && (!s.e.empty() || !s.g.empty());
    s.eg_nonempty_and_f_or_h = !s.e.empty() && !s.g.empty() && (!s.f.empty() || !s.h.empty());
    return s;
  }

  try {
    validate_partition(n, hubs);
  } catch (const Error&) {
    throw Error(Errc::Internal, "maximal weak hubs do not partition the vertex set");
  }
  auto order = round_order(contract(d, hubs));
  if (!order) throw Error(Errc::Internal, "weak hub quotient is not round");
  s.kind = StructureCase::RoundBlowup;
  s.parts = std::move(hubs);
  s.order = std::move(*order);
  return s;
}

FourSetCheck check_four_set(const Digraph& d, const std::vector<int>& e, const std::vector<int>& f,
                            const std::vector<int>& g, const std::vector<int>& h) {
  FourSetCheck c;
  auto dominates = [&](const std::vector<int>& a, const std::vector<int>& b, bool strict) {
    for (int x : a)
      for (int y : b) {
        if (!d.has_arc(x, y)) return false;
        if (strict && d.has_arc(y, x)) return false;
      }
    return true;
  };
  c.semicomplete_parts = all_adjacent(d, e) && all_adjacent(d, f) && all_adjacent(d, g) && all_adjacent(d, h);
  c.e_strictly_f = dominates(e, f, true);
  c.f_dominates_g = dominates(f, g, false);
  c.g_dominates_h = dominates(g, h, false);
  c.h_strictly_e = dominates(h, e, true);
  c.g_touches_e = true;
  for (int x : g) {
    bool out = false, in = false;
    for (int y : e) {
      out = out || d.has_arc(x, y);
      in = in || d.has_arc(y, x);
    }
    if (!out || !in) c.g_touches_e = false;
  }
  try {
    validate_partition(d.n(), {e, f, g, h});
    c.partition = true;
  } catch (const Error&) {
    // Empty parts are allowed; check the non-empty ones.
    VertexSetPartition nonempty;
    for (const auto* p : {&e, &f, &g, &h})
      if (!p->empty()) nonempty.push_back(*p);
    try {
      validate_partition(d.n(), nonempty);
      c.partition = true;
    } catch (const Error&) {
      c.partition = false;
    }
  }
  return c;
}

std::optional<int> find_2king(const Digraph& d) {
  const int n = d.n();
  if (n == 0) return std::nullopt;
  BitAdjacency adj(d);
  for (int v = 0; v < n; ++v) {
    VertexSet reach = adj.out[v];
    for (int u : d.out(v)) reach |= adj.out[u];
    reach.set(v);
    if (reach.count() == n) return v;
  }
  return std::nullopt;
}

ChWitness ch_witness(const Digraph& d, int k) {
  if (k < 2) throw Error(Errc::BadK, "k must be at least 2");
  if (d.n() == 0) throw Error(Errc::PreconditionViolated, "empty digraph");
  if (!d.is_oriented()) throw Error(Errc::PreconditionViolated, "needs an oriented graph");
  for (int x = 0; x < d.n(); ++x)
    if (!is_tournament_on(d, d.in(x))) throw Error(Errc::PreconditionViolated, "needs a locally in-tournament digraph");
  int g = digirth(d);
  if (g != 0 && g <= k)
    throw Error(Errc::PreconditionViolated, "contains a directed cycle of length " + std::to_string(g));
  ChWitness w;
  for (int v = 0; v < d.n(); ++v)
    if (w.vertex == -1 || d.out_degree(v) < w.out_degree) {
      w.vertex = v;
      w.out_degree = d.out_degree(v);
    }
  w.verdict = static_cast<long long>(w.out_degree) * k < d.n();
  return w;
}

std::optional<CyclicOrder> out_round_order(const Digraph& d) {
  if (d.n() == 0 || !d.is_oriented() || !is_strong(d)) return std::nullopt;
  auto io = inround_order(reverse(d));
  if (!io.order) return std::nullopt;
  std::vector<int> seq = io.order->order;
  std::reverse(seq.begin(), seq.end());
  auto c = CyclicOrder::canonical(seq);
  const int n = d.n();
  auto pos = c.positions();
  for (auto [x, y] : d.arcs())
    for (int i = (pos[x] + 1) % n; i != pos[y]; i = (i + 1) % n)
      if (!d.has_arc(x, c.order[i])) return std::nullopt;
  return c;
}

WeightedCheck weighted_out_round_check(const Digraph& d, const std::vector<long long>& w, int k) {
  if (static_cast<int>(w.size()) != d.n()) throw Error(Errc::InvalidInput, "one weight per vertex is required");
  for (long long x : w)
    if (x <= 0) throw Error(Errc::InvalidInput, "weights must be positive");
  if (k < 2) throw Error(Errc::BadK, "k must be at least 2");
  WeightedCheck r;
  r.order = out_round_order(d);
  r.out_round = r.order.has_value();
  if (!r.out_round) throw Error(Errc::PreconditionViolated, "needs a strong out-round oriented graph");
  if (digirth(d) == 3) throw Error(Errc::PreconditionViolated, "contains a directed triangle");
  long long total = 0;
  for (long long x : w) total += x;
  std::optional<int> weak;
  for (int u = 0; u < d.n(); ++u) {
    long long phi = 0;
    for (int v : d.out(u)) phi += w[v];
    long long lhs = k * phi, rhs = total - w[u];
    if (lhs < rhs) {
      r.vertex = u;
      r.strict = true;
      return r;
    }
    if (lhs <= rhs && !weak) weak = u;
  }
  r.vertex = weak;
  return r;
}

}  // namespace dichroma
