#include "dichroma/heroes.hpp"

#include <algorithm>
#include <functional>

namespace dichroma {

namespace {

void append_shifted(std::vector<Arc>& arcs, const Digraph& d, int offset) {
  for (auto [u, v] : d.arcs()) arcs.emplace_back(u + offset, v + offset);
}

void check_cap(long long size, int cap, const char* what) {
  if (size > cap)
    throw Error(Errc::SizeCapExceeded,
                std::string(what) + " would have " + std::to_string(size) + " vertices, cap is " + std::to_string(cap));
}

}  // namespace

Digraph compose_circular(const std::vector<Digraph>& parts) {
  const int l = static_cast<int>(parts.size());
  if (l < 3) throw Error(Errc::TooFewParts, "circular composition needs at least 3 parts");
  std::vector<int> offset(l + 1, 0);
  for (int i = 0; i < l; ++i) offset[i + 1] = offset[i] + parts[i].n();
  std::vector<Arc> arcs;
  for (int i = 0; i < l; ++i) {
    append_shifted(arcs, parts[i], offset[i]);
    int j = (i + 1) % l;
    for (int x = 0; x < parts[i].n(); ++x)
      for (int y = 0; y < parts[j].n(); ++y) arcs.emplace_back(offset[i] + x, offset[j] + y);
  }
  return Digraph::build(offset[l], arcs);
}

Digraph compose_domination(const Digraph& d1, const Digraph& d2) {
  std::vector<Arc> arcs;
  append_shifted(arcs, d1, 0);
  append_shifted(arcs, d2, d1.n());
  for (int x = 0; x < d1.n(); ++x)
    for (int y = 0; y < d2.n(); ++y) arcs.emplace_back(x, d1.n() + y);
  return Digraph::build(d1.n() + d2.n(), arcs);
}

Digraph substitute(const Digraph& g1, int u, const Digraph& h1) {
  if (u < 0 || u >= g1.n()) throw Error(Errc::BadVertex, "vertex " + std::to_string(u) + " not in digraph");
  if (h1.n() == 0) throw Error(Errc::InvalidInput, "substituted digraph is empty");
  const int n = g1.n() + h1.n() - 1;
  auto image = [&](int y) { return y == 0 ? u : g1.n() + y - 1; };
  std::vector<Arc> arcs;
  for (auto [a, b] : g1.arcs()) {
    if (a == u) {
      for (int y = 0; y < h1.n(); ++y) arcs.emplace_back(image(y), b);
    } else if (b == u) {
      for (int y = 0; y < h1.n(); ++y) arcs.emplace_back(a, image(y));
    } else {
      arcs.emplace_back(a, b);
    }
  }
  for (auto [a, b] : h1.arcs()) arcs.emplace_back(image(a), image(b));
  return Digraph::build(n, arcs);
}

Digraph line_digraph(const Digraph& d) {
  auto as = d.arcs();
  std::vector<std::vector<int>> starting(d.n());
  for (std::size_t i = 0; i < as.size(); ++i) starting[as[i].first].push_back(static_cast<int>(i));
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < as.size(); ++i)
    for (int j : starting[as[i].second]) arcs.emplace_back(static_cast<int>(i), j);
  return Digraph::build(static_cast<int>(as.size()), arcs);
}

GeneratedDigraph gen_fk(int l, int k, int size_cap) {
  if (l < 3 || k < 1) throw Error(Errc::BadParameters, "gen_fk needs l >= 3 and k >= 1");
  long long size = 1;
  for (int i = 1; i < k; ++i) {
    size = 1 + (l - 1) * size;
    check_cap(size, size_cap, "F_k");
  }
  Digraph f = Digraph::empty(1);
  for (int i = 1; i < k; ++i) {
    std::vector<Digraph> parts{Digraph::empty(1)};
    for (int j = 1; j < l; ++j) parts.push_back(f);
    f = compose_circular(parts);
  }
  GeneratedDigraph g;
  g.digraph = std::move(f);
  g.family = "fk";
  g.params = {{"k", k}, {"l", l}};
  g.expected_chi = k;
  return g;
}

std::vector<std::array<int, 3>> ds_triples(int s) {
  std::vector<std::array<int, 3>> t;
  for (int i = 1; i <= s; ++i)
    for (int j = i + 1; j <= s; ++j)
      for (int k = j + 1; k <= s; ++k) t.push_back({i, j, k});
  return t;
}

GeneratedDigraph gen_ds(int s, int size_cap) {
  if (s < 5) throw Error(Errc::BadParameters, "gen_ds needs s >= 5");
  long long size = static_cast<long long>(s) * (s - 1) * (s - 2) / 6;
  check_cap(size, size_cap, "D_s");
  auto t = ds_triples(s);
  const int n = static_cast<int>(t.size());
  std::vector<Arc> arcs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (t[a][1] == t[b][1]) continue;
      bool forward = t[a][1] == t[b][0] && t[a][2] == t[b][1];
      bool backward = t[b][1] == t[a][0] && t[b][2] == t[a][1];
      if (forward || (!backward && t[a][1] > t[b][1])) arcs.emplace_back(a, b);
    }
  GeneratedDigraph g;
  g.digraph = Digraph::build(n, arcs);
  g.family = "ds";
  g.params = {{"s", s}};
  g.forbidden_patterns = {"C3(1,2,C3)", "C3(1,2,3)"};
  return g;
}

GeneratedDigraph gen_chordal_c122(int k, int size_cap) {
  if (k < 1) throw Error(Errc::BadParameters, "gen_chordal_c122 needs k >= 1");
  long long size = 1;
  for (int i = 1; i < k; ++i) {
    size = (i + 1) + static_cast<long long>(i) * (i + 1) / 2 * size;
    check_cap(size, size_cap, "chordal C3(1,2,2)-free digraph");
  }
  Digraph g = Digraph::empty(1);
  for (int i = 1; i < k; ++i) {
    // T = TT_{i+1} on 0..i, then one copy of g per arc of T.
    const int t = i + 1;
    std::vector<Arc> arcs;
    int next = t;
    for (int u = 0; u < t; ++u)
      for (int v = u + 1; v < t; ++v) {
        arcs.emplace_back(u, v);
        append_shifted(arcs, g, next);
        for (int y = next; y < next + g.n(); ++y) {
          arcs.emplace_back(v, y);
          arcs.emplace_back(y, u);
        }
        next += g.n();
      }
    g = Digraph::build(next, arcs);
  }
  GeneratedDigraph out;
  out.digraph = std::move(g);
  out.family = "chordal-c122";
  out.params = {{"k", k}};
  out.expected_chi = k;
  out.forbidden_patterns = {"C3(1,2,2)"};
  return out;
}

std::vector<std::vector<int>> transitive_subtournaments(const Digraph& d, int order) {
  if (!d.is_oriented()) throw Error(Errc::NotOriented, "transitive subtournaments need an oriented graph");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> grow = [&](int from) {
    if (!cur.empty() && (order == 0 || static_cast<int>(cur.size()) == order)) out.push_back(cur);
    if (order != 0 && static_cast<int>(cur.size()) == order) return;
    const std::vector<int> cand = cur.empty() ? std::vector<int>{} : d.neighbours(cur.front());
    auto consider = [&](int v) {
      if (v < from) return;
      for (int x : cur)
        if (!d.adjacent(x, v)) return;
      // A tournament is transitive iff it has no directed triangle.
      for (std::size_t i = 0; i < cur.size(); ++i)
        for (std::size_t j = 0; j < cur.size(); ++j)
          if (i != j && d.has_arc(cur[i], cur[j]) && d.has_arc(cur[j], v) && d.has_arc(v, cur[i])) return;
      cur.push_back(v);
      grow(v + 1);
      cur.pop_back();
    };
    if (cur.empty())
      for (int v = from; v < d.n(); ++v) consider(v);
    else
      for (int v : cand) consider(v);
  };
  grow(0);
  std::sort(out.begin(), out.end());
  return out;
}

GeneratedDigraph gen_chordal_hero_free(int k, int size_cap) {
  if (k < 1) throw Error(Errc::BadParameters, "gen_chordal_hero_free needs k >= 1");
  Digraph g = Digraph::empty(1);
  for (int j = 1; j < k; ++j) {
    // F = F(g): rainbow-forcing extension with chi(F) = j.
    Digraph f = g;
    for (int i = 1; i < j; ++i) {
      auto xs = transitive_subtournaments(f, i);
      check_cap(f.n() + static_cast<long long>(xs.size()) * g.n(), size_cap, "F(G)");
      std::vector<Arc> arcs = f.arcs();
      int next = f.n();
      for (const auto& x : xs) {
        append_shifted(arcs, g, next);
        for (int a : x)
          for (int y = next; y < next + g.n(); ++y) arcs.emplace_back(a, y);
        next += g.n();
      }
      f = Digraph::build(next, arcs);
    }
    auto ts = transitive_subtournaments(f);
    const long long nt = static_cast<long long>(ts.size());
    check_cap(f.n() + nt * f.n() + nt * nt, size_cap, "chordal (C3=>K1)-free digraph");
    std::vector<Arc> arcs = f.arcs();
    int next = f.n();
    std::vector<int> copy_at;
    for (const auto& t : ts) {
      copy_at.push_back(next);
      append_shifted(arcs, f, next);
      for (int a : t)
        for (int y = next; y < next + f.n(); ++y) arcs.emplace_back(a, y);
      next += f.n();
    }
    for (std::size_t ti = 0; ti < ts.size(); ++ti)
      for (const auto& tp : ts) {
        const int x = next++;
        for (int b : tp) arcs.emplace_back(copy_at[ti] + b, x);
        for (int a : ts[ti]) arcs.emplace_back(x, a);
      }
    g = Digraph::build(next, arcs);
  }
  GeneratedDigraph out;
  out.digraph = std::move(g);
  out.family = "chordal-hero-free";
  out.params = {{"k", k}};
  out.expected_chi = k;
  out.forbidden_patterns = {"C3=>K1"};
  return out;
}

std::optional<PatternEmbedding> contains_induced(const Digraph& host, const Digraph& pattern, Budget* budget) {
  const int p = pattern.n();
  if (p == 0) return PatternEmbedding{};
  if (p > host.n()) return std::nullopt;
  // Earliest pattern neighbour of each vertex, used to restrict candidates.
  std::vector<int> anchor(p, -1);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < i && anchor[i] == -1; ++j)
      if (pattern.adjacent(i, j)) anchor[i] = j;
  std::vector<int> map(p, -1);
  std::vector<char> used(host.n(), 0);
  std::vector<int> all(host.n());
  for (int v = 0; v < host.n(); ++v) all[v] = v;
  std::vector<std::vector<int>> nbr_cache(host.n());
  auto nbrs = [&](int v) -> const std::vector<int>& {
    if (nbr_cache[v].empty()) nbr_cache[v] = host.neighbours(v);
    return nbr_cache[v];
  };
  std::function<bool(int)> place = [&](int i) {
    if (i == p) return true;
    const std::vector<int>& cand = anchor[i] == -1 ? all : nbrs(map[anchor[i]]);
    for (int h : cand) {
      if (used[h]) continue;
      if (budget && !budget->tick())
        throw BudgetExceededError("induced subdigraph search budget exhausted", 0, std::nullopt);
      if (host.out_degree(h) < pattern.out_degree(i) || host.in_degree(h) < pattern.in_degree(i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = host.has_arc(map[j], h) == pattern.has_arc(j, i) && host.has_arc(h, map[j]) == pattern.has_arc(i, j);
      if (!ok) continue;
      map[i] = h;
      used[h] = 1;
      if (place(i + 1)) return true;
      used[h] = 0;
    }
    map[i] = -1;
    return false;
  };
  if (!place(0)) return std::nullopt;
  return PatternEmbedding{map};
}

bool verify_embedding(const Digraph& host, const Digraph& pattern, const PatternEmbedding& e) {
  if (static_cast<int>(e.map.size()) != pattern.n()) return false;
  std::vector<int> seen = e.map;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (int h : e.map)
    if (h < 0 || h >= host.n()) return false;
  for (int i = 0; i < pattern.n(); ++i)
    for (int j = 0; j < pattern.n(); ++j)
      if (i != j && host.has_arc(e.map[i], e.map[j]) != pattern.has_arc(i, j)) return false;
  return true;
}

Digraph named_pattern(const std::string& name) {
  auto tt = [](int n) { return transitive_tournament(n); };
  if (name == "C3") return directed_cycle(3);
  if (name == "C3(1,2,2)") return compose_circular({tt(1), tt(2), tt(2)});
  if (name == "C3(1,2,3)") return compose_circular({tt(1), tt(2), tt(3)});
  if (name == "C3(1,2,C3)") return compose_circular({tt(1), tt(2), directed_cycle(3)});
  if (name == "C3=>K1") return compose_domination(directed_cycle(3), tt(1));
  if (name == "K1=>C3") return compose_domination(tt(1), directed_cycle(3));
  if (name.size() > 2 && name.rfind("TT", 0) == 0) {
    try {
      std::size_t pos = 0;
      int n = std::stoi(name.substr(2), &pos);
      if (pos == name.size() - 2 && n >= 1 && n <= 16) return tt(n);
    } catch (const std::exception&) {
    }
  }
  throw Error(Errc::InvalidInput, "unknown pattern '" + name + "'");
}

GeneratedDigraph generate(const std::string& family, const std::map<std::string, int>& params) {
  auto get = [&](const char* key) {
    auto it = params.find(key);
    if (it == params.end()) throw Error(Errc::InvalidInput, "generator '" + family + "' needs --" + key);
    return it->second;
  };
  auto cap = [&]() {
    auto it = params.find("cap");
    return it == params.end() ? kDefaultSizeCap : it->second;
  };
  if (family == "fk") return gen_fk(get("l"), get("k"), cap());
  if (family == "ds") return gen_ds(get("s"), cap());
  if (family == "chordal-c122") return gen_chordal_c122(get("k"), cap());
  if (family == "chordal-hero-free") return gen_chordal_hero_free(get("k"), cap());
  throw Error(Errc::InvalidInput, "unknown generator family '" + family + "'");
}

}  // namespace dichroma
