#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "doctest.h"
#include "dichroma/dicolour.hpp"
#include "dichroma/heroes.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dichroma;

namespace {

bool is_tournament(const Digraph& d) {
  for (int u = 0; u < d.n(); ++u)
    for (int v = u + 1; v < d.n(); ++v)
      if (d.has_arc(u, v) == d.has_arc(v, u)) return false;
  return true;
}

// Lexicographically least injection preserving adjacency exactly, by plain enumeration.
std::optional<std::vector<int>> first_embedding(const Digraph& host, const Digraph& pattern) {
  const int k = pattern.n(), n = host.n();
  std::vector<int> map(k);
  std::vector<char> used(n, 0);
  std::optional<std::vector<int>> found;
  std::function<void(int)> go = [&](int i) {
    if (found) return;
    if (i == k) {
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          if (a != b && pattern.has_arc(a, b) != host.has_arc(map[a], map[b])) return;
      found = map;
      return;
    }
    for (int x = 0; x < n && !found; ++x) {
      if (used[x]) continue;
      used[x] = 1;
      map[i] = x;
      go(i + 1);
      used[x] = 0;
    }
  };
  go(0);
  return found;
}

// Chromatic number of the underlying undirected graph by backtracking.
int undirected_chromatic(const Digraph& d) {
  const int n = d.n();
  std::vector<int> col(n, 0);
  std::function<bool(int, int)> go = [&](int i, int k) {
    if (i == n) return true;
    for (int c = 1; c <= k; ++c) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = col[j] != c || !(d.has_arc(i, j) || d.has_arc(j, i));
      if (!ok) continue;
      col[i] = c;
      if (go(i + 1, k)) return true;
    }
    return false;
  };
  for (int k = 0;; ++k)
    if (go(0, k)) return k;
}

int chi_oracle(const Digraph& d) {
  if (d.n() <= 16) return oracle::chi_partition(d);
  return oracle::chi_backtrack(d);
}

}  // namespace

TEST_CASE("circular composition") {
  Digraph k1 = Digraph::empty(1);
  Digraph c3 = compose_circular({k1, k1, k1});
  CHECK(c3.arcs() == directed_cycle(3).arcs());

  Digraph t122 = compose_circular({k1, transitive_tournament(2), transitive_tournament(2)});
  CHECK(t122.n() == 5);
  CHECK(is_tournament(t122));
  CHECK(oracle::chi_partition(t122) == 2);
  CHECK(t122.arcs() == named_pattern("C3(1,2,2)").arcs());

  Digraph t112 = compose_circular({k1, k1, transitive_tournament(2)});
  CHECK(t112.n() == 4);
  CHECK(is_tournament(t112));

  try {
    compose_circular({k1, k1});
    FAIL("expected TooFewParts");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooFewParts);
  }
}

TEST_CASE("domination composition") {
  Digraph k1 = Digraph::empty(1);
  Digraph hero = compose_domination(k1, directed_cycle(3));
  CHECK(hero.n() == 4);
  CHECK(is_tournament(hero));
  CHECK(hero.out_degree(0) == 3);
  CHECK(hero.arcs() == named_pattern("K1=>C3").arcs());
  CHECK(compose_domination(k1, k1).arcs() == transitive_tournament(2).arcs());

  gen::Rng rng(61);
  for (int i = 0; i < 100; ++i) {
    Digraph a = transitive_tournament(gen::uniform(rng, 1, 5));
    Digraph b = gen::random_oriented(rng, gen::uniform(rng, 1, 5), 0.5);
    if (!is_acyclic(b)) continue;
    Digraph c = compose_domination(a, b);
    CHECK(oracle::chi_partition(c) == 1);
    CHECK(c.m() == a.m() + b.m() + a.n() * b.n());
  }
}

TEST_CASE("substitution") {
  Digraph s = substitute(directed_cycle(3), 0, transitive_tournament(2));
  CHECK(s.n() == 4);
  CHECK(exact_dichromatic(s).chi == 2);
  CHECK(oracle::chi_partition(s) == 2);

  Digraph c5 = directed_cycle(5);
  CHECK(substitute(c5, 2, Digraph::empty(1)).arcs() == c5.arcs());

  Digraph iso = substitute(Digraph::empty(2), 0, directed_cycle(3));
  CHECK(iso.n() == 4);
  CHECK(iso.m() == 3);
  CHECK(weak_components(iso).size() == 2);

  // Every former neighbour relation of u is replicated toward every vertex of h1.
  gen::Rng rng(67);
  for (int i = 0; i < 100; ++i) {
    Digraph g = gen::random_digraph(rng, gen::uniform(rng, 2, 6), 0.4);
    Digraph h = gen::random_digraph(rng, gen::uniform(rng, 1, 4), 0.4);
    int u = gen::uniform(rng, 0, g.n() - 1);
    Digraph r = substitute(g, u, h);
    CHECK(r.n() == g.n() + h.n() - 1);
    int around = 0;
    for (int v = 0; v < g.n(); ++v)
      if (v != u) around += g.has_arc(u, v) + g.has_arc(v, u);
    CHECK(r.m() == g.m() - around + around * h.n() + h.m());
  }

  CHECK_THROWS_AS(substitute(directed_cycle(3), 3, Digraph::empty(1)), Error);
}

TEST_CASE("F_k sizes and dichromatic number") {
  CHECK(gen_fk(3, 2).digraph.arcs() == directed_cycle(3).arcs());
  CHECK(gen_fk(4, 2).digraph.arcs() == directed_cycle(4).arcs());
  auto f33 = gen_fk(3, 3);
  CHECK(f33.digraph.n() == 7);
  CHECK(f33.expected_chi == 3);
  for (int l = 3; l <= 23; ++l)
    for (int k = 1; k <= 6; ++k) {
      long long size = 1;
      for (int i = 1; i < k; ++i) size = 1 + (l - 1) * size;
      if (size > 22) break;
      Digraph f = gen_fk(l, k).digraph;
      CHECK(f.n() == size);
      CHECK(exact_dichromatic(f).chi == k);
      CHECK(chi_oracle(f) == k);
    }
  try {
    gen_fk(3, 20);
    FAIL("expected SizeCapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SizeCapExceeded);
  }
}

TEST_CASE("the complete multipartite D_s") {
  auto d5 = gen_ds(5);
  CHECK(d5.digraph.n() == 10);
  CHECK(d5.digraph.is_oriented());
  auto t = ds_triples(5);
  std::map<int, int> part;
  for (auto tr : t) ++part[tr[1]];
  CHECK(part == std::map<int, int>{{2, 3}, {3, 4}, {4, 3}});

  for (int s = 5; s <= 7; ++s) {
    Digraph d = gen_ds(s).digraph;
    auto tr = ds_triples(s);
    REQUIRE(static_cast<int>(tr.size()) == d.n());
    for (int x = 0; x < d.n(); ++x)
      for (int y = 0; y < d.n(); ++y) {
        if (x == y) continue;
        bool expect;
        if (tr[x][1] == tr[y][1])
          expect = false;
        else if (tr[x][1] == tr[y][0] && tr[x][2] == tr[y][1])
          expect = true;  // forward step along the triples
        else if (tr[y][1] == tr[x][0] && tr[y][2] == tr[x][1])
          expect = false;
        else
          expect = tr[x][1] > tr[y][1];  // backward between parts
        CHECK(d.has_arc(x, y) == expect);
      }
  }

  for (const char* name : {"C3(1,2,C3)", "C3(1,2,3)"}) {
    Digraph p = named_pattern(name);
    CHECK_FALSE(contains_induced(d5.digraph, p).has_value());
    CHECK_FALSE(oracle::contains_induced(d5.digraph, p));
  }

  // Every subtournament has an ordering whose backward arcs form disjoint dipaths.
  const Digraph& d = d5.digraph;
  for (std::uint32_t s = 1; s < (1u << d.n()); ++s) {
    std::vector<int> vs;
    for (int v = 0; v < d.n(); ++v)
      if (s >> v & 1) vs.push_back(v);
    Digraph sub = induced_subdigraph(d, vs);
    if (!is_tournament(sub)) continue;
    std::vector<int> order(sub.n());
    std::iota(order.begin(), order.end(), 0);
    bool ok = false;
    do {
      std::vector<int> pos(sub.n()), indeg(sub.n(), 0), outdeg(sub.n(), 0);
      for (int i = 0; i < sub.n(); ++i) pos[order[i]] = i;
      std::vector<Arc> back;
      for (auto [u, v] : sub.arcs())
        if (pos[u] > pos[v]) {
          ++outdeg[u];
          ++indeg[v];
          back.push_back({u, v});
        }
      bool paths = std::all_of(indeg.begin(), indeg.end(), [](int x) { return x <= 1; }) &&
                   std::all_of(outdeg.begin(), outdeg.end(), [](int x) { return x <= 1; }) &&
                   is_acyclic(Digraph::build(sub.n(), back));
      ok = paths;
    } while (!ok && std::next_permutation(order.begin(), order.end()));
    CHECK(ok);
  }
}

TEST_CASE("chordal C3(1,2,2)-free family") {
  Digraph g2 = gen_chordal_c122(2).digraph;
  CHECK(g2.n() == 3);
  CHECK(g2.m() == 3);
  CHECK(is_strong(g2));

  auto g3 = gen_chordal_c122(3);
  CHECK(g3.digraph.n() == 12);
  CHECK(exact_dichromatic(g3.digraph).chi == 3);
  CHECK(oracle::chi_partition(g3.digraph) == 3);
  Digraph p = named_pattern("C3(1,2,2)");
  CHECK_FALSE(contains_induced(g3.digraph, p).has_value());
  CHECK_FALSE(oracle::contains_induced(g3.digraph, p));
  CHECK(exact_dichromatic(gen_chordal_c122(1).digraph).chi == 1);
}

TEST_CASE("chordal (C3=>K1)-free family") {
  CHECK(gen_chordal_hero_free(1).digraph.n() == 1);
  Digraph g2 = gen_chordal_hero_free(2).digraph;
  CHECK(g2.n() == 3);
  CHECK(oracle::chi_partition(g2) == 2);
  CHECK_FALSE(oracle::contains_induced(g2, named_pattern("C3=>K1")));

  auto g3 = gen_chordal_hero_free(3);
  CHECK(g3.digraph.is_oriented());
  CHECK(g3.expected_chi == 3);
  CHECK_FALSE(contains_induced(g3.digraph, named_pattern("C3=>K1")).has_value());
  CHECK(find_k_dicolouring(g3.digraph, 3).has_value());
  try {
    gen_chordal_hero_free(4);
    FAIL("expected SizeCapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SizeCapExceeded);
  }
}

TEST_CASE("induced pattern search") {
  auto tt = contains_induced(transitive_tournament(5), transitive_tournament(3));
  REQUIRE(tt.has_value());
  CHECK(verify_embedding(transitive_tournament(5), transitive_tournament(3), *tt));
  CHECK_FALSE(contains_induced(transitive_tournament(5), directed_cycle(3)).has_value());

  gen::Rng rng(71);
  for (int i = 0; i < 400; ++i) {
    Digraph host = gen::random_digraph(rng, gen::uniform(rng, 1, 8), 0.4);
    Digraph pat = gen::random_digraph(rng, gen::uniform(rng, 1, 4), 0.4);
    auto got = contains_induced(host, pat);
    auto expect = first_embedding(host, pat);
    CHECK(got.has_value() == expect.has_value());
    CHECK(got.has_value() == oracle::contains_induced(host, pat));
    if (got && expect) {
      CHECK(got->map == *expect);
      CHECK(verify_embedding(host, pat, *got));
    }
  }
}

TEST_CASE("transitive subtournaments") {
  gen::Rng rng(73);
  for (int i = 0; i < 100; ++i) {
    Digraph d = gen::random_oriented(rng, gen::uniform(rng, 1, 8), 0.6);
    auto sets = transitive_subtournaments(d, 3);
    int count = 0;
    for (std::uint32_t s = 0; s < (1u << d.n()); ++s) {
      if (__builtin_popcount(s) != 3) continue;
      std::vector<int> vs;
      for (int v = 0; v < d.n(); ++v)
        if (s >> v & 1) vs.push_back(v);
      Digraph sub = induced_subdigraph(d, vs);
      if (is_tournament(sub) && is_acyclic(sub)) {
        ++count;
        CHECK(std::find(sets.begin(), sets.end(), vs) != sets.end());
      }
    }
    CHECK(static_cast<int>(sets.size()) == count);
  }
}

TEST_CASE("line digraph of a transitive tournament") {
  Digraph l = line_digraph(directed_cycle(4));
  CHECK(l.n() == 4);
  CHECK(l.arcs() == directed_cycle(4).arcs());
  for (int s = 2; s <= 8; ++s) {
    Digraph tt = transitive_tournament(s);
    Digraph line = line_digraph(tt);
    CHECK(line.n() == s * (s - 1) / 2);
    int chi = undirected_chromatic(line);
    CHECK(std::pow(2.0, chi) >= s);
  }
}

TEST_CASE("generators by name") {
  CHECK(generate("fk", {{"l", 3}, {"k", 3}}).digraph.n() == 7);
  CHECK(generate("ds", {{"s", 5}}).digraph.n() == 10);
  CHECK(generate("chordal-c122", {{"k", 3}}).digraph.n() == 12);
  CHECK_THROWS_AS(generate("nope", {}), Error);
  CHECK_THROWS_AS(generate("fk", {{"l", 3}}), Error);
  CHECK_THROWS_AS(named_pattern("C9(1)"), Error);
}
