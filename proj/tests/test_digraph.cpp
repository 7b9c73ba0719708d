#include <algorithm>
#include <set>

#include "doctest.h"
#include "dichroma/digraph.hpp"
#include "dichroma/extremal.hpp"
#include "dichroma/heroes.hpp"
#include "dichroma/multigraph.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dichroma;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::Internal;
}

}  // namespace

TEST_CASE("build validates arcs") {
  Digraph c3 = Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(c3.n() == 3);
  CHECK(c3.m() == 3);
  CHECK(c3.is_oriented());

  Digraph digon = Digraph::build(2, {{0, 1}, {1, 0}});
  CHECK_FALSE(digon.is_oriented());
  CHECK(digon.has_digon(0, 1));

  CHECK(code_of([] { Digraph::build(1, {{0, 0}}); }) == Errc::LoopArc);
  CHECK(code_of([] { Digraph::build(2, {{0, 1}, {0, 1}}); }) == Errc::DuplicateArc);
  CHECK(code_of([] { Digraph::build(2, {{0, 2}}); }) == Errc::IndexOutOfRange);
}

TEST_CASE("degree parameters") {
  Digraph d = Digraph::build(3, {{0, 1}, {0, 2}, {1, 2}, {2, 0}});
  CHECK(d.out_degree(0) == 2);
  CHECK(d.in_degree(0) == 1);
  CHECK(d.d_min(0) == 1);
  CHECK(d.d_max(0) == 2);
  CHECK(d.delta_max() == 2);
  CHECK(d.delta_min() == 1);
}

TEST_CASE("strong components") {
  auto c3 = strong_components(directed_cycle(3));
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].size() == 3);

  auto tt = strong_components(transitive_tournament(3));
  REQUIRE(tt.size() == 3);
  Digraph t3 = transitive_tournament(3);
  // Topological: every arc goes from an earlier component to a later one.
  std::vector<int> pos(3);
  for (int i = 0; i < 3; ++i) pos[tt[i][0]] = i;
  for (auto [u, v] : t3.arcs()) CHECK(pos[u] < pos[v]);

  CHECK(strong_components(gen_fk(3, 2).digraph).size() == 1);
}

TEST_CASE("strong components agree with reachability, exhaustive n <= 4 and sampled n <= 6") {
  auto check = [](const Digraph& d) {
    auto r = oracle::reachability(d);
    auto comps = strong_components(d);
    std::vector<int> id(d.n(), -1);
    for (int i = 0; i < static_cast<int>(comps.size()); ++i)
      for (int v : comps[i]) id[v] = i;
    for (int u = 0; u < d.n(); ++u)
      for (int v = 0; v < d.n(); ++v) {
        CHECK((id[u] == id[v]) == (r[u][v] && r[v][u]));
        if (r[u][v]) CHECK(id[u] <= id[v]);
      }
  };
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t mask = 0; mask < (1ull << (n * (n - 1))); ++mask) check(gen::from_mask(n, mask));
  gen::Rng rng(11);
  for (int i = 0; i < 300; ++i) check(gen::random_digraph(rng, gen::uniform(rng, 5, 6), 0.3));
}

TEST_CASE("blocks") {
  Digraph bowtie = Digraph::build(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  auto b = blocks(bowtie);
  REQUIRE(b.size() == 2);
  CHECK(b[0].size() == 3);
  CHECK(b[1].size() == 3);
  CHECK(cut_vertices(bowtie) == std::vector<int>{0});

  CHECK(blocks(symmetric_complete(4)).size() == 1);

  Digraph k4 = symmetric_complete(4);
  Digraph join = directed_hajos_join(k4, {0, 1}, k4, {0, 1});
  Digraph without = Digraph::build(join.n(), [&] {
    auto arcs = join.arcs();
    // The joining arc uw is the only arc from vertex 0 into the second part.
    arcs.erase(std::find_if(arcs.begin(), arcs.end(), [](Arc a) { return a.first == 0 && a.second >= 4; }));
    return arcs;
  }());
  auto jb = blocks(without);
  REQUIRE(jb.size() == 2);
  std::vector<int> shared;
  std::set_intersection(jb[0].begin(), jb[0].end(), jb[1].begin(), jb[1].end(), std::back_inserter(shared));
  CHECK(shared == std::vector<int>{1});
  // Brute-force cut vertices agree.
  std::vector<int> brute;
  for (int v = 0; v < without.n(); ++v)
    if (!oracle::connected_without(without, v)) brute.push_back(v);
  CHECK(cut_vertices(without) == brute);
}

TEST_CASE("blocks cover every edge once and share at most one vertex") {
  gen::Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Digraph d = gen::random_digraph(rng, gen::uniform(rng, 2, 8), 0.2);
    auto bs = blocks(d);
    for (auto [u, v] : d.arcs()) {
      int covering = 0;
      for (const auto& b : bs)
        covering += std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v);
      CHECK(covering == 1);
    }
    for (std::size_t i = 0; i < bs.size(); ++i)
      for (std::size_t j = i + 1; j < bs.size(); ++j) {
        std::vector<int> shared;
        std::set_intersection(bs[i].begin(), bs[i].end(), bs[j].begin(), bs[j].end(), std::back_inserter(shared));
        CHECK(shared.size() <= 1);
      }
    CHECK(is_biconnected(d) == oracle::biconnected(d));
  }
}

TEST_CASE("contract") {
  Digraph q = contract(directed_cycle(4), {{0, 1}, {2}, {3}});
  CHECK(q.n() == 3);
  CHECK(q.m() == 3);
  CHECK(is_strong(q));
  CHECK(q.is_oriented());

  Digraph single = contract(Digraph::build(2, {{0, 1}, {1, 0}}), {{0, 1}});
  CHECK(single.n() == 1);
  CHECK(single.m() == 0);

  CHECK_THROWS_AS(contract(directed_cycle(3), {{0, 1}}), Error);

  gen::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    Digraph d = gen::random_digraph(rng, 6, 0.3);
    VertexSetPartition singletons;
    for (int v = 0; v < 6; ++v) singletons.push_back({v});
    Digraph c = contract(d, singletons);
    CHECK(c.arcs() == d.arcs());
  }
}

TEST_CASE("contracting the source side of a minimum dicut in a 3-extremal digraph") {
  Digraph k4 = symmetric_complete(4);
  Digraph d = directed_hajos_join(k4, {0, 1}, k4, {0, 1});
  auto lc = local_arc_connectivity(d, 0, 5);
  CHECK(lc.value == oracle::local_connectivity(d, 0, 5));
  std::vector<int> rest;
  for (int v = 0; v < d.n(); ++v)
    if (!std::binary_search(lc.source_side.begin(), lc.source_side.end(), v)) rest.push_back({v});
  VertexSetPartition parts{lc.source_side};
  for (int v : rest) parts.push_back({v});
  Digraph q = contract(d, parts);
  CHECK(q.out_degree(0) == 3);
}

TEST_CASE("euler tour") {
  auto t = euler_tour(complete_graph(3));
  CHECK(t.exists);
  CHECK(t.edges.size() == 3);

  auto p = euler_tour(Multigraph::build(3, {{0, 1}, {1, 2}}));
  CHECK_FALSE(p.exists);
  REQUIRE(p.odd_vertex.has_value());
  CHECK((*p.odd_vertex == 0 || *p.odd_vertex == 2));

  Multigraph sh = shannon_multigraph(4);
  auto s = euler_tour(sh);
  REQUIRE(s.exists);
  CHECK(s.edges.size() == 6);
  std::vector<int> used = s.edges;
  std::sort(used.begin(), used.end());
  for (int e = 0; e < 6; ++e) CHECK(used[e] == e);
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    auto [u, v] = sh.edge(s.edges[i]);
    int from = s.vertices[i], to = s.vertices[i + 1];
    CHECK(((u == from && v == to) || (v == from && u == to)));
  }
  CHECK(s.vertices.front() == s.vertices.back());
}

TEST_CASE("euler tour exists exactly on connected even multigraphs, exhaustive small") {
  // All multisets of at most 8 edges over the 10 pairs of 5 vertices.
  std::vector<Edge> pairs;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) pairs.emplace_back(u, v);
  std::function<void(int, std::vector<Edge>&)> rec = [&](int from, std::vector<Edge>& es) {
    Multigraph g = Multigraph::build(5, es);
    bool even = true;
    for (int v = 0; v < 5; ++v) even = even && g.degree(v) % 2 == 0;
    bool connected = g.components().size() <= 1;
    CHECK(euler_tour(g).exists == (even && connected));
    if (es.size() == 8) return;
    for (int i = from; i < 10; ++i) {
      es.push_back(pairs[i]);
      rec(i, es);
      es.pop_back();
    }
  };
  std::vector<Edge> es;
  rec(0, es);
}

TEST_CASE("bfs order") {
  CHECK(bfs_order(directed_cycle(3), 0) == std::vector<int>{0, 1, 2});
  Digraph star = Digraph::build(4, {{1, 0}, {0, 2}, {3, 0}});
  CHECK(bfs_order(star, 0).front() == 0);
  CHECK(bfs_order(symmetric_cycle(5), 0) == std::vector<int>{0, 1, 4, 2, 3});
  CHECK(code_of([] { bfs_order(Digraph::empty(2), 0); }) == Errc::Disconnected);
}

TEST_CASE("digirth uses the shortest cycle") {
  CHECK(digirth(directed_cycle(5)) == 5);
  CHECK(digirth(transitive_tournament(4)) == 0);
  Digraph two = Digraph::build(5, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
  CHECK(digirth(two) == 2);
}

TEST_CASE("multigraph basics") {
  Multigraph g = Multigraph::build(3, {{0, 1}, {0, 1}, {1, 2}});
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.max_multiplicity() == 2);
  CHECK(g.max_degree() == 3);
  CHECK_FALSE(g.is_simple());
  Multigraph sh = shannon_multigraph(5);
  CHECK(sh.m() == 7);
  CHECK(sh.max_degree() == 5);
}
