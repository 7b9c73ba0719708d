#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "dichroma/dicolour.hpp"
#include "dichroma/heroes.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dichroma;

namespace {

bool is_directed_cycle_in(const Digraph& d, const std::vector<int>& cyc) {
  if (cyc.size() < 2) return false;
  std::vector<int> s = cyc;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  for (std::size_t i = 0; i < cyc.size(); ++i)
    if (!d.has_arc(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
  return true;
}

// Longest dipath using only arcs that go backwards in `order`, counted in vertices.
int backward_oracle(const Digraph& d, const std::vector<int>& order) {
  const int n = d.n();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<int> best(n, 1);
  // Backward arcs go from a later to an earlier position: process from the end.
  for (int i = n - 1; i >= 0; --i) {
    int x = order[i];
    for (int y = 0; y < n; ++y)
      if (d.has_arc(y, x) && pos[y] > pos[x]) best[x] = std::max(best[x], best[y] + 1);
  }
  return n == 0 ? 0 : *std::max_element(best.begin(), best.end());
}

}  // namespace

TEST_CASE("verify dicolouring") {
  Digraph c3 = directed_cycle(3);
  auto bad = verify_dicolouring(c3, Dicolouring::from({1, 1, 1}));
  CHECK_FALSE(bad.valid);
  CHECK(is_directed_cycle_in(c3, bad.cycle));
  CHECK(bad.cycle.size() == 3);
  CHECK(verify_dicolouring(c3, Dicolouring::from({1, 1, 2})).valid);

  auto k3 = verify_dicolouring(symmetric_complete(3), Dicolouring::from({1, 2, 1}));
  CHECK_FALSE(k3.valid);
  std::vector<int> digon = k3.cycle;
  std::sort(digon.begin(), digon.end());
  CHECK(digon == std::vector<int>{0, 2});

  CHECK_THROWS_AS(verify_dicolouring(c3, Dicolouring::from({1, 1})), Error);
}

TEST_CASE("exact dichromatic number on named digraphs") {
  CHECK(exact_dichromatic(transitive_tournament(5)).chi == 1);
  auto k4 = exact_dichromatic(symmetric_complete(4));
  CHECK(k4.chi == 4);
  CHECK(verify_dicolouring(symmetric_complete(4), k4.colouring).valid);
  CHECK(exact_dichromatic(gen_fk(3, 3).digraph).chi == 3);
  CHECK(exact_dichromatic(Digraph::empty(0)).chi == 0);
}

TEST_CASE("exact solver matches the partition oracle, exhaustive n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < (1ull << (n * (n - 1))); ++mask) {
      Digraph d = gen::from_mask(n, mask);
      auto r = exact_dichromatic(d);
      REQUIRE(r.chi == oracle::chi_partition(d));
      REQUIRE(r.colouring.k == r.chi);
      REQUIRE(verify_dicolouring(d, r.colouring).valid);
    }
}

TEST_CASE("exact solver matches the partition oracle on sampled n = 6..8") {
  gen::Rng rng(2024);
  for (int i = 0; i < 200; ++i) {
    Digraph d = gen::random_digraph(rng, gen::uniform(rng, 6, 8), std::uniform_real_distribution<>(0.2, 0.8)(rng));
    CHECK(exact_dichromatic(d).chi == oracle::chi_partition(d));
  }
}

TEST_CASE("budget exhaustion reports bounds") {
  Budget budget(3);
  try {
    exact_dichromatic(gen_fk(3, 3).digraph, &budget);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceededError& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
    CHECK(e.lower() <= 3);
    if (e.upper()) CHECK(*e.upper() >= 3);
  }
}

TEST_CASE("chi equals the maximum over strong components") {
  gen::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    Digraph d = gen::random_digraph(rng, gen::uniform(rng, 2, 9), 0.25);
    int best = 0;
    for (const auto& comp : strong_components(d)) best = std::max(best, oracle::chi_partition(induced_subdigraph(d, comp)));
    CHECK(exact_dichromatic(d).chi == best);
  }
}

TEST_CASE("greedy dicolouring") {
  Digraph c5 = directed_cycle(5);
  auto g = greedy_dicolour(c5, {0, 1, 2, 3, 4});
  CHECK(g.colour == std::vector<int>{1, 1, 1, 1, 2});

  Digraph tt = transitive_tournament(5);
  CHECK(greedy_dicolour(tt, topological_order(tt)).k == 1);

  Digraph k4 = symmetric_complete(4);
  std::vector<int> order{0, 1, 2, 3};
  do {
    CHECK(greedy_dicolour(k4, order).k == 4);
  } while (std::next_permutation(order.begin(), order.end()));

  gen::Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    Digraph d = gen::random_digraph(rng, gen::uniform(rng, 1, 12), 0.3);
    std::vector<int> perm(d.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto c = greedy_dicolour(d, perm);
    CHECK(verify_dicolouring(d, c).valid);
    CHECK(c.k <= d.delta_min() + 1);
  }
}

TEST_CASE("Gallai-Roy colouring") {
  Digraph tt = transitive_tournament(4);
  CHECK(gallai_roy_colour(tt, topological_order(tt)).k == 1);

  auto c3 = gallai_roy_colour(directed_cycle(3), {0, 1, 2});
  CHECK(c3.colour == std::vector<int>{2, 1, 1});
  CHECK(c3.k == 2);

  // Over all orderings of the symmetric 5-cycle the colour count is always
  // the backward-path length; the natural order needs 5, the best order 3.
  Digraph c5 = symmetric_cycle(5);
  std::vector<int> order{0, 1, 2, 3, 4};
  CHECK(gallai_roy_colour(c5, order).k == 5);
  int fewest = 5;
  do {
    auto c = gallai_roy_colour(c5, order);
    CHECK(c.k == backward_oracle(c5, order));
    CHECK(verify_dicolouring(c5, c).valid);
    fewest = std::min(fewest, c.k);
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(fewest == 3);
  CHECK(oracle::chi_partition(c5) == 3);

  gen::Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    Digraph d = gen::random_digraph(rng, gen::uniform(rng, 1, 10), 0.3);
    std::vector<int> perm(d.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto c = gallai_roy_colour(d, perm);
    CHECK(verify_dicolouring(d, c).valid);
    CHECK(c.k == backward_oracle(d, perm));
    CHECK(longest_backward_path(d, perm) == backward_oracle(d, perm));
  }
}

TEST_CASE("backward certificate round trip") {
  gen::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    Digraph d = gen::random_digraph(rng, gen::uniform(rng, 1, 9), 0.35);
    auto best = exact_dichromatic(d);
    auto cert = backward_certificate(d, best.colouring);
    CHECK(cert.max_backward_path <= best.chi);
    CHECK(backward_oracle(d, cert.ordering) <= best.chi);
    CHECK(gallai_roy_colour(d, cert.ordering).k <= best.chi);
  }
}

TEST_CASE("two-colouring without odd dicycles") {
  auto c4 = two_colour_odd_free(directed_cycle(4));
  CHECK(c4.coloured);
  CHECK(verify_dicolouring(directed_cycle(4), c4.colouring).valid);

  auto c3 = two_colour_odd_free(directed_cycle(3));
  CHECK_FALSE(c3.coloured);
  CHECK(is_directed_cycle_in(directed_cycle(3), c3.odd_cycle));

  Digraph two = Digraph::build(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
  auto r = two_colour_odd_free(two);
  CHECK(r.coloured);
  CHECK(r.colouring.k <= 2);
  CHECK(oracle::chi_partition(two) == 2);

  gen::Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    Digraph d = gen::random_digraph(rng, gen::uniform(rng, 2, 10), 0.2);
    auto res = two_colour_odd_free(d);
    if (res.coloured) {
      CHECK(verify_dicolouring(d, res.colouring).valid);
      CHECK(res.colouring.k <= 2);
    } else {
      CHECK(is_directed_cycle_in(d, res.odd_cycle));
      CHECK(res.odd_cycle.size() % 2 == 1);
    }
  }
}

TEST_CASE("dipolar combine") {
  // C3 on {0,1,2} dominating a pendant vertex 3.
  Digraph d = Digraph::build(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
  std::vector<int> s{0, 1, 2};
  REQUIRE(is_dipolar(d, s));
  auto combined = dipolar_combine(d, s, Dicolouring::from({1, 1, 2}), Dicolouring::from({1}));
  CHECK(verify_dicolouring(d, combined).valid);
  CHECK(combined.k <= 4);

  Digraph c3 = directed_cycle(3);
  auto whole = dipolar_combine(c3, {0, 1, 2}, Dicolouring::from({1, 1, 2}), Dicolouring{});
  CHECK(whole.colour == std::vector<int>{1, 1, 2});

  Digraph four = Digraph::build(4, {{3, 0}, {0, 3}, {0, 1}, {1, 0}});
  CHECK_FALSE(is_dipolar(four, {0}));
  try {
    dipolar_combine(four, {0}, Dicolouring::from({1}), Dicolouring::from({1, 1, 1}));
    FAIL("expected NotDipolar");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotDipolar);
  }
}
