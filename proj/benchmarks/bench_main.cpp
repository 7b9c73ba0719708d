#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "dichroma/brooks.hpp"
#include "dichroma/defective.hpp"
#include "dichroma/dicolour.hpp"
#include "dichroma/extremal.hpp"
#include "dichroma/heroes.hpp"
#include "dichroma/local.hpp"

using namespace dichroma;

namespace {

Digraph random_digraph(int n, double p, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng)) arcs.emplace_back(u, v);
  return Digraph::build(n, arcs);
}

// Union of r random perfect matchings on n vertices (n even), parallel edges allowed.
Multigraph random_regular(int n, int r, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> es;
  std::vector<int> p(n);
  for (int i = 0; i < r; ++i) {
    for (int v = 0; v < n; ++v) p[v] = v;
    std::shuffle(p.begin(), p.end(), rng);
    for (int v = 0; v < n; v += 2) es.emplace_back(p[v], p[v + 1]);
  }
  return Multigraph::build(n, es);
}

void BM_ExactDichromaticRandom(benchmark::State& state) {
  Digraph d = random_digraph(static_cast<int>(state.range(0)), 0.4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(exact_dichromatic(d).chi);
}
BENCHMARK(BM_ExactDichromaticRandom)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_ExactDichromaticFk(benchmark::State& state) {
  Digraph d = gen_fk(static_cast<int>(state.range(0)), 3).digraph;
  for (auto _ : state) benchmark::DoNotOptimize(exact_dichromatic(d).chi);
}
BENCHMARK(BM_ExactDichromaticFk)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_BrooksColour(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Digraph d = random_digraph(n, 4.0 / n, 11);
  for (auto _ : state) benchmark::DoNotOptimize(brooks_colour(d).colouring.k);
  state.SetComplexityN(n);
}
BENCHMARK(BM_BrooksColour)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_LambdaProfile(benchmark::State& state) {
  Digraph d = random_digraph(static_cast<int>(state.range(0)), 0.2, 13);
  for (auto _ : state) benchmark::DoNotOptimize(lambda_profile(d, false).lambda);
}
BENCHMARK(BM_LambdaProfile)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_RecognizeExtremal(benchmark::State& state) {
  Digraph k4 = symmetric_complete(4);
  Digraph d = k4;
  for (int i = 0; i < state.range(0); ++i) {
    auto arcs = d.arcs();
    auto it = std::find_if(arcs.rbegin(), arcs.rend(), [&](Arc a) { return d.has_arc(a.second, a.first); });
    d = directed_hajos_join(d, *it, k4, {0, 1});
  }
  for (auto _ : state) benchmark::DoNotOptimize(recognize_k_extremal(d, 3).extremal);
}
BENCHMARK(BM_RecognizeExtremal)->Arg(1)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_InroundOrder(benchmark::State& state) {
  // Circulant with connection set {1, 2}: every out- and in-neighbourhood is a transitive pair.
  const int n = static_cast<int>(state.range(0));
  std::vector<Arc> arcs;
  for (int v = 0; v < n; ++v) {
    arcs.emplace_back(v, (v + 1) % n);
    arcs.emplace_back(v, (v + 2) % n);
  }
  Digraph d = Digraph::build(n, arcs);
  for (auto _ : state) benchmark::DoNotOptimize(inround_order(d).order.has_value());
}
BENCHMARK(BM_InroundOrder)->Arg(64)->Arg(512)->Arg(2048);

void BM_InducedPatternDs(benchmark::State& state) {
  Digraph d = gen_ds(static_cast<int>(state.range(0))).digraph;
  Digraph p = named_pattern("C3(1,2,3)");
  for (auto _ : state) benchmark::DoNotOptimize(contains_induced(d, p).has_value());
}
BENCHMARK(BM_InducedPatternDs)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_DefectiveEven(benchmark::State& state) {
  Multigraph g = random_regular(static_cast<int>(state.range(0)), 8, 17);
  for (auto _ : state) benchmark::DoNotOptimize(defective_colour(g, 2).colouring.k);
}
BENCHMARK(BM_DefectiveEven)->Arg(16)->Arg(128)->Arg(1024);

void BM_MisraGries(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(19);
  std::bernoulli_distribution coin(0.1);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  Multigraph g = Multigraph::build(n, es);
  for (auto _ : state) benchmark::DoNotOptimize(misra_gries(g).k);
}
BENCHMARK(BM_MisraGries)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_ShannonExactIndex(benchmark::State& state) {
  Multigraph sh = shannon_multigraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_defective_index(sh, 3, nullptr, false).index);
}
BENCHMARK(BM_ShannonExactIndex)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
