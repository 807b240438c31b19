#include <benchmark/benchmark.h>

#include "anncoh/canon.hpp"
#include "anncoh/coherence.hpp"
#include "anncoh/dsl.hpp"

namespace {

using namespace anncoh;

ObjExpr product_of_sums(int factors) {
  const auto pool = atom_pool(static_cast<std::size_t>(2 * factors));
  ObjExpr y = ObjExpr::var(pool[0]) + ObjExpr::var(pool[1]);
  for (int i = 1; i < factors; ++i) y = y * (ObjExpr::var(pool[2 * i]) + ObjExpr::var(pool[2 * i + 1]));
  return y;
}

void BM_ExpandQuiteStrict(benchmark::State& state) {
  const ObjExpr y = product_of_sums(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expand(y, Mode::QuiteStrict));
}
BENCHMARK(BM_ExpandQuiteStrict)->DenseRange(1, 5);

void BM_ExpandGeneral(benchmark::State& state) {
  const ObjExpr y = product_of_sums(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expand(y, Mode::General));
}
BENCHMARK(BM_ExpandGeneral)->DenseRange(1, 5);

void BM_DenoteExpansionWord(benchmark::State& state) {
  const ObjExpr y = product_of_sums(static_cast<int>(state.range(0)));
  const MorWord w = expand(y, Mode::QuiteStrict).word;
  for (auto _ : state) benchmark::DoNotOptimize(denote(w, Mode::QuiteStrict));
}
BENCHMARK(BM_DenoteExpansionWord)->DenseRange(1, 5);

void BM_Interchange(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pool = atom_pool(2 * n);
  std::vector<ObjExpr> as;
  std::vector<ObjExpr> bs;
  for (std::size_t i = 0; i < n; ++i) {
    as.push_back(ObjExpr::var(pool[i]));
    bs.push_back(ObjExpr::var(pool[n + i]));
  }
  for (auto _ : state) benchmark::DoNotOptimize(denote(interchange_word(as, bs), Mode::QuiteStrict));
}
BENCHMARK(BM_Interchange)->DenseRange(1, 6);

void BM_Sweep(benchmark::State& state) {
  SweepConfig cfg;
  cfg.atom_budget = 2;
  cfg.leaf_budget = 3;
  cfg.depth = static_cast<std::size_t>(state.range(0));
  cfg.mode = state.range(1) ? Mode::General : Mode::QuiteStrict;
  for (auto _ : state) benchmark::DoNotOptimize(sweep(cfg));
}
BENCHMARK(BM_Sweep)->Args({1, 0})->Args({2, 0})->Args({1, 1})->Args({2, 1})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
