#include <benchmark/benchmark.h>

#include <random>

#include "dillon/bent.hpp"
#include "dillon/kloosterman.hpp"
#include "dillon/walsh.hpp"

using namespace dillon;

static void BM_FieldMul(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto threshold = static_cast<unsigned>(state.range(1));
  auto f = Field::build(n, std::nullopt, threshold);
  std::mt19937 rng(1);
  std::vector<Elem> xs(1024);
  for (auto& x : xs) x = Elem{static_cast<std::uint32_t>(rng()) & f->groupOrder()};
  Elem acc = kOne;
  for (auto _ : state)
    for (Elem x : xs) acc = f->mul(acc, x) + kOne;
  benchmark::DoNotOptimize(acc);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Args({12, 20})->Args({12, 0})->Args({20, 20})->Args({20, 0})->Args({24, 20});

static void BM_Fwht(benchmark::State& state) {
  std::vector<std::int32_t> v(std::size_t{1} << state.range(0), 1);
  for (auto _ : state) {
    fwhtInPlace(v);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}
BENCHMARK(BM_Fwht)->DenseRange(10, 20, 2);

static void BM_KloostermanTable(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const Subfield fm(Field::build(m), m);
  for (auto _ : state) benchmark::DoNotOptimize(KloostermanTable::build(fm));
}
BENCHMARK(BM_KloostermanTable)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

static void BM_KloostermanDirect(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const Subfield fm(Field::build(m), m);
  std::uint32_t a = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kloostermanSum(fm, Elem{a}));
    a = a % fm.field().groupOrder() + 1;
  }
}
BENCHMARK(BM_KloostermanDirect)->Arg(8)->Arg(12);

static void BM_DillonSpectrum(benchmark::State& state) {
  const DillonFamily fam(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  const auto f = fam.evaluate(fam.coefficientField().primitive());
  for (auto _ : state) benchmark::DoNotOptimize(fullWalshSpectrum(f));
}
BENCHMARK(BM_DillonSpectrum)->Args({6, 2})->Args({8, 2})->Unit(benchmark::kMillisecond);

static void BM_DillonSearch(benchmark::State& state) {
  const DillonFamily fam(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(fam.search());
}
BENCHMARK(BM_DillonSearch)->Args({6, 2})->Args({9, 3})->Args({12, 4})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
