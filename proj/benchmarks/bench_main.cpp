#include <benchmark/benchmark.h>

#include <dcoh/corpus.hpp>
#include <dcoh/em_homology.hpp>
#include <dcoh/homology.hpp>
#include <dcoh/smith.hpp>

#include <random>

using namespace dcoh;

static void BM_InvariantFactors(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> entry(-9, 9);
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.set(i, j, Integer(entry(rng)));
    for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(a));
}
BENCHMARK(BM_InvariantFactors)->Arg(8)->Arg(16)->Arg(32);

static void BM_SphereHomology(benchmark::State& state)
{
    const auto x = sphere(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(homology(x.chain_complex()));
}
BENCHMARK(BM_SphereHomology)->DenseRange(2, 4);

static void BM_EmHomology(benchmark::State& state)
{
    const auto top = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(em_homology(FgAbGroup::cyclic(2), 1, top));
}
BENCHMARK(BM_EmHomology)->DenseRange(3, 6);
BENCHMARK_MAIN();
