#include <benchmark/benchmark.h>

#include <random>

#include "bredonkit/intmat.hpp"

using bredonkit::IntMat;

namespace {

IntMat random_matrix(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> entry(-9, 9);
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    return m;
}

void BM_snf(benchmark::State& state) {
    IntMat m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) {
        auto s = bredonkit::snf(m);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_snf)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_rank(benchmark::State& state) {
    IntMat m = random_matrix(static_cast<std::size_t>(state.range(0)), 11);
    for (auto _ : state) {
        auto r = bredonkit::rank(m);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_rank)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
