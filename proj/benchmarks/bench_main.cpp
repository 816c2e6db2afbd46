#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "innerkit/experiments.hpp"
#include "innerkit/inner.hpp"
#include "innerkit/kernels.hpp"
#include "innerkit/multiplier.hpp"

namespace {

using namespace innerkit;

TruncatedSeries random_series(std::size_t degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<Complex> c(degree + 1);
    for (auto& x : c) x = {g(rng), g(rng)};
    return TruncatedSeries(std::move(c));
}

void BM_Multiply(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto f = random_series(n, 1);
    const auto g = random_series(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(multiply(f, g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Multiply)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

void BM_Refute(benchmark::State& state) {
    const SpaceContext S{dirichlet_weights(256)};
    const auto f = normalized(random_series(static_cast<std::size_t>(state.range(0)), 3), S);
    for (auto _ : state) benchmark::DoNotOptimize(refute(f, S));
}
BENCHMARK(BM_Refute)->Arg(4)->Arg(12)->Arg(64);

void BM_SectionBound(benchmark::State& state) {
    const SpaceContext S{dirichlet_weights(1024)};
    const auto f = random_series(8, 4);
    const auto N = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(multiplier_lower_bound(f, S, N));
}
BENCHMARK(BM_SectionBound)->RangeMultiplier(4)->Range(8, 512)->Unit(benchmark::kMicrosecond);

void BM_SsInner(benchmark::State& state) {
    const SpaceContext S{dirichlet_weights(64)};
    const std::vector<Complex> zeros{Complex(0.5), Complex(-0.3, 0.4), Complex(0.1, -0.6)};
    const auto K = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ss_inner(zeros, S, K));
}
BENCHMARK(BM_SsInner)->Arg(50)->Arg(200)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_VerifyTheorem(benchmark::State& state) {
    const SpaceContext S{dirichlet_weights(64)};
    for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_main(S, 100, 12, 42));
}
BENCHMARK(BM_VerifyTheorem)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
