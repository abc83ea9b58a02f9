// Serial reference kernels against their OpenMP counterparts.

#include "deuring/kernels.hpp"
#include "deuring/sieve.hpp"
#include "deuring/verify.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

using namespace deuring;

namespace {

std::complex<double> zeta_term(std::uint64_t n)
{
    return kernels::power_minus_s(n, 0.9, 14.134725);
}

template <bool Parallel>
void BM_SumComplex(benchmark::State& state)
{
    const auto last = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        const auto v = Parallel ? kernels::sum_complex(zeta_term, 1, last)
                                : kernels::serial::sum_complex(zeta_term, 1, last);
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_TabulateLiouville(benchmark::State& state)
{
    const SieveTable t = build_sieve(static_cast<std::uint64_t>(state.range(0)));
    std::vector<int> out(t.limit() + 1);
    const auto f = [&](std::uint64_t n) { return n == 0 ? 0 : liouville(t, n); };
    for (auto _ : state) {
        if constexpr (Parallel)
            kernels::tabulate(std::span<int>(out), f);
        else
            kernels::serial::tabulate(std::span<int>(out), f);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_MainFactorGrid(benchmark::State& state)
{
    const double step = 1.0 / static_cast<double>(state.range(0));
    const auto betas = linear_grid(0.875, 1.0, step, false);
    const auto deltas = linear_grid(std::numbers::pi / 100, std::numbers::pi, step);
    const auto f = [](double b, double d) { return main_factor(b, d); };
    for (auto _ : state) {
        const auto m = Parallel ? kernels::grid_min(betas, deltas, f) : kernels::serial::grid_min(betas, deltas, f);
        benchmark::DoNotOptimize(m);
    }
}

} // namespace

BENCHMARK(BM_SumComplex<false>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_SumComplex<true>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_TabulateLiouville<false>)->Arg(1'000'000);
BENCHMARK(BM_TabulateLiouville<true>)->Arg(1'000'000);
BENCHMARK(BM_MainFactorGrid<false>)->Arg(1000);
BENCHMARK(BM_MainFactorGrid<true>)->Arg(1000);

BENCHMARK_MAIN();
