#include <benchmark/benchmark.h>

#include <ntheta/nonic/context.hpp>
#include <ntheta/puiseux/kernels.hpp>
#include <ntheta/puiseux/theta.hpp>

namespace
{

// Dense operands on the 1/9 grid: 1/phi(q^{1/9}) times u1.
struct Operands {
    ntheta::QSeries a;
    ntheta::QSeries b;
    ntheta::Exponent order;
};

Operands operands(int order)
{
    const ntheta::Exponent n(order);
    return {ntheta::qs_inv(ntheta::phi_series(ntheta::Exponent(1, 9), n)), ntheta::decomposition_term(9, 1, n), n};
}

void BM_MulSerial(benchmark::State &state)
{
    const Operands ops = operands(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ntheta::kernels::mul_serial(ops.a.terms(), ops.b.terms(), ops.order));
    }
    state.counters["terms"] = static_cast<double>(ops.a.size() * ops.b.size());
}

void BM_MulParallel(benchmark::State &state)
{
    const Operands ops = operands(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ntheta::kernels::mul_parallel(ops.a.terms(), ops.b.terms(), ops.order));
    }
    state.counters["terms"] = static_cast<double>(ops.a.size() * ops.b.size());
}

} // namespace

BENCHMARK(BM_MulSerial)->Arg(20)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MulParallel)->Arg(20)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
