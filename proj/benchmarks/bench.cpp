#include <benchmark/benchmark.h>

#include "backstable/poly.hpp"
#include "backstable/symfunc.hpp"

using namespace backstable;

static void BM_PolyMultiply(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Poly f(Rat(1)), g(Rat(1));
    for (int i = 1; i <= n; ++i) {
        f = f * (Poly::x(i) - Poly::a(i));
        g = g * (Poly::x(i) + Poly::a(n + 1 - i));
    }
    for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_PolyMultiply)->Arg(4)->Arg(6);

static void BM_SchurMultiply(benchmark::State& state) {
    auto f = SymFunc::basis_elem(Basis::Schur, Partition({3, 2, 1}));
    for (auto _ : state) benchmark::DoNotOptimize(multiply(f, f));
}
BENCHMARK(BM_SchurMultiply);

BENCHMARK_MAIN();
