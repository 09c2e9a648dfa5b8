#include <benchmark/benchmark.h>

#include "csa/forms.hpp"
#include "csa/frieze.hpp"
#include "csa/quiver.hpp"
#include "csa/sequences.hpp"

using namespace csa;

static void BM_ExactDiv(benchmark::State& state) {
    const int n = 3, m = 4;
    Poly a = parse_poly("1+x1+x2*X1*X2+x3^2*X3*X4", n, m);
    Poly b = parse_poly("x1+x2+X1*X3-x3*X2*X4", n, m);
    Poly prod = a * b;
    for (auto _ : state) benchmark::DoNotOptimize(exact_div(prod, b));
}
BENCHMARK(BM_ExactDiv);

static void BM_Somos(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(somos4_ext(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Somos)->Arg(15)->Arg(60);

// Alternating mutations on the three-odd-vertex A2 example.
static void BM_MutateSequence(benchmark::State& state) {
    ExtendedQuiver q = ExtendedQuiver(2, 3).arrow(0, 1).path(1, 0, 0).path(0, 1, 1).path(2, 1, 1);
    std::vector<int> ks;
    for (int t = 0; t < state.range(0); ++t) ks.push_back(t % 2);
    for (auto _ : state) benchmark::DoNotOptimize(mutate_sequence(initial_seed(q), ks));
}
BENCHMARK(BM_MutateSequence)->Arg(5)->Arg(10);

static void BM_Invariance(benchmark::State& state) {
    ExtendedQuiver q = ExtendedQuiver(3, 3).arrow(0, 1).arrow(1, 2).path(0, 0, 1).path(2, 1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(invariance_defect(q, 1));
}
BENCHMARK(BM_Invariance);

static void BM_SymbolicFrieze(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(symbolic_frieze(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SymbolicFrieze)->DenseRange(1, 3);

static void BM_Monodromy(benchmark::State& state) {
    SchrodingerEq eq = schrodinger_extract(symbolic_frieze(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(monodromy(eq));
}
BENCHMARK(BM_Monodromy)->DenseRange(1, 3);

BENCHMARK_MAIN();
