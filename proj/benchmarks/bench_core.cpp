#include <benchmark/benchmark.h>

#include "chowkit/moduli.hpp"
#include "chowkit/varieties.hpp"

using namespace chowkit;

static void BM_LinesDivisorDegree(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto v = lines_in_surfaces_divisor_degree(d);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_LinesDivisorDegree)->Arg(3)->Arg(4)->Arg(8);

static void BM_EquidegreeDiscriminant(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto v = equidegree_discriminant_degree(4, 1, n);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_EquidegreeDiscriminant)->Arg(3)->Arg(10)->Arg(30);

static void BM_BidegreeClass(benchmark::State& state) {
    for (auto _ : state) {
        auto v = bidegree_discriminant_class(2, 3, 4);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_BidegreeClass);

static void BM_GrassmannianProductReduce(benchmark::State& state) {
    const Ring gr = grassmannian_lines_in_p3();
    const ChowClass s1 = ChowClass::generator(gr, "s1");
    const ChowClass s2 = ChowClass::generator(gr, "s2");
    const ChowClass x = s1 * 3 + s2 * 5 + s1 * s1 * 2;
    for (auto _ : state) {
        auto v = x * x;
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_GrassmannianProductReduce);

static void BM_ExpSeriesP3xGr(benchmark::State& state) {
    const Ring total = product(projective_space(3), grassmannian_lines_in_p3());
    const ChowClass x = ChowClass::generator(total, "t") +
                        ChowClass::generator(total, "s1") * 2;
    for (auto _ : state) {
        auto v = exp_series(x);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ExpSeriesP3xGr);

static void BM_CongruenceSublattice(benchmark::State& state) {
    const std::vector<Int> coeffs{Int(2), Int(3), Int(7), Int(11)};
    for (auto _ : state) {
        auto v = congruence_sublattice(coeffs, Int(360360));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_CongruenceSublattice);

BENCHMARK_MAIN();
