#include "exm/generators.hpp"
#include "exm/haar.hpp"
#include "exm/product.hpp"

#include <benchmark/benchmark.h>

using namespace exm;

namespace {

const GroupSpec R = GroupSpec::real_add();

static void BM_IntervalCanonicalize(benchmark::State& state) {
    Rng rng(1);
    std::vector<IntervalSet::Interval> raw;
    for (int i = 0; i < state.range(0); ++i) {
        Rational lo = rng.rational(1000, 64);
        raw.emplace_back(lo, lo + rng.nonneg_rational(8, 8));
    }
    for (auto _ : state) {
        IntervalSet s(Kind::half_open, raw);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_IntervalCanonicalize)->Range(8, 512);

static void BM_CoveringIndex(benchmark::State& state) {
    PositiveCompact K0(R, IntervalSet::single(Kind::closed, 0, 1));
    SetValue K = IntervalSet::single(Kind::closed, 0, 8);
    SetValue V = shrink_basis(R, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(index(R, K, V).count);
    }
}
BENCHMARK(BM_CoveringIndex)->DenseRange(4, 12, 2);

static void BM_HaarEstimate(benchmark::State& state) {
    PositiveCompact K0(R, IntervalSet::single(Kind::closed, 0, 1));
    SetValue A = IntervalSet::single(Kind::half_open, 0, 3);
    int n = static_cast<int>(state.range(0));
    EpsSchedule sched = EpsSchedule::dyadic(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(haar_measure_estimate(R, K0, A, n, sched).bracket);
    }
}
BENCHMARK(BM_HaarEstimate)->DenseRange(6, 10, 2);

static void BM_ProdMeasure(benchmark::State& state) {
    Rng rng(7);
    MeasureSpec mu = MeasureSpec::lebesgue(R, Rational(1));
    MeasureSpec nu = MeasureSpec::lebesgue(R, Rational(2));
    std::vector<ProductSet> sets;
    for (int i = 0; i < 64; ++i)
        sets.push_back(gen::rect_union(rng, static_cast<int>(state.range(0)), 16, 8));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(prod_measure(mu, nu, sets[i++ % sets.size()]));
    }
}
BENCHMARK(BM_ProdMeasure)->Range(2, 8);

static void BM_TonelliFinite(benchmark::State& state) {
    GroupSpec S3 = GroupSpec::finite(CayleyTable::symmetric3());
    MeasureSpec cnt = MeasureSpec::counting(S3);
    Rng rng(9);
    SimpleFunc2D f({{ProductSet(gen::finite_pair_set(rng, 6)), ExtNonneg::finite(Rational(5, 2))}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(tonelli_values(cnt, cnt, f).double_integral);
    }
}
BENCHMARK(BM_TonelliFinite);

}  // namespace

BENCHMARK_MAIN();
