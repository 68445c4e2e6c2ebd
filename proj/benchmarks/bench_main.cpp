#include <benchmark/benchmark.h>

#include "arakelov/kernel_profile.hpp"
#include "arakelov/qseries.hpp"
#include "arakelov/theta_kernel.hpp"
#include "arakelov/zeroscan.hpp"
#include "arakelov/zeta2.hpp"

using namespace arakelov;

static void BM_ThetaJet(benchmark::State& st) {
    double x = -2.0;
    for (auto _ : st) {
        benchmark::DoNotOptimize(log_theta_jet(cplx(x, 0.3)));
        x = x > 2.0 ? -2.0 : x + 0.01;
    }
}
BENCHMARK(BM_ThetaJet);

// Slice construction: one kernel table per (w, contour, step).
static void BM_XiSliceBuild(benchmark::State& st) {
    const auto p = rational_profile();
    for (auto _ : st) benchmark::DoNotOptimize(XiSlice(*p, 1.0, 0.0, 0.08, 10.0));
}
BENCHMARK(BM_XiSliceBuild)->Unit(benchmark::kMicrosecond);

static void BM_XiSliceEvaluate(benchmark::State& st) {
    const auto p = rational_profile();
    const XiSlice slice(*p, 1.0, 0.0, 0.08, 10.0);
    double t = 0.0;
    for (auto _ : st) {
        benchmark::DoNotOptimize(slice.evaluate(cplx(0.5, t)));
        t = t > 10.0 ? 0.0 : t + 0.1;
    }
}
BENCHMARK(BM_XiSliceEvaluate)->Unit(benchmark::kMicrosecond);

static void BM_XiHighOrdinate(benchmark::State& st) {
    const EvalContext ctx;
    const double t = double(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(xi(1.0, cplx(0.5, t), ctx));
}
BENCHMARK(BM_XiHighOrdinate)->Arg(5)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

// The c_m table is cached after the first call; this times the lookup and
// conversion of c*_M.
static void BM_CStar(benchmark::State& st) {
    const int M = int(st.range(0));
    c_star(M);
    for (auto _ : st) benchmark::DoNotOptimize(c_star(M));
}
BENCHMARK(BM_CStar)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

// Exact theta^w at integer weight through log/exp of the series.
static void BM_ThetaPowerSeries(benchmark::State& st) {
    const int M = int(st.range(0));
    const QSeries th = QSeries::theta(M);
    for (auto _ : st) benchmark::DoNotOptimize(series_exp(series_log(th) * mpq_class(5)));
}
BENCHMARK(BM_ThetaPowerSeries)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);

static void BM_Winding(benchmark::State& st) {
    const EvalContext ctx;
    for (auto _ : st) benchmark::DoNotOptimize(winding_number(1.0, {0.0, 1.0, 14.0, 15.0}, ctx));
}
BENCHMARK(BM_Winding)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
