#include <benchmark/benchmark.h>

#include "dpa/ermakov.hpp"
#include "dpa/fock.hpp"
#include "dpa/hypergeometric.hpp"
#include "dpa/oracle.hpp"
#include "dpa/phase_space.hpp"
#include "dpa/propagators.hpp"
#include "dpa/statistics.hpp"

namespace {

using namespace dpa;

const InitialData kGeneric{0.3, 1.2, 0.1, 0.5, -0.4, 0.2, 0};

void BM_ClosedFormState(benchmark::State& st) {
    const auto p = make_model(1.0, 0.25, Variant::PhiZero);
    double t = 0.1;
    for (auto _ : st) {
        benchmark::DoNotOptimize(evolve_closed_form(kGeneric, t, p));
        t += 1e-3;
    }
}
BENCHMARK(BM_ClosedFormState);

void BM_StatisticsReport(benchmark::State& st) {
    const auto p = make_model(1.0, 0.25, Variant::PhiHalfPi);
    for (auto _ : st) benchmark::DoNotOptimize(statistics_report(kGeneric, 1.3, p));
}
BENCHMARK(BM_StatisticsReport);

// Double path for small K, MPFR path once cancellation sets in.
void BM_TerminatingSeries(benchmark::State& st) {
    const int K = int(st.range(0));
    const TerminatingSeries s{double(-K), 1.0, 1.0, std::complex<double>(2.0), K};
    for (auto _ : st) benchmark::DoNotOptimize(scaled_series(s, 0.0, 0.0));
    st.counters["bits"] = series_precision_bits(s, 0.0);
}
BENCHMARK(BM_TerminatingSeries)->Arg(8)->Arg(32)->Arg(128)->Arg(512);

void BM_SqueezeKernel(benchmark::State& st) {
    const auto p = make_model(1.0, 0.25, Variant::PhiZero);
    const auto v = slow_vectors(kGeneric, 2.0, p);
    const double A = slow_invariants(kGeneric, 2.0, p).A;
    const int m = int(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(matrix_N(m, m, v.eta, v.zeta, A, 1.0));
}
BENCHMARK(BM_SqueezeKernel)->Arg(4)->Arg(64)->Arg(256);

void BM_Amplitudes(benchmark::State& st) {
    const auto p = make_model(1.0, 0.25, Variant::PhiZero);
    InitialData in = kGeneric;
    in.n = int(st.range(0));
    const double t = st.range(1) / 4.0;
    for (auto _ : st) benchmark::DoNotOptimize(amplitudes(in, t, p));
}
BENCHMARK(BM_Amplitudes)->Args({0, 4})->Args({2, 4})->Args({0, 12})->Unit(benchmark::kMillisecond);

void BM_WignerGrid(benchmark::State& st) {
    const auto p = make_model(1.0, 0.25, Variant::PhiZero);
    const int n = int(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(wigner_grid_auto(kGeneric, 1.1, p, n));
    st.SetItemsProcessed(st.iterations() * n * n);
}
BENCHMARK(BM_WignerGrid)->Arg(101)->Arg(513)->Unit(benchmark::kMillisecond);

void BM_Propagate(benchmark::State& st) {
    const auto p = make_model(1.0, 0.25, Variant::PhiHalfPi);
    const auto v = vacuum_init(1.0);
    const double t = 2.0;
    const auto g = oracle::default_grid(v, t, p, int(st.range(0)));
    const auto in = sample_squeezed(v, 0.0, p, g.lower, g.upper, g.num_points);
    for (auto _ : st) benchmark::DoNotOptimize(propagate_full(in, t, p));
}
BENCHMARK(BM_Propagate)->Arg(513)->Arg(2049)->Unit(benchmark::kMillisecond);

void BM_TdseResidual(benchmark::State& st) {
    const auto p = make_model(1.0, 0.25, Variant::PhiZero);
    const auto g = oracle::default_grid(kGeneric, 0.9, p, 801);
    for (auto _ : st) benchmark::DoNotOptimize(oracle::tdse_residual(kGeneric, 0.9, p, g));
}
BENCHMARK(BM_TdseResidual)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
