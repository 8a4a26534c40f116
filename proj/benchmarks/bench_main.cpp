#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <cavityqed/cavityqed.hpp>

using namespace cavityqed;

namespace {

void BM_JacobiLadder(benchmark::State& state) {
    const int M = static_cast<int>(state.range(0));
    const Matrix W = build_w(ModeSet::ladder_1d(M, 1.0), 0.9);
    for (auto _ : state) benchmark::DoNotOptimize(diagonalize_w(W).Omega2.data());
    state.SetComplexityN(M);
}
BENCHMARK(BM_JacobiLadder)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond)->Complexity();

void BM_EigenLadder(benchmark::State& state) {
    const int M = static_cast<int>(state.range(0));
    const Matrix W = build_w(ModeSet::ladder_1d(M, 1.0), 0.9);
    for (auto _ : state) benchmark::DoNotOptimize(diagonalize_w(W, EigenBackend::Eigen).Omega2.data());
}
BENCHMARK(BM_EigenLadder)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_JacobiRandom(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    std::normal_distribution<double> nd;
    Matrix W(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) W(i, j) = W(j, i) = nd(rng);
    for (auto _ : state) benchmark::DoNotOptimize(diagonalize_w(W).Omega2.data());
}
BENCHMARK(BM_JacobiRandom)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ExactCoupling(benchmark::State& state) {
    const int M = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(exact_coupling_1d(M, 1.0, 0.5));
}
BENCHMARK(BM_ExactCoupling)->Arg(20)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ConductivitySweep(benchmark::State& state) {
    const auto s = DerivedScales::from(SystemConfig{});
    const double wt = s.omega_tilde(), eta = 0.05 * wt;
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += optical_conductivity({(-3.0 + 6.0 * i / (n - 1)) * wt, eta}, s).re;
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ConductivitySweep)->Arg(601)->Arg(10000);

void BM_DiskMoments(benchmark::State& state) {
    const double kF = DerivedScales::from(SystemConfig{}).k_fermi();
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        const auto m = distribution_moments(OccupancyGrid::fermi_disk(kF, {0.1 * kF, 0.0}, n));
        benchmark::DoNotOptimize(energy_density(m, optimal_origin(m), 0.5));
    }
}
BENCHMARK(BM_DiskMoments)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_EftChiSweep(benchmark::State& state) {
    const auto c = EftConfig::make(SystemConfig{}, 4.0);
    const double lo = c.omega_tilde_kz();
    for (auto _ : state) {
        double acc = 0.0;
        for (int i = 0; i < 1000; ++i) acc += eft_chi_aa({(-3.0 + 6.0 * (i + 0.5) / 1000) * lo, 0.05 * lo}, c).im;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_EftChiSweep);

} // namespace

BENCHMARK_MAIN();
