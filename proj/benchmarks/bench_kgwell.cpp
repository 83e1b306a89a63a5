#include <benchmark/benchmark.h>

#include "kgwell/eigensolver.hpp"
#include "kgwell/oracle.hpp"
#include "kgwell/specfun.hpp"

namespace {

void BM_KummerM(benchmark::State& state) {
    const kgwell::ComplexValue a(0.25, -0.4), b(0.5, 0.0);
    const kgwell::ComplexValue z(0.0, static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kgwell::kummer_m(a, b, z));
}
BENCHMARK(BM_KummerM)->Arg(1)->Arg(10)->Arg(25);

void BM_PcfPair(benchmark::State& state) {
    const double rho = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kgwell::pcf_pair(0.5, rho));
}
BENCHMARK(BM_PcfPair)->Arg(1)->Arg(3)->Arg(6);

void BM_MatchMismatch(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(kgwell::match_mismatch(0.3, 2.0, 5.0, kgwell::Parity::even));
    }
}
BENCHMARK(BM_MatchMismatch);

void BM_FindSpectrum(benchmark::State& state) {
    kgwell::SpectrumOptions opts;
    opts.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kgwell::find_spectrum(2.0, 5.0, opts));
}
BENCHMARK(BM_FindSpectrum)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ShootSpectrum(benchmark::State& state) {
    kgwell::ShootingConfig cfg;
    cfg.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kgwell::kg_shoot_spectrum(2.0, 5.0, cfg));
}
BENCHMARK(BM_ShootSpectrum)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
