#include <benchmark/benchmark.h>

#include <numbers>

#include "nhscatter/ensemble.hpp"
#include "nhscatter/four_site.hpp"
#include "nhscatter/scattering.hpp"
#include "nhscatter/wavepacket.hpp"

using namespace nhs;

static void BM_LuSolve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng = trial_rng(1, n);
    ComplexMatrix a = random_complex_matrix(rng, n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) += static_cast<double>(n);
    const ComplexMatrix bm = random_complex_matrix(rng, n, 1);
    const CVector b(bm.entries().begin(), bm.entries().end());
    for (auto _ : state) benchmark::DoNotOptimize(lu_solve(a, b));
}
BENCHMARK(BM_LuSolve)->Arg(4)->Arg(16)->Arg(64);

static void BM_SolveFormula(benchmark::State& state) {
    Rng rng = trial_rng(2, 0);
    const auto c = random_center(rng, 8, 8);
    const LeadAttachment lead{1.0, 1.0, 1.0, 1, 8};
    for (auto _ : state) benchmark::DoNotOptimize(solve_rt_formula(c, lead, 1.1));
}
BENCHMARK(BM_SolveFormula);

static void BM_SolveDirect(benchmark::State& state) {
    Rng rng = trial_rng(2, 0);
    const auto c = random_center(rng, 8, 8);
    const LeadAttachment lead{1.0, 1.0, 1.0, 1, 8};
    for (auto _ : state) benchmark::DoNotOptimize(solve_rt_direct(c, lead, 1.1));
}
BENCHMARK(BM_SolveDirect);

static void BM_Spectrum(benchmark::State& state) {
    const auto ring = four_site::folded_four_site({1.0, 1.0});
    for (auto _ : state)
        benchmark::DoNotOptimize(spectrum(ring.center, ring.lead, 0.01, std::numbers::pi - 0.01, 1001));
}
BENCHMARK(BM_Spectrum)->Unit(benchmark::kMillisecond);

static void BM_Evolve(benchmark::State& state) {
    const auto ring = four_site::folded_four_site({1.0, 1.0});
    const FiniteSystem fs =
        build_finite_system(assemble_full_center_matrix(ring.center), ring.lead, 300);
    const CVector psi0 = gaussian_packet(fs.boundaries, -150.0, 15.0, 1.0);
    const double dt = max_time_step(fs.hamiltonian);
    for (auto _ : state) benchmark::DoNotOptimize(evolve(fs.hamiltonian, psi0, 10.0, dt));
}
BENCHMARK(BM_Evolve)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
