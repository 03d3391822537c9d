#include <benchmark/benchmark.h>

#include <cmath>

#include "bfmix/config.hpp"
#include "bfmix/finite_temperature.hpp"
#include "bfmix/scan.hpp"
#include "bfmix/specfun.hpp"
#include "bfmix/zero_temperature.hpp"

using namespace bfmix;

namespace {

MixtureConfig lithium() {
  ConfigInput in;
  in.unit_system = UnitSystem::Oscillator;
  in.m_b = 7.0;
  in.m_f = 6.0;
  in.omega_b = in.omega_f = 166.0;
  in.N_b = 1000.0;
  in.N_f = 100.0;
  in.interaction.g_bb = 0.05;
  in.interaction.g_bf = 0.05;
  in.interaction.g_ff = 0.0;
  return in.resolve();
}

MixtureConfig thermal(double g_bf) {
  ConfigInput in = scan::figure_preset("fig4").base;
  in.interaction.g_bf = g_bf;
  return in.resolve();
}

}  // namespace

// Arg selects the branch: 0 series, 1 near-unit expansion.
static void BM_BoseG(benchmark::State& state) {
  const double z = state.range(0) == 0 ? 0.3 : 0.95;
  const specfun::PolyOrder nu = specfun::PolyOrder::three_halves();
  for (auto _ : state) benchmark::DoNotOptimize(specfun::bose_g(nu, z));
}
BENCHMARK(BM_BoseG)->Arg(0)->Arg(1);

// Arg selects the branch: 0 series, 1 quadrature.
static void BM_FermiF(benchmark::State& state) {
  const double eta = state.range(0) == 0 ? std::log(0.3) : 5.0;
  const specfun::PolyOrder nu = specfun::PolyOrder::three_halves();
  for (auto _ : state) benchmark::DoNotOptimize(specfun::fermi_f_log(nu, eta));
}
BENCHMARK(BM_FermiF)->Arg(0)->Arg(1);

static void BM_FermiFugacity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(specfun::fermi_fugacity_from_density(50.0));
}
BENCHMARK(BM_FermiFugacity);

static void BM_SolveOmegaC(benchmark::State& state) {
  const auto cfg = lithium();
  for (auto _ : state) benchmark::DoNotOptimize(zero_t::solve_omega_c(cfg));
}
BENCHMARK(BM_SolveOmegaC);

static void BM_SolveOmegaFermion(benchmark::State& state) {
  const auto cfg = lithium();
  const double wc = zero_t::solve_omega_c(cfg).omega_c;
  for (auto _ : state) benchmark::DoNotOptimize(zero_t::solve_Omega_c(wc, cfg));
}
BENCHMARK(BM_SolveOmegaFermion);

static void BM_ClassifyZeroT(benchmark::State& state) {
  const auto cfg = lithium();
  for (auto _ : state) benchmark::DoNotOptimize(zero_t::classify_zero_T(cfg));
}
BENCHMARK(BM_ClassifyZeroT);

static void BM_StabilityZ(benchmark::State& state) {
  const auto cfg = thermal(0.3);
  const double T = 0.1 * finite_t::fermi_temperature(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(finite_t::stability_Z(cfg, T));
}
BENCHMARK(BM_StabilityZ);

static void BM_CriticalWindow(benchmark::State& state) {
  const auto cfg = thermal(0.3);
  const double TF = finite_t::fermi_temperature(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(finite_t::critical_window(cfg, 0.01 * TF, TF));
}
BENCHMARK(BM_CriticalWindow)->Unit(benchmark::kMillisecond);

static void BM_PresetScan(benchmark::State& state) {
  const auto spec = scan::figure_preset("fig3a");
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan::run_scan(spec, workers));
}
BENCHMARK(BM_PresetScan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
