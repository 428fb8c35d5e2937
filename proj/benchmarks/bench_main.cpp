#include <benchmark/benchmark.h>

#include "rsmag/constraint_degeneracy.hpp"
#include "rsmag/magnetized_gas.hpp"
#include "rsmag/oscillator_basis.hpp"
#include "rsmag/rs_solution.hpp"

namespace {

void BM_EvalVTable(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  double xi = 0.37;
  for (auto _ : state) {
    auto t = rsmag::eval_v_table(n_max, xi);
    benchmark::DoNotOptimize(t.data());
  }
  state.SetItemsProcessed(state.iterations() * (n_max + 1));
}
BENCHMARK(BM_EvalVTable)->Arg(20)->Arg(100)->Arg(500);

void BM_Orthonormality(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rsmag::orthonormality_matrix(n_max, 2 * n_max + 2));
}
BENCHMARK(BM_Orthonormality)->Arg(20)->Arg(60);

rsmag::ModeSpec mode(int n) {
  rsmag::ModeSpec m;
  m.n = n;
  m.eps_q = -1;
  m.B = 0.3;
  m.pz = 0.8;
  m.py = 0.1;
  return m;
}

void BM_Degeneracy(benchmark::State& state) {
  const auto level = mode(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rsmag::degeneracy(level).nullity);
}
BENCHMARK(BM_Degeneracy)->Arg(0)->Arg(1)->Arg(5);

void BM_DiracResidual(benchmark::State& state) {
  const auto level = mode(4);
  rsmag::FreeCoefficients free{};
  for (auto& row : free) row = {1.0, {0.0, 1.0}};
  const rsmag::ModeFunction mf(level, rsmag::complete_coefficients(level, free));
  const rsmag::SpacetimePoint p{0.1, 0.2, 0.3, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(rsmag::dirac_residual(mf, p));
}
BENCHMARK(BM_DiracResidual);

void BM_DensityT0(benchmark::State& state) {
  rsmag::GasState s;
  s.mu = 2.0;
  s.B = 1e-3;
  for (auto _ : state) benchmark::DoNotOptimize(rsmag::number_density_T0(s));
}
BENCHMARK(BM_DensityT0);

void BM_DensityFiniteT(benchmark::State& state) {
  rsmag::GasState s;
  s.mu = 1.5;
  s.T = 0.05;
  s.B = static_cast<double>(state.range(0)) * 1e-3;
  for (auto _ : state) benchmark::DoNotOptimize(rsmag::number_density_finiteT(s));
}
BENCHMARK(BM_DensityFiniteT)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
