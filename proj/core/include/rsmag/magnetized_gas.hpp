#pragma once

#include <string>

namespace rsmag {

enum class Spin { kHalf, kThreeHalves };

struct Species {
  std::string name;
  double m = 1.0;
  double q_abs = 1.0;
  Spin spin = Spin::kThreeHalves;
};

/// Ideal gas of one species in a uniform field. Natural units.
struct GasState {
  double mu = 0.0;
  double T = 0.0;
  double B = 0.0;
  Species species;

  double qB() const { return species.q_abs * B; }
};

/// States per Landau level: 2 - delta_{n0} for spin 1/2,
/// 4 - delta_{n1} - 2 delta_{n0} for spin 3/2.
int level_degeneracy(Spin spin, int n);

/// Landau levels with mu^2 - m^2 - 2 n |q|B >= 0, i.e.
/// floor((mu^2 - m^2) / (2 |q|B)) + 1, or 0 below threshold.
int occupied_levels(const GasState& state);

/// Zero-temperature particle density
///   (|q|B / 2 pi^2) sum_n g_n sqrt(mu^2 - m^2 - 2 n |q|B)
/// over levels with a real Fermi momentum. Requires T == 0, q_abs > 0, B > 0.
double number_density_T0(const GasState& state);

struct FiniteTOptions {
  double integrator_tol = 1e-10;
  /// Subtract the antiparticle Fermi-Dirac term (net density).
  bool include_antiparticles = false;
  int max_levels = 1'000'000;
};

/// (|q|B / 2 pi^2) sum_n g_n int_0^inf dp [1 + exp((E_n(p) - mu)/T)]^{-1},
/// with adaptive Gauss-Kronrod per level. The level sum stops once a level
/// above the chemical potential contributes less than integrator_tol times
/// the running total. Throws ConvergenceFailure past max_levels.
double number_density_finiteT(const GasState& state, const FiniteTOptions& options = {});

/// Dispatches on T == 0.
double number_density(const GasState& state, const FiniteTOptions& options = {});

}  // namespace rsmag
