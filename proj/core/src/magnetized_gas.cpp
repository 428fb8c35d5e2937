#include "rsmag/magnetized_gas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rsmag/errors.hpp"

namespace rsmag {

namespace {

constexpr double kTwoPiSq = 2.0 * std::numbers::pi * std::numbers::pi;

// Fermi-Dirac tail beyond (E - mu) = kTailWidth * T is dropped.
constexpr double kTailWidth = 60.0;

void validate_field(const GasState& s) {
  if (!(s.species.m > 0.0)) throw std::invalid_argument("gas: mass must be positive");
  if (!(s.species.q_abs > 0.0)) throw std::invalid_argument("gas: Landau quantisation needs |q| > 0");
  if (!(s.B > 0.0) || !std::isfinite(s.B)) throw std::invalid_argument("gas: B must be positive and finite");
  if (!std::isfinite(s.mu)) throw std::invalid_argument("gas: mu must be finite");
}

double fermi(double x) {
  if (x > 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

// int_0^inf dp f((sqrt(p^2 + M^2) - mu) / T)
double level_integral(double mass_sq, double mu, double T, double tol) {
  using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double M = std::sqrt(mass_sq);
  auto integrand = [&](double p) { return fermi((std::sqrt(p * p + mass_sq) - mu) / T); };

  const double e_hi = std::max(mu, M) + kTailWidth * T;
  const double p_hi = std::sqrt(std::max(e_hi * e_hi - mass_sq, 0.0));
  if (p_hi == 0.0) return 0.0;

  double total = 0.0;
  double error = 0.0;
  auto piece = [&](double a, double b) {
    if (b <= a) return;
    double err = 0.0;
    total += Quad::integrate(integrand, a, b, 15, tol, &err);
    error += err;
  };
  // Split at the Fermi momentum, where the occupation drops over a width ~T.
  if (mu > M) {
    const double p_f = std::sqrt(mu * mu - mass_sq);
    piece(0.0, p_f);
    piece(p_f, p_hi);
  } else {
    piece(0.0, p_hi);
  }
  if (error > 100.0 * tol * std::abs(total) && error > 1e-300) {
    throw ConvergenceFailure("number_density_finiteT: p_z quadrature missed its tolerance");
  }
  return total;
}

}  // namespace

int level_degeneracy(Spin spin, int n) {
  if (n < 0) throw std::invalid_argument("level_degeneracy: n must be >= 0");
  if (spin == Spin::kHalf) return n == 0 ? 1 : 2;
  return 4 - (n == 1 ? 1 : 0) - (n == 0 ? 2 : 0);
}

int occupied_levels(const GasState& state) {
  validate_field(state);
  const double k2 = state.mu * state.mu - state.species.m * state.species.m;
  if (state.mu <= 0.0 || k2 < 0.0) return 0;
  int n = 0;
  while (k2 - 2.0 * n * state.qB() >= 0.0) ++n;
  return n;
}

double number_density_T0(const GasState& state) {
  if (state.T != 0.0) throw std::invalid_argument("number_density_T0: requires T == 0");
  const int levels = occupied_levels(state);
  const double k2 = state.mu * state.mu - state.species.m * state.species.m;
  double sum = 0.0;
  for (int n = 0; n < levels; ++n) {
    sum += level_degeneracy(state.species.spin, n) * std::sqrt(std::max(k2 - 2.0 * n * state.qB(), 0.0));
  }
  return state.qB() / kTwoPiSq * sum;
}

double number_density_finiteT(const GasState& state, const FiniteTOptions& options) {
  validate_field(state);
  if (!(state.T > 0.0) || !std::isfinite(state.T)) {
    throw std::invalid_argument("number_density_finiteT: requires T > 0");
  }
  if (!(options.integrator_tol > 0.0)) throw std::invalid_argument("number_density_finiteT: tolerance must be > 0");

  const double m2 = state.species.m * state.species.m;
  const double qB = state.qB();
  double total = 0.0;
  for (int n = 0; n < options.max_levels; ++n) {
    const double mass_sq = m2 + 2.0 * n * qB;
    double level = level_integral(mass_sq, state.mu, state.T, options.integrator_tol);
    if (options.include_antiparticles) level -= level_integral(mass_sq, -state.mu, state.T, options.integrator_tol);
    const double contribution = level_degeneracy(state.species.spin, n) * level;
    total += contribution;

    const bool above_fermi = std::sqrt(mass_sq) > std::abs(state.mu);
    if (above_fermi && std::abs(contribution) <= options.integrator_tol * std::abs(total)) {
      return qB / kTwoPiSq * total;
    }
  }
  throw ConvergenceFailure("number_density_finiteT: level sum not converged after " +
                           std::to_string(options.max_levels) + " levels");
}

double number_density(const GasState& state, const FiniteTOptions& options) {
  if (state.T == 0.0) return number_density_T0(state);
  return number_density_finiteT(state, options);
}

}  // namespace rsmag
