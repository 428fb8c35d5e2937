#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "rsmag/constraint_degeneracy.hpp"
#include "rsmag/errors.hpp"
#include "rsmag/free_field.hpp"
#include "rsmag/gamma_algebra.hpp"
#include "rsmag/magnetized_gas.hpp"
#include "rsmag/oscillator_basis.hpp"
#include "rsmag/rs_solution.hpp"
#include "rsmag_cli/commands.hpp"

namespace rsmag::cli {

namespace {

using Rng = std::mt19937_64;

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Complex draw_complex(Rng& rng) {
  std::normal_distribution<double> d;
  return {d(rng), d(rng)};
}

SuiteResult clifford(const VerifyOptions& opt) {
  GammaSet g = build_gamma_set();
  if (opt.flip_gamma_sign) g.upper[2](0, 3) = -g.upper[2](0, 3);
  SuiteResult r{"clifford", 0, 0.0, 0.0, false, "exact arithmetic"};
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      ComplexMatrix4 want = ComplexMatrix4::Zero();
      if (mu == nu) want = 2.0 * Metric::diag[mu] * ComplexMatrix4::Identity();
      r.max_residual = std::max(r.max_residual, (anticommutator(g.upper[mu], g.upper[nu]) - want).cwiseAbs().maxCoeff());
      ++r.cases;
    }
  }
  r.pass = r.max_residual == 0.0;
  return r;
}

SuiteResult lagrangian() {
  SuiteResult r{"lagrangian_coefficients", 0, 0.0, 4.0 * std::numeric_limits<double>::epsilon(), false, ""};
  // Values obtained by substituting A into the coefficient polynomials.
  const double cases[3][3] = {{-1.0, 1.0, 1.0}, {0.0, 0.5, 1.0}, {-1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}};
  for (const auto& c : cases) {
    r.max_residual = std::max(r.max_residual, std::abs(rs_coefficient_b(c[0]) - c[1]) / c[1]);
    r.max_residual = std::max(r.max_residual, std::abs(rs_coefficient_c(c[0]) - c[2]) / c[2]);
    r.cases += 2;
  }
  r.pass = r.max_residual <= r.threshold;
  return r;
}

SuiteResult free_equivalence(Rng& rng) {
  SuiteResult r{"free_field_equivalence", 0, 0.0, 1e-12, false, ""};
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double weakest_violation = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 20; ++k) {
    const std::array<double, 3> p{u(rng), u(rng), u(rng)};
    const double m = 1.0 + 0.5 * (u(rng) + 1.0);
    const std::array<double, 4> x{u(rng), u(rng), u(rng), u(rng)};

    VectorSpinor amp{};
    for (const auto& b : free_amplitude_basis(p, m)) {
      const Complex w = draw_complex(rng);
      for (int mu = 0; mu < 4; ++mu) amp[mu] += w * b[mu];
    }
    const FreePlaneWave good(p, m, amp);
    r.max_residual = std::max(r.max_residual, max_abs(rs_operator_levi_civita(good.jet(x), m)) / good.amplitude_norm());

    VectorSpinor bad_amp{};
    for (const auto& b : gamma_trace_violating_amplitudes(p, m)) {
      const Complex w = draw_complex(rng);
      for (int mu = 0; mu < 4; ++mu) bad_amp[mu] += w * b[mu];
    }
    const FreePlaneWave bad(p, m, bad_amp);
    weakest_violation =
        std::min(weakest_violation, max_abs(rs_operator_levi_civita(bad.jet(x), m)) / bad.amplitude_norm());
    r.cases += 2;
  }
  r.pass = r.max_residual <= r.threshold && weakest_violation >= 1e-3;
  r.note = "smallest violating-mode residual " + short_num(weakest_violation) + " (needs >= 1e-3)";
  return r;
}

SuiteResult orthonormality() {
  SuiteResult r{"oscillator_orthonormality", 21 * 21, 0.0, 1e-10, false, "n <= 20"};
  const Eigen::MatrixXd o = orthonormality_matrix(20, 40);
  r.max_residual = (o - Eigen::MatrixXd::Identity(21, 21)).cwiseAbs().maxCoeff();
  r.pass = r.max_residual <= r.threshold;
  return r;
}

SuiteResult ladder(Rng& rng) {
  SuiteResult r{"ladder_identities", 0, 0.0, 1e-6, false, "n <= 50, central differences h = 1e-4"};
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int n = 0; n <= 50; ++n) {
    for (int eq : {1, -1}) {
      for (Ladder w : {Ladder::kO1, Ladder::kO2}) {
        r.max_residual = std::max(r.max_residual, check_ladder_numeric(w, eq, n, u(rng), 1e-4));
        ++r.cases;
      }
    }
  }
  r.pass = r.max_residual <= r.threshold;
  return r;
}

ModeSpec random_mode(Rng& rng, int n, int eps_q) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ModeSpec mode;
  mode.n = n;
  mode.eps = 1;
  mode.eps_q = eps_q;
  mode.m = 1.0;
  mode.B = 0.05 + 0.45 * u(rng);
  mode.pz = 3.0 * u(rng);
  mode.py = 2.0 * u(rng) - 1.0;
  return mode;
}

SpacetimePoint random_point(Rng& rng, const ModeSpec& mode) {
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_real_distribution<double> xi(-4.0, 4.0);
  return {u(rng), mode.xi_mapping().x(xi(rng)), u(rng), u(rng)};
}

void dirac_suites(Rng& rng, std::vector<SuiteResult>& out) {
  SuiteResult a{"dirac_residual_analytic", 0, 0.0, 1e-12, false, "relative to the mode amplitude scale"};
  SuiteResult f{"dirac_residual_finite_difference", 0, 0.0, 1e-6, false, "h = 1e-4"};
  for (int trial = 0; trial < 20; ++trial) {
    const auto mode = random_mode(rng, trial % 11, trial % 2 ? 1 : -1);
    FreeCoefficients free{};
    for (auto& row : free)
      for (auto& c : row) c = draw_complex(rng);
    const ModeFunction mf(mode, complete_coefficients(mode, free));
    for (int k = 0; k < 100; ++k) {
      const auto p = random_point(rng, mode);
      a.max_residual = std::max(a.max_residual, max_abs(dirac_residual(mf, p)) / mf.scale());
      ++a.cases;
      if (k % 10 == 0) {
        f.max_residual = std::max(f.max_residual, max_abs(dirac_residual_fd(mf, p, 1e-4)) / mf.scale());
        ++f.cases;
      }
    }
  }
  a.pass = a.max_residual <= a.threshold;
  f.pass = f.max_residual <= f.threshold;
  out.push_back(a);
  out.push_back(f);
}

void degeneracy_suites(Rng& rng, std::vector<SuiteResult>& out) {
  SuiteResult d{"degeneracy_nullity", 0, 0.0, 0.0, true, ""};
  SuiteResult s{"subsidiary_conditions", 0, 0.0, 1e-10, true, ""};
  double min_gap = std::numeric_limits<double>::infinity();
  int vectors = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 0; n <= 10; ++n) {
    for (int draw = 0; draw < 50; ++draw) {
      const auto mode = random_mode(rng, n, -1);
      ++d.cases;
      try {
        const auto rep = degeneracy(mode);
        d.max_residual = std::max(d.max_residual, double(std::abs(rep.nullity - rep.expected)));
        min_gap = std::min(min_gap, rep.gap);
        if (draw < 5) {
          for (const auto& v : rep.basis) {
            ++vectors;
            const ModeFunction mf(mode, complete_coefficients(mode, expand_free(rep.system, v)));
            for (int k = 0; k < 100; ++k) {
              const auto r = subsidiary_residuals(mf, random_point(rng, mode));
              s.max_residual = std::max(
                  s.max_residual, std::max(max_abs(r.gamma_trace), max_abs(r.covariant_divergence)) / mf.scale());
              ++s.cases;
            }
          }
        }
      } catch (const NumericalError&) {
        d.pass = false;
        d.max_residual = std::max(d.max_residual, 1.0);
      }
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  d.pass = d.pass && d.max_residual == 0.0 && min_gap >= 1e3 && seconds < 5.0;
  d.note = "max |nullity - g_n|; min gap " + short_num(min_gap) + "; " + short_num(seconds) + " s";
  s.pass = s.max_residual <= s.threshold;
  s.note = std::to_string(vectors) + " nullspace vectors";
  out.push_back(d);
  out.push_back(s);
}

SuiteResult labels() {
  SuiteResult r{"spin_labels", 0, 0.0, 0.0, false, ""};
  for (int eq : {1, -1}) {
    for (int n = 0; n <= 10; ++n) {
      r.max_residual =
          std::max(r.max_residual, double(std::abs(int(spin_labels(n, eq).size()) - degeneracy_formula(n))));
      ++r.cases;
    }
  }
  const auto ground = spin_labels(0, -1);
  const bool exact = ground == std::vector<SpinLabel>{{0, -1}, {1, -3}};
  r.pass = r.max_residual == 0.0 && exact;
  return r;
}

SuiteResult gas_continuum() {
  SuiteResult r{"gas_continuum_limit", 2, 0.0, 5e-3, false, "mu = 2m, |q|B = 1e-3 m^2, T = 0"};
  for (Spin spin : {Spin::kThreeHalves, Spin::kHalf}) {
    GasState s;
    s.mu = 2.0;
    s.B = 1e-3;
    s.species = {"", 1.0, 1.0, spin};
    const double states = spin == Spin::kThreeHalves ? 4.0 : 2.0;
    const double limit = states * std::pow(3.0, 1.5) / (6.0 * std::numbers::pi * std::numbers::pi);
    r.max_residual = std::max(r.max_residual, std::abs(number_density_T0(s) / limit - 1.0));
  }
  r.pass = r.max_residual <= r.threshold;
  return r;
}

SuiteResult critical_flag() {
  SuiteResult r{"critical_field_flag", 0, 0.0, 0.0, false, ""};
  int wrong = 0;
  const std::vector<double> pz{0.0};
  for (double m : {0.5, 1.0, 2.0}) {
    for (double q : {0.5, 1.0, 3.0}) {
      for (int n = 1; n <= 6; ++n) {
        const double bc = m * m / (2.0 * n * q);
        for (double B : {0.5 * bc, bc, std::nextafter(bc, 0.0), std::nextafter(bc, 10.0 * bc), 2.0 * bc}) {
          const auto rows = spectrum_table(n, pz, m, q, B);
          for (const auto& row : rows) {
            const bool want = row.n >= 1 && B > m * m / (2.0 * row.n * q);
            wrong += row.strong_field != want;
            ++r.cases;
          }
          wrong += rows.back().strong_field && B == bc;
        }
      }
    }
  }
  r.max_residual = wrong;
  r.pass = wrong == 0;
  return r;
}

}  // namespace

std::vector<SuiteResult> run_verify(const VerifyOptions& options) {
  Rng rng(options.seed);
  std::vector<SuiteResult> out;
  out.push_back(clifford(options));
  out.push_back(lagrangian());
  out.push_back(free_equivalence(rng));
  out.push_back(orthonormality());
  out.push_back(ladder(rng));
  dirac_suites(rng, out);
  degeneracy_suites(rng, out);
  out.push_back(labels());
  out.push_back(gas_continuum());
  out.push_back(critical_flag());
  return out;
}

}  // namespace rsmag::cli
