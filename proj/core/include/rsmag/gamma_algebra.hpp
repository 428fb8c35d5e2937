#pragma once

#include <array>
#include <complex>

#include <Eigen/Core>

namespace rsmag {

using Complex = std::complex<double>;
using ComplexMatrix4 = Eigen::Matrix4cd;
using Spinor = Eigen::Vector4cd;

/// Four Dirac spinors indexed by a Lorentz index (0, x, y, z).
using VectorSpinor = std::array<Spinor, 4>;

/// Minkowski metric, signature (+, -, -, -).
struct Metric {
  static constexpr std::array<int, 4> diag{1, -1, -1, -1};
  static constexpr int g(int mu, int nu) { return mu == nu ? diag[mu] : 0; }
};

/// Dirac-representation gamma matrices and the operators built from them.
///
/// `upper[mu]` is gamma^mu, `sigma[mu][nu]` is (i/2)[gamma^mu, gamma^nu] and
/// `gamma5` is i gamma^0 gamma^1 gamma^2 gamma^3. Every entry lies in
/// {0, +-1, +-i}, so products of a few of them are exact in floating point.
struct GammaSet {
  std::array<ComplexMatrix4, 4> upper;
  ComplexMatrix4 gamma5;
  std::array<std::array<ComplexMatrix4, 4>, 4> sigma;

  /// gamma_mu = g_{mu nu} gamma^nu.
  ComplexMatrix4 lower(int mu) const { return double(Metric::diag[mu]) * upper[mu]; }
};

GammaSet build_gamma_set();

ComplexMatrix4 anticommutator(const ComplexMatrix4& a, const ComplexMatrix4& b);

/// Matrices of the A-parameterised spin-3/2 Lagrangian.
///
/// gamma_matrix[mu][alpha][nu] holds Gamma_mu^alpha_nu (mu, nu lower, alpha
/// upper) and mass_matrix[mu][nu] holds B_{mu nu}.
struct RSLagrangianMatrices {
  double A = 0.0;
  double B_of_A = 0.0;
  double C_of_A = 0.0;
  std::array<std::array<std::array<ComplexMatrix4, 4>, 4>, 4> gamma_matrix;
  std::array<std::array<ComplexMatrix4, 4>, 4> mass_matrix;
};

double rs_coefficient_b(double A);
double rs_coefficient_c(double A);

/// Throws std::domain_error for A = -1/2, where the Lagrangian degenerates.
RSLagrangianMatrices build_rs_matrices(double A);

/// Totally antisymmetric symbol with upper indices, eps^{0123} = +1.
int levi_civita(int mu, int nu, int rho, int lambda);

/// Value and first partial derivatives of a vector-spinor at one point.
/// `derivative[rho][lambda]` is d_rho psi_lambda (rho = t, x, y, z).
struct VectorSpinorJet {
  VectorSpinor value;
  std::array<VectorSpinor, 4> derivative;
};

/// Residual of the Levi-Civita form of the free spin-3/2 field equation,
///
///   R^mu = (i eps^{mu nu rho lambda} gamma5 gamma_nu d_rho + m sigma^{mu lambda}) psi_lambda,
///
/// one spinor per free index mu. With eps^{0123} = +1 the factor i on the
/// derivative term is what makes R vanish on fields obeying the Dirac form
/// together with gamma.psi = 0 and d.psi = 0.
VectorSpinor rs_operator_levi_civita(const VectorSpinorJet& field, double mass);

/// (i gamma^mu d_mu - m) psi_nu for every nu.
VectorSpinor free_dirac_residual(const VectorSpinorJet& field, double mass);

/// gamma^mu psi_mu.
Spinor gamma_trace(const VectorSpinor& psi);

/// d^mu psi_mu.
Spinor free_divergence(const VectorSpinorJet& field);

double max_abs(const Spinor& s);
double max_abs(const VectorSpinor& psi);

}  // namespace rsmag
