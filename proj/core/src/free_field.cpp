#include "rsmag/free_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/SVD>

namespace rsmag {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kNullTol = 1e-10;

Eigen::VectorXcd flatten(const VectorSpinor& psi) {
  Eigen::VectorXcd v(16);
  for (int mu = 0; mu < 4; ++mu) v.segment<4>(4 * mu) = psi[mu];
  return v;
}

VectorSpinor unflatten(const Eigen::VectorXcd& v) {
  VectorSpinor psi;
  for (int mu = 0; mu < 4; ++mu) psi[mu] = v.segment<4>(4 * mu);
  return psi;
}

std::array<double, 4> on_shell(const std::array<double, 3>& p, double mass) {
  const double e = std::sqrt(mass * mass + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  return {e, p[0], p[1], p[2]};
}

// Rows: (pslash - m) u_mu per mu, p^mu u_mu, optionally gamma^mu u_mu.
Eigen::MatrixXcd constraint_matrix(const std::array<double, 4>& p, double mass, bool gamma_trace_rows) {
  const GammaSet g = build_gamma_set();
  ComplexMatrix4 pslash = ComplexMatrix4::Zero();
  for (int mu = 0; mu < 4; ++mu) pslash += (Metric::diag[mu] * p[mu]) * g.upper[mu];
  const ComplexMatrix4 dirac = pslash - mass * ComplexMatrix4::Identity();

  const int rows = 16 + 4 + (gamma_trace_rows ? 4 : 0);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rows, 16);
  for (int mu = 0; mu < 4; ++mu) {
    a.block<4, 4>(4 * mu, 4 * mu) = dirac;
    a.block<4, 4>(16, 4 * mu) = p[mu] * ComplexMatrix4::Identity();
    if (gamma_trace_rows) a.block<4, 4>(20, 4 * mu) = g.upper[mu];
  }
  return a;
}

std::vector<Eigen::VectorXcd> nullspace(const Eigen::MatrixXcd& a) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = kNullTol * s(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cut) ++rank;
  }
  std::vector<Eigen::VectorXcd> out;
  for (int j = rank; j < a.cols(); ++j) out.push_back(svd.matrixV().col(j));
  return out;
}

}  // namespace

FreePlaneWave::FreePlaneWave(const std::array<double, 3>& momentum, double mass, VectorSpinor amplitude)
    : p_upper_(on_shell(momentum, mass)), mass_(mass), amplitude_(std::move(amplitude)) {
  if (!(mass > 0.0)) throw std::invalid_argument("FreePlaneWave: mass must be positive");
}

VectorSpinor FreePlaneWave::value(const std::array<double, 4>& x) const {
  // p.x = p^0 t - p.r
  const double phase_arg = p_upper_[0] * x[0] - p_upper_[1] * x[1] - p_upper_[2] * x[2] - p_upper_[3] * x[3];
  const Complex phase = std::exp(-kI * phase_arg);
  VectorSpinor psi;
  for (int mu = 0; mu < 4; ++mu) psi[mu] = phase * amplitude_[mu];
  return psi;
}

VectorSpinorJet FreePlaneWave::jet(const std::array<double, 4>& x) const {
  VectorSpinorJet j;
  j.value = value(x);
  for (int rho = 0; rho < 4; ++rho) {
    // d_rho exp(-i p.x) = -i p_rho exp(-i p.x)
    const Complex factor = -kI * (Metric::diag[rho] * p_upper_[rho]);
    for (int lambda = 0; lambda < 4; ++lambda) j.derivative[rho][lambda] = factor * j.value[lambda];
  }
  return j;
}

double FreePlaneWave::amplitude_norm() const { return flatten(amplitude_).norm(); }

std::vector<VectorSpinor> free_amplitude_basis(const std::array<double, 3>& momentum, double mass,
                                               FreeConstraints constraints) {
  const auto p = on_shell(momentum, mass);
  const auto vectors = nullspace(constraint_matrix(p, mass, constraints == FreeConstraints::kFull));
  std::vector<VectorSpinor> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(unflatten(v));
  return out;
}

std::vector<VectorSpinor> gamma_trace_violating_amplitudes(const std::array<double, 3>& momentum,
                                                           double mass) {
  const auto full = free_amplitude_basis(momentum, mass, FreeConstraints::kFull);
  const auto wide = free_amplitude_basis(momentum, mass, FreeConstraints::kDropGammaTrace);

  // Project the wide space onto the orthogonal complement of the full one.
  Eigen::MatrixXcd w(16, static_cast<Eigen::Index>(wide.size()));
  for (std::size_t j = 0; j < wide.size(); ++j) w.col(static_cast<Eigen::Index>(j)) = flatten(wide[j]);
  for (const auto& f : full) {
    const Eigen::VectorXcd fv = flatten(f);
    w -= fv * (fv.adjoint() * w);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(w, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  std::vector<VectorSpinor> out;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > kNullTol * std::max(1.0, s(0))) out.push_back(unflatten(svd.matrixU().col(i)));
  }
  return out;
}

}  // namespace rsmag
