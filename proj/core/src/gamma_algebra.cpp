#include "rsmag/gamma_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsmag {

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexMatrix4 block(const Eigen::Matrix2cd& tl, const Eigen::Matrix2cd& tr, const Eigen::Matrix2cd& bl,
                     const Eigen::Matrix2cd& br) {
  ComplexMatrix4 m;
  m << tl, tr, bl, br;
  return m;
}

}  // namespace

GammaSet build_gamma_set() {
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd zero = Eigen::Matrix2cd::Zero();
  Eigen::Matrix2cd s1, s2, s3;
  s1 << 0, 1, 1, 0;
  s2 << 0, -kI, kI, 0;
  s3 << 1, 0, 0, -1;

  GammaSet g;
  g.upper[0] = block(id, zero, zero, -id);
  g.upper[1] = block(zero, s1, -s1, zero);
  g.upper[2] = block(zero, s2, -s2, zero);
  g.upper[3] = block(zero, s3, -s3, zero);
  g.gamma5 = kI * g.upper[0] * g.upper[1] * g.upper[2] * g.upper[3];
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      g.sigma[mu][nu] = 0.5 * kI * (g.upper[mu] * g.upper[nu] - g.upper[nu] * g.upper[mu]);
    }
  }
  return g;
}

ComplexMatrix4 anticommutator(const ComplexMatrix4& a, const ComplexMatrix4& b) { return a * b + b * a; }

double rs_coefficient_b(double A) { return 1.5 * A * A + A + 0.5; }

double rs_coefficient_c(double A) { return 3.0 * A * A + 3.0 * A + 1.0; }

RSLagrangianMatrices build_rs_matrices(double A) {
  if (A == -0.5) throw std::domain_error("build_rs_matrices: A = -1/2 is excluded");

  const GammaSet g = build_gamma_set();
  const ComplexMatrix4 id = ComplexMatrix4::Identity();

  RSLagrangianMatrices out;
  out.A = A;
  out.B_of_A = rs_coefficient_b(A);
  out.C_of_A = rs_coefficient_c(A);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const double g_mn = Metric::g(mu, nu);
      for (int alpha = 0; alpha < 4; ++alpha) {
        // g_nu^alpha and g_mu^alpha are Kronecker deltas.
        ComplexMatrix4 m = g_mn * g.upper[alpha];
        if (nu == alpha) m += A * g.lower(mu);
        if (mu == alpha) m += A * g.lower(nu);
        m += out.B_of_A * g.lower(mu) * g.upper[alpha] * g.lower(nu);
        out.gamma_matrix[mu][alpha][nu] = m;
      }
      out.mass_matrix[mu][nu] = g_mn * id - out.C_of_A * g.lower(mu) * g.lower(nu);
    }
  }
  return out;
}

int levi_civita(int mu, int nu, int rho, int lambda) {
  std::array<int, 4> p{mu, nu, rho, lambda};
  for (int v : p) {
    if (v < 0 || v > 3) return 0;
  }
  int sign = 1;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) sign = -sign;
    }
  }
  return sign;
}

VectorSpinor rs_operator_levi_civita(const VectorSpinorJet& field, double mass) {
  static const GammaSet g = build_gamma_set();
  VectorSpinor out;
  for (int mu = 0; mu < 4; ++mu) {
    Spinor r = Spinor::Zero();
    for (int nu = 0; nu < 4; ++nu) {
      const ComplexMatrix4 g5g = g.gamma5 * g.lower(nu);
      for (int rho = 0; rho < 4; ++rho) {
        for (int lambda = 0; lambda < 4; ++lambda) {
          const int e = levi_civita(mu, nu, rho, lambda);
          if (e == 0) continue;
          r += (kI * double(e)) * (g5g * field.derivative[rho][lambda]);
        }
      }
    }
    for (int lambda = 0; lambda < 4; ++lambda) r += mass * (g.sigma[mu][lambda] * field.value[lambda]);
    out[mu] = r;
  }
  return out;
}

VectorSpinor free_dirac_residual(const VectorSpinorJet& field, double mass) {
  static const GammaSet g = build_gamma_set();
  VectorSpinor out;
  for (int nu = 0; nu < 4; ++nu) {
    Spinor r = -mass * field.value[nu];
    for (int mu = 0; mu < 4; ++mu) r += kI * (g.upper[mu] * field.derivative[mu][nu]);
    out[nu] = r;
  }
  return out;
}

Spinor gamma_trace(const VectorSpinor& psi) {
  static const GammaSet g = build_gamma_set();
  Spinor r = Spinor::Zero();
  for (int mu = 0; mu < 4; ++mu) r += g.upper[mu] * psi[mu];
  return r;
}

Spinor free_divergence(const VectorSpinorJet& field) {
  Spinor r = Spinor::Zero();
  for (int mu = 0; mu < 4; ++mu) r += double(Metric::diag[mu]) * field.derivative[mu][mu];
  return r;
}

double max_abs(const Spinor& s) { return s.cwiseAbs().maxCoeff(); }

double max_abs(const VectorSpinor& psi) {
  double m = 0.0;
  for (const auto& s : psi) m = std::max(m, max_abs(s));
  return m;
}

}  // namespace rsmag
