#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rsmag/free_field.hpp"
#include "rsmag/gamma_algebra.hpp"

namespace rsmag {
namespace {

const ComplexMatrix4 kId = ComplexMatrix4::Identity();

TEST(GammaSet, CliffordAlgebraIsExact) {
  const GammaSet g = build_gamma_set();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const ComplexMatrix4 expected = 2.0 * Metric::g(mu, nu) * kId;
      EXPECT_TRUE(anticommutator(g.upper[mu], g.upper[nu]) == expected) << mu << "," << nu;
    }
  }
}

TEST(GammaSet, Examples) {
  const GammaSet g = build_gamma_set();
  EXPECT_TRUE(anticommutator(g.upper[0], g.upper[0]) == 2.0 * kId);
  EXPECT_TRUE(anticommutator(g.upper[1], g.upper[2]) == ComplexMatrix4::Zero());
  EXPECT_TRUE(g.gamma5 * g.gamma5 == kId);
}

TEST(GammaSet, HermiticityPattern) {
  const GammaSet g = build_gamma_set();
  EXPECT_TRUE(g.upper[0].adjoint() == g.upper[0]);
  for (int k = 1; k < 4; ++k) EXPECT_TRUE(g.upper[k].adjoint() == -g.upper[k]) << k;
}

TEST(GammaSet, DiracRepresentationBlocks) {
  const GammaSet g = build_gamma_set();
  EXPECT_TRUE(g.upper[0] == ComplexMatrix4(Eigen::Vector4cd(1, 1, -1, -1).asDiagonal()));
  // gamma5 is off-diagonal identity blocks in this representation.
  ComplexMatrix4 g5 = ComplexMatrix4::Zero();
  g5.topRightCorner<2, 2>().setIdentity();
  g5.bottomLeftCorner<2, 2>().setIdentity();
  EXPECT_TRUE(g.gamma5 == g5);
}

TEST(GammaSet, SigmaAntisymmetry) {
  const GammaSet g = build_gamma_set();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) EXPECT_TRUE(g.sigma[mu][nu] == -g.sigma[nu][mu]);
  }
}

TEST(GammaSet, LowerIndex) {
  const GammaSet g = build_gamma_set();
  EXPECT_TRUE(g.lower(0) == g.upper[0]);
  EXPECT_TRUE(g.lower(2) == -g.upper[2]);
}

TEST(RSMatrices, CoefficientsAtConventionalA) {
  auto m = build_rs_matrices(-1.0);
  EXPECT_DOUBLE_EQ(m.B_of_A, 1.0);
  EXPECT_DOUBLE_EQ(m.C_of_A, 1.0);
  m = build_rs_matrices(0.0);
  EXPECT_DOUBLE_EQ(m.B_of_A, 0.5);
  EXPECT_DOUBLE_EQ(m.C_of_A, 1.0);
  // (3/2)(1/9) - 1/3 + 1/2 = 1/3.
  m = build_rs_matrices(-1.0 / 3.0);
  EXPECT_NEAR(m.B_of_A, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(m.C_of_A, 1.0 / 3.0, 1e-15);
}

TEST(RSMatrices, CoefficientPolynomials) {
  for (double a : {-2.0, -0.75, -0.25, 0.1, 1.0, 3.5}) {
    EXPECT_DOUBLE_EQ(rs_coefficient_b(a), 1.5 * a * a + a + 0.5);
    EXPECT_DOUBLE_EQ(rs_coefficient_c(a), 3.0 * a * a + 3.0 * a + 1.0);
    EXPECT_NEAR(rs_coefficient_c(a), 2.0 * rs_coefficient_b(a) + a, 1e-14);
  }
}

TEST(RSMatrices, RejectsMinusOneHalf) { EXPECT_THROW(build_rs_matrices(-0.5), std::domain_error); }

TEST(RSMatrices, AtMinusOneTheMatricesAreAntisymmetric) {
  // A = -1 is the Levi-Civita form: Gamma_{mu alpha nu} is totally
  // antisymmetric and B_{mu nu} = i sigma_{mu nu}.
  const auto m = build_rs_matrices(-1.0);
  const GammaSet g = build_gamma_set();
  auto lowered = [&](int mu, int alpha, int nu) {
    return ComplexMatrix4(double(Metric::diag[alpha]) * m.gamma_matrix[mu][alpha][nu]);
  };
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        EXPECT_LT((lowered(a, b, c) + lowered(b, a, c)).norm(), 1e-14);
        EXPECT_LT((lowered(a, b, c) + lowered(a, c, b)).norm(), 1e-14);
      }
      const ComplexMatrix4 sigma_lower = double(Metric::diag[a] * Metric::diag[b]) * g.sigma[a][b];
      EXPECT_LT((m.mass_matrix[a][b] - Complex(0, 1) * sigma_lower).norm(), 1e-14);
    }
  }
}

TEST(RSMatrices, GenericAIsSymmetricInOuterIndices) {
  // For A != -1 the symmetric part of Gamma_mu^alpha_nu under mu <-> nu is
  // nonzero; it vanishes only at the Levi-Civita point.
  const auto m = build_rs_matrices(0.0);
  double sym = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) sym += (m.gamma_matrix[a][b][c] + m.gamma_matrix[c][b][a]).norm();
  EXPECT_GT(sym, 1.0);
}

TEST(LeviCivita, Convention) {
  EXPECT_EQ(levi_civita(0, 1, 2, 3), 1);
  EXPECT_EQ(levi_civita(1, 0, 2, 3), -1);
  EXPECT_EQ(levi_civita(3, 2, 1, 0), 1);
  EXPECT_EQ(levi_civita(0, 0, 2, 3), 0);
}

TEST(FreeField, ConstrainedBasisHasFourStates) {
  EXPECT_EQ(free_amplitude_basis({0.0, 0.0, 0.8}, 1.0).size(), 4u);
  EXPECT_EQ(free_amplitude_basis({0.3, -0.4, 0.8}, 1.3).size(), 4u);
  EXPECT_EQ(gamma_trace_violating_amplitudes({0.0, 0.0, 0.8}, 1.0).size(), 2u);
}

TEST(FreeField, ZeroFieldGivesZeroResidual) {
  VectorSpinorJet zero;
  for (auto& s : zero.value) s.setZero();
  for (auto& d : zero.derivative)
    for (auto& s : d) s.setZero();
  EXPECT_EQ(max_abs(rs_operator_levi_civita(zero, 1.0)), 0.0);
}

TEST(FreeField, LeviCivitaFormVanishesOnConstrainedModes) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    const std::array<double, 3> p{u(rng), u(rng), u(rng)};
    const double m = 0.5 + 0.5 * (u(rng) + 2.0);
    VectorSpinor amp;
    for (auto& s : amp) s.setZero();
    for (const auto& b : free_amplitude_basis(p, m)) {
      const Complex c = oracle::random_complex(rng);
      for (int mu = 0; mu < 4; ++mu) amp[mu] += c * b[mu];
    }
    const FreePlaneWave wave(p, m, amp);
    const auto jet = wave.jet({u(rng), u(rng), u(rng), u(rng)});
    EXPECT_LT(max_abs(free_dirac_residual(jet, m)), 1e-13 * wave.amplitude_norm());
    EXPECT_LT(max_abs(gamma_trace(jet.value)), 1e-13 * wave.amplitude_norm());
    EXPECT_LT(max_abs(free_divergence(jet)), 1e-13 * wave.amplitude_norm());
    EXPECT_LT(max_abs(rs_operator_levi_civita(jet, m)), 1e-12 * wave.amplitude_norm());
  }
}

TEST(FreeField, DroppingTheGammaTraceBreaksTheLeviCivitaForm) {
  const std::array<double, 3> p{0.0, 0.0, 1.1};
  for (const auto& amp : gamma_trace_violating_amplitudes(p, 1.0)) {
    const FreePlaneWave wave(p, 1.0, amp);
    const auto jet = wave.jet({0.1, 0.2, 0.3, 0.4});
    EXPECT_LT(max_abs(free_dirac_residual(jet, 1.0)), 1e-13);
    EXPECT_GT(max_abs(gamma_trace(jet.value)), 1e-3);
    EXPECT_GT(max_abs(rs_operator_levi_civita(jet, 1.0)), 1e-3);
  }
}

}  // namespace
}  // namespace rsmag
