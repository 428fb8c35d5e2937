#pragma once

#include <vector>

#include <Eigen/Core>

#include "rsmag/rs_solution.hpp"

namespace rsmag {

/// Free amplitude C_{mu, slot+1} with slot in {0, 1}.
struct CoefficientLabel {
  int mu = 0;
  int slot = 0;

  friend bool operator==(const CoefficientLabel&, const CoefficientLabel&) = default;
};

enum class ConstraintSource {
  kDivergence,  ///< D^mu psi_mu = 0
  kGammaTrace,  ///< gamma^mu psi_mu = 0
};

/// A row is the coefficient of v_{basis_index} in spinor component
/// `component` (0-based) of one of the two subsidiary conditions.
struct ConstraintRow {
  ConstraintSource source = ConstraintSource::kGammaTrace;
  int component = 0;
  int basis_index = 0;
};

/// Homogeneous linear system over the active free amplitudes. Slots 3, 4
/// are eliminated through the Dirac relation, and amplitudes that multiply
/// v_{-1} are not unknowns at all.
struct ConstraintSystem {
  ModeSpec mode;
  int n_q = 0;  ///< index carried by spinor components 1, 3
  int m_q = 0;  ///< index carried by spinor components 2, 4
  std::vector<CoefficientLabel> unknowns;
  std::vector<ConstraintRow> rows;
  Eigen::MatrixXcd matrix;
};

/// Build the rows of the divergence and gamma-trace conditions, one per
/// (condition, spinor component, v_k) with k >= 0. The divergence rows are
/// -i g^{mu nu} D_nu psi_mu with the x/y terms expanded by ladder_action:
///
///   v_k:         -eps E C_{0b} - eps p_z C_{zb}
///   O1 shifted:  (1/2) c1 (C_{xb} + i C_{yb})
///   O2 shifted:  (1/2) c2 (C_{xb} - i C_{yb})
///
/// where O v_k = c v_{k'}. The gamma-trace rows are the spinor components
/// of gamma^0 C_0 + gamma^1 C_x + gamma^2 C_y + gamma^3 C_z split by basis
/// function. With `deduplicate`, identically zero rows and rows parallel
/// to an earlier row are dropped. Propagates DenominatorSingular.
ConstraintSystem assemble_constraints(const ModeSpec& mode, bool deduplicate = true);

/// Label (l, s) of a state through n = l - (s/2) eps_q + 1/2.
struct SpinLabel {
  int l = 0;
  int s = 0;

  friend bool operator==(const SpinLabel&, const SpinLabel&) = default;
};

struct DegeneracyReport {
  int n = 0;
  int eps_q = 0;
  int nullity = 0;
  int rank = 0;
  int expected = 0;  ///< g_n from the closed-form degeneracy law
  double gap = 0.0;  ///< smallest kept / largest dropped singular value
  std::vector<double> singular_values;
  std::vector<Eigen::VectorXcd> basis;  ///< orthonormal, over ConstraintSystem::unknowns
  std::vector<SpinLabel> spin_labels;
  ConstraintSystem system;

  bool matches_formula() const { return nullity == expected; }
};

/// Numerical nullspace of the constraint system. A singular value counts as
/// zero when it is <= svd_tol * sigma_max. Throws IllConditioned when any
/// singular value lies within a factor 10 of that cut.
DegeneracyReport degeneracy(const ModeSpec& mode, double svd_tol = 1e-10);

/// Scatter a nullspace vector back into (C_{mu1}, C_{mu2}) form.
FreeCoefficients expand_free(const ConstraintSystem& system, const Eigen::VectorXcd& vector);

/// All (l, s), l >= 0, s in {-3, -1, 1, 3} with n = l - (s/2) eps_q + 1/2.
std::vector<SpinLabel> spin_labels(int n, int eps_q);

/// g_n = 4 - delta_{n1} - 2 delta_{n0}. Throws std::invalid_argument for n < 0.
int degeneracy_formula(int n);

}  // namespace rsmag
