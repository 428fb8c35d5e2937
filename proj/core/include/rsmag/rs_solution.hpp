#pragma once

#include <array>
#include <complex>

#include "rsmag/gamma_algebra.hpp"
#include "rsmag/oscillator_basis.hpp"

namespace rsmag {

/// One Landau mode of a charged spin-3/2 field in the gauge A^mu = (0, 0, xB, 0).
/// Natural units; `B` and `q_abs` enter only through |q|B except for the
/// critical-field flag.
struct ModeSpec {
  int n = 0;
  int eps = +1;    ///< sign of the energy
  int eps_q = +1;  ///< sign of the charge
  double q_abs = 1.0;
  double B = 1.0;
  double m = 1.0;
  double py = 0.0;
  double pz = 0.0;

  double qB() const { return q_abs * B; }
  double energy() const;
  double p_n() const { return landau_momentum(n, qB()); }
  XiMapping xi_mapping() const { return XiMapping(qB(), py, eps, eps_q); }

  /// Throws std::invalid_argument on n < 0, bad signs, or non-positive
  /// |q|, B or m. A zero field has no Landau structure and is rejected.
  void validate() const;
};

/// E = sqrt(p_z^2 + m^2 + 2 n |q|B).
double energy(const ModeSpec& mode);

/// B_c = m^2 / (2 n |q|), above which the spectrum carries the strong-field
/// flag. Throws std::invalid_argument for n < 1.
double critical_field(int n, double m, double q_abs);

/// True iff n >= 1 and B > m^2 / (2 n |q|). The boundary itself is unflagged.
bool strong_field(int n, double B, double m, double q_abs);

/// C[mu][a]: Lorentz index mu (covariant; 0, x, y, z) by spinor slot a.
using CoefficientArray = std::array<std::array<Complex, 4>, 4>;

/// The two independent amplitudes (slots 1, 2) per Lorentz index.
using FreeCoefficients = std::array<std::array<Complex, 2>, 4>;

struct VectorSpinorCoefficients {
  CoefficientArray C{};

  double norm() const;
};

/// Oscillator index carried by spinor slot a (0-based) of `mode`:
/// eps_q = +1 puts v_n in slots 0, 2 and v_{n-1} in slots 1, 3; eps_q = -1
/// swaps them.
int slot_index(const ModeSpec& mode, int slot);

/// Fill slots 3, 4 from slots 1, 2 through the Dirac relation
///   C3 = ( eps p_z C1 + i eps_q p_n C2) / (eps E + m)
///   C4 = (-i eps_q p_n C1 - eps p_z C2) / (eps E + m)
/// and zero every slot whose oscillator index is negative. Throws
/// DenominatorSingular when |eps E + m| <= 1e-12 (E + m).
VectorSpinorCoefficients complete_coefficients(const ModeSpec& mode, const FreeCoefficients& free);

struct SpacetimePoint {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// psi_mu(x, t) = f_mu(x) exp(-i eps E t + i eps p_y y + i eps p_z z) with
/// f_{mu a}(x) = C_{mu a} v_{k(a)}(xi(x)).
class ModeFunction {
 public:
  ModeFunction(const ModeSpec& mode, const VectorSpinorCoefficients& coeffs);

  const ModeSpec& mode() const { return mode_; }
  const VectorSpinorCoefficients& coefficients() const { return coeffs_; }
  int basis_index(int slot) const { return index_[slot]; }
  double energy() const { return energy_; }

  /// Amplitude scale ||C||_F * pi^{-1/4}; |psi| never exceeds it by much.
  double scale() const;

  Complex phase(const SpacetimePoint& p) const;

  /// psi_mu at the point.
  VectorSpinor evaluate(const SpacetimePoint& p) const;

  /// d psi_mu / dx at the point, from the ladder identities
  /// d/dx = (O1 + O2) / (2i); no finite differences.
  VectorSpinor x_derivative(const SpacetimePoint& p) const;

 private:
  ModeSpec mode_;
  VectorSpinorCoefficients coeffs_;
  std::array<int, 4> index_{};
  double energy_ = 0.0;
};

VectorSpinor evaluate_mode(const ModeFunction& mf, const SpacetimePoint& p);

/// (i gamma^mu D_mu - m) psi_nu for each nu, D_mu = d_mu - i eps_q |q|B x delta_{mu 2}.
/// t, y, z derivatives come from the phase and the x derivative from the
/// ladder identities.
VectorSpinor dirac_residual(const ModeFunction& mf, const SpacetimePoint& p);

/// Same residual with every derivative taken by second-order central
/// differences of step h. Cross-check path only.
VectorSpinor dirac_residual_fd(const ModeFunction& mf, const SpacetimePoint& p, double h);

struct SubsidiaryResiduals {
  Spinor gamma_trace;           ///< gamma^mu psi_mu
  Spinor covariant_divergence;  ///< g^{mu nu} D_nu psi_mu
};

SubsidiaryResiduals subsidiary_residuals(const ModeFunction& mf, const SpacetimePoint& p);

/// Spatial vector potential (A_x, A_y, A_z) = (0, x B, 0) of a uniform field
/// B e_z. The covariant derivative uses it through D_mu = d_mu + i q A_mu with
/// A_2 = -A_y.
std::array<double, 3> vector_potential(double B, const SpacetimePoint& p);

}  // namespace rsmag
