#pragma once

#include <array>
#include <vector>

#include "rsmag/gamma_algebra.hpp"

namespace rsmag {

/// Which of the free subsidiary conditions a plane-wave amplitude must obey.
/// The Dirac form (pslash - m) u_mu = 0 and p^mu u_mu = 0 are always imposed.
enum class FreeConstraints {
  kFull,            ///< also gamma^mu u_mu = 0
  kDropGammaTrace,  ///< gamma^mu u_mu unconstrained
};

/// Positive-energy plane wave psi_mu(x) = u_mu exp(-i p.x) at zero field.
class FreePlaneWave {
 public:
  /// `momentum` is the spatial 3-momentum; the energy is sqrt(p^2 + m^2).
  FreePlaneWave(const std::array<double, 3>& momentum, double mass, VectorSpinor amplitude);

  VectorSpinor value(const std::array<double, 4>& x) const;
  VectorSpinorJet jet(const std::array<double, 4>& x) const;

  const std::array<double, 4>& four_momentum() const { return p_upper_; }
  double mass() const { return mass_; }
  const VectorSpinor& amplitude() const { return amplitude_; }

  /// Frobenius norm of the 16 amplitude components.
  double amplitude_norm() const;

 private:
  std::array<double, 4> p_upper_;
  double mass_;
  VectorSpinor amplitude_;
};

/// Orthonormal basis (in C^16) of the amplitudes allowed by `constraints`,
/// obtained as the numerical nullspace of the stacked linear conditions.
std::vector<VectorSpinor> free_amplitude_basis(const std::array<double, 3>& momentum, double mass,
                                               FreeConstraints constraints = FreeConstraints::kFull);

/// Amplitudes obeying the Dirac form and p^mu u_mu = 0 that are orthogonal
/// to every gamma-traceless solution, so gamma^mu u_mu != 0 for all of them.
std::vector<VectorSpinor> gamma_trace_violating_amplitudes(const std::array<double, 3>& momentum,
                                                           double mass);

}  // namespace rsmag
