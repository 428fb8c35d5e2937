#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

namespace rsmag {

/// Landau-level momentum p_n = sqrt(2 n |q|B); zero for n <= 0.
double landau_momentum(int n, double qB);

/// Normalised oscillator function
///
///   v_n(xi) = (sqrt(pi) 2^n n!)^{-1/2} H_n(xi) exp(-xi^2 / 2),
///
/// with v_n = 0 for n < 0. Evaluated by the normalised three-term recurrence
/// with running rescaling, so it stays finite for n <= 500 and |xi| <= 40.
double eval_v(int n, double xi);

/// v_0(xi), ..., v_{n_max}(xi) in one recurrence pass.
std::vector<double> eval_v_table(int n_max, double xi);

/// Normalised Hermite polynomials h_n(xi) = v_n(xi) exp(xi^2 / 2), n = 0..n_max.
std::vector<double> normalized_hermite_table(int n_max, double xi);

/// The two first-order operators of the Landau problem,
/// O1 = i(eps p_y - eps_q |q|B x + d/dx) and O2 = i(-eps p_y + eps_q |q|B x + d/dx).
enum class Ladder { kO1, kO2 };

/// O v_n = coefficient * v_index.
struct LadderResult {
  std::complex<double> coefficient;
  int index = 0;
};

/// Exact action of O1/O2 on v_n for charge sign eps_q:
///   eps_q = +1:  O1 v_n = -i p_{n+1} v_{n+1},  O2 v_n =  i p_n v_{n-1}
///   eps_q = -1:  O1 v_n =  i p_n v_{n-1},      O2 v_n = -i p_{n+1} v_{n+1}
/// An index of -1 carries coefficient i p_0 = 0. Throws std::invalid_argument
/// for n < 0 or eps_q not in {+1, -1}.
LadderResult ladder_action(Ladder which, int eps_q, int n, double qB = 1.0);

/// Affine map between the lab coordinate x and the oscillator variable
/// xi = sqrt(|q|B) x - eps eps_q p_y / sqrt(|q|B).
class XiMapping {
 public:
  XiMapping(double qB, double py, int eps, int eps_q);

  double xi(double x) const { return scale_ * x - offset_; }
  double x(double xi) const { return (xi + offset_) / scale_; }
  /// d xi / d x = sqrt(|q|B).
  double scale() const { return scale_; }

 private:
  double scale_;
  double offset_;
};

/// |O v_n(xi) - coefficient * v_index(xi)| with O applied in its xi form,
/// i sqrt(|q|B) (-+eps_q xi + d/dxi), and d/dxi taken by central differences
/// of step h. The discrepancy is O(h^2).
double check_ladder_numeric(Ladder which, int eps_q, int n, double xi, double h, double qB = 1.0);

/// Gauss-Hermite rule for the weight exp(-xi^2).
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch rule with `points` nodes. Rules are cached; the returned
/// reference stays valid for the lifetime of the program.
const GaussHermiteRule& gauss_hermite_rule(int points);

/// Matrix of overlaps int v_n v_m dxi for n, m <= n_max, by Gauss-Hermite
/// quadrature. Throws std::invalid_argument when points < n_max + 1.
Eigen::MatrixXd orthonormality_matrix(int n_max, int quadrature_points);

}  // namespace rsmag
