#include "rsmag/rs_solution.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rsmag/errors.hpp"

namespace rsmag {

namespace {

constexpr Complex kI{0.0, 1.0};
const double kV0 = std::pow(std::numbers::pi, -0.25);

const GammaSet& gammas() {
  static const GammaSet g = build_gamma_set();
  return g;
}

// i q A_2 for A_2 = -A_y: the gauge part of D_2 (the y component).
Complex gauge_term(const ModeSpec& mode, const SpacetimePoint& p) {
  const double q = mode.eps_q * mode.q_abs;
  const double a_lower_2 = -vector_potential(mode.B, p)[1];
  return kI * q * a_lower_2;
}

// (i gamma^mu D_mu - m) acting on one Lorentz component, given its
// derivatives d_t, d_x, D_2 (gauge-covariant y), d_z.
Spinor dirac_operator(const Spinor& psi, const Spinor& dt, const Spinor& dx, const Spinor& dy_cov,
                      const Spinor& dz, double m) {
  const GammaSet& g = gammas();
  return kI * (g.upper[0] * dt + g.upper[1] * dx + g.upper[2] * dy_cov + g.upper[3] * dz) - m * psi;
}

}  // namespace

void ModeSpec::validate() const {
  if (n < 0) throw std::invalid_argument("ModeSpec: n must be >= 0");
  if (eps != 1 && eps != -1) throw std::invalid_argument("ModeSpec: eps must be +1 or -1");
  if (eps_q != 1 && eps_q != -1) throw std::invalid_argument("ModeSpec: eps_q must be +1 or -1");
  if (!(q_abs > 0.0)) throw std::invalid_argument("ModeSpec: |q| must be positive");
  if (!(B > 0.0)) throw std::invalid_argument("ModeSpec: B must be positive");
  if (!(m > 0.0)) throw std::invalid_argument("ModeSpec: m must be positive");
  if (!std::isfinite(py) || !std::isfinite(pz)) throw std::invalid_argument("ModeSpec: momenta must be finite");
}

double ModeSpec::energy() const { return std::sqrt(pz * pz + m * m + 2.0 * n * qB()); }

double energy(const ModeSpec& mode) { return mode.energy(); }

double critical_field(int n, double m, double q_abs) {
  if (n < 1) throw std::invalid_argument("critical_field: defined for n >= 1 only");
  if (!(q_abs > 0.0)) throw std::invalid_argument("critical_field: |q| must be positive");
  return m * m / (2.0 * n * q_abs);
}

bool strong_field(int n, double B, double m, double q_abs) {
  if (n < 1) return false;
  return B > critical_field(n, m, q_abs);
}

double VectorSpinorCoefficients::norm() const {
  double s = 0.0;
  for (const auto& row : C) {
    for (const auto& c : row) s += std::norm(c);
  }
  return std::sqrt(s);
}

int slot_index(const ModeSpec& mode, int slot) {
  const bool upper_index = (slot % 2 == 0) == (mode.eps_q == 1);
  return upper_index ? mode.n : mode.n - 1;
}

VectorSpinorCoefficients complete_coefficients(const ModeSpec& mode, const FreeCoefficients& free) {
  mode.validate();
  const double e = mode.energy();
  const double den = mode.eps * e + mode.m;
  if (std::abs(den) <= 1e-12 * (e + mode.m)) {
    throw DenominatorSingular("complete_coefficients: eps*E + m vanishes for this mode");
  }
  const double pn = mode.p_n();
  const double epz = mode.eps * mode.pz;
  const Complex iqp = kI * double(mode.eps_q) * pn;

  VectorSpinorCoefficients out;
  for (int mu = 0; mu < 4; ++mu) {
    const Complex c1 = free[mu][0];
    const Complex c2 = free[mu][1];
    out.C[mu][0] = c1;
    out.C[mu][1] = c2;
    out.C[mu][2] = (epz * c1 + iqp * c2) / den;
    out.C[mu][3] = (-iqp * c1 - epz * c2) / den;
    for (int a = 0; a < 4; ++a) {
      if (slot_index(mode, a) < 0) out.C[mu][a] = 0.0;
    }
  }
  return out;
}

ModeFunction::ModeFunction(const ModeSpec& mode, const VectorSpinorCoefficients& coeffs)
    : mode_(mode), coeffs_(coeffs) {
  mode_.validate();
  energy_ = mode_.energy();
  for (int a = 0; a < 4; ++a) index_[a] = slot_index(mode_, a);
}

double ModeFunction::scale() const { return coeffs_.norm() * kV0; }

Complex ModeFunction::phase(const SpacetimePoint& p) const {
  const double arg = mode_.eps * (-energy_ * p.t + mode_.py * p.y + mode_.pz * p.z);
  return std::exp(kI * arg);
}

VectorSpinor ModeFunction::evaluate(const SpacetimePoint& p) const {
  const auto v = eval_v_table(mode_.n, mode_.xi_mapping().xi(p.x));
  const Complex ph = phase(p);
  VectorSpinor psi;
  for (int mu = 0; mu < 4; ++mu) {
    for (int a = 0; a < 4; ++a) {
      const int k = index_[a];
      psi[mu](a) = k < 0 ? Complex{} : coeffs_.C[mu][a] * v[static_cast<std::size_t>(k)] * ph;
    }
  }
  return psi;
}

VectorSpinor ModeFunction::x_derivative(const SpacetimePoint& p) const {
  const double qB = mode_.qB();
  const auto v = eval_v_table(mode_.n + 1, mode_.xi_mapping().xi(p.x));
  const Complex ph = phase(p);
  auto v_at = [&](int k) { return k < 0 ? 0.0 : v[static_cast<std::size_t>(k)]; };

  VectorSpinor d;
  for (int a = 0; a < 4; ++a) {
    const int k = index_[a];
    Complex dv{};
    if (k >= 0) {
      const LadderResult o1 = ladder_action(Ladder::kO1, mode_.eps_q, k, qB);
      const LadderResult o2 = ladder_action(Ladder::kO2, mode_.eps_q, k, qB);
      dv = (o1.coefficient * v_at(o1.index) + o2.coefficient * v_at(o2.index)) / (2.0 * kI);
    }
    for (int mu = 0; mu < 4; ++mu) d[mu](a) = coeffs_.C[mu][a] * dv * ph;
  }
  return d;
}

VectorSpinor evaluate_mode(const ModeFunction& mf, const SpacetimePoint& p) { return mf.evaluate(p); }

VectorSpinor dirac_residual(const ModeFunction& mf, const SpacetimePoint& p) {
  const ModeSpec& mode = mf.mode();
  const VectorSpinor psi = mf.evaluate(p);
  const VectorSpinor dx = mf.x_derivative(p);
  const Complex dt = -kI * double(mode.eps) * mf.energy();
  const Complex dy = kI * (mode.eps * mode.py) + gauge_term(mode, p);
  const Complex dz = kI * (mode.eps * mode.pz);

  VectorSpinor r;
  for (int nu = 0; nu < 4; ++nu) {
    r[nu] = dirac_operator(psi[nu], dt * psi[nu], dx[nu], dy * psi[nu], dz * psi[nu], mode.m);
  }
  return r;
}

VectorSpinor dirac_residual_fd(const ModeFunction& mf, const SpacetimePoint& p, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("dirac_residual_fd: step must be positive");
  const ModeSpec& mode = mf.mode();
  auto shifted = [&](int axis, double delta) {
    SpacetimePoint q = p;
    (axis == 0 ? q.t : axis == 1 ? q.x : axis == 2 ? q.y : q.z) += delta;
    return mf.evaluate(q);
  };
  std::array<VectorSpinor, 4> d;
  for (int axis = 0; axis < 4; ++axis) {
    const VectorSpinor plus = shifted(axis, h);
    const VectorSpinor minus = shifted(axis, -h);
    for (int mu = 0; mu < 4; ++mu) d[axis][mu] = (plus[mu] - minus[mu]) / (2.0 * h);
  }
  const VectorSpinor psi = mf.evaluate(p);
  const Complex gauge = gauge_term(mode, p);

  VectorSpinor r;
  for (int nu = 0; nu < 4; ++nu) {
    r[nu] = dirac_operator(psi[nu], d[0][nu], d[1][nu], d[2][nu] + gauge * psi[nu], d[3][nu], mode.m);
  }
  return r;
}

SubsidiaryResiduals subsidiary_residuals(const ModeFunction& mf, const SpacetimePoint& p) {
  const ModeSpec& mode = mf.mode();
  const VectorSpinor psi = mf.evaluate(p);
  const VectorSpinor dx = mf.x_derivative(p);
  const Complex dt = -kI * double(mode.eps) * mf.energy();
  const Complex dy = kI * (mode.eps * mode.py) + gauge_term(mode, p);
  const Complex dz = kI * (mode.eps * mode.pz);

  SubsidiaryResiduals out;
  out.gamma_trace = gamma_trace(psi);
  // g^{mu nu} D_nu psi_mu
  out.covariant_divergence = dt * psi[0] - dx[1] - dy * psi[2] - dz * psi[3];
  return out;
}

std::array<double, 3> vector_potential(double B, const SpacetimePoint& p) { return {0.0, p.x * B, 0.0}; }

}  // namespace rsmag
