#include "rsmag/oscillator_basis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "rsmag/errors.hpp"

namespace rsmag {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

// pi^{-1/4}
const double kV0 = std::pow(std::numbers::pi, -0.25);

// Rescale the recurrence registers whenever they exceed this magnitude.
constexpr double kRescale = 1e150;

void check_charge_sign(int eps_q) {
  if (eps_q != 1 && eps_q != -1) throw std::invalid_argument("charge sign must be +1 or -1");
}

}  // namespace

double landau_momentum(int n, double qB) { return n > 0 ? std::sqrt(2.0 * n * qB) : 0.0; }

std::vector<double> eval_v_table(int n_max, double xi) {
  if (n_max < 0) return {};
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1);

  // h_n = v_n exp(xi^2/2) runs the recurrence; the Gaussian lives in the
  // log-scale so that neither the polynomial growth nor exp(-xi^2/2)
  // over/underflows on its own.
  double log_scale = -0.5 * xi * xi;
  double prev = 0.0;
  double cur = kV0;
  auto emit = [&](int n, double value) {
    out[static_cast<std::size_t>(n)] =
        value == 0.0 ? 0.0 : std::copysign(std::exp(std::log(std::abs(value)) + log_scale), value);
  };
  emit(0, cur);
  for (int n = 0; n < n_max; ++n) {
    const double next = xi * std::sqrt(2.0 / (n + 1)) * cur - std::sqrt(double(n) / (n + 1)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescale) {
      cur /= kRescale;
      prev /= kRescale;
      log_scale += std::log(kRescale);
    }
    emit(n + 1, cur);
  }
  return out;
}

double eval_v(int n, double xi) {
  if (n < 0) return 0.0;
  return eval_v_table(n, xi).back();
}

std::vector<double> normalized_hermite_table(int n_max, double xi) {
  if (n_max < 0) return {};
  std::vector<double> h(static_cast<std::size_t>(n_max) + 1);
  h[0] = kV0;
  if (n_max >= 1) h[1] = std::sqrt(2.0) * xi * kV0;
  for (int n = 1; n < n_max; ++n) {
    h[n + 1] = xi * std::sqrt(2.0 / (n + 1)) * h[n] - std::sqrt(double(n) / (n + 1)) * h[n - 1];
  }
  return h;
}

LadderResult ladder_action(Ladder which, int eps_q, int n, double qB) {
  check_charge_sign(eps_q);
  if (n < 0) throw std::invalid_argument("ladder_action: n must be >= 0");

  // O1 raises for positive charge, O2 raises for negative charge.
  const bool raises = (which == Ladder::kO1) == (eps_q == 1);
  if (raises) return {-kI * landau_momentum(n + 1, qB), n + 1};
  return {kI * landau_momentum(n, qB), n - 1};
}

XiMapping::XiMapping(double qB, double py, int eps, int eps_q) {
  if (!(qB > 0.0)) throw std::invalid_argument("XiMapping: |q|B must be positive");
  check_charge_sign(eps_q);
  if (eps != 1 && eps != -1) throw std::invalid_argument("energy sign must be +1 or -1");
  scale_ = std::sqrt(qB);
  offset_ = eps * eps_q * py / scale_;
}

double check_ladder_numeric(Ladder which, int eps_q, int n, double xi, double h, double qB) {
  const LadderResult r = ladder_action(which, eps_q, n, qB);
  const double s = std::sqrt(qB);
  const double derivative = (eval_v(n, xi + h) - eval_v(n, xi - h)) / (2.0 * h);
  const double sign = which == Ladder::kO1 ? -eps_q : eps_q;
  const std::complex<double> applied = kI * s * (sign * xi * eval_v(n, xi) + derivative);
  return std::abs(applied - r.coefficient * eval_v(r.index, xi));
}

const GaussHermiteRule& gauss_hermite_rule(int points) {
  if (points < 1) throw std::invalid_argument("gauss_hermite_rule: need at least one point");

  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussHermiteRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(points); it != cache.end()) return *it->second;

  // Jacobi matrix of the monic Hermite recurrence: zero diagonal, sqrt(k/2) off it.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(points);
  Eigen::VectorXd sub(std::max(points - 1, 0));
  for (int k = 1; k < points; ++k) sub(k - 1) = std::sqrt(0.5 * k);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw ConvergenceFailure("gauss_hermite_rule: eigen solve failed");

  auto rule = std::make_unique<GaussHermiteRule>();
  rule->nodes.resize(static_cast<std::size_t>(points));
  rule->weights.resize(static_cast<std::size_t>(points));
  const double mu0 = std::sqrt(std::numbers::pi);
  for (int i = 0; i < points; ++i) {
    double x = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule->weights[i] = mu0 * v0 * v0;
    if (points < 2) {
      rule->nodes[i] = x;
      continue;
    }
    // Polish the node on h_N and rebuild the weight from the Christoffel
    // sum; eigenvector entries lose relative accuracy at the outer nodes.
    for (int it = 0; it < 3; ++it) {
      const auto h = normalized_hermite_table(points, x);
      const double slope = std::sqrt(2.0 * points) * h[points - 1];
      if (slope == 0.0) break;
      x -= h[points] / slope;
    }
    const auto h = normalized_hermite_table(points - 1, x);
    double sum = 0.0;
    for (double hk : h) sum += hk * hk;
    if (std::isfinite(sum) && sum > 0.0) rule->weights[i] = 1.0 / sum;
    rule->nodes[i] = x;
  }

  // The exact rule is symmetric about zero; enforce it after checking.
  for (int i = 0; i < points / 2; ++i) {
    const int j = points - 1 - i;
    const double a = rule->nodes[i];
    const double b = rule->nodes[j];
    if (std::abs(a + b) > 1e-13 * std::max(1.0, std::abs(a))) {
      throw ConvergenceFailure("gauss_hermite_rule: nodes not symmetric");
    }
    const double x = 0.5 * (b - a);
    rule->nodes[i] = -x;
    rule->nodes[j] = x;
    const double w = 0.5 * (rule->weights[i] + rule->weights[j]);
    rule->weights[i] = rule->weights[j] = w;
  }
  if (points % 2 == 1) rule->nodes[points / 2] = 0.0;

  const auto& ref = *rule;
  cache.emplace(points, std::move(rule));
  return ref;
}

Eigen::MatrixXd orthonormality_matrix(int n_max, int quadrature_points) {
  if (n_max < 0) throw std::invalid_argument("orthonormality_matrix: n_max must be >= 0");
  if (quadrature_points < n_max + 1) {
    throw std::invalid_argument("orthonormality_matrix: need quadrature_points >= n_max + 1");
  }
  const GaussHermiteRule& rule = gauss_hermite_rule(quadrature_points);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_max + 1, n_max + 1);
  for (int i = 0; i < quadrature_points; ++i) {
    const auto h = normalized_hermite_table(n_max, rule.nodes[i]);
    const Eigen::Map<const Eigen::VectorXd> hv(h.data(), n_max + 1);
    m.noalias() += rule.weights[i] * hv * hv.transpose();
  }
  return m;
}

}  // namespace rsmag
