#include "rsmag/constraint_degeneracy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

#include "rsmag/errors.hpp"

namespace rsmag {

namespace {

constexpr Complex kI{0.0, 1.0};

struct RowAccumulator {
  std::vector<ConstraintRow> labels;
  std::vector<Eigen::VectorXcd> values;
  Eigen::Index width = 0;

  Eigen::VectorXcd& at(ConstraintSource source, int component, int k) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const auto& r = labels[i];
      if (r.source == source && r.component == component && r.basis_index == k) return values[i];
    }
    labels.push_back({source, component, k});
    values.push_back(Eigen::VectorXcd::Zero(width));
    return values.back();
  }
};

// Completed amplitude C_{mu a} as a linear form over the unknowns.
using LinearForms = std::array<std::array<Eigen::VectorXcd, 4>, 4>;

LinearForms completed_forms(const ModeSpec& mode, const std::vector<CoefficientLabel>& unknowns) {
  const auto width = static_cast<Eigen::Index>(unknowns.size());
  LinearForms forms;
  for (auto& row : forms) {
    for (auto& f : row) f = Eigen::VectorXcd::Zero(width);
  }
  for (Eigen::Index j = 0; j < width; ++j) {
    FreeCoefficients unit{};
    unit[unknowns[j].mu][unknowns[j].slot] = 1.0;
    const auto c = complete_coefficients(mode, unit);
    for (int mu = 0; mu < 4; ++mu) {
      for (int a = 0; a < 4; ++a) forms[mu][a](j) = c.C[mu][a];
    }
  }
  return forms;
}

bool parallel(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  const double overlap = std::abs(a.dot(b));
  return overlap >= (1.0 - 1e-12) * a.norm() * b.norm();
}

}  // namespace

ConstraintSystem assemble_constraints(const ModeSpec& mode, bool deduplicate) {
  mode.validate();

  ConstraintSystem sys;
  sys.mode = mode;
  sys.n_q = slot_index(mode, 0);
  sys.m_q = slot_index(mode, 1);
  for (int mu = 0; mu < 4; ++mu) {
    for (int slot = 0; slot < 2; ++slot) {
      if (slot_index(mode, slot) >= 0) sys.unknowns.push_back({mu, slot});
    }
  }

  const LinearForms c = completed_forms(mode, sys.unknowns);
  const double e = mode.energy();
  const double qB = mode.qB();

  RowAccumulator acc;
  acc.width = static_cast<Eigen::Index>(sys.unknowns.size());

  // Divergence: -i g^{mu nu} D_nu psi_mu, spinor component by component.
  for (int b = 0; b < 4; ++b) {
    const int k = slot_index(mode, b);
    if (k < 0) continue;
    acc.at(ConstraintSource::kDivergence, b, k) += -mode.eps * e * c[0][b] - mode.eps * mode.pz * c[3][b];
    const LadderResult o1 = ladder_action(Ladder::kO1, mode.eps_q, k, qB);
    const LadderResult o2 = ladder_action(Ladder::kO2, mode.eps_q, k, qB);
    if (o1.index >= 0) {
      acc.at(ConstraintSource::kDivergence, b, o1.index) += 0.5 * o1.coefficient * (c[1][b] + kI * c[2][b]);
    }
    if (o2.index >= 0) {
      acc.at(ConstraintSource::kDivergence, b, o2.index) += 0.5 * o2.coefficient * (c[1][b] - kI * c[2][b]);
    }
  }

  // Gamma trace: gamma^mu C_mu, each spinor component split by basis function.
  const GammaSet g = build_gamma_set();
  for (int b = 0; b < 4; ++b) {
    for (int mu = 0; mu < 4; ++mu) {
      for (int a = 0; a < 4; ++a) {
        const Complex entry = g.upper[mu](b, a);
        const int k = slot_index(mode, a);
        if (entry == Complex{} || k < 0) continue;
        acc.at(ConstraintSource::kGammaTrace, b, k) += entry * c[mu][a];
      }
    }
  }

  std::vector<std::size_t> keep;
  double largest = 0.0;
  for (const auto& v : acc.values) largest = std::max(largest, v.norm());
  for (std::size_t i = 0; i < acc.values.size(); ++i) {
    if (deduplicate) {
      const auto& v = acc.values[i];
      if (v.norm() <= 1e-14 * largest) continue;
      const bool dup = std::any_of(keep.begin(), keep.end(), [&](std::size_t j) { return parallel(acc.values[j], v); });
      if (dup) continue;
    }
    keep.push_back(i);
  }

  sys.matrix.resize(static_cast<Eigen::Index>(keep.size()), acc.width);
  for (std::size_t r = 0; r < keep.size(); ++r) {
    sys.rows.push_back(acc.labels[keep[r]]);
    sys.matrix.row(static_cast<Eigen::Index>(r)) = acc.values[keep[r]].transpose();
  }
  return sys;
}

DegeneracyReport degeneracy(const ModeSpec& mode, double svd_tol) {
  if (!(svd_tol > 0.0)) throw std::invalid_argument("degeneracy: svd_tol must be positive");

  DegeneracyReport rep;
  rep.system = assemble_constraints(mode);
  rep.n = mode.n;
  rep.eps_q = mode.eps_q;
  rep.expected = degeneracy_formula(mode.n);
  rep.spin_labels = spin_labels(mode.n, mode.eps_q);

  const Eigen::MatrixXcd& a = rep.system.matrix;
  const auto cols = a.cols();

  // Rows may be fewer than columns; the missing singular values are zero.
  std::vector<double> sv(static_cast<std::size_t>(cols), 0.0);
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(cols, cols);
  if (a.rows() > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) sv[static_cast<std::size_t>(i)] = svd.singularValues()(i);
    v = svd.matrixV();
  }
  rep.singular_values = sv;

  const double smax = sv.empty() ? 0.0 : sv.front();
  const double cut = svd_tol * smax;
  int rank = 0;
  for (double s : sv) {
    if (s > cut) ++rank;
    if (smax > 0.0 && s > cut / 10.0 && s < cut * 10.0) {
      throw IllConditioned("degeneracy: singular value " + std::to_string(s) + " within a factor 10 of the rank cut " +
                           std::to_string(cut) + " (n = " + std::to_string(mode.n) + ")");
    }
  }
  rep.rank = rank;
  rep.nullity = static_cast<int>(cols) - rank;

  if (rank > 0) {
    const double dropped = rank < static_cast<int>(sv.size()) ? sv[static_cast<std::size_t>(rank)] : 0.0;
    const double floor = std::numeric_limits<double>::epsilon() * smax;
    rep.gap = sv[static_cast<std::size_t>(rank) - 1] / std::max(dropped, floor);
  }
  for (Eigen::Index j = rank; j < cols; ++j) rep.basis.push_back(v.col(j));
  return rep;
}

FreeCoefficients expand_free(const ConstraintSystem& system, const Eigen::VectorXcd& vector) {
  if (vector.size() != static_cast<Eigen::Index>(system.unknowns.size())) {
    throw std::invalid_argument("expand_free: vector length does not match the unknowns");
  }
  FreeCoefficients out{};
  for (std::size_t j = 0; j < system.unknowns.size(); ++j) {
    out[system.unknowns[j].mu][system.unknowns[j].slot] = vector(static_cast<Eigen::Index>(j));
  }
  return out;
}

std::vector<SpinLabel> spin_labels(int n, int eps_q) {
  if (n < 0) throw std::invalid_argument("spin_labels: n must be >= 0");
  if (eps_q != 1 && eps_q != -1) throw std::invalid_argument("spin_labels: eps_q must be +1 or -1");
  std::vector<SpinLabel> out;
  for (int s : {-3, -1, 1, 3}) {
    // n = l - (s/2) eps_q + 1/2  =>  l = n + (s eps_q - 1) / 2; s eps_q - 1 is even.
    const int l = n + (s * eps_q - 1) / 2;
    if (l >= 0) out.push_back({l, s});
  }
  std::sort(out.begin(), out.end(), [](const SpinLabel& a, const SpinLabel& b) { return a.l < b.l; });
  return out;
}

int degeneracy_formula(int n) {
  if (n < 0) throw std::invalid_argument("degeneracy_formula: n must be >= 0");
  return 4 - (n == 1 ? 1 : 0) - (n == 0 ? 2 : 0);
}

}  // namespace rsmag
