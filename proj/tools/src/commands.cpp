#include "rsmag_cli/commands.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rsmag/constraint_degeneracy.hpp"
#include "rsmag/errors.hpp"
#include "rsmag/rs_solution.hpp"

namespace rsmag::cli {

namespace {

double parse_number(const std::string& token) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number in grid: '" + token + "'");
  }
  while (used < token.size() && token[used] == ' ') ++used;
  if (used != token.size()) throw std::invalid_argument("bad number in grid: '" + token + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  if (text.find_first_not_of(' ') == std::string::npos) return {};
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw std::invalid_argument("range grid must be start:stop:count");
    const double a = parse_number(parts[0]);
    const double b = parse_number(parts[1]);
    const double c = parse_number(parts[2]);
    if (c < 2 || c != static_cast<int>(c)) throw std::invalid_argument("range grid count must be an integer >= 2");
    const int count = static_cast<int>(c);
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = a + (b - a) * i / (count - 1);
    out.back() = b;
    return out;
  }
  std::vector<double> out;
  for (const auto& token : split(text, ',')) out.push_back(parse_number(token));
  return out;
}

std::vector<SpectrumRow> spectrum_table(int n_max, const std::vector<double>& pz_grid, double m, double q_abs,
                                        double B) {
  if (n_max < 0) throw std::invalid_argument("n-max must be >= 0");
  std::vector<SpectrumRow> rows;
  for (int n = 0; n <= n_max; ++n) {
    for (double pz : pz_grid) {
      ModeSpec mode;
      mode.n = n;
      mode.q_abs = q_abs;
      mode.B = B;
      mode.m = m;
      mode.pz = pz;
      mode.validate();
      rows.push_back({n, pz, energy(mode), strong_field(n, B, m, q_abs)});
    }
  }
  return rows;
}

std::vector<DegeneracyRow> degeneracy_table(const DegeneracyConfig& config) {
  if (config.draws < 1) throw std::invalid_argument("draws must be >= 1");
  if (config.n_max < 0) throw std::invalid_argument("n-max must be >= 0");
  if (config.eps_q != 1 && config.eps_q != -1) throw std::invalid_argument("eps-q must be +1 or -1");

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> pz_dist(0.0, 3.0 * config.m);
  std::uniform_real_distribution<double> qb_dist(0.05 * config.m * config.m, 0.5 * config.m * config.m);

  std::vector<DegeneracyRow> rows;
  for (int n = 0; n <= config.n_max; ++n) {
    DegeneracyRow row;
    row.n = n;
    row.formula = degeneracy_formula(n);
    row.nullity_min = std::numeric_limits<int>::max();
    row.nullity_max = std::numeric_limits<int>::min();
    row.min_gap = std::numeric_limits<double>::infinity();
    bool any = false;
    for (int d = 0; d < config.draws; ++d) {
      ModeSpec mode;
      mode.n = n;
      mode.eps = 1;
      mode.eps_q = config.eps_q;
      mode.m = config.m;
      mode.pz = pz_dist(rng);
      mode.B = qb_dist(rng);
      try {
        const auto rep = degeneracy(mode, config.tol);
        if (!any) row.nullity = rep.nullity;
        any = true;
        row.nullity_min = std::min(row.nullity_min, rep.nullity);
        row.nullity_max = std::max(row.nullity_max, rep.nullity);
        row.min_gap = std::min(row.min_gap, rep.gap);
      } catch (const NumericalError& e) {
        ++row.failed_draws;
        if (row.warning.empty()) row.warning = e.what();
      }
    }
    if (!any) {
      row.nullity = row.nullity_min = row.nullity_max = -1;
      row.min_gap = 0.0;
    }
    row.match = any && row.failed_draws == 0 && row.nullity_min == row.formula && row.nullity_max == row.formula;
    rows.push_back(row);
  }
  return rows;
}

std::vector<GasRow> gas_table(const GasConfig& config) {
  if (config.mu_grid.empty() || config.b_grid.empty()) throw std::invalid_argument("mu and B grids must be nonempty");
  std::vector<GasRow> rows;
  for (double mu : config.mu_grid) {
    for (double B : config.b_grid) {
      GasState state;
      state.mu = mu;
      state.T = config.T;
      state.B = B;
      state.species = {"spin-3/2", config.m, config.q_abs, Spin::kThreeHalves};
      const double n32 = number_density(state, config.options);
      state.species = {"spin-1/2", config.m, config.q_abs, Spin::kHalf};
      const double n12 = number_density(state, config.options);
      rows.push_back({mu, B, n32, n12});
    }
  }
  return rows;
}

}  // namespace rsmag::cli
