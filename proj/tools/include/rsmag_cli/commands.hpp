#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rsmag/magnetized_gas.hpp"

namespace rsmag::cli {

enum class Format { kJson, kCsv };

/// Parse "a,b,c" or "start:stop:count" (count >= 2, endpoints included).
/// An empty string is an empty grid. Throws std::invalid_argument.
std::vector<double> parse_grid(const std::string& text);

struct SpectrumRow {
  int n = 0;
  double pz = 0.0;
  double energy = 0.0;
  bool strong_field = false;
};

/// One row per (n, p_z), n-major.
std::vector<SpectrumRow> spectrum_table(int n_max, const std::vector<double>& pz_grid, double m, double q_abs,
                                        double B);

struct DegeneracyRow {
  int n = 0;
  int nullity = 0;      ///< nullity of the first successful draw
  int nullity_min = 0;
  int nullity_max = 0;
  int formula = 0;
  bool match = false;   ///< every draw produced the formula value
  double min_gap = 0.0;
  int failed_draws = 0;
  std::string warning;  ///< first numerical failure message, if any
};

struct DegeneracyConfig {
  int n_max = 5;
  int eps_q = -1;
  int draws = 20;
  std::uint64_t seed = 1;
  double tol = 1e-10;
  double m = 1.0;
};

/// Nullity per n over `draws` random (p_z in [0, 3m], |q|B in [0.05, 0.5] m^2)
/// draws. Numerical failures land in the warning column.
std::vector<DegeneracyRow> degeneracy_table(const DegeneracyConfig& config);

struct GasRow {
  double mu = 0.0;
  double B = 0.0;
  double density_three_halves = 0.0;
  double density_half = 0.0;
};

struct GasConfig {
  std::vector<double> mu_grid;
  std::vector<double> b_grid;
  double T = 0.0;
  double m = 1.0;
  double q_abs = 1.0;
  FiniteTOptions options;
};

/// Densities of the spin-3/2 species and its spin-1/2 comparator, mu-major.
std::vector<GasRow> gas_table(const GasConfig& config);

struct SuiteResult {
  std::string name;
  int cases = 0;
  double max_residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string note;
};

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  /// Test hook: corrupt one entry of one gamma matrix before the Clifford suite.
  bool flip_gamma_sign = false;
};

std::vector<SuiteResult> run_verify(const VerifyOptions& options);

enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFailed = 2, kNumerical = 3 };

/// Full command-line entry point writing to the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rsmag::cli
