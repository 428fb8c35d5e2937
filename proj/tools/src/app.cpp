#include <cstdio>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rsmag/errors.hpp"
#include "rsmag_cli/commands.hpp"

namespace rsmag::cli {

namespace {

using nlohmann::json;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_cell(const json& v) {
  if (v.is_number_float()) return g17(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
  }
  return v.dump();
}

// Emits {"command", "config", <key>: rows} as JSON, or the config as a
// comment line followed by a header and one line per row as CSV.
void emit(std::ostream& out, Format format, const std::string& command, const json& config,
          const std::vector<std::string>& columns, const json& rows, const char* key = "rows") {
  if (format == Format::kJson) {
    json doc;
    doc["command"] = command;
    doc["config"] = config;
    doc[key] = rows;
    out << doc.dump(2) << '\n';
    return;
  }
  out << "# " << command << ' ' << config.dump() << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_cell(row.at(columns[i]));
    out << '\n';
  }
}

struct Common {
  std::string format = "json";
  Format fmt() const { return format == "csv" ? Format::kCsv : Format::kJson; }
};

void add_format(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Landau levels, degeneracies and magnetized gas densities for charged spin-3/2 fields"};
  app.require_subcommand(1);
  Common common;

  // spectrum
  int sp_n_max = 0;
  std::string sp_pz = "0";
  double sp_mass = 1.0, sp_charge = 1.0;
  std::optional<double> sp_qb, sp_b, sp_gauss;
  auto* spectrum = app.add_subcommand("spectrum", "Energies per (n, p_z) with the strong-field flag.\n"
                                                  "CSV columns: n,pz,energy,strong_field");
  spectrum->add_option("--n-max", sp_n_max, "Highest Landau level")->required()->check(CLI::NonNegativeNumber);
  spectrum->add_option("--pz", sp_pz, "p_z grid: comma list or start:stop:count")->capture_default_str();
  spectrum->add_option("--mass", sp_mass, "Mass")->capture_default_str()->check(CLI::PositiveNumber);
  spectrum->add_option("--charge", sp_charge, "|q|")->capture_default_str()->check(CLI::PositiveNumber);
  auto* qb_opt = spectrum->add_option("--qb", sp_qb, "|q|B in mass^2 units");
  auto* b_opt = spectrum->add_option("--b-field", sp_b, "B in mass^2 units");
  qb_opt->excludes(b_opt);
  spectrum->add_option("--gauss-per-msq", sp_gauss, "Conversion from mass^2 field units to Gauss");
  add_format(spectrum, common);

  // degeneracy
  DegeneracyConfig dg;
  auto* deg = app.add_subcommand("degeneracy", "Constraint nullity per Landau level over random draws.\n"
                                               "CSV columns: n,nullity,nullity_min,nullity_max,formula,match,"
                                               "min_gap,failed_draws,warning");
  deg->add_option("--n-max", dg.n_max, "Highest Landau level")->capture_default_str()->check(CLI::NonNegativeNumber);
  deg->add_option("--eps-q", dg.eps_q, "Charge sign")->capture_default_str()->check(CLI::IsMember({-1, 1}));
  deg->add_option("--draws", dg.draws, "Random draws per level")->capture_default_str();
  deg->add_option("--seed", dg.seed, "RNG seed")->capture_default_str();
  deg->add_option("--tol", dg.tol, "Relative SVD rank cut")->capture_default_str()->check(CLI::PositiveNumber);
  deg->add_option("--mass", dg.m, "Mass")->capture_default_str()->check(CLI::PositiveNumber);
  add_format(deg, common);

  // verify
  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run the built-in verification suites.\n"
                                              "CSV columns: suite,cases,max_residual,threshold,pass,note");
  verify->add_option("--seed", vo.seed, "RNG seed")->capture_default_str();
  verify->add_flag("--inject-gamma-fault", vo.flip_gamma_sign)->group("");
  add_format(verify, common);

  // gas
  std::string mu_text, b_text;
  GasConfig gc;
  std::optional<double> gas_gauss;
  auto* gas = app.add_subcommand("gas", "Spin-3/2 and spin-1/2 densities per (mu, B).\n"
                                        "CSV columns: mu,b_field,density_spin_3_2,density_spin_1_2");
  gas->add_option("--mu", mu_text, "Chemical potential grid")->required();
  gas->add_option("--b-field", b_text, "B grid in mass^2 units")->required();
  gas->add_option("--temp", gc.T, "Temperature")->capture_default_str()->check(CLI::NonNegativeNumber);
  gas->add_option("--mass", gc.m, "Mass")->capture_default_str()->check(CLI::PositiveNumber);
  gas->add_option("--charge", gc.q_abs, "|q|")->capture_default_str()->check(CLI::PositiveNumber);
  gas->add_option("--tol", gc.options.integrator_tol, "Finite-T integrator tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  gas->add_flag("--antiparticles", gc.options.include_antiparticles, "Net density, particles minus antiparticles");
  gas->add_option("--gauss-per-msq", gas_gauss, "Conversion from mass^2 field units to Gauss");
  add_format(gas, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*spectrum) {
      if (!sp_qb && !sp_b) throw std::invalid_argument("spectrum needs --qb or --b-field");
      const double B = sp_b ? *sp_b : *sp_qb / sp_charge;
      const auto pz = parse_grid(sp_pz);
      const auto rows = spectrum_table(sp_n_max, pz, sp_mass, sp_charge, B);
      json config = {{"n_max", sp_n_max}, {"pz", pz},         {"mass", sp_mass},
                     {"charge", sp_charge}, {"b_field", B}, {"qb", sp_charge * B}};
      if (sp_gauss) {
        config["gauss_per_msq"] = *sp_gauss;
        config["b_field_gauss"] = B * *sp_gauss;
      }
      json table = json::array();
      for (const auto& r : rows) table.push_back({{"n", r.n}, {"pz", r.pz}, {"energy", r.energy}, {"strong_field", r.strong_field}});
      emit(out, common.fmt(), "spectrum", config, {"n", "pz", "energy", "strong_field"}, table);
      return kOk;
    }
    if (*deg) {
      const auto rows = degeneracy_table(dg);
      json config = {{"n_max", dg.n_max}, {"eps_q", dg.eps_q}, {"draws", dg.draws},
                     {"seed", dg.seed},   {"tol", dg.tol},     {"mass", dg.m}};
      json table = json::array();
      for (const auto& r : rows) {
        table.push_back({{"n", r.n},
                         {"nullity", r.nullity},
                         {"nullity_min", r.nullity_min},
                         {"nullity_max", r.nullity_max},
                         {"formula", r.formula},
                         {"match", r.match},
                         {"min_gap", r.min_gap},
                         {"failed_draws", r.failed_draws},
                         {"warning", r.warning}});
      }
      emit(out, common.fmt(), "degeneracy", config,
           {"n", "nullity", "nullity_min", "nullity_max", "formula", "match", "min_gap", "failed_draws", "warning"},
           table);
      return kOk;
    }
    if (*verify) {
      const auto suites = run_verify(vo);
      bool all = true;
      json table = json::array();
      for (const auto& s : suites) {
        all = all && s.pass;
        table.push_back({{"suite", s.name},
                         {"cases", s.cases},
                         {"max_residual", s.max_residual},
                         {"threshold", s.threshold},
                         {"pass", s.pass},
                         {"note", s.note}});
      }
      json config = {{"seed", vo.seed}};
      if (vo.flip_gamma_sign) config["inject_gamma_fault"] = true;
      emit(out, common.fmt(), "verify", config, {"suite", "cases", "max_residual", "threshold", "pass", "note"}, table,
           "suites");
      return all ? kOk : kVerifyFailed;
    }
    if (*gas) {
      gc.mu_grid = parse_grid(mu_text);
      gc.b_grid = parse_grid(b_text);
      const auto rows = gas_table(gc);
      json config = {{"mu", gc.mu_grid},
                     {"b_field", gc.b_grid},
                     {"temp", gc.T},
                     {"mass", gc.m},
                     {"charge", gc.q_abs},
                     {"tol", gc.options.integrator_tol},
                     {"antiparticles", gc.options.include_antiparticles}};
      if (gas_gauss) config["gauss_per_msq"] = *gas_gauss;
      json table = json::array();
      for (const auto& r : rows) {
        table.push_back({{"mu", r.mu},
                         {"b_field", r.B},
                         {"density_spin_3_2", r.density_three_halves},
                         {"density_spin_1_2", r.density_half}});
      }
      emit(out, common.fmt(), "gas", config, {"mu", "b_field", "density_spin_3_2", "density_spin_1_2"}, table);
      return kOk;
    }
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace rsmag::cli
