#include "atomwall/sweeps.hpp"

#include <cmath>
#include <json.hpp>
#include <string>
#include <vector>

#include "atomwall/constants.hpp"
#include "atomwall/errors.hpp"
#include "atomwall/thermal.hpp"
#include "atomwall/vacuum.hpp"

namespace atomwall::sweeps {

namespace {

const char* const unit_note_hck4 = "potentials in units of hbar c alpha0 k0^4; x0 = 2 k0 z";
const char* const unit_note_lvdw = "potentials as v / (-1/x0^3), i.e. in units of -hbar omega0 alpha0 / (8 z^3); x0 = 2 k0 z";

// One output column: name, whether it is a potential (subject to the
// normalization transform and SI conversion), and its value at x0.
struct Column {
  std::string name;
  bool potential;
};

std::string fmt_param(double v) { return io::format_double(v); }

AtomSpec require_atom(const RunConfig& c) {
  if (!c.atom) throw ConfigError("SI output needs --lambda0-um and --alpha0-A3");
  return AtomSpec::from_wavelength(c.atom->lambda0_um * constants::micrometre,
                                   c.atom->alpha0_A3 * constants::cubic_angstrom);
}

// Builds an x0 sweep from per-point raw rows (normalized units).
template <class RowFn>
SweepTable x0_sweep(const RunConfig& c, const std::vector<Column>& cols,
                    const std::vector<std::string>& formulas, RowFn&& row_at) {
  const GridSpec grid = c.effective_grid();
  std::vector<std::string> names{"x0"};
  for (const auto& col : cols) names.push_back(col.name);
  std::optional<AtomSpec> atom;
  if (c.si) {
    atom = require_atom(c);
    names.push_back("z_um");
    for (const auto& col : cols)
      if (col.potential) names.push_back(col.name + "_eV");
  }
  SweepTable t(names);
  t.add_comment(c.normalization == Normalization::hck4 ? unit_note_hck4 : unit_note_lvdw);
  for (const auto& f : formulas) t.add_comment(f);
  if (atom) {
    t.add_comment("SI columns: z in micrometres, energies in eV; lambda0 = " + fmt_param(c.atom->lambda0_um) +
                  " um, alpha0 = " + fmt_param(c.atom->alpha0_A3) + " A^3");
  }
  for (double x0 : grid.values()) {
    const std::vector<double> raw = row_at(x0);
    std::vector<double> row{x0};
    for (std::size_t i = 0; i < cols.size(); ++i) {
      double v = raw[i];
      if (cols[i].potential && c.normalization == Normalization::lvdw_ratio) v *= -x0 * x0 * x0;
      row.push_back(v);
    }
    if (atom) {
      row.push_back(atom->distance(x0) / constants::micrometre);
      for (std::size_t i = 0; i < cols.size(); ++i)
        if (cols[i].potential) row.push_back(joules_to_ev(denormalize(raw[i], *atom)));
    }
    t.add_row(std::move(row));
  }
  return t;
}

SweepTable vacuum_table(const RunConfig& c) {
  const std::vector<Column> cols{{"v0rr", true}, {"v0fr", true}, {"vg", true},
                                 {"ve", true},   {"gamma_ratio", false}};
  const std::vector<std::string> formulas{
      "v0rr = H0rr(x0) / (pi x0^3), H0rr(x) = -pi (cos x + x sin x - x^2 cos x / 2)",
      "vg = H0(x0) / (pi x0^3), H0(x) = (x^2 - 2) F(x) + 2 x F'(x) - x, F = Ci sin - si cos",
      "v0fr = vg - v0rr; ve = 2 v0rr - vg",
      "gamma_ratio = 1 - G(x0) in units of 2 c alpha0 k0^4, G(x) = sin x/x + 2 cos x/x^2 - 2 sin x/x^3"};
  return x0_sweep(c, cols, formulas, [](double x0) {
    const auto r = vacuum::vacuum_potentials(x0);
    return std::vector<double>{r.v0rr, r.v0fr, r.vg, r.ve, r.gamma_ratio};
  });
}

void set_double(const nlohmann::json& j, const char* key, std::optional<double>& dst) {
  if (j.contains(key)) dst = j.at(key).get<double>();
}

}  // namespace

void RunConfig::validate() const {
  effective_grid().validate();
  const bool thermal_cmd = command == Command::thermal || command == Command::average;
  if (theta && T_K) throw ConfigError("give either --theta or --temp-K, not both");
  if (thermal_cmd && !theta && !T_K) throw ConfigError("this command needs --theta or --temp-K");
  if (theta && !(*theta > 0.0)) throw ConfigError("--theta must be positive");
  if (T_K && !(*T_K > 0.0)) throw ConfigError("--temp-K must be positive");
  if (T_K && !atom) throw ConfigError("--temp-K needs --lambda0-um and --alpha0-A3");
  if (si && !atom) throw ConfigError("--si needs --lambda0-um and --alpha0-A3");
  if (atom && (!(atom->lambda0_um > 0.0) || !(atom->alpha0_A3 > 0.0)))
    throw ConfigError("atom parameters must be positive");
  if (!std::isfinite(h0_perturbation)) throw ConfigError("perturbation must be finite");
}

GridSpec RunConfig::effective_grid() const { return grid ? *grid : default_grid(command); }

double RunConfig::effective_theta() const {
  if (theta) return *theta;
  if (T_K) {
    if (!atom) throw ConfigError("--temp-K needs --lambda0-um and --alpha0-A3");
    return AtomSpec::from_wavelength(atom->lambda0_um * constants::micrometre,
                                     atom->alpha0_A3 * constants::cubic_angstrom)
        .reduced_temperature(*T_K);
  }
  throw ConfigError("no temperature given");
}

Command parse_command(const std::string& name) {
  if (name == "vacuum") return Command::vacuum;
  if (name == "thermal") return Command::thermal;
  if (name == "average") return Command::average;
  if (name == "emission") return Command::emission;
  if (name == "figure1") return Command::figure1;
  if (name == "figure2") return Command::figure2;
  if (name == "check") return Command::check;
  throw ConfigError("unknown command '" + name + "'");
}

std::string command_name(Command c) {
  switch (c) {
    case Command::vacuum: return "vacuum";
    case Command::thermal: return "thermal";
    case Command::average: return "average";
    case Command::emission: return "emission";
    case Command::figure1: return "figure1";
    case Command::figure2: return "figure2";
    case Command::check: return "check";
  }
  return "?";
}

Normalization parse_normalization(const std::string& name) {
  if (name == "hck4") return Normalization::hck4;
  if (name == "lvdw_ratio") return Normalization::lvdw_ratio;
  throw ConfigError("unknown normalization '" + name + "' (expected hck4 or lvdw_ratio)");
}

RunConfig apply_json_config(RunConfig base, const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  try {
    if (j.contains("grid_min") || j.contains("grid_max") || j.contains("points") || j.contains("log")) {
      GridSpec g = base.effective_grid();
      if (j.contains("grid_min")) g.min = j.at("grid_min").get<double>();
      if (j.contains("grid_max")) g.max = j.at("grid_max").get<double>();
      if (j.contains("points")) g.points = j.at("points").get<int>();
      if (j.contains("log")) g.log = j.at("log").get<bool>();
      base.grid = g;
    }
    set_double(j, "theta", base.theta);
    set_double(j, "temp_K", base.T_K);
    if (j.contains("lambda0_um") || j.contains("alpha0_A3")) {
      PhysicalAtom a = base.atom.value_or(PhysicalAtom{});
      if (j.contains("lambda0_um")) a.lambda0_um = j.at("lambda0_um").get<double>();
      if (j.contains("alpha0_A3")) a.alpha0_A3 = j.at("alpha0_A3").get<double>();
      base.atom = a;
    }
    if (j.contains("si")) base.si = j.at("si").get<bool>();
    if (j.contains("out")) base.out_path = j.at("out").get<std::string>();
    if (j.contains("format")) base.format = io::parse_format(j.at("format").get<std::string>());
    if (j.contains("normalization"))
      base.normalization = parse_normalization(j.at("normalization").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
  return base;
}

GridSpec default_grid(Command c) {
  switch (c) {
    case Command::figure1: return {0.1, 30.0, 300, false};
    case Command::figure2: return {0.05, 3.0, 300, false};
    default: return {1e-2, 1e2, 200, true};
  }
}

SweepTable run_vacuum(const RunConfig& config) {
  config.validate();
  return vacuum_table(config);
}

SweepTable run_figure1(const RunConfig& config) {
  config.validate();
  SweepTable t = vacuum_table(config);
  t.add_comment("ground and excited state vacuum potentials with their rr and fr parts against x0");
  return t;
}

SweepTable run_figure2(const RunConfig& config) {
  config.validate();
  SweepTable t({"theta", "V_mean", "V_Lif", "rel_error"});
  t.add_comment("normalized by -hbar omega0 alpha0 / (8 z^3); valid for z > lambda_T");
  t.add_comment("theta = 2 kB T / (hbar omega0); V_mean = theta tanh(1/theta); V_Lif = theta");
  t.add_comment("rel_error = 1 - V_mean / V_Lif = 1 - tanh(1/theta)");
  for (double th : config.effective_grid().values()) {
    if (!(th > 0.0)) throw ConfigError("figure2 grid must hold positive theta values");
    const double m = th * std::tanh(1.0 / th);
    t.add_row({th, m, th, 1.0 - std::tanh(1.0 / th)});
  }
  return t;
}

SweepTable run_thermal(const RunConfig& config) {
  config.validate();
  const double theta = config.effective_theta();
  const std::vector<Column> cols{{"v_T_quadrature", true}, {"v_T_closed", true}, {"v_ground", true},
                                 {"v_excited", true},      {"v_closed", true},   {"lifshitz", true}};
  const std::vector<std::string> formulas{
      "theta = " + fmt_param(theta) + " (theta = 2 kB T / (hbar omega0), k0 lambda_T = 2/theta)",
      "v_T_quadrature = (2/pi) PV int_0^inf u^3 G(x0 u) / ((1 - u^2)(exp(2u/theta) - 1)) du",
      "v_ground = vg + v_T_quadrature; v_excited = ve - v_T_quadrature",
      "v_closed = -theta/x0^3 - 2 v0rr / (exp(2/theta) - 1); v_T_closed = v_closed - vg",
      "lifshitz = -theta / x0^3"};
  return x0_sweep(config, cols, formulas, [theta](double x0) {
    const auto vac = vacuum::vacuum_potentials(x0);
    const double q = thermal::v_T_quadrature(x0, theta);
    const double vc = thermal::v_closed(x0, theta);
    return std::vector<double>{q, vc - vac.vg, vac.vg + q, vac.ve - q, vc, thermal::lifshitz(x0, theta)};
  });
}

SweepTable run_average(const RunConfig& config) {
  config.validate();
  const double theta = config.effective_theta();
  const std::vector<Column> cols{{"v_average", true}, {"v_average_assembled", true},
                                 {"v_average_lowT", true}, {"lifshitz", true}, {"p_ground", false}};
  const std::vector<std::string> formulas{
      "theta = " + fmt_param(theta) + " (theta = 2 kB T / (hbar omega0))",
      "v_average = -theta tanh(1/theta) / x0^3",
      "v_average_assembled = tanh(1/theta) v_closed + 2 v0rr / (exp(2/theta) + 1)",
      "v_average_lowT = v_closed - 2 exp(-2/theta) (v0fr + v_closed - vg)",
      "p_ground = 1 / (1 + exp(-2/theta)); valid for z > lambda_T"};
  return x0_sweep(config, cols, formulas, [theta](double x0) {
    return std::vector<double>{thermal::v_average(x0, theta), thermal::v_average_assembled(x0, theta),
                               thermal::v_average_lowT(x0, theta), thermal::lifshitz(x0, theta),
                               thermal::p_ground(theta)};
  });
}

SweepTable run_emission(const RunConfig& config) {
  config.validate();
  const GridSpec grid = config.effective_grid();
  std::vector<std::string> names{"x0", "gamma_ratio"};
  std::optional<AtomSpec> atom;
  if (config.si) {
    atom = require_atom(config);
    names.insert(names.end(), {"z_um", "rate_per_s", "lifetime_s"});
  }
  SweepTable t(names);
  t.add_comment("gamma_ratio = Gamma(z) / Gamma_free = 1 - G(x0); Gamma_free = 2 c alpha0 k0^4; x0 = 2 k0 z");
  if (atom) {
    t.add_comment("Gamma_free = " + fmt_param(atom->gamma_free()) + " 1/s, free-space lifetime " +
                  fmt_param(1.0 / atom->gamma_free()) + " s");
  }
  for (double x0 : grid.values()) {
    const double r = vacuum::spontaneous_rate_ratio(x0);
    std::vector<double> row{x0, r};
    if (atom) {
      const double rate = r * atom->gamma_free();
      row.insert(row.end(), {atom->distance(x0) / constants::micrometre, rate, 1.0 / rate});
    }
    t.add_row(std::move(row));
  }
  return t;
}

SweepTable run(const RunConfig& config) {
  switch (config.command) {
    case Command::vacuum: return run_vacuum(config);
    case Command::figure1: return run_figure1(config);
    case Command::figure2: return run_figure2(config);
    case Command::thermal: return run_thermal(config);
    case Command::average: return run_average(config);
    case Command::emission: return run_emission(config);
    case Command::check: break;
  }
  throw ConfigError("the check command does not produce a table");
}

}  // namespace atomwall::sweeps
