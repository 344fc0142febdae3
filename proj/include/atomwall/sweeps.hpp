#pragma once

// Table builders behind the command-line front end. Every builder returns a
// SweepTable whose first column is the abscissa (x0, or theta for figure2).

#include <optional>
#include <string>

#include "atomwall/core_types.hpp"
#include "atomwall/table_io.hpp"

namespace atomwall::sweeps {

enum class Command { vacuum, thermal, average, emission, figure1, figure2, check };

// hck4: units of hbar c alpha0 k0^4.
// lvdw_ratio: v / (-1/x0^3), i.e. in units of the short-distance potential.
enum class Normalization { hck4, lvdw_ratio };

struct PhysicalAtom {
  double lambda0_um = 0.0;
  double alpha0_A3 = 0.0;
};

struct RunConfig {
  Command command = Command::vacuum;
  // Unset means the command's default grid.
  std::optional<GridSpec> grid;
  std::optional<PhysicalAtom> atom;
  std::optional<double> theta;
  std::optional<double> T_K;
  Normalization normalization = Normalization::hck4;
  bool si = false;
  std::string out_path;  // empty: standard output
  io::TableFormat format = io::TableFormat::csv;
  // Test hook: relative perturbation applied to H0 inside the check suite.
  double h0_perturbation = 0.0;

  // Throws ConfigError on an invalid grid, a missing or doubled temperature
  // for thermal commands, or SI/temperature-in-kelvin without an atom.
  void validate() const;
  GridSpec effective_grid() const;
  // theta, from --theta or from T_K and the atom.
  double effective_theta() const;
};

Command parse_command(const std::string& name);
std::string command_name(Command c);
Normalization parse_normalization(const std::string& name);

// Overlays settings from a JSON object onto `base`. Recognized keys mirror
// the long command-line options (grid_min, grid_max, points, log, theta,
// temp_K, lambda0_um, alpha0_A3, si, out, format, normalization).
RunConfig apply_json_config(RunConfig base, const std::string& json_text);

GridSpec default_grid(Command c);

SweepTable run_vacuum(const RunConfig& config);
SweepTable run_figure1(const RunConfig& config);
SweepTable run_figure2(const RunConfig& config);
SweepTable run_thermal(const RunConfig& config);
SweepTable run_average(const RunConfig& config);
SweepTable run_emission(const RunConfig& config);

// Dispatches on config.command; Command::check is not a table and throws
// ConfigError.
SweepTable run(const RunConfig& config);

}  // namespace atomwall::sweeps
