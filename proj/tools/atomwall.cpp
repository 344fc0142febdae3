// atomwall: tables of atom-wall potentials and the self-check suite.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 numerical non-convergence,
// 3 check-suite failure.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "atomwall/atomwall.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_nonconvergence = 2;
constexpr int exit_check_failed = 3;

struct Options {
  std::optional<double> grid_min;
  std::optional<double> grid_max;
  std::optional<int> points;
  bool log = false;
  bool linear = false;
  std::optional<double> theta;
  std::optional<double> temp_K;
  std::optional<double> lambda0_um;
  std::optional<double> alpha0_A3;
  bool si = false;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::string> normalization;
  std::optional<std::string> config_file;
  double h0_perturbation = 0.0;
};

int status_exit(aw_status s) {
  if (s == AW_OK) return exit_ok;
  std::cerr << "atomwall: " << aw_status_string(s) << ": " << aw_last_error_message() << '\n';
  return s == AW_ERR_NONCONVERGENCE ? exit_nonconvergence : exit_usage;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--grid-min", o.grid_min, "first abscissa (x0, or theta for figure2)");
  sub->add_option("--grid-max", o.grid_max, "last abscissa");
  sub->add_option("--points", o.points, "number of grid points (>= 2)");
  auto* log = sub->add_flag("--log", o.log, "logarithmic spacing");
  sub->add_flag("--linear", o.linear, "linear spacing")->excludes(log);
  auto* theta = sub->add_option("--theta", o.theta, "normalized temperature 2 kB T / (hbar omega0)");
  sub->add_option("--temp-K", o.temp_K, "temperature in kelvin (needs the atom)")->excludes(theta);
  sub->add_option("--lambda0-um", o.lambda0_um, "transition wavelength in micrometres");
  sub->add_option("--alpha0-A3", o.alpha0_A3, "static polarizability in cubic angstroms");
  sub->add_flag("--si", o.si, "append SI columns (um, eV, s)");
  sub->add_option("--normalization", o.normalization, "hck4 (default) or lvdw_ratio")
      ->check(CLI::IsMember({"hck4", "lvdw_ratio"}));
  sub->add_option("--out", o.out, "output file (default: standard output)");
  sub->add_option("--format", o.format, "csv (default) or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--config", o.config_file, "JSON config file; command-line flags take precedence");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Builds the config: file first, then flags on top.
aw_status configure(aw_config* cfg, const Options& o) {
  aw_status s = AW_OK;
  if (o.config_file) {
    std::string text;
    try {
      text = read_file(*o.config_file);
    } catch (const std::exception& e) {
      std::cerr << "atomwall: " << e.what() << '\n';
      return AW_ERR_IO;
    }
    if ((s = aw_config_load_json(cfg, text.c_str())) != AW_OK) return s;
  }
  if (o.grid_min || o.grid_max || o.points || o.log || o.linear) {
    double mn, mx;
    int pts, lg;
    aw_config_grid(cfg, &mn, &mx, &pts, &lg);
    if (o.grid_min) mn = *o.grid_min;
    if (o.grid_max) mx = *o.grid_max;
    if (o.points) pts = *o.points;
    if (o.log) lg = 1;
    if (o.linear) lg = 0;
    if ((s = aw_config_set_grid(cfg, mn, mx, pts, lg)) != AW_OK) return s;
  }
  if (o.theta && (s = aw_config_set_theta(cfg, *o.theta)) != AW_OK) return s;
  if (o.temp_K && (s = aw_config_set_temperature(cfg, *o.temp_K)) != AW_OK) return s;
  if (o.lambda0_um || o.alpha0_A3) {
    if (!o.lambda0_um || !o.alpha0_A3) {
      std::cerr << "atomwall: --lambda0-um and --alpha0-A3 go together\n";
      return AW_ERR_INVALID_ARGUMENT;
    }
    if ((s = aw_config_set_atom(cfg, *o.lambda0_um, *o.alpha0_A3)) != AW_OK) return s;
  }
  if (o.si && (s = aw_config_set_si(cfg, 1)) != AW_OK) return s;
  if (o.normalization && (s = aw_config_set_normalization(cfg, o.normalization->c_str())) != AW_OK) return s;
  if (o.out || o.format) {
    s = aw_config_set_output(cfg, o.out ? o.out->c_str() : nullptr, o.format ? o.format->c_str() : nullptr);
    if (s != AW_OK) return s;
  }
  return aw_config_validate(cfg);
}

int run_table(const std::string& command, const Options& o) {
  aw_config* cfg = nullptr;
  aw_status s = aw_config_create(command.c_str(), &cfg);
  if (s != AW_OK) return status_exit(s);
  s = configure(cfg, o);
  if (s != AW_OK) {
    aw_config_destroy(cfg);
    return status_exit(s);
  }
  aw_table* table = nullptr;
  s = aw_run(cfg, &table);
  if (s != AW_OK) {
    aw_config_destroy(cfg);
    return status_exit(s);
  }
  const char* path = nullptr;
  const char* format = nullptr;
  aw_config_output(cfg, &path, &format);
  if (path && *path) {
    s = aw_table_write(table, path, format);
  } else {
    char* text = nullptr;
    s = aw_table_to_string(table, format, &text);
    if (s == AW_OK) {
      std::fputs(text, stdout);
      aw_string_free(text);
    }
  }
  aw_table_destroy(table);
  aw_config_destroy(cfg);
  return status_exit(s);
}

int run_check(const Options& o) {
  aw_check_report* report = nullptr;
  const aw_status s = aw_run_checks(o.h0_perturbation, &report);
  if (s != AW_OK) return status_exit(s);
  char* text = nullptr;
  if (aw_check_report_text(report, &text) == AW_OK) {
    std::fputs(text, stdout);
    aw_string_free(text);
  }
  const bool ok = aw_check_report_all_passed(report);
  aw_check_report_destroy(report);
  return ok ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Atom-wall dispersion potentials for a two-level atom near a perfect mirror"};
  app.require_subcommand(1);
  Options opts;

  const std::pair<const char*, const char*> tables[] = {
      {"vacuum", "zero-temperature potentials and emission rate against x0"},
      {"thermal", "thermal correction by quadrature and closed form against x0"},
      {"average", "thermally averaged potential against x0"},
      {"emission", "spontaneous emission rate near the wall against x0"},
      {"figure1", "vacuum potentials on the linear x0 range of the reference figure"},
      {"figure2", "averaged-potential error curve against theta"},
  };
  for (const auto& [name, help] : tables) add_common(app.add_subcommand(name, help), opts);

  auto* check = app.add_subcommand("check", "run the self-check suite");
  check->add_option("--inject-h0-perturbation", opts.h0_perturbation, "test hook")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  if (check->parsed()) return run_check(opts);
  for (auto* sub : app.get_subcommands()) return run_table(sub->get_name(), opts);
  return exit_usage;
}
