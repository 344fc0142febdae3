#include "atomwall/atomwall.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <ios>
#include <new>
#include <string>

#include "atomwall/checks.hpp"
#include "atomwall/constants.hpp"
#include "atomwall/core_types.hpp"
#include "atomwall/errors.hpp"
#include "atomwall/specfun.hpp"
#include "atomwall/sweeps.hpp"
#include "atomwall/table_io.hpp"
#include "atomwall/thermal.hpp"
#include "atomwall/vacuum.hpp"

using namespace atomwall;

struct aw_atom {
  AtomSpec spec;
};

struct aw_config {
  sweeps::RunConfig cfg;
  std::string format_name = "csv";
};

struct aw_table {
  SweepTable table;
};

struct aw_check_report {
  checks::CheckReport report;
};

namespace {

thread_local std::string last_error;

aw_status fail(aw_status s, const char* what) {
  last_error = what;
  return s;
}

// Runs body and maps exceptions onto status codes.
template <class F>
aw_status guarded(F&& body) {
  try {
    body();
    return AW_OK;
  } catch (const QuadratureError& e) {
    return fail(AW_ERR_NONCONVERGENCE, e.what());
  } catch (const DomainError& e) {
    return fail(AW_ERR_DOMAIN, e.what());
  } catch (const ConfigError& e) {
    return fail(AW_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(AW_ERR_INTERNAL, "out of memory");
  } catch (const std::ios_base::failure& e) {
    return fail(AW_ERR_IO, e.what());
  } catch (const std::runtime_error& e) {
    return fail(AW_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(AW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(AW_ERR_INTERNAL, "unknown error");
  }
}

template <class Fn>
aw_status unary(double x, double* out, Fn&& fn) {
  if (!out) return fail(AW_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = fn(x); });
}

template <class Fn>
aw_status binary(double a, double b, double* out, Fn&& fn) {
  if (!out) return fail(AW_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = fn(a, b); });
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}  // namespace

extern "C" {

const char* aw_last_error_message(void) { return last_error.c_str(); }

const char* aw_status_string(aw_status status) {
  switch (status) {
    case AW_OK: return "ok";
    case AW_ERR_DOMAIN: return "domain error";
    case AW_ERR_INVALID_ARGUMENT: return "invalid argument";
    case AW_ERR_NONCONVERGENCE: return "numerical non-convergence";
    case AW_ERR_IO: return "I/O error";
    case AW_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* aw_version(void) { return "1.0.0"; }

aw_status aw_si(double x, double* out) { return unary(x, out, [](double v) { return specfun::si(v); }); }
aw_status aw_Ci(double x, double* out) { return unary(x, out, [](double v) { return specfun::Ci(v); }); }
aw_status aw_aux_F(double x, double* out) { return unary(x, out, [](double v) { return specfun::aux_F(v); }); }
aw_status aw_aux_Gcal(double x, double* out) {
  return unary(x, out, [](double v) { return specfun::aux_Gcal(v); });
}
aw_status aw_geom_G(double x, double* out) { return unary(x, out, specfun::geom_G); }
aw_status aw_H0rr(double x, double* out) { return unary(x, out, specfun::H0rr); }
aw_status aw_H0(double x, double* out) { return unary(x, out, [](double v) { return specfun::H0(v); }); }

aw_status aw_vacuum_potentials(double x0, aw_vacuum_result* out) {
  if (!out) return fail(AW_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const auto r = vacuum::vacuum_potentials(x0);
    *out = {r.v0rr, r.v0fr, r.vg, r.ve, r.gamma_ratio};
  });
}

aw_status aw_asymptotic_lvdw(double x0, double* out) { return unary(x0, out, vacuum::asymptotic_lvdw); }
aw_status aw_asymptotic_cp(double x0, double* out) { return unary(x0, out, vacuum::asymptotic_cp); }
aw_status aw_asymptotic_resonant(double x0, double* out) {
  return unary(x0, out, vacuum::asymptotic_resonant);
}
aw_status aw_spontaneous_rate_ratio(double x0, double* out) {
  return unary(x0, out, vacuum::spontaneous_rate_ratio);
}

aw_status aw_excited_extremum(int n, int maximum, double* x0_out, double* value_out) {
  if (!x0_out) return fail(AW_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const auto e = maximum ? vacuum::excited_maximum(n) : vacuum::excited_minimum(n);
    *x0_out = e.x0;
    if (value_out) *value_out = e.value;
  });
}

aw_status aw_thermal_potentials(double x0, double theta, int use_quadrature, aw_thermal_result* out) {
  if (!out) return fail(AW_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const auto r = thermal::thermal_potentials(
        x0, theta, use_quadrature ? thermal::ThermalMethod::quadrature : thermal::ThermalMethod::closed_form);
    *out = {r.v_T, r.v_ground, r.v_excited, r.v_average, r.p_ground};
  });
}

aw_status aw_v_T_quadrature(double x0, double theta, double* value, double* err_estimate) {
  if (!value) return fail(AW_ERR_INVALID_ARGUMENT, "null output pointer");
  aw_status status = AW_OK;
  const aw_status s = guarded([&] {
    const auto r = thermal::v_T_integral(x0, theta);
    *value = r.value;
    if (err_estimate) *err_estimate = r.err_estimate;
    if (!r.converged) status = fail(AW_ERR_NONCONVERGENCE, "thermal integral did not reach its tolerance");
  });
  return s != AW_OK ? s : status;
}

aw_status aw_v_T_smallz(double x0, double theta, double* out) { return binary(x0, theta, out, thermal::v_T_smallz); }
aw_status aw_lifshitz(double x0, double theta, double* out) { return binary(x0, theta, out, thermal::lifshitz); }
aw_status aw_v_closed(double x0, double theta, double* out) { return binary(x0, theta, out, thermal::v_closed); }
aw_status aw_v_average(double x0, double theta, double* out) { return binary(x0, theta, out, thermal::v_average); }
aw_status aw_v_average_lowT(double x0, double theta, double* out) {
  return binary(x0, theta, out, thermal::v_average_lowT);
}

aw_status aw_delta_T_terms(double x0, double theta, double* d1, double* d2, double* d3) {
  if (!d1 || !d2 || !d3) return fail(AW_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const auto d = thermal::delta_T_terms(x0, theta);
    *d1 = d.d1;
    *d2 = d.d2;
    *d3 = d.d3;
  });
}

aw_status aw_p_ground(double theta, double* out) { return unary(theta, out, thermal::p_ground); }
aw_status aw_bose_occupation(double xi, double* out) { return unary(xi, out, thermal::bose_occupation); }

aw_status aw_atom_create(double lambda0_um, double alpha0_A3, aw_atom** out) {
  if (!out) return fail(AW_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    *out = new aw_atom{AtomSpec::from_wavelength(lambda0_um * constants::micrometre, alpha0_A3 * constants::cubic_angstrom)};
  });
}

void aw_atom_destroy(aw_atom* atom) { delete atom; }

aw_status aw_atom_reduced_distance(const aw_atom* atom, double z_um, double* x0) {
  if (!atom || !x0) return fail(AW_ERR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] { *x0 = atom->spec.reduced_distance(z_um * constants::micrometre); });
}

aw_status aw_atom_reduced_temperature(const aw_atom* atom, double T_K, double* theta) {
  if (!atom || !theta) return fail(AW_ERR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] { *theta = atom->spec.reduced_temperature(T_K); });
}

aw_status aw_atom_to_ev(const aw_atom* atom, double v_norm, double* ev) {
  if (!atom || !ev) return fail(AW_ERR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] { *ev = joules_to_ev(denormalize(v_norm, atom->spec)); });
}

aw_status aw_atom_gamma_free(const aw_atom* atom, double* per_second) {
  if (!atom || !per_second) return fail(AW_ERR_INVALID_ARGUMENT, "null pointer");
  *per_second = atom->spec.gamma_free();
  return AW_OK;
}

aw_status aw_config_create(const char* command, aw_config** out) {
  if (!out || !command) return fail(AW_ERR_INVALID_ARGUMENT, "null pointer");
  *out = nullptr;
  return guarded([&] {
    auto* c = new aw_config;
    try {
      c->cfg.command = sweeps::parse_command(command);
    } catch (...) {
      delete c;
      throw;
    }
    *out = c;
  });
}

void aw_config_destroy(aw_config* config) { delete config; }

aw_status aw_config_set_grid(aw_config* config, double min, double max, int points, int log_spacing) {
  if (!config) return fail(AW_ERR_INVALID_ARGUMENT, "null config");
  return guarded([&] {
    GridSpec g{min, max, points, log_spacing != 0};
    g.validate();
    config->cfg.grid = g;
  });
}

aw_status aw_config_grid(const aw_config* config, double* min, double* max, int* points, int* log_spacing) {
  if (!config || !min || !max || !points || !log_spacing) return fail(AW_ERR_INVALID_ARGUMENT, "null pointer");
  const GridSpec g = config->cfg.effective_grid();
  *min = g.min;
  *max = g.max;
  *points = g.points;
  *log_spacing = g.log ? 1 : 0;
  return AW_OK;
}

aw_status aw_config_set_theta(aw_config* config, double theta) {
  if (!config) return fail(AW_ERR_INVALID_ARGUMENT, "null config");
  config->cfg.theta = theta;
  return AW_OK;
}

aw_status aw_config_set_temperature(aw_config* config, double T_K) {
  if (!config) return fail(AW_ERR_INVALID_ARGUMENT, "null config");
  config->cfg.T_K = T_K;
  return AW_OK;
}

aw_status aw_config_set_atom(aw_config* config, double lambda0_um, double alpha0_A3) {
  if (!config) return fail(AW_ERR_INVALID_ARGUMENT, "null config");
  config->cfg.atom = sweeps::PhysicalAtom{lambda0_um, alpha0_A3};
  return AW_OK;
}

aw_status aw_config_set_si(aw_config* config, int enabled) {
  if (!config) return fail(AW_ERR_INVALID_ARGUMENT, "null config");
  config->cfg.si = enabled != 0;
  return AW_OK;
}

aw_status aw_config_set_normalization(aw_config* config, const char* name) {
  if (!config || !name) return fail(AW_ERR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] { config->cfg.normalization = sweeps::parse_normalization(name); });
}

aw_status aw_config_load_json(aw_config* config, const char* json_text) {
  if (!config || !json_text) return fail(AW_ERR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] {
    config->cfg = sweeps::apply_json_config(config->cfg, json_text);
    config->format_name = config->cfg.format == io::TableFormat::csv ? "csv" : "json";
  });
}

aw_status aw_config_validate(const aw_config* config) {
  if (!config) return fail(AW_ERR_INVALID_ARGUMENT, "null config");
  return guarded([&] { config->cfg.validate(); });
}

aw_status aw_config_set_output(aw_config* config, const char* path, const char* format) {
  if (!config) return fail(AW_ERR_INVALID_ARGUMENT, "null config");
  return guarded([&] {
    if (path) config->cfg.out_path = path;
    if (format) {
      config->cfg.format = io::parse_format(format);
      config->format_name = format;
    }
  });
}

aw_status aw_config_output(const aw_config* config, const char** path, const char** format) {
  if (!config || !path || !format) return fail(AW_ERR_INVALID_ARGUMENT, "null pointer");
  *path = config->cfg.out_path.c_str();
  *format = config->format_name.c_str();
  return AW_OK;
}

aw_status aw_run(const aw_config* config, aw_table** out) {
  if (!config || !out) return fail(AW_ERR_INVALID_ARGUMENT, "null pointer");
  *out = nullptr;
  return guarded([&] { *out = new aw_table{sweeps::run(config->cfg)}; });
}

void aw_table_destroy(aw_table* table) { delete table; }

aw_status aw_table_shape(const aw_table* table, size_t* rows, size_t* cols) {
  if (!table || !rows || !cols) return fail(AW_ERR_INVALID_ARGUMENT, "null pointer");
  *rows = table->table.row_count();
  *cols = table->table.column_count();
  return AW_OK;
}

aw_status aw_table_column_name(const aw_table* table, size_t col, const char** name) {
  if (!table || !name) return fail(AW_ERR_INVALID_ARGUMENT, "null pointer");
  if (col >= table->table.column_count()) return fail(AW_ERR_INVALID_ARGUMENT, "column index out of range");
  *name = table->table.columns()[col].c_str();
  return AW_OK;
}

aw_status aw_table_value(const aw_table* table, size_t row, size_t col, double* out) {
  if (!table || !out) return fail(AW_ERR_INVALID_ARGUMENT, "null pointer");
  if (row >= table->table.row_count() || col >= table->table.column_count())
    return fail(AW_ERR_INVALID_ARGUMENT, "table index out of range");
  *out = table->table.rows()[row][col];
  return AW_OK;
}

aw_status aw_table_comment_count(const aw_table* table, size_t* count) {
  if (!table || !count) return fail(AW_ERR_INVALID_ARGUMENT, "null pointer");
  *count = table->table.comments().size();
  return AW_OK;
}

aw_status aw_table_comment(const aw_table* table, size_t index, const char** line) {
  if (!table || !line) return fail(AW_ERR_INVALID_ARGUMENT, "null pointer");
  if (index >= table->table.comments().size()) return fail(AW_ERR_INVALID_ARGUMENT, "comment index out of range");
  *line = table->table.comments()[index].c_str();
  return AW_OK;
}

aw_status aw_table_to_string(const aw_table* table, const char* format, char** out) {
  if (!table || !format || !out) return fail(AW_ERR_INVALID_ARGUMENT, "null pointer");
  *out = nullptr;
  return guarded([&] { *out = dup_string(io::to_string(table->table, io::parse_format(format))); });
}

aw_status aw_table_write(const aw_table* table, const char* path, const char* format) {
  if (!table || !path || !format) return fail(AW_ERR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] { io::write_file(path, table->table, io::parse_format(format)); });
}

void aw_string_free(char* s) { std::free(s); }

aw_status aw_run_checks(double h0_perturbation, aw_check_report** out) {
  if (!out) return fail(AW_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    checks::CheckOptions o;
    o.h0_perturbation = h0_perturbation;
    *out = new aw_check_report{checks::run_checks(o)};
  });
}

void aw_check_report_destroy(aw_check_report* report) { delete report; }

aw_status aw_check_report_count(const aw_check_report* report, size_t* count) {
  if (!report || !count) return fail(AW_ERR_INVALID_ARGUMENT, "null pointer");
  *count = report->report.results.size();
  return AW_OK;
}

aw_status aw_check_report_entry(const aw_check_report* report, size_t index, const char** name,
                                double* achieved, double* tolerance, int* passed) {
  if (!report) return fail(AW_ERR_INVALID_ARGUMENT, "null report");
  if (index >= report->report.results.size()) return fail(AW_ERR_INVALID_ARGUMENT, "check index out of range");
  const auto& r = report->report.results[index];
  if (name) *name = r.name.c_str();
  if (achieved) *achieved = r.achieved;
  if (tolerance) *tolerance = r.tolerance;
  if (passed) *passed = r.passed ? 1 : 0;
  return AW_OK;
}

int aw_check_report_all_passed(const aw_check_report* report) {
  return report && report->report.all_passed() ? 1 : 0;
}

aw_status aw_check_report_text(const aw_check_report* report, char** out) {
  if (!report || !out) return fail(AW_ERR_INVALID_ARGUMENT, "null pointer");
  *out = nullptr;
  return guarded([&] { *out = dup_string(checks::format_report(report->report)); });
}

}  // extern "C"
