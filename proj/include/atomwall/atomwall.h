#ifndef ATOMWALL_ATOMWALL_H
#define ATOMWALL_ATOMWALL_H

/* C interface to the atom-wall potential library.
 *
 * Every call returns an aw_status; results go through out-pointers. On
 * failure aw_last_error_message() describes the error (per thread, valid
 * until the next failing call on that thread). Potentials are normalized to
 * hbar c alpha0 k0^4 with x0 = 2 k0 z and theta = 2 kB T / (hbar omega0).
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(AW_BUILDING_LIBRARY)
#    define AW_API __declspec(dllexport)
#  else
#    define AW_API __declspec(dllimport)
#  endif
#else
#  define AW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum aw_status {
  AW_OK = 0,
  AW_ERR_DOMAIN = 1,
  AW_ERR_INVALID_ARGUMENT = 2,
  AW_ERR_NONCONVERGENCE = 3,
  AW_ERR_IO = 4,
  AW_ERR_INTERNAL = 5
} aw_status;

AW_API const char* aw_last_error_message(void);
AW_API const char* aw_status_string(aw_status status);
AW_API const char* aw_version(void);

/* special functions */
AW_API aw_status aw_si(double x, double* out);
AW_API aw_status aw_Ci(double x, double* out);
AW_API aw_status aw_aux_F(double x, double* out);
AW_API aw_status aw_aux_Gcal(double x, double* out);
AW_API aw_status aw_geom_G(double x, double* out);
AW_API aw_status aw_H0rr(double x, double* out);
AW_API aw_status aw_H0(double x, double* out);

/* vacuum */
typedef struct aw_vacuum_result {
  double v0rr;
  double v0fr;
  double vg;
  double ve;
  double gamma_ratio;
} aw_vacuum_result;

AW_API aw_status aw_vacuum_potentials(double x0, aw_vacuum_result* out);
AW_API aw_status aw_asymptotic_lvdw(double x0, double* out);
AW_API aw_status aw_asymptotic_cp(double x0, double* out);
AW_API aw_status aw_asymptotic_resonant(double x0, double* out);
AW_API aw_status aw_spontaneous_rate_ratio(double x0, double* out);
/* maximum != 0: maximum of ve near 2 pi n, else minimum near 2 pi (n - 1/2) */
AW_API aw_status aw_excited_extremum(int n, int maximum, double* x0_out, double* value_out);

/* thermal */
typedef struct aw_thermal_result {
  double v_T;
  double v_ground;
  double v_excited;
  double v_average;
  double p_ground;
} aw_thermal_result;

AW_API aw_status aw_thermal_potentials(double x0, double theta, int use_quadrature, aw_thermal_result* out);
/* err_estimate may be NULL; value and err_estimate are filled even on AW_ERR_NONCONVERGENCE */
AW_API aw_status aw_v_T_quadrature(double x0, double theta, double* value, double* err_estimate);
AW_API aw_status aw_v_T_smallz(double x0, double theta, double* out);
AW_API aw_status aw_lifshitz(double x0, double theta, double* out);
AW_API aw_status aw_v_closed(double x0, double theta, double* out);
AW_API aw_status aw_v_average(double x0, double theta, double* out);
AW_API aw_status aw_v_average_lowT(double x0, double theta, double* out);
AW_API aw_status aw_delta_T_terms(double x0, double theta, double* d1, double* d2, double* d3);
AW_API aw_status aw_p_ground(double theta, double* out);
AW_API aw_status aw_bose_occupation(double xi, double* out);

/* physical atom */
typedef struct aw_atom aw_atom;

AW_API aw_status aw_atom_create(double lambda0_um, double alpha0_A3, aw_atom** out);
AW_API void aw_atom_destroy(aw_atom* atom);
AW_API aw_status aw_atom_reduced_distance(const aw_atom* atom, double z_um, double* x0);
AW_API aw_status aw_atom_reduced_temperature(const aw_atom* atom, double T_K, double* theta);
AW_API aw_status aw_atom_to_ev(const aw_atom* atom, double v_norm, double* ev);
AW_API aw_status aw_atom_gamma_free(const aw_atom* atom, double* per_second);

/* sweeps */
typedef struct aw_config aw_config;
typedef struct aw_table aw_table;

/* command: vacuum, thermal, average, emission, figure1, figure2 or check */
AW_API aw_status aw_config_create(const char* command, aw_config** out);
AW_API void aw_config_destroy(aw_config* config);
AW_API aw_status aw_config_set_grid(aw_config* config, double min, double max, int points, int log_spacing);
/* current grid: the command default until set */
AW_API aw_status aw_config_grid(const aw_config* config, double* min, double* max, int* points, int* log_spacing);
AW_API aw_status aw_config_set_theta(aw_config* config, double theta);
AW_API aw_status aw_config_set_temperature(aw_config* config, double T_K);
AW_API aw_status aw_config_set_atom(aw_config* config, double lambda0_um, double alpha0_A3);
AW_API aw_status aw_config_set_si(aw_config* config, int enabled);
/* "hck4" or "lvdw_ratio" */
AW_API aw_status aw_config_set_normalization(aw_config* config, const char* name);
/* overlays a JSON object with keys grid_min, grid_max, points, log, theta, temp_K,
   lambda0_um, alpha0_A3, si, out, format, normalization */
AW_API aw_status aw_config_load_json(aw_config* config, const char* json_text);
AW_API aw_status aw_config_validate(const aw_config* config);
/* output settings picked up from a JSON config ("" path means stdout) */
AW_API aw_status aw_config_set_output(aw_config* config, const char* path, const char* format);
AW_API aw_status aw_config_output(const aw_config* config, const char** path, const char** format);

AW_API aw_status aw_run(const aw_config* config, aw_table** out);
AW_API void aw_table_destroy(aw_table* table);
AW_API aw_status aw_table_shape(const aw_table* table, size_t* rows, size_t* cols);
AW_API aw_status aw_table_column_name(const aw_table* table, size_t col, const char** name);
AW_API aw_status aw_table_value(const aw_table* table, size_t row, size_t col, double* out);
AW_API aw_status aw_table_comment_count(const aw_table* table, size_t* count);
AW_API aw_status aw_table_comment(const aw_table* table, size_t index, const char** line);
/* format: "csv" or "json"; free the result with aw_string_free */
AW_API aw_status aw_table_to_string(const aw_table* table, const char* format, char** out);
AW_API aw_status aw_table_write(const aw_table* table, const char* path, const char* format);
AW_API void aw_string_free(char* s);

/* self-check suite */
typedef struct aw_check_report aw_check_report;

AW_API aw_status aw_run_checks(double h0_perturbation, aw_check_report** out);
AW_API void aw_check_report_destroy(aw_check_report* report);
AW_API aw_status aw_check_report_count(const aw_check_report* report, size_t* count);
AW_API aw_status aw_check_report_entry(const aw_check_report* report, size_t index, const char** name,
                                       double* achieved, double* tolerance, int* passed);
AW_API int aw_check_report_all_passed(const aw_check_report* report);
/* formatted pass/fail lines; free with aw_string_free */
AW_API aw_status aw_check_report_text(const aw_check_report* report, char** out);

#ifdef __cplusplus
}
#endif

#endif
