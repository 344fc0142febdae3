#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "atomwall/atomwall.h"

namespace {

constexpr double pi = 3.14159265358979323846;

std::string last_error() { return aw_last_error_message(); }

}  // namespace

TEST_CASE("status strings and version") {
  CHECK(std::string(aw_version()).size() > 0);
  for (int s = AW_OK; s <= AW_ERR_INTERNAL; ++s) CHECK(std::string(aw_status_string(static_cast<aw_status>(s))).size() > 0);
}

TEST_CASE("scalar functions") {
  double v = 0.0;
  REQUIRE(aw_si(1.0, &v) == AW_OK);
  CHECK(v == doctest::Approx(0.946083070367183 - pi / 2).epsilon(1e-13));
  REQUIRE(aw_Ci(1.0, &v) == AW_OK);
  CHECK(v == doctest::Approx(0.337403922900968).epsilon(1e-13));
  REQUIRE(aw_geom_G(0.0, &v) == AW_OK);
  CHECK(v == doctest::Approx(1.0 / 3.0));
  REQUIRE(aw_H0(1e-4, &v) == AW_OK);
  CHECK(std::abs(v + pi) < 2e-4);

  CHECK(aw_Ci(0.0, &v) == AW_ERR_DOMAIN);
  CHECK_FALSE(last_error().empty());
  CHECK(aw_H0(-1.0, &v) == AW_ERR_DOMAIN);
  CHECK(aw_si(1.0, nullptr) == AW_ERR_INVALID_ARGUMENT);
  CHECK(aw_si(std::nan(""), &v) != AW_OK);
}

TEST_CASE("vacuum and thermal") {
  aw_vacuum_result r{};
  REQUIRE(aw_vacuum_potentials(1e-3, &r) == AW_OK);
  CHECK(r.vg * 1e-9 == doctest::Approx(-1.0).epsilon(1e-2));
  CHECK(std::abs(r.vg + r.ve - 2 * r.v0rr) < 1e-13 * std::abs(r.vg));
  CHECK(aw_vacuum_potentials(0.0, &r) == AW_ERR_DOMAIN);

  double x = 0.0, v = 0.0;
  REQUIRE(aw_excited_extremum(6, 1, &x, &v) == AW_OK);
  CHECK(std::abs(x - 12 * pi) < 2 * pi / 40);
  CHECK(aw_excited_extremum(0, 1, &x, &v) == AW_ERR_DOMAIN);

  aw_thermal_result t{};
  REQUIRE(aw_thermal_potentials(2.0, 0.5, 1, &t) == AW_OK);
  double q = 0.0, err = -1.0;
  REQUIRE(aw_v_T_quadrature(2.0, 0.5, &q, &err) == AW_OK);
  CHECK(t.v_T == q);
  CHECK(err >= 0.0);
  CHECK(aw_v_T_quadrature(2.0, 0.5, &q, nullptr) == AW_OK);
  REQUIRE(aw_thermal_potentials(2.0, 0.5, 0, &t) == AW_OK);
  double avg = 0.0;
  REQUIRE(aw_v_average(2.0, 0.5, &avg) == AW_OK);
  CHECK(t.v_average == doctest::Approx(avg).epsilon(1e-12));
  CHECK(aw_v_average(2.0, -0.5, &avg) == AW_ERR_DOMAIN);
  double d1, d2, d3;
  CHECK(aw_delta_T_terms(2.0, 0.5, &d1, &d2, &d3) == AW_OK);
  double p = 0.0;
  REQUIRE(aw_p_ground(0.5, &p) == AW_OK);
  CHECK(p == doctest::Approx(1 / (1 + std::exp(-4.0))));
}

TEST_CASE("atom handle") {
  aw_atom* a = nullptr;
  CHECK(aw_atom_create(-1.0, 24.0, &a) == AW_ERR_DOMAIN);
  CHECK(a == nullptr);
  REQUIRE(aw_atom_create(0.6, 24.0, &a) == AW_OK);
  double x0 = 0.0;
  REQUIRE(aw_atom_reduced_distance(a, 0.6 / (4 * pi), &x0) == AW_OK);
  CHECK(x0 == doctest::Approx(1.0).epsilon(1e-14));
  double th = 0.0;
  REQUIRE(aw_atom_reduced_temperature(a, 300.0, &th) == AW_OK);
  CHECK(th > 0.0);
  double g = 0.0, ev = 0.0;
  CHECK(aw_atom_gamma_free(a, &g) == AW_OK);
  CHECK(g > 0.0);
  CHECK(aw_atom_to_ev(a, -1.0, &ev) == AW_OK);
  CHECK(ev < 0.0);
  CHECK(aw_atom_reduced_distance(nullptr, 1.0, &x0) == AW_ERR_INVALID_ARGUMENT);
  aw_atom_destroy(a);
  aw_atom_destroy(nullptr);
}

TEST_CASE("config and tables") {
  aw_config* c = nullptr;
  CHECK(aw_config_create("bogus", &c) == AW_ERR_INVALID_ARGUMENT);
  REQUIRE(aw_config_create("vacuum", &c) == AW_OK);
  double lo, hi;
  int n, lg;
  REQUIRE(aw_config_grid(c, &lo, &hi, &n, &lg) == AW_OK);
  CHECK(n == 200);
  CHECK(lg == 1);
  CHECK(aw_config_set_grid(c, 5.0, 1.0, 10, 1) == AW_ERR_INVALID_ARGUMENT);
  REQUIRE(aw_config_set_grid(c, 0.5, 5.0, 4, 0) == AW_OK);
  CHECK(aw_config_set_normalization(c, "furlongs") == AW_ERR_INVALID_ARGUMENT);
  REQUIRE(aw_config_validate(c) == AW_OK);

  aw_table* t = nullptr;
  REQUIRE(aw_run(c, &t) == AW_OK);
  std::size_t rows = 0, cols = 0;
  REQUIRE(aw_table_shape(t, &rows, &cols) == AW_OK);
  CHECK(rows == 4);
  CHECK(cols == 6);
  const char* name = nullptr;
  REQUIRE(aw_table_column_name(t, 3, &name) == AW_OK);
  CHECK(std::string(name) == "vg");
  double x0 = 0.0, vg = 0.0;
  REQUIRE(aw_table_value(t, 0, 0, &x0) == AW_OK);
  REQUIRE(aw_table_value(t, 0, 3, &vg) == AW_OK);
  aw_vacuum_result r{};
  aw_vacuum_potentials(x0, &r);
  CHECK(vg == r.vg);
  CHECK(aw_table_value(t, 9, 0, &x0) == AW_ERR_INVALID_ARGUMENT);
  std::size_t nc = 0;
  REQUIRE(aw_table_comment_count(t, &nc) == AW_OK);
  CHECK(nc > 0);
  const char* line = nullptr;
  CHECK(aw_table_comment(t, 0, &line) == AW_OK);

  char* csv = nullptr;
  REQUIRE(aw_table_to_string(t, "csv", &csv) == AW_OK);
  CHECK(std::string(csv).find("x0,v0rr") != std::string::npos);
  aw_string_free(csv);
  char* dummy = nullptr;
  CHECK(aw_table_to_string(t, "xml", &dummy) == AW_ERR_INVALID_ARGUMENT);

  const std::string path = "capi_table.json";
  REQUIRE(aw_table_write(t, path.c_str(), "json") == AW_OK);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("\"columns\"") != std::string::npos);
  std::remove(path.c_str());
  CHECK(aw_table_write(t, "/nonexistent-dir/t.csv", "csv") == AW_ERR_IO);
  aw_table_destroy(t);

  REQUIRE(aw_config_load_json(c, R"({"points": 3, "format": "json", "out": "o.json"})") == AW_OK);
  const char* out_path = nullptr;
  const char* fmt = nullptr;
  REQUIRE(aw_config_output(c, &out_path, &fmt) == AW_OK);
  CHECK(std::string(out_path) == "o.json");
  CHECK(std::string(fmt) == "json");
  CHECK(aw_config_load_json(c, "{") == AW_ERR_INVALID_ARGUMENT);
  aw_config_destroy(c);

  REQUIRE(aw_config_create("thermal", &c) == AW_OK);
  CHECK(aw_config_validate(c) == AW_ERR_INVALID_ARGUMENT);
  CHECK(aw_run(c, &t) == AW_ERR_INVALID_ARGUMENT);
  REQUIRE(aw_config_set_theta(c, 0.5) == AW_OK);
  REQUIRE(aw_config_set_grid(c, 1.0, 10.0, 3, 1) == AW_OK);
  REQUIRE(aw_run(c, &t) == AW_OK);
  aw_table_destroy(t);
  aw_config_destroy(c);

  REQUIRE(aw_config_create("average", &c) == AW_OK);
  REQUIRE(aw_config_set_temperature(c, 300.0) == AW_OK);
  CHECK(aw_config_validate(c) == AW_ERR_INVALID_ARGUMENT);
  REQUIRE(aw_config_set_atom(c, 0.6, 24.0) == AW_OK);
  REQUIRE(aw_config_set_si(c, 1) == AW_OK);
  REQUIRE(aw_config_set_grid(c, 1.0, 10.0, 3, 1) == AW_OK);
  REQUIRE(aw_run(c, &t) == AW_OK);
  aw_table_destroy(t);
  aw_config_destroy(c);
  aw_config_destroy(nullptr);
  aw_table_destroy(nullptr);
}

TEST_CASE("check report") {
  aw_check_report* rep = nullptr;
  REQUIRE(aw_run_checks(0.0, &rep) == AW_OK);
  CHECK(aw_check_report_all_passed(rep) == 1);
  std::size_t n = 0;
  REQUIRE(aw_check_report_count(rep, &n) == AW_OK);
  CHECK(n >= 11);
  const char* name = nullptr;
  double achieved = 0.0, tol = 0.0;
  int passed = 0;
  REQUIRE(aw_check_report_entry(rep, 0, &name, &achieved, &tol, &passed) == AW_OK);
  CHECK(passed == 1);
  CHECK(achieved <= tol);
  CHECK(aw_check_report_entry(rep, n, &name, &achieved, &tol, &passed) == AW_ERR_INVALID_ARGUMENT);
  char* text = nullptr;
  REQUIRE(aw_check_report_text(rep, &text) == AW_OK);
  CHECK(std::string(text).find("[PASS]") != std::string::npos);
  aw_string_free(text);
  aw_check_report_destroy(rep);
}
