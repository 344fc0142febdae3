#include <math.h>
#include <stdio.h>
#include <string.h>

#include "atomwall/atomwall.h"

static int failures = 0;

static void expect(int ok, const char* what) {
  if (!ok) {
    fprintf(stderr, "FAILED: %s (%s)\n", what, aw_last_error_message());
    ++failures;
  }
}

int main(void) {
  aw_vacuum_result r;
  aw_config* cfg = NULL;
  aw_table* table = NULL;
  size_t rows = 0, cols = 0;
  double v = 0.0;
  char* text = NULL;

  expect(aw_vacuum_potentials(1e3, &r) == AW_OK, "vacuum potentials");
  expect(fabs(r.vg * 3.14159265358979323846 * 1e12 / -6.0 - 1.0) < 2e-3, "far-field limit");
  expect(aw_vacuum_potentials(-2.0, &r) == AW_ERR_DOMAIN, "negative distance rejected");
  expect(strlen(aw_last_error_message()) > 0, "error message set");

  expect(aw_config_create("figure2", &cfg) == AW_OK, "config");
  expect(aw_config_set_grid(cfg, 0.4, 1.0, 4, 0) == AW_OK, "grid");
  expect(aw_run(cfg, &table) == AW_OK, "run");
  expect(aw_table_shape(table, &rows, &cols) == AW_OK && rows == 4 && cols == 4, "shape");
  expect(aw_table_value(table, 0, 3, &v) == AW_OK && fabs(v - 0.0134) < 5e-4, "figure2 at theta 0.4");
  expect(aw_table_to_string(table, "json", &text) == AW_OK && strstr(text, "rel_error") != NULL, "json");
  aw_string_free(text);
  aw_table_destroy(table);
  aw_config_destroy(cfg);

  if (failures == 0) printf("C API: ok\n");
  return failures == 0 ? 0 : 1;
}
