#include <stdio.h>
#include <string.h>

#include "coxinv/coxinv.h"

static int failures = 0;

#define EXPECT(cond)                                             \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                \
    }                                                            \
  } while (0)

static void test_rootsys(void) {
  coxinv_rootsys* rs = NULL;
  char* s = NULL;
  int n = 0;
  size_t cubes = 0;
  EXPECT(coxinv_rootsys_new("H4", &rs) == COXINV_OK);
  EXPECT(coxinv_rootsys_rank(rs, &n) == COXINV_OK && n == 4);
  EXPECT(coxinv_rootsys_reflections(rs, &n) == COXINV_OK && n == 60);
  EXPECT(coxinv_rootsys_order(rs, &s) == COXINV_OK && strcmp(s, "14400") == 0);
  coxinv_string_free(s);
  EXPECT(coxinv_rootsys_name(rs, &s) == COXINV_OK && strcmp(s, "H4") == 0);
  coxinv_string_free(s);
  EXPECT(coxinv_rootsys_maximal_cubes(rs, &cubes) == COXINV_OK && cubes == 75);
  coxinv_rootsys_free(rs);

  EXPECT(coxinv_rootsys_new("I2(6)", &rs) == COXINV_OK);
  EXPECT(coxinv_rootsys_name(rs, &s) == COXINV_OK && strcmp(s, "G2") == 0);
  coxinv_string_free(s);
  coxinv_rootsys_free(rs);

  rs = NULL;
  EXPECT(coxinv_rootsys_new("Z5", &rs) == COXINV_ERR_PARSE && rs == NULL);
  EXPECT(strlen(coxinv_last_error()) > 0);
  EXPECT(coxinv_rootsys_new(NULL, &rs) == COXINV_ERR_ARG);
  EXPECT(coxinv_rootsys_rank(NULL, &n) == COXINV_ERR_ARG);
  coxinv_rootsys_free(NULL);
}

static void test_hpoly(void) {
  long long c[16];
  size_t len = 0;
  const long long d4[] = {1, 1, 3, 1, 1};
  EXPECT(coxinv_hpoly("D4", 0, 0, c, 16, &len) == COXINV_OK && len == 5 && memcmp(c, d4, sizeof d4) == 0);
  EXPECT(coxinv_hpoly("D4", 1, 0, c, 16, &len) == COXINV_OK && len == 5 && memcmp(c, d4, sizeof d4) == 0);
  EXPECT(coxinv_hpoly("I2(9)", 1, 0, c, 16, &len) == COXINV_OK && len == 2 && c[0] == 1 && c[1] == 1);
  /* short buffers still report the full length */
  EXPECT(coxinv_hpoly("E8", 0, 0, c, 2, &len) == COXINV_OK && len == 9);
  EXPECT(coxinv_hpoly("F4xF4xF4", 1, 1000, c, 16, &len) == COXINV_ERR_LIMIT);
}

static void test_strings(void) {
  char* out = NULL;
  EXPECT(coxinv_report("A1xA1", COXINV_FORMAT_TEXT, 0, 0, &out) == COXINV_OK);
  EXPECT(out != NULL && strstr(out, "1 + 2t + t^2") != NULL);
  coxinv_string_free(out);
  EXPECT(coxinv_table("cube-counts", 0, &out) == COXINV_OK && strstr(out, "\nH4, 75\n") != NULL);
  coxinv_string_free(out);
  EXPECT(coxinv_table("nope", 0, &out) == COXINV_ERR_ARG);
  EXPECT(coxinv_export("root-system", "B2", 0, &out) == COXINV_OK && out[0] == '{');
  coxinv_string_free(out);
  EXPECT(coxinv_export("class-table", "E8", 1000, &out) == COXINV_ERR_LIMIT);
  EXPECT(coxinv_check_names("core", &out) == COXINV_OK && strstr(out, "12-quaternionic-h4") != NULL);
  coxinv_string_free(out);
  EXPECT(coxinv_verify("core", "03-h-reciprocity", NULL, 0, 0, &out) == COXINV_OK);
  EXPECT(strstr(out, "OK 1/1 checks passed") != NULL);
  coxinv_string_free(out);
  EXPECT(coxinv_verify("core", "08-characteristic-degrees", "root-table", 0, 0, &out) == COXINV_ERR_VERIFY);
  EXPECT(out != NULL && strstr(out, "08-characteristic-degrees") != NULL);
  coxinv_string_free(out);
  EXPECT(coxinv_verify("core", "no-such-check", NULL, 0, 0, &out) == COXINV_ERR_ARG);
  EXPECT(coxinv_version() != NULL && strlen(coxinv_version()) > 0);
}

int main(void) {
  test_rootsys();
  test_hpoly();
  test_strings();
  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("capi: all checks passed\n");
  return 0;
}
