/* C interface to the coxinv library. Strings returned through `char**`
 * belong to the caller and are released with coxinv_string_free. */
#ifndef COXINV_H
#define COXINV_H

#include <stddef.h>

#if defined(__GNUC__)
#define COXINV_API __attribute__((visibility("default")))
#else
#define COXINV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  COXINV_OK = 0,
  COXINV_ERR_PARSE = 1,    /* bad type string */
  COXINV_ERR_ARG = 2,      /* bad argument (unknown table, suite, null pointer) */
  COXINV_ERR_LIMIT = 3,    /* group larger than the enumeration limit */
  COXINV_ERR_INTERNAL = 4,
  COXINV_ERR_VERIFY = 5    /* a verification check failed */
} coxinv_status;

typedef enum { COXINV_FORMAT_JSON = 0, COXINV_FORMAT_TEXT = 1 } coxinv_format;

typedef struct coxinv_rootsys coxinv_rootsys;

COXINV_API const char* coxinv_version(void);
/* Message of the last failing call on this thread. */
COXINV_API const char* coxinv_last_error(void);
COXINV_API void coxinv_string_free(char* s);

COXINV_API coxinv_status coxinv_rootsys_new(const char* type, coxinv_rootsys** out);
COXINV_API void coxinv_rootsys_free(coxinv_rootsys* rs);
/* Canonical type name. */
COXINV_API coxinv_status coxinv_rootsys_name(const coxinv_rootsys* rs, char** out);
COXINV_API coxinv_status coxinv_rootsys_rank(const coxinv_rootsys* rs, int* out);
COXINV_API coxinv_status coxinv_rootsys_reflections(const coxinv_rootsys* rs, int* out);
/* Group order as a decimal string. */
COXINV_API coxinv_status coxinv_rootsys_order(const coxinv_rootsys* rs, char** out);
COXINV_API coxinv_status coxinv_rootsys_maximal_cubes(const coxinv_rootsys* rs, size_t* out);

/* Coefficients h_0..h_d of the h-polynomial. With `enumerated` nonzero the
 * polynomial is computed from the group (up to `limit` elements), otherwise
 * from the closed formula. `*len` receives d + 1; at most `cap` entries are
 * written. */
COXINV_API coxinv_status coxinv_hpoly(const char* type, int enumerated, size_t limit, long long* coeffs, size_t cap,
                           size_t* len);

COXINV_API coxinv_status coxinv_report(const char* type, coxinv_format format, size_t limit, int timing, char** out);
/* which: "h-poly", "cube-counts" or "degrees". */
COXINV_API coxinv_status coxinv_table(const char* which, size_t limit, char** out);
/* what: "root-system", "class-table" or "cube-census". */
COXINV_API coxinv_status coxinv_export(const char* what, const char* type, size_t limit, char** out);

/* Runs a suite ("core" or "heavy"); `checks` is a comma-separated subset or
 * NULL, `fault` is NULL or "root-table". The summary is written to *out and
 * COXINV_ERR_VERIFY is returned when a check fails. */
COXINV_API coxinv_status coxinv_verify(const char* suite, const char* checks, const char* fault, size_t limit, int timing,
                            char** out);
/* Newline-separated check names of a suite. */
COXINV_API coxinv_status coxinv_check_names(const char* suite, char** out);

#ifdef __cplusplus
}
#endif

#endif
