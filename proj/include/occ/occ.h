/* C interface to the occ library. All objects are opaque handles owned by
 * the caller and released with the matching *_free function. Functions
 * return OCC_OK or an error status; the message of the last error on the
 * calling thread is available from occ_last_error(). */
#ifndef OCC_OCC_H
#define OCC_OCC_H

#include <stddef.h>

#if defined(_WIN32)
#define OCC_API __declspec(dllexport)
#else
#define OCC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum occ_status {
  OCC_OK = 0,
  OCC_ERR_INVALID_ARGUMENT,
  OCC_ERR_INCOMPATIBLE_CONTEXTS,
  OCC_ERR_NON_NILPOTENT_SUBSTITUTION,
  OCC_ERR_NOT_A_UNIT,
  OCC_ERR_NOT_DIVISIBLE,
  OCC_ERR_NOT_SYMMETRIC,
  OCC_ERR_REDUCTION_FAILED,
  OCC_ERR_REQUIRES_RATIONAL,
  OCC_ERR_VARIABLE_COLLISION,
  OCC_ERR_PUSHFORWARD_NOT_POLYNOMIAL,
  OCC_ERR_FINITENESS_VIOLATED,
  OCC_ERR_LAW_MISMATCH,
  OCC_ERR_OUT_OF_RANGE,
  OCC_ERR_PARSE,
  OCC_ERR_NULL_ARGUMENT,
  OCC_ERR_INTERNAL
} occ_status;

typedef enum occ_pbf_action { OCC_PBF_REDUCE = 0, OCC_PBF_PUSHFORWARD = 1 } occ_pbf_action;

typedef struct occ_law occ_law;
typedef struct occ_context occ_context;
typedef struct occ_series occ_series;
typedef struct occ_report occ_report;

OCC_API const char *occ_version(void);
OCC_API const char *occ_status_message(occ_status status);
/* Message of the last failed call on this thread; "" if none. */
OCC_API const char *occ_last_error(void);
/* Frees strings returned through char** out parameters. */
OCC_API void occ_string_free(char *text);

/* Laws: "additive", "multiplicative", "universal". */
OCC_API occ_status occ_law_new(const char *name, int truncation, occ_law **out);
/* Custom law from an expression in x and y with rational coefficients. */
OCC_API occ_status occ_law_custom(const char *expression, int truncation, occ_law **out);
OCC_API void occ_law_free(occ_law *law);
OCC_API occ_status occ_law_series(const occ_law *law, occ_series **out);
OCC_API occ_status occ_law_coefficient(const occ_law *law, int i, int j, occ_series **out);
OCC_API occ_status occ_law_inverse(const occ_law *law, occ_series **out);
OCC_API occ_status occ_law_nseries(const occ_law *law, int n, occ_series **out);

/* Context with the law's coefficient generators and the given degree-1
 * class variables. */
OCC_API occ_status occ_context_new(const occ_law *law, const char *const *classes,
                                   size_t count, int truncation, occ_context **out);
OCC_API void occ_context_free(occ_context *context);

/* Expressions may use F(a,b) and inv(a) when law is not NULL. */
OCC_API occ_status occ_series_parse(const occ_context *context, const occ_law *law,
                                    const char *text, occ_series **out);
OCC_API void occ_series_free(occ_series *series);
OCC_API occ_status occ_series_add(const occ_series *a, const occ_series *b, occ_series **out);
OCC_API occ_status occ_series_mul(const occ_series *a, const occ_series *b, occ_series **out);
OCC_API occ_status occ_series_equal(const occ_series *a, const occ_series *b, int *out);
OCC_API occ_status occ_series_to_string(const occ_series *series, char **out);
OCC_API occ_status occ_series_to_json(const occ_series *series, char **out);

/* Reduces or pushes forward an element of the projective bundle ring of the
 * split bundle with the given roots; `element` is an expression in t and the
 * context variables. */
OCC_API occ_status occ_pbf(const occ_law *law, const occ_context *context,
                           const char *const *roots, size_t rank, const char *element,
                           occ_pbf_action action, occ_series **out);

/* Reports. A report is a list of {item, expected, actual, pass}. */
OCC_API occ_status occ_run_task(const char *text, const char *name, occ_report **out);
/* truncation <= 0 selects the suite default. */
OCC_API occ_status occ_run_suite(const char *name, int truncation, occ_report **out);
OCC_API occ_status occ_grr(int rank, int k, occ_report **out);
OCC_API occ_status occ_chi(int rank, int k, occ_report **out);
OCC_API occ_status occ_tower(const char *law, int depth, occ_report **out);
OCC_API occ_status occ_fglcheck(const char *law, int truncation, occ_report **out);
OCC_API occ_status occ_cf(int truncation, occ_report **out);
OCC_API void occ_report_free(occ_report *report);
OCC_API int occ_report_pass(const occ_report *report);
OCC_API size_t occ_report_size(const occ_report *report);
/* Output mode requested by a task file: 1 for json, 0 otherwise. */
OCC_API int occ_report_wants_json(const occ_report *report);
OCC_API occ_status occ_report_render(const occ_report *report, int json, char **out);

#ifdef __cplusplus
}
#endif

#endif
