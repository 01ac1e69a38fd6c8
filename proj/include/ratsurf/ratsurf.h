/* C interface to the ratsurf library.
 *
 * All functions return a ratsurf_status. Strings handed out through char** parameters are
 * allocated by the library and released with ratsurf_string_free. On failure the message of the
 * last error on the calling thread is available from ratsurf_last_error.
 */
#ifndef RATSURF_H
#define RATSURF_H

#include <stddef.h>

#if defined(RATSURF_BUILDING)
#define RATSURF_API __attribute__((visibility("default")))
#else
#define RATSURF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ratsurf_status {
  RATSURF_OK = 0,
  RATSURF_E_INVALID_ARGUMENT = 1,
  RATSURF_E_POLE = 2,
  RATSURF_E_OVERFLOW = 3,
  RATSURF_E_INDETERMINACY = 4,
  RATSURF_E_PERIODICITY = 5,
  RATSURF_E_CHART_DOMAIN = 6,
  RATSURF_E_EXTRAPOLATION = 7,
  RATSURF_E_DEGENERATE = 8,
  RATSURF_E_NOT_SADDLE = 9,
  RATSURF_E_IO = 10,
  RATSURF_E_INTERNAL = 99
} ratsurf_status;

typedef struct ratsurf_params ratsurf_params;
typedef struct ratsurf_lattice ratsurf_lattice;

RATSURF_API const char* ratsurf_version(void);
RATSURF_API const char* ratsurf_last_error(void);
RATSURF_API const char* ratsurf_status_name(ratsurf_status status);
RATSURF_API void ratsurf_string_free(char* s);

/* ---- map parameters ---- */

/* (n, k) with the first admissible c and all a_l = 0. */
RATSURF_API ratsurf_status ratsurf_params_create(int n, int k, ratsurf_params** out);
/* n = 2, k = 4, c = 0, a_2 = -2.64. */
RATSURF_API ratsurf_status ratsurf_params_figure1(ratsurf_params** out);
/* {"n", "k", "c": {"j", "sign"} | number, "a": {"2": [re, im]}, "delta": [re, im]}. */
RATSURF_API ratsurf_status ratsurf_params_from_json(const char* json, ratsurf_params** out);
RATSURF_API ratsurf_status ratsurf_params_clone(const ratsurf_params* p, ratsurf_params** out);
RATSURF_API void ratsurf_params_destroy(ratsurf_params* p);

RATSURF_API ratsurf_status ratsurf_params_set_nk(ratsurf_params* p, int n, int k);
/* c = sign * 2 cos(j pi / n). */
RATSURF_API ratsurf_status ratsurf_params_set_c_symbolic(ratsurf_params* p, int j, int sign);
RATSURF_API ratsurf_status ratsurf_params_set_c_value(ratsurf_params* p, double c);
RATSURF_API ratsurf_status ratsurf_params_set_a(ratsurf_params* p, int l, double re, double im);
RATSURF_API ratsurf_status ratsurf_params_clear_a(ratsurf_params* p);
RATSURF_API ratsurf_status ratsurf_params_set_delta(ratsurf_params* p, double re, double im);
RATSURF_API ratsurf_status ratsurf_params_get_nk(const ratsurf_params* p, int* n, int* k);
RATSURF_API ratsurf_status ratsurf_params_c_value(const ratsurf_params* p, double* c);
RATSURF_API ratsurf_status ratsurf_params_validate(const ratsurf_params* p);
RATSURF_API ratsurf_status ratsurf_params_to_json(const ratsurf_params* p, char** out);

/* ---- lattice ---- */

RATSURF_API ratsurf_status ratsurf_lattice_create(int n, int k, ratsurf_lattice** out);
RATSURF_API void ratsurf_lattice_destroy(ratsurf_lattice* l);
RATSURF_API ratsurf_status ratsurf_lattice_dim(const ratsurf_lattice* l, size_t* dim);
/* Entry (row, col) of f_* in the geometric basis; fails if it does not fit in a long long. */
RATSURF_API ratsurf_status ratsurf_lattice_pushforward_entry(const ratsurf_lattice* l, size_t row, size_t col,
                                                             long long* value);
/* {"pushforward": [[...]], "intersection_form": [[...]], "canonical": [...]} with integer strings. */
RATSURF_API ratsurf_status ratsurf_lattice_json(const ratsurf_lattice* l, char** out);

/* ---- data ---- */

RATSURF_API ratsurf_status ratsurf_spectral_radius(int n, int k, double* lambda);
RATSURF_API ratsurf_status ratsurf_spectrum_json(int n, int k, char** out);
/* {"n", "candidates": [...], "admissible": [{"j", "value"}]}. */
RATSURF_API ratsurf_status ratsurf_admissible_c_json(int n, char** out);
RATSURF_API ratsurf_status ratsurf_degrees_json(int n, int k, int m, char** out);
RATSURF_API ratsurf_status ratsurf_weyl_json(int n, int k, char** out);
RATSURF_API ratsurf_status ratsurf_fixed_points_json(const ratsurf_params* p, char** out);

typedef enum ratsurf_format { RATSURF_FORMAT_JSON = 0, RATSURF_FORMAT_CSV = 1 } ratsurf_format;

/* seeds holds nseeds (x, y) pairs; an empty seed list selects points near the real fixed points. */
RATSURF_API ratsurf_status ratsurf_orbits(const ratsurf_params* p, const double* seeds, size_t nseeds, size_t steps,
                                          ratsurf_format format, char** out);

typedef struct ratsurf_manifold_options {
  double arclength;
  double spacing;
  double seed_length;
  size_t samples;
  size_t max_points;
  double escape_radius;
  int include_stable; /* also emit the mirror images across x = y */
} ratsurf_manifold_options;

RATSURF_API void ratsurf_manifold_options_default(ratsurf_manifold_options* opt);
/* Both branches of the unstable manifold of every real saddle. */
RATSURF_API ratsurf_status ratsurf_unstable_manifolds(const ratsurf_params* p, const ratsurf_manifold_options* opt,
                                                      ratsurf_format format, char** out);

/* ---- verification ---- */

typedef struct ratsurf_suite_options {
  double transition_tol;
  double closure_tol;
  double fix_tol;
  double parabolic_tol;
  double fixed_point_tol;
  double unit_tol;
  int chart_samples;
  int parabolic_samples;
  int degree_terms;
  int tamper_s; /* test hook: perturb center (tamper_s, tamper_j); negative disables */
  int tamper_j;
} ratsurf_suite_options;

RATSURF_API void ratsurf_suite_options_default(ratsurf_suite_options* opt);

/* Suites: "spectrum", "lattice", "degrees", "factorization", "chart", "parabolic", "fixed_points",
 * and "verify" (lattice, chart, factorization, parabolic). *passed is 1 when no check failed. */
RATSURF_API ratsurf_status ratsurf_run_suite(const char* suite, const ratsurf_params* p,
                                             const ratsurf_suite_options* opt, char** json_out, int* passed);

RATSURF_API ratsurf_status ratsurf_chart_records_json(const ratsurf_params* p, const ratsurf_suite_options* opt,
                                                      char** out);
RATSURF_API ratsurf_status ratsurf_parabolic_records_json(const ratsurf_params* p, const ratsurf_suite_options* opt,
                                                          char** out);

#ifdef __cplusplus
}
#endif

#endif /* RATSURF_H */
