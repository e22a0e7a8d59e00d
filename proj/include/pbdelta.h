/*
 * C interface to the pbdelta library: exact delta-invariant bounds,
 * volume profiles and K-stability verdicts for polarized projective
 * bundles over smooth curves.
 *
 * Conventions:
 *  - All handles are opaque; free them with the matching *_free call.
 *  - Rational arguments and results are strings "p" or "p/q" in lowest
 *    terms; every returned char* is freshly allocated and must be
 *    released with pbd_string_free.
 *  - Functions returning pbd_status set *errmsg (when non-NULL) to an
 *    allocated message on failure; out-parameters are untouched then.
 */
#ifndef PBDELTA_H
#define PBDELTA_H

#include <stddef.h>

#if defined(_WIN32)
#define PBDELTA_API __declspec(dllexport)
#else
#define PBDELTA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pbd_status {
  PBD_OK = 0,
  PBD_ERR_NULL_ARG = 1,
  PBD_ERR_INVALID_INPUT = 2,
  PBD_ERR_PARSE = 3,
  PBD_ERR_NOT_AMPLE = 4,
  PBD_ERR_NOT_PSEFF = 5,
  PBD_ERR_NO_BLOWUP = 6,
  PBD_ERR_UNSUPPORTED = 7,
  PBD_ERR_IO = 8,
  PBD_ERR_INTERNAL = 9
} pbd_status;

PBDELTA_API const char* pbd_version(void);
PBDELTA_API void pbd_string_free(char* s);

/* ---- rationals ------------------------------------------------------- */

/* Canonical "p/q" form of a rational literal, or NULL on a parse error. */
PBDELTA_API char* pbd_rat_canonical(const char* text);

/* Decimal rendering with `significant` digits; the trailing marker is '='
 * when the decimal is exact and '~' when rounded. NULL on parse error. */
PBDELTA_API char* pbd_rat_decimal(const char* text, int significant);

/* ---- bundles ---------------------------------------------------------- */

typedef struct pbd_bundle pbd_bundle;

typedef enum pbd_stability {
  PBD_STABLE = 0,
  PBD_STRICTLY_SEMISTABLE = 1,
  PBD_POLYSTABLE = 2,
  PBD_UNSTABLE_ONE_STEP = 3
} pbd_stability;

PBDELTA_API pbd_status pbd_bundle_parse(const char* text, pbd_bundle** out, char** errmsg);
PBDELTA_API pbd_status pbd_bundle_load(const char* path, pbd_bundle** out, char** errmsg);
PBDELTA_API void pbd_bundle_free(pbd_bundle* e);

PBDELTA_API long pbd_bundle_genus(const pbd_bundle* e);
PBDELTA_API long pbd_bundle_rank(const pbd_bundle* e);
PBDELTA_API long pbd_bundle_degree(const pbd_bundle* e);
PBDELTA_API int pbd_bundle_filtration_length(const pbd_bundle* e);
PBDELTA_API pbd_stability pbd_bundle_stability(const pbd_bundle* e);
PBDELTA_API char* pbd_bundle_slope(const pbd_bundle* e);
PBDELTA_API char* pbd_bundle_slope_max(const pbd_bundle* e);
PBDELTA_API char* pbd_bundle_slope_min(const pbd_bundle* e);

/* ---- cones ------------------------------------------------------------ */

typedef enum pbd_cone {
  PBD_CONE_AMPLE = 0,
  PBD_CONE_NEF_NOT_AMPLE = 1,
  PBD_CONE_PSEFF_NOT_NEF = 2,
  PBD_CONE_NOT_PSEFF = 3,
  PBD_CONE_INVALID = -1 /* bad handle or unparsable coefficients */
} pbd_cone;

/* Position of a*xi + b*f relative to the nef and pseudoeffective cones. */
PBDELTA_API pbd_cone pbd_cone_position(const pbd_bundle* e, const char* a, const char* b);

/* ---- delta reports ----------------------------------------------------- */

typedef struct pbd_report pbd_report;

typedef enum pbd_report_field {
  PBD_FIELD_S_FIBER = 0,       /* expected vanishing order along a fiber */
  PBD_FIELD_S_EXCEPTIONAL = 1, /* ... along the exceptional divisor */
  PBD_FIELD_S1 = 2,
  PBD_FIELD_S2 = 3,
  PBD_FIELD_LOWER = 4,
  PBD_FIELD_UPPER = 5
} pbd_report_field;

typedef enum pbd_branch {
  PBD_BRANCH_FIBER = 0,
  PBD_BRANCH_EXCEPTIONAL = 1,
  PBD_BRANCH_PROJECTIVE_SPACE = 2,
  PBD_BRANCH_INDETERMINATE = 3
} pbd_branch;

PBDELTA_API pbd_status pbd_delta(const pbd_bundle* e, const char* a, const char* b,
                                 pbd_report** out, char** errmsg);
PBDELTA_API void pbd_report_free(pbd_report* r);

/* Field value in "p/q" form, or NULL when the field is absent (s1/s2 and
 * s_exceptional do not apply to every bundle). */
PBDELTA_API char* pbd_report_field_value(const pbd_report* r, pbd_report_field field);
PBDELTA_API int pbd_report_exact(const pbd_report* r);
PBDELTA_API pbd_branch pbd_report_branch(const pbd_report* r);
PBDELTA_API char* pbd_report_note(const pbd_report* r);

/* Rational upper bound for the exactness threshold in b at fixed a; exact
 * when the underlying discriminant is a perfect square. */
PBDELTA_API pbd_status pbd_b_exactness_threshold(const pbd_bundle* e, const char* a, char** out,
                                                 char** errmsg);

/* ---- K-stability ------------------------------------------------------- */

typedef enum pbd_classification {
  PBD_CLASS_ALL_KPOLYSTABLE = 0,
  PBD_CLASS_ALL_KSEMISTABLE_NOT_POLY = 1,
  PBD_CLASS_NONE_KSEMISTABLE = 2,
  PBD_CLASS_INVALID = -1
} pbd_classification;

/* Sufficient K-semistability test for a positive lower bound on delta.
 * On success *passes is 0/1 and the two witness classes are written as
 * "a*xi + b*f" strings. */
PBDELTA_API pbd_status pbd_ksemistable_sufficient(const pbd_bundle* e, const char* a,
                                                  const char* b, const char* delta_lower,
                                                  int* passes, char** witness_first,
                                                  char** witness_second, char** note,
                                                  char** errmsg);

PBDELTA_API pbd_classification pbd_classify(const pbd_bundle* e);

/* ---- string tables ------------------------------------------------------ */

typedef struct pbd_table pbd_table;

PBDELTA_API size_t pbd_table_rows(const pbd_table* t);
PBDELTA_API size_t pbd_table_cols(const pbd_table* t);
PBDELTA_API char* pbd_table_column_name(const pbd_table* t, size_t col);
PBDELTA_API char* pbd_table_cell(const pbd_table* t, size_t row, size_t col);
PBDELTA_API void pbd_table_free(pbd_table* t);

/* ---- volume profiles ---------------------------------------------------- */

typedef struct pbd_profile pbd_profile;

/* axis is 'F' (fiber direction) or 'D' (exceptional direction). */
PBDELTA_API pbd_status pbd_profile_compute(const pbd_bundle* e, const char* a, const char* b,
                                           char axis, pbd_profile** out, char** errmsg);
PBDELTA_API void pbd_profile_free(pbd_profile* p);

PBDELTA_API size_t pbd_profile_chambers(const pbd_profile* p);
PBDELTA_API char* pbd_profile_chamber_lo(const pbd_profile* p, size_t chamber);
PBDELTA_API char* pbd_profile_chamber_hi(const pbd_profile* p, size_t chamber);
PBDELTA_API size_t pbd_profile_coefficients(const pbd_profile* p, size_t chamber);
PBDELTA_API char* pbd_profile_coefficient(const pbd_profile* p, size_t chamber, size_t k);
PBDELTA_API char* pbd_profile_threshold(const pbd_profile* p);

/* Exact volume at t in [0, threshold] (zero beyond); NULL for t < 0. */
PBDELTA_API char* pbd_profile_value(const pbd_profile* p, const char* t);

/* Exact integral of the profile over [0, threshold]. */
PBDELTA_API char* pbd_profile_integral(const pbd_profile* p);

/* Equally spaced samples (count >= 2) over [0, threshold]; columns
 * t, volume, chamber, t_decimal, volume_decimal. */
PBDELTA_API pbd_status pbd_profile_sample(const pbd_profile* p, size_t count, pbd_table** out,
                                          char** errmsg);

/* ---- scans, limits, verification ---------------------------------------- */

/* Grid scan; ranges are inclusive with positive rational steps. threads = 0
 * picks the hardware concurrency; the output does not depend on it.
 * Columns: a, b, status, lower, upper, exact, branch, ks_pass. */
PBDELTA_API pbd_status pbd_scan(const pbd_bundle* e, const char* a_lo, const char* a_hi,
                                const char* a_step, const char* b_lo, const char* b_hi,
                                const char* b_step, unsigned threads, pbd_table** out,
                                char** errmsg);

/* Bounds along a = 2^-k, k = 1..steps, at fixed b.
 * Columns: k, a, status, lower, upper, gap. */
PBDELTA_API pbd_status pbd_limit_check(const pbd_bundle* e, const char* b, int steps,
                                       pbd_table** out, char** errmsg);

/* Self-verification sweep; columns item, pass, detail. *all_passed is set
 * to 0/1. */
PBDELTA_API pbd_status pbd_verify(long nmax, unsigned long long seed, int instances,
                                  pbd_table** out, int* all_passed, char** errmsg);

#ifdef __cplusplus
}
#endif

#endif /* PBDELTA_H */
