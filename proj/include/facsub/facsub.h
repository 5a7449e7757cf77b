/* C interface to the facsub library.
 *
 * Every call returns a facsub_status. On failure the message is available
 * from facsub_last_error() on the same thread. Strings returned through
 * `char**` out-parameters are owned by the caller and must be released with
 * facsub_string_free(). JSON layouts match the C++ json_io functions.
 */
#ifndef FACSUB_H
#define FACSUB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(FACSUB_BUILDING_LIBRARY)
#define FACSUB_API __attribute__((visibility("default")))
#else
#define FACSUB_API
#endif

typedef enum facsub_status {
  FACSUB_OK = 0,
  FACSUB_ERR_PARSE = 1,    /* malformed text; see facsub_last_error_position */
  FACSUB_ERR_DOMAIN = 2,   /* well-formed input outside a precondition */
  FACSUB_ERR_INTERNAL = 3, /* failed self-check */
  FACSUB_ERR_ARG = 4       /* null or otherwise unusable argument */
} facsub_status;

typedef enum facsub_outcome {
  FACSUB_HOLDS = 0,
  FACSUB_FAILS = 1,
  FACSUB_HYPOTHESIS_VIOLATED = 2
} facsub_outcome;

typedef struct facsub_subring facsub_subring;

typedef struct facsub_bound {
  int64_t B; /* coordinate radius, >= 1 */
  int64_t K; /* largest exponent tried, >= 2 */
} facsub_bound;

typedef struct facsub_gen_params {
  uint64_t seed;
  size_t n_max;
  size_t gen_count;
  int64_t coord_max;
  size_t unit_dirs;
  size_t instance_count;
  unsigned threads;
} facsub_gen_params;

FACSUB_API const char* facsub_version(void);
FACSUB_API facsub_bound facsub_default_bound(void);
FACSUB_API facsub_gen_params facsub_default_gen_params(void);

FACSUB_API const char* facsub_last_error(void);
/* Byte offset of the last parse error, or -1. */
FACSUB_API int64_t facsub_last_error_position(void);
FACSUB_API void facsub_string_free(char* s);

/* Subrings. */
FACSUB_API facsub_status facsub_subring_from_json(const char* instance_json, facsub_subring** out);
FACSUB_API facsub_status facsub_subring_to_json(const facsub_subring* s, char** out);
FACSUB_API void facsub_subring_free(facsub_subring* s);

/* Conditions. */
FACSUB_API facsub_status facsub_catalog_json(char** out);
FACSUB_API facsub_status facsub_check(const facsub_subring* s, const char* condition, facsub_bound bound,
                                      char** verdict_json, facsub_outcome* outcome);
/* Array of verdicts for the whole catalog; `worst` is FAILS if any fails. */
FACSUB_API facsub_status facsub_check_all(const facsub_subring* s, facsub_bound bound, char** verdicts_json,
                                          facsub_outcome* worst);
FACSUB_API facsub_status facsub_replay(const facsub_subring* s, const char* condition, const char* witness_json,
                                       facsub_bound bound, int* violated);

/* Lattice queries. */
FACSUB_API facsub_status facsub_member(const facsub_subring* s, const char* point_json, int* member);
/* Atoms of search grade <= grade, one per unit class. */
FACSUB_API facsub_status facsub_atoms(const facsub_subring* s, int64_t grade, char** points_json);
/* Membership, unit, atom, square-free, prime and gpr status of one point,
 * with witnesses and its atom factorizations. */
FACSUB_API facsub_status facsub_element_report(const facsub_subring* s, const char* point_json,
                                               facsub_bound bound, char** report_json);

/* Jacobian criterion. Input: {"vars": [...], "polys": [...]}. */
FACSUB_API facsub_status facsub_jacobian_report(const char* map_json, char** report_json, int* verdict);
FACSUB_API facsub_status facsub_bridge_check(const char* map_json, facsub_bound bound, char** report_json,
                                             int* consistent);

/* Harness. `suite` is "lemma", "implication", an equivalence suite id such
 * as "4_5", or "2_2_p<prime>". */
FACSUB_API facsub_status facsub_run_suite(const char* suite, const facsub_gen_params* params, facsub_bound bound,
                                          int with_timing, char** report_json, int* passed);
FACSUB_API facsub_status facsub_suite_names(char** names_json);
FACSUB_API facsub_status facsub_gen_instance(const facsub_gen_params* params, size_t index, char** instance_json);
/* Result: {"instance": ..., "witness": ...}. */
FACSUB_API facsub_status facsub_shrink(const char* instance_json, const char* condition, const char* witness_json,
                                       facsub_bound bound, char** result_json);
FACSUB_API facsub_status facsub_run_fixtures(char** rows_json, char** table_text, int* passed);
FACSUB_API facsub_status facsub_fixture_instance(const char* name, char** instance_json);

#ifdef __cplusplus
}
#endif

#endif /* FACSUB_H */
