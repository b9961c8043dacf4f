/* Copyright (C) 2026 The commlab Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the commlab library. Every function returns a status code;
 * on failure cl_last_error() describes the problem (per thread). Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with cl_string_free().
 */
#ifndef COMMLAB_COMMLAB_H
#define COMMLAB_COMMLAB_H

#include <stddef.h>

#if defined(COMMLAB_BUILDING_LIBRARY)
#define CL_API __attribute__((visibility("default")))
#else
#define CL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cl_status {
  CL_OK = 0,
  CL_ERR_PARSE = 1,
  CL_ERR_VALIDATION = 2,
  CL_ERR_BUDGET = 3,
  CL_ERR_NOT_IN_COMMUTATOR = 4,
  CL_ERR_INTERNAL = 5,
  CL_ERR_ARGUMENT = 6
} cl_status;

typedef struct cl_algebra cl_algebra;

typedef struct cl_options {
  size_t closure_budget; /* tuples per subpower closure */
  size_t lattice_budget; /* congruences per lattice */
  size_t ceq_budget;     /* assignments x expression size */
  int porcelain;         /* nonzero: key<TAB>value lines */
} cl_options;

/* Fills in the defaults. */
CL_API void cl_options_init(cl_options* opts);

CL_API const char* cl_version(void);
/* Message of the last failed call on this thread ("" if none). */
CL_API const char* cl_last_error(void);
CL_API void cl_string_free(char* s);

CL_API cl_status cl_algebra_parse(const char* text, cl_algebra** out);
CL_API cl_status cl_algebra_load(const char* path, cl_algebra** out);
CL_API void cl_algebra_free(cl_algebra* alg);
CL_API size_t cl_algebra_size(const cl_algebra* alg);
CL_API cl_status cl_algebra_format(const cl_algebra* alg, char** out);

/* Reports. opts may be NULL for defaults. */
CL_API cl_status cl_report_con(const cl_algebra* alg, const cl_options* opts, char** out);
/* kind: "tc", "sym" or "lin". Writes the partition, e.g. "0 1|2". */
CL_API cl_status cl_commutator(const cl_algebra* alg, const char* alpha, const char* beta,
                               const char* kind, const cl_options* opts, char** out);
CL_API cl_status cl_report_chain(const cl_algebra* alg, const char* alpha, const char* beta,
                                 const cl_options* opts, char** out);
CL_API cl_status cl_report_witness(const cl_algebra* alg, const char* alpha, const char* beta,
                                   unsigned u, unsigned v, int verify, const cl_options* opts,
                                   char** out);
CL_API cl_status cl_report_classify(const cl_algebra* alg, const cl_options* opts, char** out);
/* alpha and beta may both be NULL. */
CL_API cl_status cl_report_delta(const cl_algebra* alg, const char* delta, const char* alpha,
                                 const char* beta, const cl_options* opts, char** out);
CL_API cl_status cl_report_taylor(const cl_algebra* alg, size_t max_arity, size_t alphabet,
                                  const cl_options* opts, char** out);
CL_API cl_status cl_report_wdiff(const cl_algebra* alg, const cl_options* opts, char** out);
/* *holds is set to 1 when the statement holds for every assignment. */
CL_API cl_status cl_report_ceq(const cl_algebra* alg, const char* statement, int commutators,
                               const cl_options* opts, char** out, int* holds);
CL_API cl_status cl_report_synth(const char* data, int counterexample, const cl_options* opts,
                                 char** out);

#ifdef __cplusplus
}
#endif

#endif /* COMMLAB_COMMLAB_H */
