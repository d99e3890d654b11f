/* Copyright 2026 The cyfin Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C API of the cyfin shared library.  Models are opaque handles; every
 * report is returned as a JSON string allocated by the library and released
 * with cyfin_string_free.  All functions return CYFIN_OK on success; on
 * failure the return code classifies the error and cyfin_last_error() gives
 * a human-readable message for the calling thread.
 */

#ifndef CYFIN_CYFIN_H
#define CYFIN_CYFIN_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cyfin_model cyfin_model;

typedef enum cyfin_status {
  CYFIN_OK = 0,
  CYFIN_ERR_INPUT = 1,
  CYFIN_ERR_DOMAIN = 2,
  CYFIN_ERR_STATE = 3,
  CYFIN_ERR_CONVEXITY = 4,
  CYFIN_ERR_UNSUPPORTED = 5,
  CYFIN_ERR_DEGENERATE_FLAG = 6,
  CYFIN_ERR_JACOBI = 7,
  CYFIN_ERR_PARSE = 8,
  CYFIN_ERR_INTERNAL = 9
} cyfin_status;

/* Sampling plan; tol <= 0 selects the per-path default (1e-7 analytic,
 * 1e-4 finite-difference). */
typedef struct cyfin_plan {
  uint64_t seed;
  int n_base;
  int n_pairs;
  double tol;
} cyfin_plan;

/* The default plan: seed 42, 256 base directions, 64 pairs, default tol. */
cyfin_plan cyfin_plan_default(void);

/* Parses a JSON model document and validates every invariant. */
cyfin_status cyfin_model_parse(const char* json_text, cyfin_model** out);

/* Builds a registered example, e.g. "solvable_cyclic(3,1,0.5)". */
cyfin_status cyfin_model_example(const char* spec, cyfin_model** out);

void cyfin_model_free(cyfin_model* model);

/* Serializes the registry with parameter schemas as JSON. */
cyfin_status cyfin_list_examples(char** json_out);

/* condition is one of "cyclic", "natred", "douglas", "symmetric".
 * verdict_out (optional): 0 = holds, 1 = fails, 2 = inconclusive. */
cyfin_status cyfin_check(const cyfin_model* model, const char* condition, const cyfin_plan* plan,
                         char** report_json, int* verdict_out);

/* Curvature data at base direction y (m-coordinates): spray vector, the
 * connection and Riemann operators as matrices, the Ricci scalar, and the
 * flag curvature when u is given (pass u = NULL to skip it). */
cyfin_status cyfin_curvature(const cyfin_model* model, const double* y, int ny, const double* u,
                             int nu, char** report_json);

/* Runs the theorem cross-check suite.  consistent_out (optional): 1 when no
 * subcheck found a contradiction. */
cyfin_status cyfin_verify_theorems(const cyfin_model* model, const cyfin_plan* plan,
                                   char** report_json, int* consistent_out);

void cyfin_string_free(char* s);

/* Message of the most recent failure on this thread; never NULL. */
const char* cyfin_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
