// Copyright 2026 The RBN Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the rbn library. All functions report failures through
 * rbn_status; rbn_last_error() returns the message of the most recent
 * failure on the calling thread. Handles are opaque and owned by the caller.
 */

#ifndef RBN_RBN_H
#define RBN_RBN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(RBN_BUILDING_LIBRARY)
#define RBN_API __declspec(dllexport)
#else
#define RBN_API __declspec(dllimport)
#endif
#else
#define RBN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rbn_status {
  RBN_OK = 0,
  RBN_ERR_INVALID_ARGUMENT = 1,
  RBN_ERR_DIMENSION_MISMATCH = 2,
  RBN_ERR_NOT_HERMITIAN = 3,
  RBN_ERR_INVALID_STATE = 4,
  RBN_ERR_SUPPORT = 5,
  RBN_ERR_PARSE = 6,
  RBN_ERR_IO = 7,
  RBN_ERR_INTERNAL = 8
} rbn_status;

/* Upper bound on optimizer parameters per side (Givens angles, d <= 8). */
#define RBN_MAX_PARAMS 56
#define RBN_NAME_LEN 64

typedef struct rbn_state rbn_state;
typedef struct rbn_observable rbn_observable;

RBN_API const char* rbn_version(void);
RBN_API const char* rbn_last_error(void);
RBN_API const char* rbn_status_name(rbn_status status);

/* ---- states ---- */

/* (1 - beta) I/4 + beta |psi_alpha><psi_alpha|. */
RBN_API rbn_status rbn_state_two_parameter(double alpha, double beta,
                                           rbn_state** out);
/* sum_l p_l |l><l| (x) |l><l| on n x n. */
RBN_API rbn_status rbn_state_classical(const double* probs, size_t n,
                                       rbn_state** out);
RBN_API rbn_status rbn_state_random(int dim_a, int dim_b, int rank,
                                    uint64_t seed, rbn_state** out);
RBN_API rbn_status rbn_state_from_json(const char* text, rbn_state** out);
RBN_API rbn_status rbn_state_load(const char* path, rbn_state** out);
/* Caller releases *out with rbn_string_free. */
RBN_API rbn_status rbn_state_to_json(const rbn_state* state, char** out);
RBN_API rbn_status rbn_state_dims(const rbn_state* state, int* dim_a,
                                  int* dim_b);
RBN_API void rbn_state_free(rbn_state* state);
RBN_API void rbn_string_free(char* text);

/* ---- observables ---- */

/* Qubit basis with "+" vector cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>. */
RBN_API rbn_status rbn_observable_qubit(double theta, double phi,
                                        rbn_observable** out);
RBN_API rbn_status rbn_observable_computational(int dim, rbn_observable** out);
/* Fourier partner: unbiased with respect to a nondegenerate observable. */
RBN_API rbn_status rbn_observable_mub_partner(const rbn_observable* obs,
                                              rbn_observable** out);
RBN_API void rbn_observable_free(rbn_observable* obs);

/* ---- single context ---- */

/* Quantities at a fixed pair (A on the first party, B on the second).
 * delta uses strengths (eps_a, eps_b); the local bounds refer to
 * delta_local = delta^{1 eps_b}; the bilocal bounds to delta. */
typedef struct rbn_context_report {
  double irreality_a;
  double irreality_b;
  double eta;
  double delta;
  double delta_local;
  double reality_gain_a;
  double reality_gain_b;
  double gamma_a;
  double gamma_b;
  double gamma_sqrt_b;
  double lb1, ub1, lb2, ub2;
  double lb1_bi, ub1_bi;
} rbn_context_report;

RBN_API rbn_status rbn_evaluate_context(const rbn_state* state,
                                        const rbn_observable* obs_a,
                                        const rbn_observable* obs_b,
                                        double eps_a, double eps_b,
                                        rbn_context_report* out);

/* ---- optimizer ---- */

typedef struct rbn_optimizer_config {
  int grid_theta;
  int grid_phi;
  int halve_phi;
  int refine_seeds;
  int max_iterations;
  double objective_tol;
  double parameter_tol;
  double tie_tol;
  int compute_n_bound;
  unsigned threads;
  uint64_t seed;
} rbn_optimizer_config;

RBN_API void rbn_optimizer_config_default(rbn_optimizer_config* config);
/* Applies one key=value setting by name (grid_theta, tie_tol, ...). */
RBN_API rbn_status rbn_optimizer_config_set(rbn_optimizer_config* config,
                                            const char* key, const char* value);
/* One-line rendering; caller releases with rbn_string_free. */
RBN_API rbn_status rbn_optimizer_config_describe(
    const rbn_optimizer_config* config, char** out);

/* Bounds not applicable to a report are NaN. */
typedef struct rbn_suppression_report {
  double value;
  double argmax_a[RBN_MAX_PARAMS];
  double argmax_b[RBN_MAX_PARAMS];
  size_t params_a;
  size_t params_b;
  double lb1, ub1, lb2, ub2;
  double lb1_bi, ub1_bi;
  double trivial_ub;
  long evaluations;
  int converged;
} rbn_suppression_report;

/* config may be NULL for defaults. */
RBN_API rbn_status rbn_max_context_rbn(const rbn_state* state,
                                       const rbn_optimizer_config* config,
                                       rbn_suppression_report* out);
/* monitor_a = 0: Delta_B^eps; nonzero: Delta_A^eps. */
RBN_API rbn_status rbn_local_suppression(const rbn_state* state, double eps,
                                         int monitor_a,
                                         const rbn_optimizer_config* config,
                                         rbn_suppression_report* out);
RBN_API rbn_status rbn_bilocal_suppression(const rbn_state* state,
                                           double eps_a, double eps_b,
                                           const rbn_optimizer_config* config,
                                           rbn_suppression_report* out);

RBN_API rbn_status rbn_closed_form_werner(double beta, double eps, double* out);
RBN_API rbn_status rbn_closed_form_pure(double alpha, double eps, double* out);

/* ---- sweeps ---- */

typedef struct rbn_werner_row {
  double eps, beta, delta_b, n, lb1, ub1, lb2, ub2, closed_form;
  double delta_a; /* NaN unless requested */
  int converged;
} rbn_werner_row;

typedef struct rbn_pure_row {
  double eps, alpha, delta_b, entanglement, eps_times_e, closed_form;
  double delta_a; /* NaN unless requested */
  int converged;
} rbn_pure_row;

typedef struct rbn_bilocal_row {
  double beta, eps, n, delta_b, delta_bilocal, lb1_bi, ub1_bi;
  int converged;
} rbn_bilocal_row;

/* rows must hold n_eps * n_beta entries, filled eps-major. */
RBN_API rbn_status rbn_sweep_werner(const double* eps, size_t n_eps,
                                    const double* beta, size_t n_beta,
                                    const rbn_optimizer_config* config,
                                    unsigned threads, int with_side_a,
                                    rbn_werner_row* rows);
RBN_API rbn_status rbn_sweep_pure(const double* eps, size_t n_eps,
                                  const double* alpha, size_t n_alpha,
                                  const rbn_optimizer_config* config,
                                  unsigned threads, int with_side_a,
                                  rbn_pure_row* rows);
/* rows filled beta-major. */
RBN_API rbn_status rbn_sweep_bilocal(const double* eps, size_t n_eps,
                                     const double* beta, size_t n_beta,
                                     const rbn_optimizer_config* config,
                                     unsigned threads, rbn_bilocal_row* rows);

/* Row self-consistency: value within its bound columns, up to tol. */
RBN_API int rbn_werner_row_ok(const rbn_werner_row* row, double tol);
RBN_API int rbn_pure_row_ok(const rbn_pure_row* row, double tol);
RBN_API int rbn_bilocal_row_ok(const rbn_bilocal_row* row, double tol);

/* ---- hierarchy ---- */

typedef struct rbn_hierarchy_report {
  double eta_mub;
  double shannon;
  double n_value;
  int product;
  int passed;
} rbn_hierarchy_report;

RBN_API rbn_status rbn_hierarchy(const double* probs, size_t n,
                                 const rbn_optimizer_config* config,
                                 rbn_hierarchy_report* out);
RBN_API const char* rbn_hierarchy_chain(void);

/* ---- property suite ---- */

typedef struct rbn_property_result {
  char name[RBN_NAME_LEN];
  int samples;
  double max_violation;
  double tolerance;
  int passed;
} rbn_property_result;

/* Runs every property on `samples` random instances. Up to `capacity`
 * results are written; *count receives the total number of properties. */
RBN_API rbn_status rbn_verify(uint64_t seed, int samples,
                              rbn_property_result* results, size_t capacity,
                              size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* RBN_RBN_H */
