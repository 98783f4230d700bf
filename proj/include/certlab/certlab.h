// Copyright 2026 The certlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CERTLAB_CERTLAB_H_
#define CERTLAB_CERTLAB_H_

/* C interface to certlab: entropic uncertainty/certainty bounds, pure-state
 * optimization, mutually unbiased and mutually entangled bases.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every function returns a certlab_status; on
 * failure certlab_last_error() describes the problem for the calling thread.
 * Complex data is exchanged as interleaved (re, im) doubles, matrices in
 * row-major order. Entropies are in nats. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CERTLAB_BUILDING)
#    define CERTLAB_API __declspec(dllexport)
#  else
#    define CERTLAB_API __declspec(dllimport)
#  endif
#else
#  define CERTLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum certlab_status {
    CERTLAB_OK = 0,
    CERTLAB_E_INVALID_ARGUMENT = 1,
    CERTLAB_E_INVALID_DIMENSION = 2,
    CERTLAB_E_SHAPE = 3,
    CERTLAB_E_DOMAIN = 4,
    CERTLAB_E_NOT_UNITARY = 5,
    CERTLAB_E_UNSUPPORTED = 6,
    CERTLAB_E_PRECONDITION = 7,
    CERTLAB_E_NOT_CONVERGED = 8,
    CERTLAB_E_DECOMPOSITION_FAILED = 9,
    CERTLAB_E_NOT_FOUND = 10,
    CERTLAB_E_PARSE = 11,
    CERTLAB_E_IO = 12,
    CERTLAB_E_INTERNAL = 99
} certlab_status;

typedef enum certlab_direction { CERTLAB_MIN = 0, CERTLAB_MAX = 1 } certlab_direction;

typedef struct certlab_matrix certlab_matrix;
typedef struct certlab_state certlab_state;
typedef struct certlab_set certlab_set;

typedef struct certlab_search_options {
    int starts;      /* 0: default budget */
    uint64_t seed;
    int workers;     /* >= 1 */
    double tol;      /* objective-change tolerance, e.g. 1e-12 */
} certlab_search_options;

typedef struct certlab_opt_result {
    double value;
    int converged;
    int iterations;
    double residual;
} certlab_opt_result;

typedef struct certlab_bounds {
    int L;
    int N;
    int has_maassen_uffink;
    double maassen_uffink;
    double m_min, m_max;
    double p_min, p_max;
    double b_min, b_max;
    double r;
    int has_sanchez_ruiz;
    double sr_min, sr_max;
} certlab_bounds;

typedef struct certlab_canonical {
    double b1, b2, b3;
    double phase;
    double residual;
    double locals[4][8]; /* A, B, C, D as interleaved row-major 2x2 */
} certlab_canonical;

CERTLAB_API const char* certlab_version(void);
CERTLAB_API const char* certlab_last_error(void);
CERTLAB_API const char* certlab_status_name(certlab_status status);
CERTLAB_API certlab_search_options certlab_default_search_options(void);

/* Matrices (validated unitary). */
CERTLAB_API certlab_status certlab_matrix_create(int dim, const double* entries, certlab_matrix** out);
CERTLAB_API certlab_status certlab_matrix_identity(int dim, certlab_matrix** out);
CERTLAB_API certlab_status certlab_matrix_fourier(int dim, certlab_matrix** out);
CERTLAB_API certlab_status certlab_matrix_haar(int dim, uint64_t seed, certlab_matrix** out);
CERTLAB_API certlab_status certlab_matrix_canonical_gate(double b1, double b2, double b3, certlab_matrix** out);
CERTLAB_API certlab_status certlab_matrix_dim(const certlab_matrix* m, int* dim);
/* entries must hold 2*dim*dim doubles. */
CERTLAB_API certlab_status certlab_matrix_entries(const certlab_matrix* m, double* entries);
CERTLAB_API void certlab_matrix_free(certlab_matrix* m);

/* States (unit norm). */
CERTLAB_API certlab_status certlab_state_create(int dim, const double* amplitudes, certlab_state** out);
CERTLAB_API certlab_status certlab_state_basis(int dim, int index, certlab_state** out);
CERTLAB_API certlab_status certlab_state_haar(int dim, uint64_t seed, certlab_state** out);
CERTLAB_API certlab_status certlab_state_dim(const certlab_state* s, int* dim);
CERTLAB_API certlab_status certlab_state_amplitudes(const certlab_state* s, double* amplitudes);
CERTLAB_API void certlab_state_free(certlab_state* s);

/* Ordered collections of unitaries (measurement or splitting sets). */
CERTLAB_API certlab_status certlab_set_create(const certlab_matrix* const* items, int count, certlab_set** out);
/* name: "qubit-triple", "qutrit-quad", "rotation-pair" (param = angle),
 * "mub" (param = prime), "meb-family" (param = alpha),
 * "meb-fixture" (param = 2 or 3), "meb-from-mubs" (param = prime). */
CERTLAB_API certlab_status certlab_set_builtin(const char* name, double param, certlab_set** out);
CERTLAB_API certlab_status certlab_set_size(const certlab_set* set, int* size);
CERTLAB_API certlab_status certlab_set_get(const certlab_set* set, int index, certlab_matrix** out);
CERTLAB_API void certlab_set_free(certlab_set* set);

/* Entropies and bounds. */
CERTLAB_API certlab_status certlab_average_entropy(const certlab_state* s, const certlab_set* set, double* out);
CERTLAB_API certlab_status certlab_l1_coherence(const certlab_state* s, double* out);
CERTLAB_API certlab_status certlab_bounds_compute(const certlab_set* set, certlab_bounds* out);
CERTLAB_API certlab_status certlab_sanchez_ruiz(int n, double* sr_min, double* sr_max);

/* Optimization. state_out may be NULL. */
CERTLAB_API certlab_status certlab_extremize_entropy(const certlab_set* set, certlab_direction dir,
                                                     const certlab_search_options* opt, certlab_opt_result* result,
                                                     certlab_state** state_out);
CERTLAB_API certlab_status certlab_find_coherent(const certlab_set* set, const certlab_search_options* opt,
                                                 certlab_opt_result* result, certlab_state** state_out);

/* Entanglement. */
CERTLAB_API certlab_status certlab_entanglement_entropy(const certlab_state* s, int local_dim, double* out);
CERTLAB_API certlab_status certlab_average_entanglement(const certlab_state* s, const certlab_set* gates,
                                                        int local_dim, double* out);
CERTLAB_API certlab_status certlab_is_mutually_entangled(const certlab_set* gates, int local_dim, double tol,
                                                         int* out);
CERTLAB_API certlab_status certlab_extremize_entanglement(const certlab_set* gates, int local_dim,
                                                          certlab_direction dir, const certlab_search_options* opt,
                                                          certlab_opt_result* result, certlab_state** state_out);
CERTLAB_API certlab_status certlab_canonical_two_qubit(const certlab_matrix* w, certlab_canonical* out);
CERTLAB_API certlab_status certlab_mutually_separable_state(const certlab_matrix* w, certlab_state** out);
CERTLAB_API certlab_status certlab_mutually_entangled_state(const certlab_matrix* w, certlab_state** out);

/* Geometry and variance. */
CERTLAB_API certlab_status certlab_min_triangle(const certlab_set* set, double* area, double* perimeter, double* xi);
CERTLAB_API certlab_status certlab_pq_moment_closed_form(const certlab_matrix* u, double* out);
CERTLAB_API certlab_status certlab_tsallis_variance_closed_form(const certlab_set* set, double* out);

/* Figure and tool jobs. Strings returned through char** are released with
 * certlab_string_free. A figure that ran but did not converge everywhere
 * returns CERTLAB_E_NOT_CONVERGED with both outputs filled in. */
CERTLAB_API certlab_status certlab_run_figure(const char* job_json, char** csv, char** summary_json);
CERTLAB_API certlab_status certlab_run_tool(const char* tool, const char* request_json, char** report_json);
CERTLAB_API void certlab_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CERTLAB_CERTLAB_H_ */
