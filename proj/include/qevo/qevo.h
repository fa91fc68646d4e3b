/* Copyright 2026 The qevo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the qevo shared library.
 *
 * qevo quantizes classical symmetric 2x2/3x3 matrix games through the
 * squared-magnitude weights of an initial quantum state, computes mixed Nash
 * equilibria and evolutionary-stability verdicts in both the classical and
 * the quantized form, and maps the weight regions where the stability of the
 * mixed equilibrium flips.
 *
 * Conventions:
 *  - every fallible call returns a qevo_status; QEVO_OK is 0;
 *  - qevo_last_error() returns a thread-local message for the most recent
 *    failure on the calling thread;
 *  - objects are opaque handles created by the _create and _run factories
 *    and released by the matching _free (NULL is accepted and ignored);
 *  - matrices and weight grids pass as row-major double arrays;
 *  - mixed strategies pass as probability vectors of the game's dimension.
 */

#ifndef QEVO_H
#define QEVO_H

#ifndef QEVO_API
#if defined(_WIN32)
#if defined(QEVO_BUILDING)
#define QEVO_API __declspec(dllexport)
#else
#define QEVO_API __declspec(dllimport)
#endif
#else
#define QEVO_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qevo_status {
  QEVO_OK = 0,
  QEVO_ERROR_NULL_ARGUMENT = 1, /* a required pointer was NULL        */
  QEVO_ERROR_DIMENSION = 2,     /* mismatched or unsupported sizes    */
  QEVO_ERROR_VALIDATION = 3,    /* a type invariant was violated      */
  QEVO_ERROR_DOMAIN = 4,        /* scalar argument out of range       */
  QEVO_ERROR_NO_MEMORY = 5,
  QEVO_ERROR_INTERNAL = 6
} qevo_status;

QEVO_API const char* qevo_version(void);
QEVO_API const char* qevo_status_name(qevo_status status);
/* Message of the last failure on this thread; empty string after success. */
QEVO_API const char* qevo_last_error(void);

/* ---- opaque handles ---------------------------------------------------- */

typedef struct qevo_game qevo_game;             /* classical payoff matrix  */
typedef struct qevo_weights qevo_weights;       /* initial-state weights    */
typedef struct qevo_operators qevo_operators;   /* operator permutations    */
typedef struct qevo_matrix qevo_matrix;         /* quantum payoff matrix    */
typedef struct qevo_trajectory qevo_trajectory; /* replicator orbit         */
typedef struct qevo_scan qevo_scan;             /* weight-simplex sweep     */

/* ---- classical game ----------------------------------------------------- */

/* n must be 2 or 3; entries is row-major with n*n finite payoffs. */
QEVO_API qevo_status qevo_game_create(int n, const double* entries,
                                      qevo_game** out);
QEVO_API void qevo_game_free(qevo_game* game);
QEVO_API int qevo_game_size(const qevo_game* game);
/* Copies n*n entries into out. */
QEVO_API qevo_status qevo_game_entries(const qevo_game* game, double* out);

/* p^T M q for mixed strategies p, q of the game's dimension. */
QEVO_API qevo_status qevo_expected_payoff(const qevo_game* game,
                                          const double* p, const double* q,
                                          double* out);
QEVO_API qevo_status qevo_is_symmetric_nash(const qevo_game* game,
                                            const double* p, double tol,
                                            int* out);

typedef enum qevo_ess_branch {
  QEVO_BRANCH_STRICT_NASH = 0,
  QEVO_BRANCH_NEUTRAL_STABLE = 1,
  QEVO_BRANCH_NEUTRAL_UNSTABLE = 2,
  QEVO_BRANCH_NOT_NASH = 3
} qevo_ess_branch;

typedef struct qevo_ess_verdict {
  int is_nash;
  int is_ess;
  qevo_ess_branch branch;
  int has_worst_invader;   /* a refuting strategy is present below */
  double worst_invader[3]; /* first `n` entries are meaningful     */
} qevo_ess_verdict;

QEVO_API qevo_status qevo_game_ess_verdict(const qevo_game* game,
                                           const double* p, double tol,
                                           qevo_ess_verdict* out);
/* P[p,(1-eps)p+eps q] - P[q,(1-eps)p+eps q]; requires 0 < eps < 1. */
QEVO_API qevo_status qevo_invasion_payoff_difference(const qevo_game* game,
                                                     const double* p,
                                                     const double* q,
                                                     double eps, double* out);
/* indices must hold at least 3 ints; *count receives how many are set. */
QEVO_API qevo_status qevo_enumerate_pure_ess(const qevo_game* game, double tol,
                                             int* indices, int* count);
/* Indices of strategies with probability above zero_tol, ascending; indices
 * must hold at least n ints. */
QEVO_API qevo_status qevo_support(const double* p, int n, double zero_tol,
                                  int* indices, int* count);

typedef enum qevo_mixed_ne_status {
  QEVO_MIXED_NE_FOUND = 0,
  QEVO_MIXED_NE_OUT_OF_RANGE = 1,
  QEVO_MIXED_NE_DEGENERATE = 2
} qevo_mixed_ne_status;

/* Mixed symmetric NE of a 2x2 game; x receives the formula value (NaN when
 * degenerate). */
QEVO_API qevo_status qevo_mixed_ne_2x2(const qevo_game* game,
                                       qevo_mixed_ne_status* status,
                                       double* x);
/* a00 - a01 - a10 + a11. 2x2 games only. */
QEVO_API qevo_status qevo_game_discriminant(const qevo_game* game,
                                            double* out);
/* The universal preservation condition a11 - a01 = a00 - a10 within tol. */
QEVO_API qevo_status qevo_ne_preservation_check(const qevo_game* game,
                                                double tol, int* out);

/* ---- initial-state weights ---------------------------------------------- */

/* n must be 2 or 3; w is row-major, nonnegative, summing to 1 within 1e-9. */
QEVO_API qevo_status qevo_weights_create(int n, const double* w,
                                         qevo_weights** out);
/* The unentangled state: w00 = 1, everything else 0. */
QEVO_API qevo_status qevo_weights_classical_limit(int n, qevo_weights** out);
QEVO_API void qevo_weights_free(qevo_weights* weights);
QEVO_API int qevo_weights_size(const qevo_weights* weights);
QEVO_API qevo_status qevo_weights_entries(const qevo_weights* weights,
                                          double* out);
QEVO_API qevo_status qevo_weights_is_symmetric(const qevo_weights* weights,
                                               double tol, int* out);
/* w00 - w01 - w10 + w11 (2x2 weights only). */
QEVO_API qevo_status qevo_weights_stability_factor(const qevo_weights* weights,
                                                   double* out);
/* True iff w00 + w11 < w01 + w10 strictly (2x2 weights only). */
QEVO_API qevo_status qevo_weights_flip_condition(const qevo_weights* weights,
                                                 int* out);

/* ---- operator sets ------------------------------------------------------ */

/* name is "rsp3" (I, D, C on three labels) or "id-swap2" (I, C on two). */
QEVO_API qevo_status qevo_operators_preset(const char* name,
                                           qevo_operators** out);
/* perms is count rows of n images each; row 0 must be the identity. */
QEVO_API qevo_status qevo_operators_create(int n, int count, const int* perms,
                                           qevo_operators** out);
QEVO_API void qevo_operators_free(qevo_operators* ops);
QEVO_API int qevo_operators_basis_size(const qevo_operators* ops);
QEVO_API int qevo_operators_count(const qevo_operators* ops);

/* ---- quantum transform -------------------------------------------------- */

QEVO_API qevo_status qevo_transform(const qevo_game* game,
                                    const qevo_weights* weights,
                                    const qevo_operators* ops,
                                    qevo_matrix** out);
/* Closed-form two-strategy reduction; equals qevo_transform with the
 * "id-swap2" preset exactly. */
QEVO_API qevo_status qevo_transform_2x2(const qevo_game* game,
                                        const qevo_weights* weights,
                                        qevo_matrix** out);
/* Independent brute-force route to the same matrix. */
QEVO_API qevo_status qevo_oracle_transform(const qevo_game* game,
                                           const qevo_weights* weights,
                                           const qevo_operators* ops,
                                           qevo_matrix** out);
QEVO_API void qevo_matrix_free(qevo_matrix* matrix);
QEVO_API int qevo_matrix_size(const qevo_matrix* matrix);
QEVO_API qevo_status qevo_matrix_entries(const qevo_matrix* matrix,
                                         double* out);
/* omega00 - omega01 - omega10 + omega11 (2x2 only). */
QEVO_API qevo_status qevo_matrix_discriminant(const qevo_matrix* matrix,
                                              double* out);
QEVO_API qevo_status qevo_matrix_mixed_ne(const qevo_matrix* matrix,
                                          qevo_mixed_ne_status* status,
                                          double* x);
/* Reinterpret omega as a classical game so the game-theoretic calls apply to
 * the quantized game (2 or 3 operators only). */
QEVO_API qevo_status qevo_matrix_as_game(const qevo_matrix* matrix,
                                         qevo_game** out);

/* ---- stability analysis ------------------------------------------------- */

typedef struct qevo_report {
  double classical_discriminant;
  double quantum_discriminant;
  int has_mixed_ne_classical;
  double mixed_ne_classical; /* NaN when absent */
  int has_mixed_ne_quantum;
  double mixed_ne_quantum; /* NaN when absent */
  int classical_degenerate;
  int quantum_degenerate;
  int ne_preserved;
  int classical_mixed_is_ess;
  int quantum_mixed_is_ess;
  int flip;
  int pure_ess_classical[3];
  int pure_ess_classical_count;
  int pure_ess_quantum[3];
  int pure_ess_quantum_count;
  int state_symmetric;
} qevo_report;

/* Full classical/quantum verdict for a 2x2 game and an initial state. The
 * quantum ESS fields apply only when state_symmetric is set. */
QEVO_API qevo_status qevo_analyze(const qevo_game* game,
                                  const qevo_weights* weights,
                                  qevo_report* out);

/* ---- replicator dynamics ------------------------------------------------ */

/* One explicit-Euler replicator step from x (dimension n) into out. */
QEVO_API qevo_status qevo_replicator_step(const qevo_game* game,
                                          const double* x, double dt,
                                          double* out);
/* Explicit-Euler replicator orbit of `steps` steps from x0 (dimension n). */
QEVO_API qevo_status qevo_simulate(const qevo_game* game, const double* x0,
                                   double dt, long steps,
                                   qevo_trajectory** out);
QEVO_API void qevo_trajectory_free(qevo_trajectory* trajectory);
/* Number of stored states (steps + 1). */
QEVO_API long qevo_trajectory_length(const qevo_trajectory* trajectory);
QEVO_API int qevo_trajectory_dim(const qevo_trajectory* trajectory);
QEVO_API qevo_status qevo_trajectory_state(const qevo_trajectory* trajectory,
                                           long index, double* out);

typedef enum qevo_stability_class {
  QEVO_STABILITY_ATTRACTING = 0,
  QEVO_STABILITY_REPELLING = 1,
  QEVO_STABILITY_INCONCLUSIVE = 2
} qevo_stability_class;

QEVO_API qevo_status qevo_classify_stability(const qevo_game* game,
                                             double x_star,
                                             double perturbation, double dt,
                                             long steps, double tol,
                                             qevo_stability_class* out);

/* ---- weight-simplex scan ------------------------------------------------ */

typedef enum qevo_scan_constraint {
  QEVO_SCAN_SYMMETRIC_OFF_DIAGONAL = 0,
  QEVO_SCAN_FULL_SIMPLEX = 1
} qevo_scan_constraint;

/* threads = 1 forces a serial sweep, threads <= 0 uses all cores; the point
 * order and values are identical either way. */
QEVO_API qevo_status qevo_scan_run(const qevo_game* game, int resolution,
                                   qevo_scan_constraint constraint,
                                   int threads, qevo_scan** out);
QEVO_API void qevo_scan_free(qevo_scan* scan);
QEVO_API long qevo_scan_size(const qevo_scan* scan);
/* weights receives 4 values (w00, w01, w10, w11); either output may be NULL
 * when not wanted. */
QEVO_API qevo_status qevo_scan_point(const qevo_scan* scan, long index,
                                     double* weights, qevo_report* report);
QEVO_API qevo_status qevo_scan_flip_fraction(const qevo_scan* scan,
                                             double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QEVO_H */
