// Copyright 2026 The qevo Authors
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

#include "qevo/qevo.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <new>
#include <string>
#include <vector>

#include "qevo/analyzer.hpp"
#include "qevo/game.hpp"
#include "qevo/operators.hpp"
#include "qevo/replicator.hpp"
#include "qevo/scanner.hpp"
#include "qevo/state_weights.hpp"
#include "qevo/transform.hpp"

// Handles are thin value wrappers around the core types.
struct qevo_game {
  qevo::PayoffMatrix m;
};
struct qevo_weights {
  qevo::StateWeights w;
};
struct qevo_operators {
  qevo::OperatorSet ops;
};
struct qevo_matrix {
  qevo::QuantumPayoffMatrix m;
};
struct qevo_trajectory {
  qevo::Trajectory t;
};
struct qevo_scan {
  qevo::ScanGrid g;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* msg) { g_last_error = msg; }

// Runs f, translating exceptions into status codes and recording the message.
template <typename F>
qevo_status wrap(F&& f) noexcept {
  g_last_error.clear();
  try {
    return f();
  } catch (const qevo::DimensionError& e) {
    set_error(e.what());
    return QEVO_ERROR_DIMENSION;
  } catch (const qevo::ValidationError& e) {
    set_error(e.what());
    return QEVO_ERROR_VALIDATION;
  } catch (const qevo::DomainError& e) {
    set_error(e.what());
    return QEVO_ERROR_DOMAIN;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return QEVO_ERROR_NO_MEMORY;
  } catch (const std::exception& e) {
    set_error(e.what());
    return QEVO_ERROR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return QEVO_ERROR_INTERNAL;
  }
}

bool null_args(std::initializer_list<const void*> ptrs) {
  for (const void* p : ptrs)
    if (p == nullptr) {
      g_last_error = "null argument";
      return true;
    }
  return false;
}

qevo::MixedStrategy strategy_from(const double* p, int n) {
  return qevo::MixedStrategy(std::vector<double>(p, p + n));
}

void fill_report(const qevo::StabilityReport& r, qevo_report* out) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  out->classical_discriminant = r.classical_discriminant;
  out->quantum_discriminant = r.quantum_discriminant;
  out->has_mixed_ne_classical = r.mixed_ne_classical.has_value();
  out->mixed_ne_classical = r.mixed_ne_classical.value_or(nan);
  out->has_mixed_ne_quantum = r.mixed_ne_quantum.has_value();
  out->mixed_ne_quantum = r.mixed_ne_quantum.value_or(nan);
  out->classical_degenerate = r.classical_degenerate;
  out->quantum_degenerate = r.quantum_degenerate;
  out->ne_preserved = r.ne_preserved;
  out->classical_mixed_is_ess = r.classical_mixed_is_ess;
  out->quantum_mixed_is_ess = r.quantum_mixed_is_ess;
  out->flip = r.flip;
  out->pure_ess_classical_count =
      static_cast<int>(r.pure_ess_classical.size());
  out->pure_ess_quantum_count = static_cast<int>(r.pure_ess_quantum.size());
  std::fill(std::begin(out->pure_ess_classical),
            std::end(out->pure_ess_classical), -1);
  std::fill(std::begin(out->pure_ess_quantum), std::end(out->pure_ess_quantum),
            -1);
  for (size_t i = 0; i < r.pure_ess_classical.size(); ++i)
    out->pure_ess_classical[i] = r.pure_ess_classical[i];
  for (size_t i = 0; i < r.pure_ess_quantum.size(); ++i)
    out->pure_ess_quantum[i] = r.pure_ess_quantum[i];
  out->state_symmetric = r.state_symmetric;
}

}  // namespace

extern "C" {

const char* qevo_version(void) { return "1.0.0"; }

const char* qevo_status_name(qevo_status status) {
  switch (status) {
    case QEVO_OK:
      return "ok";
    case QEVO_ERROR_NULL_ARGUMENT:
      return "null argument";
    case QEVO_ERROR_DIMENSION:
      return "dimension error";
    case QEVO_ERROR_VALIDATION:
      return "validation error";
    case QEVO_ERROR_DOMAIN:
      return "domain error";
    case QEVO_ERROR_NO_MEMORY:
      return "out of memory";
    case QEVO_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* qevo_last_error(void) { return g_last_error.c_str(); }

/* ---- classical game ----------------------------------------------------- */

qevo_status qevo_game_create(int n, const double* entries, qevo_game** out) {
  if (null_args({entries, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    std::vector<double> a(entries, entries + static_cast<size_t>(n) * n);
    *out = new qevo_game{qevo::PayoffMatrix(n, std::move(a))};
    return QEVO_OK;
  });
}

void qevo_game_free(qevo_game* game) { delete game; }

int qevo_game_size(const qevo_game* game) {
  return game ? game->m.size() : 0;
}

qevo_status qevo_game_entries(const qevo_game* game, double* out) {
  if (null_args({game, out})) return QEVO_ERROR_NULL_ARGUMENT;
  const auto& e = game->m.entries();
  std::memcpy(out, e.data(), e.size() * sizeof(double));
  return QEVO_OK;
}

qevo_status qevo_expected_payoff(const qevo_game* game, const double* p,
                                 const double* q, double* out) {
  if (null_args({game, p, q, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    const int n = game->m.size();
    *out = qevo::expected_payoff(strategy_from(p, n), strategy_from(q, n),
                                 game->m);
    return QEVO_OK;
  });
}

qevo_status qevo_is_symmetric_nash(const qevo_game* game, const double* p,
                                   double tol, int* out) {
  if (null_args({game, p, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    *out = qevo::is_symmetric_nash(strategy_from(p, game->m.size()), game->m,
                                   tol);
    return QEVO_OK;
  });
}

qevo_status qevo_game_ess_verdict(const qevo_game* game, const double* p,
                                  double tol, qevo_ess_verdict* out) {
  if (null_args({game, p, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    const qevo::ESSVerdict v =
        qevo::ess_verdict(strategy_from(p, game->m.size()), game->m, tol);
    out->is_nash = v.is_nash;
    out->is_ess = v.is_ess;
    out->branch = static_cast<qevo_ess_branch>(v.branch);
    out->has_worst_invader = v.worst_invader.has_value();
    std::fill(std::begin(out->worst_invader), std::end(out->worst_invader),
              0.0);
    if (v.worst_invader)
      for (int i = 0; i < v.worst_invader->size(); ++i)
        out->worst_invader[i] = (*v.worst_invader)[i];
    return QEVO_OK;
  });
}

qevo_status qevo_invasion_payoff_difference(const qevo_game* game,
                                            const double* p, const double* q,
                                            double eps, double* out) {
  if (null_args({game, p, q, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    const int n = game->m.size();
    *out = qevo::invasion_payoff_difference(strategy_from(p, n),
                                            strategy_from(q, n), eps, game->m);
    return QEVO_OK;
  });
}

qevo_status qevo_enumerate_pure_ess(const qevo_game* game, double tol,
                                    int* indices, int* count) {
  if (null_args({game, indices, count})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    const std::vector<int> ess = qevo::enumerate_pure_ess(game->m, tol);
    *count = static_cast<int>(ess.size());
    for (size_t i = 0; i < ess.size(); ++i) indices[i] = ess[i];
    return QEVO_OK;
  });
}

qevo_status qevo_support(const double* p, int n, double zero_tol,
                         int* indices, int* count) {
  if (null_args({p, indices, count})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    const std::vector<int> s =
        qevo::support(strategy_from(p, n), zero_tol);
    *count = static_cast<int>(s.size());
    for (size_t i = 0; i < s.size(); ++i) indices[i] = s[i];
    return QEVO_OK;
  });
}

qevo_status qevo_mixed_ne_2x2(const qevo_game* game,
                              qevo_mixed_ne_status* status, double* x) {
  if (null_args({game, status, x})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    const qevo::MixedNe2x2 ne = qevo::find_mixed_ne_2x2(game->m);
    *status = static_cast<qevo_mixed_ne_status>(ne.status);
    *x = ne.x;
    return QEVO_OK;
  });
}

qevo_status qevo_game_discriminant(const qevo_game* game, double* out) {
  if (null_args({game, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    *out = qevo::discriminant_2x2(game->m);
    return QEVO_OK;
  });
}

qevo_status qevo_ne_preservation_check(const qevo_game* game, double tol,
                                       int* out) {
  if (null_args({game, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    *out = qevo::ne_preservation_check(game->m, tol);
    return QEVO_OK;
  });
}

/* ---- initial-state weights ---------------------------------------------- */

qevo_status qevo_weights_create(int n, const double* w, qevo_weights** out) {
  if (null_args({w, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    std::vector<double> v(w, w + static_cast<size_t>(n) * n);
    *out = new qevo_weights{qevo::StateWeights(n, std::move(v))};
    return QEVO_OK;
  });
}

qevo_status qevo_weights_classical_limit(int n, qevo_weights** out) {
  if (null_args({out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    *out = new qevo_weights{qevo::StateWeights::classical_limit(n)};
    return QEVO_OK;
  });
}

void qevo_weights_free(qevo_weights* weights) { delete weights; }

int qevo_weights_size(const qevo_weights* weights) {
  return weights ? weights->w.size() : 0;
}

qevo_status qevo_weights_entries(const qevo_weights* weights, double* out) {
  if (null_args({weights, out})) return QEVO_ERROR_NULL_ARGUMENT;
  const auto& e = weights->w.entries();
  std::memcpy(out, e.data(), e.size() * sizeof(double));
  return QEVO_OK;
}

qevo_status qevo_weights_is_symmetric(const qevo_weights* weights, double tol,
                                      int* out) {
  if (null_args({weights, out})) return QEVO_ERROR_NULL_ARGUMENT;
  *out = qevo::is_symmetric(weights->w, tol);
  return QEVO_OK;
}

qevo_status qevo_weights_stability_factor(const qevo_weights* weights,
                                          double* out) {
  if (null_args({weights, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    *out = qevo::stability_factor(weights->w);
    return QEVO_OK;
  });
}

qevo_status qevo_weights_flip_condition(const qevo_weights* weights,
                                        int* out) {
  if (null_args({weights, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    *out = qevo::flip_condition_holds(weights->w);
    return QEVO_OK;
  });
}

/* ---- operator sets ------------------------------------------------------ */

qevo_status qevo_operators_preset(const char* name, qevo_operators** out) {
  if (null_args({name, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&]() -> qevo_status {
    const std::string preset(name);
    if (preset == "rsp3") {
      *out = new qevo_operators{qevo::OperatorSet::rsp3()};
      return QEVO_OK;
    }
    if (preset == "id-swap2") {
      *out = new qevo_operators{qevo::OperatorSet::id_swap2()};
      return QEVO_OK;
    }
    set_error("unknown operator-set preset (use \"rsp3\" or \"id-swap2\")");
    return QEVO_ERROR_DOMAIN;
  });
}

qevo_status qevo_operators_create(int n, int count, const int* perms,
                                  qevo_operators** out) {
  if (null_args({perms, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    std::vector<qevo::Permutation> ps;
    ps.reserve(static_cast<size_t>(count));
    for (int r = 0; r < count; ++r)
      ps.emplace_back(std::vector<int>(perms + static_cast<size_t>(r) * n,
                                       perms + static_cast<size_t>(r + 1) * n));
    *out = new qevo_operators{qevo::OperatorSet(std::move(ps))};
    return QEVO_OK;
  });
}

void qevo_operators_free(qevo_operators* ops) { delete ops; }

int qevo_operators_basis_size(const qevo_operators* ops) {
  return ops ? ops->ops.basis_size() : 0;
}

int qevo_operators_count(const qevo_operators* ops) {
  return ops ? ops->ops.count() : 0;
}

/* ---- quantum transform -------------------------------------------------- */

qevo_status qevo_transform(const qevo_game* game, const qevo_weights* weights,
                           const qevo_operators* ops, qevo_matrix** out) {
  if (null_args({game, weights, ops, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    *out = new qevo_matrix{qevo::transform(game->m, weights->w, ops->ops)};
    return QEVO_OK;
  });
}

qevo_status qevo_transform_2x2(const qevo_game* game,
                               const qevo_weights* weights,
                               qevo_matrix** out) {
  if (null_args({game, weights, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    *out = new qevo_matrix{qevo::transform_2x2(game->m, weights->w)};
    return QEVO_OK;
  });
}

qevo_status qevo_oracle_transform(const qevo_game* game,
                                  const qevo_weights* weights,
                                  const qevo_operators* ops,
                                  qevo_matrix** out) {
  if (null_args({game, weights, ops, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    *out =
        new qevo_matrix{qevo::oracle_transform(game->m, weights->w, ops->ops)};
    return QEVO_OK;
  });
}

void qevo_matrix_free(qevo_matrix* matrix) { delete matrix; }

int qevo_matrix_size(const qevo_matrix* matrix) {
  return matrix ? matrix->m.size() : 0;
}

qevo_status qevo_matrix_entries(const qevo_matrix* matrix, double* out) {
  if (null_args({matrix, out})) return QEVO_ERROR_NULL_ARGUMENT;
  const auto& e = matrix->m.entries();
  std::memcpy(out, e.data(), e.size() * sizeof(double));
  return QEVO_OK;
}

qevo_status qevo_matrix_discriminant(const qevo_matrix* matrix, double* out) {
  if (null_args({matrix, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    *out = qevo::quantum_discriminant(matrix->m);
    return QEVO_OK;
  });
}

qevo_status qevo_matrix_mixed_ne(const qevo_matrix* matrix,
                                 qevo_mixed_ne_status* status, double* x) {
  if (null_args({matrix, status, x})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    const qevo::MixedNe2x2 ne = qevo::mixed_ne_quantum(matrix->m);
    *status = static_cast<qevo_mixed_ne_status>(ne.status);
    *x = ne.x;
    return QEVO_OK;
  });
}

qevo_status qevo_matrix_as_game(const qevo_matrix* matrix, qevo_game** out) {
  if (null_args({matrix, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    *out = new qevo_game{matrix->m.to_payoff_matrix()};
    return QEVO_OK;
  });
}

/* ---- stability analysis ------------------------------------------------- */

qevo_status qevo_analyze(const qevo_game* game, const qevo_weights* weights,
                         qevo_report* out) {
  if (null_args({game, weights, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    fill_report(qevo::analyze(game->m, weights->w), out);
    return QEVO_OK;
  });
}

/* ---- replicator dynamics ------------------------------------------------ */

qevo_status qevo_replicator_step(const qevo_game* game, const double* x,
                                 double dt, double* out) {
  if (null_args({game, x, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    const int n = game->m.size();
    const qevo::MixedStrategy next =
        qevo::replicator_step(strategy_from(x, n), game->m, dt);
    for (int i = 0; i < n; ++i) out[i] = next[i];
    return QEVO_OK;
  });
}

qevo_status qevo_simulate(const qevo_game* game, const double* x0, double dt,
                          long steps, qevo_trajectory** out) {
  if (null_args({game, x0, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    *out = new qevo_trajectory{qevo::simulate(
        strategy_from(x0, game->m.size()), game->m, dt, steps)};
    return QEVO_OK;
  });
}

void qevo_trajectory_free(qevo_trajectory* trajectory) { delete trajectory; }

long qevo_trajectory_length(const qevo_trajectory* trajectory) {
  return trajectory ? static_cast<long>(trajectory->t.states.size()) : 0;
}

int qevo_trajectory_dim(const qevo_trajectory* trajectory) {
  return trajectory && !trajectory->t.states.empty()
             ? trajectory->t.states.front().size()
             : 0;
}

qevo_status qevo_trajectory_state(const qevo_trajectory* trajectory,
                                  long index, double* out) {
  if (null_args({trajectory, out})) return QEVO_ERROR_NULL_ARGUMENT;
  if (index < 0 || index >= qevo_trajectory_length(trajectory)) {
    set_error("trajectory index out of range");
    return QEVO_ERROR_DOMAIN;
  }
  const qevo::MixedStrategy& s =
      trajectory->t.states[static_cast<size_t>(index)];
  for (int i = 0; i < s.size(); ++i) out[i] = s[i];
  return QEVO_OK;
}

qevo_status qevo_classify_stability(const qevo_game* game, double x_star,
                                    double perturbation, double dt, long steps,
                                    double tol, qevo_stability_class* out) {
  if (null_args({game, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    *out = static_cast<qevo_stability_class>(qevo::classify_stability(
        game->m, x_star, perturbation, dt, steps, tol));
    return QEVO_OK;
  });
}

/* ---- weight-simplex scan ------------------------------------------------ */

qevo_status qevo_scan_run(const qevo_game* game, int resolution,
                          qevo_scan_constraint constraint, int threads,
                          qevo_scan** out) {
  if (null_args({game, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    *out = new qevo_scan{qevo::scan(
        game->m, resolution, static_cast<qevo::ScanConstraint>(constraint),
        threads)};
    return QEVO_OK;
  });
}

void qevo_scan_free(qevo_scan* scan) { delete scan; }

long qevo_scan_size(const qevo_scan* scan) {
  return scan ? static_cast<long>(scan->g.points.size()) : 0;
}

qevo_status qevo_scan_point(const qevo_scan* scan, long index, double* weights,
                            qevo_report* report) {
  if (null_args({scan})) return QEVO_ERROR_NULL_ARGUMENT;
  if (index < 0 || index >= qevo_scan_size(scan)) {
    set_error("scan index out of range");
    return QEVO_ERROR_DOMAIN;
  }
  const qevo::ScanPoint& p = scan->g.points[static_cast<size_t>(index)];
  if (weights) {
    const auto& e = p.weights.entries();
    std::memcpy(weights, e.data(), e.size() * sizeof(double));
  }
  if (report) fill_report(p.report, report);
  return QEVO_OK;
}

qevo_status qevo_scan_flip_fraction(const qevo_scan* scan, double* out) {
  if (null_args({scan, out})) return QEVO_ERROR_NULL_ARGUMENT;
  return wrap([&] {
    *out = qevo::flip_fraction(scan->g);
    return QEVO_OK;
  });
}

}  // extern "C"
