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

#include "qevo/replicator.hpp"

#include <cmath>

namespace qevo {
namespace {

constexpr double kMonotoneSlack = 1e-12;

// True when the distance sequence never shrinks (within slack) up to the
// first crossing of `threshold`, and does cross it.
bool escapes_monotonically(const Trajectory& t, double x_star,
                           double threshold) {
  double prev = std::abs(t.states.front()[0] - x_star);
  for (size_t i = 1; i < t.states.size(); ++i) {
    const double d = std::abs(t.states[i][0] - x_star);
    if (d < prev - kMonotoneSlack) return false;
    if (d >= threshold) return true;
    prev = d;
  }
  return false;
}

}  // namespace

MixedStrategy replicator_step(const MixedStrategy& x, const PayoffMatrix& m,
                              double dt) {
  if (x.size() != m.size())
    throw DimensionError("replicator_step: state/matrix dimension mismatch");
  if (!(dt > 0.0)) throw DomainError("replicator_step: dt must be positive");

  const int n = m.size();
  std::vector<double> fitness(static_cast<size_t>(n), 0.0);
  double mean = 0.0;
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += m.at(i, j) * x[j];
    fitness[static_cast<size_t>(i)] = acc;
    mean += x[i] * acc;
  }

  std::vector<double> next(static_cast<size_t>(n));
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double v = x[i] + dt * x[i] * (fitness[static_cast<size_t>(i)] - mean);
    if (v < 0.0) v = 0.0;  // Euler overshoot past the boundary
    next[static_cast<size_t>(i)] = v;
    sum += v;
  }
  for (double& v : next) v /= sum;
  return MixedStrategy(std::move(next));
}

MixedStrategy replicator_step(const MixedStrategy& x,
                              const QuantumPayoffMatrix& m, double dt) {
  return replicator_step(x, m.to_payoff_matrix(), dt);
}

Trajectory simulate(const MixedStrategy& x0, const PayoffMatrix& m, double dt,
                    long steps) {
  if (steps < 1) throw DomainError("simulate: steps must be >= 1");
  Trajectory t;
  t.dt = dt;
  t.steps = steps;
  t.states.reserve(static_cast<size_t>(steps) + 1);
  t.states.push_back(x0);
  for (long i = 0; i < steps; ++i)
    t.states.push_back(replicator_step(t.states.back(), m, dt));
  return t;
}

Trajectory simulate(const MixedStrategy& x0, const QuantumPayoffMatrix& m,
                    double dt, long steps) {
  return simulate(x0, m.to_payoff_matrix(), dt, steps);
}

StabilityClass classify_stability(const PayoffMatrix& m, double x_star,
                                  double perturbation, double dt, long steps,
                                  double tol) {
  if (m.size() != 2)
    throw DimensionError("classify_stability: defined for 2x2 games only");
  if (!(x_star > 0.0 && x_star < 1.0))
    throw DomainError("classify_stability: x_star must be interior");
  if (!(perturbation > 0.0) || x_star - perturbation <= 0.0 ||
      x_star + perturbation >= 1.0)
    throw DomainError(
        "classify_stability: x_star too close to the boundary for this "
        "perturbation");

  const Trajectory up =
      simulate(MixedStrategy::from_scalar(x_star + perturbation), m, dt, steps);
  const Trajectory down =
      simulate(MixedStrategy::from_scalar(x_star - perturbation), m, dt, steps);

  const double d_up = std::abs(up.final_state()[0] - x_star);
  const double d_down = std::abs(down.final_state()[0] - x_star);
  if (d_up <= tol && d_down <= tol) return StabilityClass::kAttracting;

  const double escape = 2.0 * perturbation;
  if (escapes_monotonically(up, x_star, escape) &&
      escapes_monotonically(down, x_star, escape))
    return StabilityClass::kRepelling;
  return StabilityClass::kInconclusive;
}

StabilityClass classify_stability(const QuantumPayoffMatrix& m, double x_star,
                                  double perturbation, double dt, long steps,
                                  double tol) {
  return classify_stability(m.to_payoff_matrix(), x_star, perturbation, dt,
                            steps, tol);
}

}  // namespace qevo
