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

#ifndef QEVO_REPLICATOR_HPP
#define QEVO_REPLICATOR_HPP

#include <vector>

#include "qevo/game.hpp"
#include "qevo/transform.hpp"

namespace qevo {

inline constexpr double kDefaultDt = 0.01;
inline constexpr long kDefaultSteps = 5000;
inline constexpr double kDefaultPerturbation = 1e-2;
inline constexpr double kDefaultConvergenceTol = 1e-6;

// Sampled replicator orbit. states holds the initial state plus one entry per
// step; every sample is a valid point of the simplex.
struct Trajectory {
  std::vector<MixedStrategy> states;
  double dt = kDefaultDt;
  long steps = 0;

  const MixedStrategy& final_state() const { return states.back(); }
};

// One explicit-Euler step of x_i' = x_i [(Mx)_i - x^T M x], with negative
// overshoot clamped to zero and the result renormalized onto the simplex.
// Determinism is the point here: no adaptivity, one rounding path.
MixedStrategy replicator_step(const MixedStrategy& x, const PayoffMatrix& m,
                              double dt);
MixedStrategy replicator_step(const MixedStrategy& x,
                              const QuantumPayoffMatrix& m, double dt);

Trajectory simulate(const MixedStrategy& x0, const PayoffMatrix& m, double dt,
                    long steps);
Trajectory simulate(const MixedStrategy& x0, const QuantumPayoffMatrix& m,
                    double dt, long steps);

enum class StabilityClass {
  kAttracting,
  kRepelling,
  kInconclusive,
};

// Dynamical cross-check of an interior equilibrium of a 2x2 game: perturb by
// +-perturbation, integrate both sides, and report Attracting when both
// trajectories return within tol of x_star, Repelling when both distances
// grow monotonically past 2 * perturbation. Used one-directionally as a
// corroboration of the discriminant verdict, never as the definition.
StabilityClass classify_stability(const PayoffMatrix& m, double x_star,
                                  double perturbation = kDefaultPerturbation,
                                  double dt = kDefaultDt,
                                  long steps = kDefaultSteps,
                                  double tol = kDefaultConvergenceTol);
StabilityClass classify_stability(const QuantumPayoffMatrix& m, double x_star,
                                  double perturbation = kDefaultPerturbation,
                                  double dt = kDefaultDt,
                                  long steps = kDefaultSteps,
                                  double tol = kDefaultConvergenceTol);

}  // namespace qevo

#endif  // QEVO_REPLICATOR_HPP
