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

#include "qevo/analyzer.hpp"

#include <cmath>

namespace qevo {
namespace {

bool interior(double x) { return x > 0.0 && x < 1.0; }

}  // namespace

double quantum_discriminant(const QuantumPayoffMatrix& omega) {
  if (omega.size() != 2)
    throw DimensionError("quantum_discriminant: defined for 2x2 matrices only");
  return omega.at(0, 0) - omega.at(0, 1) - omega.at(1, 0) + omega.at(1, 1);
}

MixedNe2x2 mixed_ne_quantum(const QuantumPayoffMatrix& omega) {
  return find_mixed_ne_2x2(omega.to_payoff_matrix());
}

bool ne_preservation_check(const PayoffMatrix& alpha, double tol) {
  if (alpha.size() != 2)
    throw DimensionError("ne_preservation_check: defined for 2x2 games only");
  const double lhs = alpha.at(1, 1) - alpha.at(0, 1);
  const double rhs = alpha.at(0, 0) - alpha.at(1, 0);
  return std::abs(lhs - rhs) <= tol;
}

StabilityReport analyze(const PayoffMatrix& alpha, const StateWeights& s) {
  if (alpha.size() != 2 || s.size() != 2)
    throw DimensionError("analyze: inputs must be 2x2");

  StabilityReport r;
  r.state_symmetric = is_symmetric(s);

  const QuantumPayoffMatrix omega = transform_2x2(alpha, s);
  r.classical_discriminant = discriminant_2x2(alpha);
  r.quantum_discriminant = quantum_discriminant(omega);

  const MixedNe2x2 nc = find_mixed_ne_2x2(alpha);
  const MixedNe2x2 nq = mixed_ne_quantum(omega);
  r.classical_degenerate = nc.status == MixedNeStatus::kDegenerate;
  r.quantum_degenerate = nq.status == MixedNeStatus::kDegenerate;
  // Boundary equilibria are pure-strategy territory; only interior points
  // qualify as "the mixed NE" here.
  if (nc.status == MixedNeStatus::kFound && interior(nc.x))
    r.mixed_ne_classical = nc.x;
  if (nq.status == MixedNeStatus::kFound && interior(nq.x))
    r.mixed_ne_quantum = nq.x;

  r.ne_preserved = ne_preservation_check(alpha);
  r.classical_mixed_is_ess =
      r.mixed_ne_classical.has_value() && r.classical_discriminant < 0.0;
  r.pure_ess_classical = enumerate_pure_ess(alpha);

  if (r.state_symmetric) {
    r.quantum_mixed_is_ess =
        r.mixed_ne_quantum.has_value() && r.quantum_discriminant < 0.0;
    r.pure_ess_quantum = enumerate_pure_ess(omega.to_payoff_matrix());
    r.flip = r.mixed_ne_classical.has_value() &&
             r.mixed_ne_quantum.has_value() &&
             r.classical_mixed_is_ess != r.quantum_mixed_is_ess;
  }
  return r;
}

}  // namespace qevo
