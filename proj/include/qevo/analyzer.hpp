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

#ifndef QEVO_ANALYZER_HPP
#define QEVO_ANALYZER_HPP

#include <optional>
#include <vector>

#include "qevo/game.hpp"
#include "qevo/state_weights.hpp"
#include "qevo/transform.hpp"

namespace qevo {

// Joint classical/quantum stability verdict for a 2x2 game and an initial
// state. The quantum-side ESS fields (quantum_mixed_is_ess, pure_ess_quantum,
// flip) are meaningful only when state_symmetric is true; for asymmetric
// states the quantized game is not symmetric, ESS is undefined, and those
// fields are left at their inapplicable defaults (false / empty).
struct StabilityReport {
  double classical_discriminant = 0.0;  // a00 - a01 - a10 + a11
  double quantum_discriminant = 0.0;    // w00 - w01 - w10 + w11 applied to omega
  // Interior mixed NE locations (strictly inside (0, 1)); absent when the
  // game is degenerate or the equilibrium sits on or beyond the boundary.
  std::optional<double> mixed_ne_classical;
  std::optional<double> mixed_ne_quantum;
  // Discriminant magnitude below kDegenerateTol: a continuum of equilibria,
  // no isolated mixed NE and no ESS claim.
  bool classical_degenerate = false;
  bool quantum_degenerate = false;
  // The universal preservation condition a11 - a01 = a00 - a10, under which
  // the mixed NE is 1/2 in both forms for every initial state.
  bool ne_preserved = false;
  bool classical_mixed_is_ess = false;
  bool quantum_mixed_is_ess = false;
  // Interior mixed NE exists on both sides and its ESS status differs.
  bool flip = false;
  std::vector<int> pure_ess_classical;
  std::vector<int> pure_ess_quantum;
  bool state_symmetric = false;
};

// omega00 - omega01 - omega10 + omega11. Negative sign is the requirement for
// the interior mixed NE of the quantized game to be an ESS.
double quantum_discriminant(const QuantumPayoffMatrix& omega);

// Mixed NE of the quantized 2x2 game, (omega11 - omega01) / discriminant.
MixedNe2x2 mixed_ne_quantum(const QuantumPayoffMatrix& omega);

// True iff a11 - a01 = a00 - a10 within tol: the condition under which the
// classical mixed NE is also a NE of the quantized game for every choice of
// weights, forcing both equilibria to 1/2.
bool ne_preservation_check(const PayoffMatrix& alpha,
                           double tol = kDefaultEssTol);

// End-to-end verdict: quantize, locate both mixed equilibria, decide ESS by
// discriminant sign, inventory pure ESSs on both sides, and flag a stability
// flip. ESS of the interior mixed NE is decided by the closed-form sign test,
// not the generic ess_verdict; the two must agree and tests hold them to it.
StabilityReport analyze(const PayoffMatrix& alpha, const StateWeights& s);

}  // namespace qevo

#endif  // QEVO_ANALYZER_HPP
