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

#ifndef QEVO_TRANSFORM_HPP
#define QEVO_TRANSFORM_HPP

#include <vector>

#include "qevo/game.hpp"
#include "qevo/operators.hpp"
#include "qevo/state_weights.hpp"

namespace qevo {

// Effective payoff matrix of the quantized game, indexed by operator choices:
// at(mu, nu) is the row player's payoff for applying operator mu against
// operator nu. Every entry is a convex combination of classical payoffs, so
// the quantum game's payoffs never leave [min alpha, max alpha].
class QuantumPayoffMatrix {
 public:
  QuantumPayoffMatrix(int k, std::vector<double> entries);

  int size() const { return k_; }
  double at(int mu, int nu) const {
    return m_[static_cast<size_t>(mu) * k_ + nu];
  }
  const std::vector<double>& entries() const { return m_; }

  QuantumPayoffMatrix transposed() const;
  // Reinterpret omega as a classical payoff matrix so the game-theoretic
  // machinery (equilibria, ESS tests, replicator dynamics) applies to the
  // quantized game. Requires 2 or 3 operators.
  PayoffMatrix to_payoff_matrix() const;

 private:
  int k_;
  std::vector<double> m_;
};

// Quantizes the classical game: when both players pick basis-relabeling
// operators mu and nu, the measured outcome (k, l) occurs with the weight the
// initial state assigned to its preimage, so
//
//   omega[mu][nu] = sum_{k,l} alpha[k][l] * w[inv(pi_mu)(k)][inv(pi_nu)(l)].
//
// With the rsp3 operator set this reproduces the 9x9 coefficient table of the
// three-strategy scheme entry for entry, and with classical-limit weights the
// classical game is recovered exactly.
QuantumPayoffMatrix transform(const PayoffMatrix& alpha, const StateWeights& s,
                              const OperatorSet& ops);

// Closed-form four-entry map of the two-strategy reduction. Bit-identical to
// transform(alpha, s, OperatorSet::id_swap2()).
QuantumPayoffMatrix transform_2x2(const PayoffMatrix& alpha,
                                  const StateWeights& s);

// Independent route to the same matrix, kept deliberately naive: relabel the
// weight grid by scattering w(i, j) to (pi_mu(i), pi_nu(j)), then take the
// Frobenius inner product with alpha. Serves as the brute-force check for
// transform and transform_2x2.
QuantumPayoffMatrix oracle_transform(const PayoffMatrix& alpha,
                                     const StateWeights& s,
                                     const OperatorSet& ops);

}  // namespace qevo

#endif  // QEVO_TRANSFORM_HPP
