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

#ifndef QEVO_STATE_WEIGHTS_HPP
#define QEVO_STATE_WEIGHTS_HPP

#include <initializer_list>
#include <vector>

#include "qevo/errors.hpp"

namespace qevo {

// Default tolerance for the off-diagonal symmetry test on weights.
inline constexpr double kDefaultSymmetryTol = 1e-9;

// Squared magnitudes |c_ij|^2 of the initial state's coefficients: an n x n
// nonnegative grid summing to 1. Only these weights ever enter payoffs, so
// complex amplitudes are never stored. For n = 2 the grid indices {0, 1}
// carry the basis labels {1, 3}: the middle strategy and the operator D are
// dropped in the two-strategy reduction, leaving at(0,0) = |c11|^2,
// at(0,1) = |c13|^2, at(1,0) = |c31|^2, at(1,1) = |c33|^2.
class StateWeights {
 public:
  // w is row-major with n*n entries. Entries below -1e-12 or a sum off 1 by
  // more than 1e-9 are rejected; sub-tolerance negative dust is clamped to 0.
  StateWeights(int n, std::vector<double> w);
  static StateWeights from_rows(
      std::initializer_list<std::initializer_list<double>> rows);
  // The unentangled |c11|^2 = 1 state under which the quantum game collapses
  // to the classical one.
  static StateWeights classical_limit(int n);

  int size() const { return n_; }
  double at(int i, int j) const { return w_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<double>& entries() const { return w_; }

  StateWeights transposed() const;

 private:
  int n_;
  std::vector<double> w_;
};

// True iff |w(i,j) - w(j,i)| <= tol for all i != j. This is the condition
// under which the quantized game is itself symmetric, a prerequisite for any
// ESS reading of its equilibria.
bool is_symmetric(const StateWeights& s, double tol = kDefaultSymmetryTol);

// w00 - w01 - w10 + w11, the factor by which the classical discriminant is
// scaled in the quantized 2x2 game. Always in [-1, 1]; equals 1 exactly when
// only the diagonal carries weight.
double stability_factor(const StateWeights& s);

// True iff w00 + w11 < w01 + w10 strictly, i.e. stability_factor(s) < 0: the
// regime in which the mixed equilibrium's stability verdict is inverted.
bool flip_condition_holds(const StateWeights& s);

}  // namespace qevo

#endif  // QEVO_STATE_WEIGHTS_HPP
