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

#include "qevo/transform.hpp"

#include <cmath>
#include <utility>

namespace qevo {
namespace {

void check_compatible(const PayoffMatrix& alpha, const StateWeights& s,
                      const OperatorSet& ops) {
  if (alpha.size() != s.size() || alpha.size() != ops.basis_size())
    throw DimensionError(
        "transform: payoff matrix, weights and operators must share one "
        "basis size");
}

}  // namespace

QuantumPayoffMatrix::QuantumPayoffMatrix(int k, std::vector<double> entries)
    : k_(k), m_(std::move(entries)) {
  if (k_ < 1) throw ValidationError("quantum payoff matrix: empty");
  if (m_.size() != static_cast<size_t>(k_) * k_)
    throw ValidationError(
        "quantum payoff matrix: entry count does not match size");
  for (double v : m_)
    if (!std::isfinite(v))
      throw ValidationError("quantum payoff matrix: entries must be finite");
}

QuantumPayoffMatrix QuantumPayoffMatrix::transposed() const {
  std::vector<double> t(m_.size());
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j)
      t[static_cast<size_t>(j) * k_ + i] = at(i, j);
  return QuantumPayoffMatrix(k_, std::move(t));
}

PayoffMatrix QuantumPayoffMatrix::to_payoff_matrix() const {
  if (k_ != 2 && k_ != 3)
    throw DimensionError(
        "quantum payoff matrix: only 2 or 3 operators map to a payoff matrix");
  return PayoffMatrix(k_, m_);
}

QuantumPayoffMatrix transform(const PayoffMatrix& alpha, const StateWeights& s,
                              const OperatorSet& ops) {
  check_compatible(alpha, s, ops);
  const int n = alpha.size();
  const int k = ops.count();

  std::vector<Permutation> inv;
  inv.reserve(static_cast<size_t>(k));
  for (int mu = 0; mu < k; ++mu) inv.push_back(ops.at(mu).inverse());

  // omega[mu][nu] = sum_{a,b} alpha[a][b] * w[inv_mu(a)][inv_nu(b)]:
  // the measured outcome (a, b) carries the weight its preimage held before
  // the players relabeled the basis.
  std::vector<double> out(static_cast<size_t>(k) * k, 0.0);
  for (int mu = 0; mu < k; ++mu) {
    for (int nu = 0; nu < k; ++nu) {
      double acc = 0.0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          acc += alpha.at(a, b) * s.at(inv[static_cast<size_t>(mu)](a),
                                       inv[static_cast<size_t>(nu)](b));
      out[static_cast<size_t>(mu) * k + nu] = acc;
    }
  }
  return QuantumPayoffMatrix(k, std::move(out));
}

QuantumPayoffMatrix transform_2x2(const PayoffMatrix& alpha,
                                  const StateWeights& s) {
  if (alpha.size() != 2 || s.size() != 2)
    throw DimensionError("transform_2x2: inputs must be 2x2");
  const double a11 = alpha.at(0, 0), a13 = alpha.at(0, 1);
  const double a31 = alpha.at(1, 0), a33 = alpha.at(1, 1);
  const double w11 = s.at(0, 0), w13 = s.at(0, 1);
  const double w31 = s.at(1, 0), w33 = s.at(1, 1);
  // Term order matches the generic permutation sum so the two routes agree
  // bit for bit.
  const double o11 = a11 * w11 + a13 * w13 + a31 * w31 + a33 * w33;
  const double o13 = a11 * w13 + a13 * w11 + a31 * w33 + a33 * w31;
  const double o31 = a11 * w31 + a13 * w33 + a31 * w11 + a33 * w13;
  const double o33 = a11 * w33 + a13 * w31 + a31 * w13 + a33 * w11;
  return QuantumPayoffMatrix(2, {o11, o13, o31, o33});
}

QuantumPayoffMatrix oracle_transform(const PayoffMatrix& alpha,
                                     const StateWeights& s,
                                     const OperatorSet& ops) {
  check_compatible(alpha, s, ops);
  const int n = alpha.size();
  const int k = ops.count();

  std::vector<double> out(static_cast<size_t>(k) * k, 0.0);
  std::vector<double> relabeled(static_cast<size_t>(n) * n, 0.0);
  for (int mu = 0; mu < k; ++mu) {
    for (int nu = 0; nu < k; ++nu) {
      // Scatter the weight grid through the two relabelings, then take the
      // Frobenius inner product with alpha.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          relabeled[static_cast<size_t>(ops.at(mu)(i)) * n + ops.at(nu)(j)] =
              s.at(i, j);
      double acc = 0.0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          acc += alpha.at(a, b) * relabeled[static_cast<size_t>(a) * n + b];
      out[static_cast<size_t>(mu) * k + nu] = acc;
    }
  }
  return QuantumPayoffMatrix(k, std::move(out));
}

}  // namespace qevo
