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

#include "qevo/state_weights.hpp"

#include <cmath>
#include <sstream>

namespace qevo {
namespace {

constexpr double kEntryTol = 1e-12;  // negative dust below this is rejected
constexpr double kNormTol = 1e-9;

}  // namespace

StateWeights::StateWeights(int n, std::vector<double> w)
    : n_(n), w_(std::move(w)) {
  if (n_ != 2 && n_ != 3)
    throw ValidationError("state weights: basis size must be 2 or 3");
  if (w_.size() != static_cast<size_t>(n_) * n_)
    throw ValidationError("state weights: entry count does not match size");
  double sum = 0.0;
  for (double& v : w_) {
    if (!std::isfinite(v) || v < -kEntryTol) {
      std::ostringstream os;
      os << "state weights: entry " << v << " is negative";
      throw ValidationError(os.str());
    }
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (std::abs(sum - 1.0) > kNormTol) {
    std::ostringstream os;
    os << "state weights: normalization violated: sum=" << sum;
    throw ValidationError(os.str());
  }
}

StateWeights StateWeights::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<double> w;
  w.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("state weights: rows must be square");
    w.insert(w.end(), row.begin(), row.end());
  }
  return StateWeights(n, std::move(w));
}

StateWeights StateWeights::classical_limit(int n) {
  if (n != 2 && n != 3)
    throw ValidationError("state weights: basis size must be 2 or 3");
  std::vector<double> w(static_cast<size_t>(n) * n, 0.0);
  w[0] = 1.0;
  return StateWeights(n, std::move(w));
}

StateWeights StateWeights::transposed() const {
  std::vector<double> t(w_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      t[static_cast<size_t>(j) * n_ + i] = at(i, j);
  return StateWeights(n_, std::move(t));
}

bool is_symmetric(const StateWeights& s, double tol) {
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      if (std::abs(s.at(i, j) - s.at(j, i)) > tol) return false;
  return true;
}

double stability_factor(const StateWeights& s) {
  if (s.size() != 2)
    throw DimensionError("stability_factor: defined for 2x2 weights only");
  return s.at(0, 0) - s.at(0, 1) - s.at(1, 0) + s.at(1, 1);
}

bool flip_condition_holds(const StateWeights& s) {
  return stability_factor(s) < 0.0;
}

}  // namespace qevo
