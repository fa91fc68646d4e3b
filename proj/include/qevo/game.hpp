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

#ifndef QEVO_GAME_HPP
#define QEVO_GAME_HPP

#include <initializer_list>
#include <optional>
#include <vector>

#include "qevo/errors.hpp"

namespace qevo {

// Componentwise slack accepted on probability entries.
inline constexpr double kProbEntryTol = 1e-12;
// Slack accepted on probability sums (simplex membership, normalization).
inline constexpr double kSumTol = 1e-9;
// Default tolerance for the equality branches of Nash and ESS tests.
inline constexpr double kDefaultEssTol = 1e-9;
// Default threshold below which a probability counts as zero.
inline constexpr double kDefaultSupportTol = 1e-12;
// A 2x2 discriminant smaller than this denotes a game without an isolated
// mixed equilibrium. Absolute, so payoffs are expected at O(1) scale.
inline constexpr double kDegenerateTol = 1e-12;

// Row player's payoff matrix of a symmetric bimatrix game with 2 or 3 pure
// strategies. at(i, j) is the payoff for playing pure strategy i against pure
// strategy j; the column player's matrix is the transpose, which is
// structural and never stored.
class PayoffMatrix {
 public:
  // entries is row-major with n*n finite values.
  PayoffMatrix(int n, std::vector<double> entries);
  static PayoffMatrix from_rows(
      std::initializer_list<std::initializer_list<double>> rows);

  int size() const { return n_; }
  double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<double>& entries() const { return a_; }

  PayoffMatrix transposed() const;
  double min_entry() const;
  double max_entry() const;

 private:
  int n_;
  std::vector<double> a_;
};

// Probability distribution over pure strategies. Inputs are validated, not
// renormalized: components must lie in [0, 1] within kProbEntryTol and sum to
// 1 within kSumTol.
class MixedStrategy {
 public:
  explicit MixedStrategy(std::vector<double> probs);
  static MixedStrategy pure(int n, int index);
  static MixedStrategy uniform(int n);
  // [x, 1 - x]: x is the probability of the first strategy (the probability
  // of playing the identity operator in the quantized form).
  static MixedStrategy from_scalar(double x);

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int i) const { return p_[static_cast<size_t>(i)]; }
  const std::vector<double>& probs() const { return p_; }

 private:
  std::vector<double> p_;
};

enum class EssBranch {
  kStrictNash,       // unique best reply to itself; ESS by condition (i)
  kNeutralStable,    // alternative best replies exist, condition (ii) holds
  kNeutralUnstable,  // some alternative best reply is not repelled
  kNotNash,          // fails the Nash condition outright
};

struct ESSVerdict {
  bool is_nash = false;
  bool is_ess = false;
  EssBranch branch = EssBranch::kNotNash;
  // A strategy refuting stability, present whenever is_ess is false.
  std::optional<MixedStrategy> worst_invader;
};

// Expected payoff p^T M q of a p-player against a q-player.
double expected_payoff(const MixedStrategy& p, const MixedStrategy& q,
                       const PayoffMatrix& m);

// True iff no pure deviation improves on p against itself, within tol.
bool is_symmetric_nash(const MixedStrategy& p, const PayoffMatrix& m,
                       double tol = kDefaultEssTol);

// Full evolutionary-stability verdict for p. For n = 2 the neutral branch is
// a closed-form sign test on the discriminant; for n = 3 condition (ii) is
// checked over a barycentric grid (step 1e-2) on the best-reply face, so the
// verdict is best-effort and should be cross-checked against a finer oracle
// when it matters.
ESSVerdict ess_verdict(const MixedStrategy& p, const PayoffMatrix& m,
                       double tol = kDefaultEssTol);

// P[p, (1-eps) p + eps q] - P[q, (1-eps) p + eps q]: positive means p resists
// invasion by q at mutant fraction eps. Requires 0 < eps < 1.
double invasion_payoff_difference(const MixedStrategy& p,
                                  const MixedStrategy& q, double eps,
                                  const PayoffMatrix& m);

// Indices of strategies played with probability above zero_tol, ascending.
std::vector<int> support(const MixedStrategy& p,
                         double zero_tol = kDefaultSupportTol);

// Indices whose pure strategy is an ESS under ess_verdict, ascending.
std::vector<int> enumerate_pure_ess(const PayoffMatrix& m,
                                    double tol = kDefaultEssTol);

enum class MixedNeStatus {
  kFound,       // x lies in [0, 1]
  kOutOfRange,  // the formula value falls outside [0, 1]
  kDegenerate,  // discriminant denominator below kDegenerateTol
};

struct MixedNe2x2 {
  MixedNeStatus status = MixedNeStatus::kDegenerate;
  // The formula value (m11 - m01) / (m00 - m01 - m10 + m11); NaN when
  // degenerate. Probability of the first strategy.
  double x = 0.0;

  std::optional<double> value() const {
    if (status == MixedNeStatus::kFound) return x;
    return std::nullopt;
  }
};

// Mixed symmetric Nash equilibrium of a 2x2 game. Degenerate games (a
// continuum of equilibria) are flagged distinctly from formula values that
// fall outside [0, 1].
MixedNe2x2 find_mixed_ne_2x2(const PayoffMatrix& m);

// m00 - m01 - m10 + m11: negative sign makes an interior mixed NE an ESS.
double discriminant_2x2(const PayoffMatrix& m);

}  // namespace qevo

#endif  // QEVO_GAME_HPP
