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

#include "qevo/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qevo {
namespace {

void check_same_dimension(int a, int b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DimensionError(os.str());
  }
}

// Payoffs of every pure strategy against p, plus P(p, p).
struct PurePayoffs {
  std::vector<double> vs_p;  // vs_p[i] = P(e_i, p)
  double p_vs_p = 0.0;
};

PurePayoffs pure_payoffs(const MixedStrategy& p, const PayoffMatrix& m) {
  const int n = m.size();
  PurePayoffs out;
  out.vs_p.assign(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += m.at(i, j) * p[j];
    out.vs_p[static_cast<size_t>(i)] = acc;
    out.p_vs_p += p[i] * acc;
  }
  return out;
}

// Barycentric grid over the simplex spanned by `vertices` (a subset of the
// pure strategies of an n-strategy game), with `divisions` intervals per
// axis. Calls fn on every grid point.
template <typename Fn>
void for_each_face_point(int n, const std::vector<int>& vertices,
                         int divisions, Fn&& fn) {
  const int v = static_cast<int>(vertices.size());
  std::vector<double> q(static_cast<size_t>(n), 0.0);
  if (v == 1) {
    q[static_cast<size_t>(vertices[0])] = 1.0;
    fn(q);
    return;
  }
  if (v == 2) {
    for (int i = 0; i <= divisions; ++i) {
      const double a = static_cast<double>(i) / divisions;
      q.assign(static_cast<size_t>(n), 0.0);
      q[static_cast<size_t>(vertices[0])] = a;
      q[static_cast<size_t>(vertices[1])] = 1.0 - a;
      fn(q);
    }
    return;
  }
  // v == 3
  for (int i = 0; i <= divisions; ++i) {
    for (int j = 0; j <= divisions - i; ++j) {
      const double a = static_cast<double>(i) / divisions;
      const double b = static_cast<double>(j) / divisions;
      q.assign(static_cast<size_t>(n), 0.0);
      q[static_cast<size_t>(vertices[0])] = a;
      q[static_cast<size_t>(vertices[1])] = b;
      q[static_cast<size_t>(vertices[2])] = 1.0 - a - b;
      fn(q);
    }
  }
}

double linf_distance(const std::vector<double>& a, const MixedStrategy& b) {
  double d = 0.0;
  for (int i = 0; i < b.size(); ++i)
    d = std::max(d, std::abs(a[static_cast<size_t>(i)] - b[i]));
  return d;
}

}  // namespace

PayoffMatrix::PayoffMatrix(int n, std::vector<double> entries)
    : n_(n), a_(std::move(entries)) {
  if (n_ != 2 && n_ != 3)
    throw ValidationError("payoff matrix: strategy count must be 2 or 3");
  if (a_.size() != static_cast<size_t>(n_) * n_)
    throw ValidationError("payoff matrix: entry count does not match size");
  for (double v : a_)
    if (!std::isfinite(v))
      throw ValidationError("payoff matrix: entries must be finite");
}

PayoffMatrix PayoffMatrix::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<double> a;
  a.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("payoff matrix: rows must be square");
    a.insert(a.end(), row.begin(), row.end());
  }
  return PayoffMatrix(n, std::move(a));
}

PayoffMatrix PayoffMatrix::transposed() const {
  std::vector<double> t(a_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      t[static_cast<size_t>(j) * n_ + i] = at(i, j);
  return PayoffMatrix(n_, std::move(t));
}

double PayoffMatrix::min_entry() const {
  return *std::min_element(a_.begin(), a_.end());
}

double PayoffMatrix::max_entry() const {
  return *std::max_element(a_.begin(), a_.end());
}

MixedStrategy::MixedStrategy(std::vector<double> probs) : p_(std::move(probs)) {
  if (p_.empty()) throw ValidationError("mixed strategy: empty vector");
  double sum = 0.0;
  for (double v : p_) {
    if (!std::isfinite(v) || v < -kProbEntryTol || v > 1.0 + kProbEntryTol) {
      std::ostringstream os;
      os << "mixed strategy: component " << v << " outside [0, 1]";
      throw ValidationError(os.str());
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    std::ostringstream os;
    os << "mixed strategy: components must sum to 1 (sum=" << sum << ")";
    throw ValidationError(os.str());
  }
}

MixedStrategy MixedStrategy::pure(int n, int index) {
  if (index < 0 || index >= n)
    throw DomainError("pure strategy index out of range");
  std::vector<double> p(static_cast<size_t>(n), 0.0);
  p[static_cast<size_t>(index)] = 1.0;
  return MixedStrategy(std::move(p));
}

MixedStrategy MixedStrategy::uniform(int n) {
  if (n < 1) throw DomainError("uniform strategy needs n >= 1");
  return MixedStrategy(std::vector<double>(static_cast<size_t>(n), 1.0 / n));
}

MixedStrategy MixedStrategy::from_scalar(double x) {
  return MixedStrategy({x, 1.0 - x});
}

double expected_payoff(const MixedStrategy& p, const MixedStrategy& q,
                       const PayoffMatrix& m) {
  check_same_dimension(p.size(), m.size(), "expected_payoff");
  check_same_dimension(q.size(), m.size(), "expected_payoff");
  double acc = 0.0;
  for (int i = 0; i < m.size(); ++i) {
    double row = 0.0;
    for (int j = 0; j < m.size(); ++j) row += m.at(i, j) * q[j];
    acc += p[i] * row;
  }
  return acc;
}

bool is_symmetric_nash(const MixedStrategy& p, const PayoffMatrix& m,
                       double tol) {
  check_same_dimension(p.size(), m.size(), "is_symmetric_nash");
  const PurePayoffs pp = pure_payoffs(p, m);
  for (double u : pp.vs_p)
    if (pp.p_vs_p < u - tol) return false;
  return true;
}

ESSVerdict ess_verdict(const MixedStrategy& p, const PayoffMatrix& m,
                       double tol) {
  check_same_dimension(p.size(), m.size(), "ess_verdict");
  const int n = m.size();
  const PurePayoffs pp = pure_payoffs(p, m);
  const double best =
      *std::max_element(pp.vs_p.begin(), pp.vs_p.end());

  ESSVerdict v;
  if (pp.p_vs_p < best - tol) {
    const int arg = static_cast<int>(
        std::max_element(pp.vs_p.begin(), pp.vs_p.end()) - pp.vs_p.begin());
    v.worst_invader = MixedStrategy::pure(n, arg);
    return v;  // NotNash
  }
  v.is_nash = true;

  // Pure strategy that is the unique best reply to itself: condition (i)
  // holds against everything.
  std::vector<int> face;
  for (int i = 0; i < n; ++i)
    if (pp.vs_p[static_cast<size_t>(i)] >= best - tol) face.push_back(i);
  const std::vector<int> supp = support(p);
  if (supp.size() == 1 && face.size() == 1 && face[0] == supp[0]) {
    v.is_ess = true;
    v.branch = EssBranch::kStrictNash;
    return v;
  }

  if (n == 2) {
    // Against any alternative best reply q, P(p,q) - P(q,q) reduces to
    // -(x_p - x_q)^2 * disc, so the whole neutral branch is one sign test.
    const double disc = discriminant_2x2(m);
    if (disc < -tol) {
      v.is_ess = true;
      v.branch = EssBranch::kNeutralStable;
    } else {
      v.branch = EssBranch::kNeutralUnstable;
      const int far = p[0] <= p[1] ? 0 : 1;  // vertex farthest from p
      v.worst_invader = MixedStrategy::pure(n, far);
    }
    return v;
  }

  // n == 3: condition (ii) over the best-reply face, sampled on a barycentric
  // grid. Points closer to p than half a grid step are skipped: the payoff
  // gap shrinks quadratically in |q - p| and would false-trip the strict
  // threshold.
  std::vector<int> region = face;
  for (int i : supp)
    if (std::find(region.begin(), region.end(), i) == region.end())
      region.push_back(i);
  std::sort(region.begin(), region.end());

  constexpr int kDivisions = 100;  // grid step 1e-2
  constexpr double kExclusion = 0.5 / kDivisions;
  double worst_gap = std::numeric_limits<double>::infinity();
  std::optional<MixedStrategy> worst;
  for_each_face_point(n, region, kDivisions, [&](const std::vector<double>& q) {
    if (linf_distance(q, p) < kExclusion) return;
    const MixedStrategy qs{std::vector<double>(q)};
    const double vs_self = expected_payoff(qs, p, m);
    if (pp.p_vs_p - vs_self > tol) return;  // condition (i)
    const double gap =
        expected_payoff(p, qs, m) - expected_payoff(qs, qs, m);
    if (gap > tol) return;  // condition (ii)
    if (gap < worst_gap) {
      worst_gap = gap;
      worst = qs;
    }
  });
  if (!worst) {
    v.is_ess = true;
    v.branch = EssBranch::kNeutralStable;
  } else {
    v.branch = EssBranch::kNeutralUnstable;
    v.worst_invader = std::move(worst);
  }
  return v;
}

double invasion_payoff_difference(const MixedStrategy& p,
                                  const MixedStrategy& q, double eps,
                                  const PayoffMatrix& m) {
  check_same_dimension(p.size(), m.size(), "invasion_payoff_difference");
  check_same_dimension(q.size(), m.size(), "invasion_payoff_difference");
  if (!(eps > 0.0 && eps < 1.0))
    throw DomainError("invasion fraction eps must lie in (0, 1)");
  std::vector<double> mean(static_cast<size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i)
    mean[static_cast<size_t>(i)] = (1.0 - eps) * p[i] + eps * q[i];
  const MixedStrategy mix{std::move(mean)};
  return expected_payoff(p, mix, m) - expected_payoff(q, mix, m);
}

std::vector<int> support(const MixedStrategy& p, double zero_tol) {
  std::vector<int> s;
  for (int i = 0; i < p.size(); ++i)
    if (p[i] > zero_tol) s.push_back(i);
  return s;
}

std::vector<int> enumerate_pure_ess(const PayoffMatrix& m, double tol) {
  std::vector<int> out;
  for (int i = 0; i < m.size(); ++i)
    if (ess_verdict(MixedStrategy::pure(m.size(), i), m, tol).is_ess)
      out.push_back(i);
  return out;
}

double discriminant_2x2(const PayoffMatrix& m) {
  check_same_dimension(m.size(), 2, "discriminant_2x2");
  return m.at(0, 0) - m.at(0, 1) - m.at(1, 0) + m.at(1, 1);
}

MixedNe2x2 find_mixed_ne_2x2(const PayoffMatrix& m) {
  check_same_dimension(m.size(), 2, "find_mixed_ne_2x2");
  const double den = discriminant_2x2(m);
  MixedNe2x2 out;
  if (std::abs(den) <= kDegenerateTol) {
    out.status = MixedNeStatus::kDegenerate;
    out.x = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  out.x = (m.at(1, 1) - m.at(0, 1)) / den;
  out.status = (out.x >= 0.0 && out.x <= 1.0) ? MixedNeStatus::kFound
                                              : MixedNeStatus::kOutOfRange;
  return out;
}

}  // namespace qevo
