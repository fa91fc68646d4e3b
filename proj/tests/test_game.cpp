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

#include <doctest.h>

#include <cmath>
#include <limits>

#include "qevo/game.hpp"
#include "support/oracles.hpp"

using namespace qevo;
using qevo::testing::OracleVerdict;

namespace {

const PayoffMatrix kCoordination = PayoffMatrix::from_rows({{3, 4}, {2, 5}});
const PayoffMatrix kHawkDoveLike = PayoffMatrix::from_rows({{3, 4}, {4, 3}});

}  // namespace

TEST_CASE("expected_payoff on the worked examples") {
  const MixedStrategy e0 = MixedStrategy::pure(2, 0);
  const MixedStrategy e1 = MixedStrategy::pure(2, 1);
  CHECK(expected_payoff(e0, e1, kCoordination) == doctest::Approx(4.0));

  const MixedStrategy half = MixedStrategy::from_scalar(0.5);
  // (3 + 4 + 2 + 5) / 4
  CHECK(expected_payoff(half, half, kCoordination) == doctest::Approx(3.5));

  const PayoffMatrix rsp = PayoffMatrix::from_rows(
      {{0.7, -1.0, 1.0}, {1.0, 0.7, -1.0}, {-1.0, 1.0, 0.7}});
  const MixedStrategy rock = MixedStrategy::pure(3, 0);
  CHECK(expected_payoff(rock, rock, rsp) == doctest::Approx(0.7));
}

TEST_CASE("expected_payoff rejects dimension mismatch") {
  CHECK_THROWS_AS(expected_payoff(MixedStrategy::pure(3, 0),
                                  MixedStrategy::pure(2, 0), kCoordination),
                  DimensionError);
}

TEST_CASE("expected_payoff is bilinear") {
  auto rng = testing::make_rng(101);
  for (int it = 0; it < 200; ++it) {
    const int n = it % 2 == 0 ? 2 : 3;
    const PayoffMatrix m = testing::random_payoff(rng, n);
    const MixedStrategy p1 = testing::random_strategy(rng, n);
    const MixedStrategy p2 = testing::random_strategy(rng, n);
    const MixedStrategy q = testing::random_strategy(rng, n);
    const double lambda = testing::uniform(rng, 0.0, 1.0);

    std::vector<double> mixv(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      mixv[static_cast<size_t>(i)] = lambda * p1[i] + (1.0 - lambda) * p2[i];
    const MixedStrategy mix{std::move(mixv)};

    const double lhs = expected_payoff(mix, q, m);
    const double rhs = lambda * expected_payoff(p1, q, m) +
                       (1.0 - lambda) * expected_payoff(p2, q, m);
    CHECK(std::abs(lhs - rhs) <= 1e-12);

    const double lhs_t = expected_payoff(q, mix, m);
    const double rhs_t = lambda * expected_payoff(q, p1, m) +
                         (1.0 - lambda) * expected_payoff(q, p2, m);
    CHECK(std::abs(lhs_t - rhs_t) <= 1e-12);
  }
}

TEST_CASE("mixed strategies are validated, never renormalized") {
  CHECK_THROWS_AS(MixedStrategy({0.5, 0.4}), ValidationError);
  CHECK_THROWS_AS(MixedStrategy({1.2, -0.2}), ValidationError);
  CHECK_NOTHROW(MixedStrategy({0.5, 0.5 + 1e-10}));
}

TEST_CASE("payoff matrices reject unsupported shapes and non-finite entries") {
  CHECK_THROWS_AS(PayoffMatrix(4, std::vector<double>(16, 0.0)),
                  ValidationError);
  CHECK_THROWS_AS(PayoffMatrix(2, {1.0, 2.0, 3.0}), ValidationError);
  CHECK_THROWS_AS(
      PayoffMatrix(2, {1.0, std::numeric_limits<double>::quiet_NaN(), 0.0,
                       0.0}),
      ValidationError);
  CHECK_THROWS_AS(
      PayoffMatrix(2, {1.0, std::numeric_limits<double>::infinity(), 0.0,
                       0.0}),
      ValidationError);
}

TEST_CASE("is_symmetric_nash on the worked examples") {
  // x* = (5 - 4) / (3 - 4 - 2 + 5) = 1/2
  CHECK(is_symmetric_nash(MixedStrategy::from_scalar(0.5), kCoordination));
  // 3 > 2 makes the first pure strategy a strict equilibrium
  CHECK(is_symmetric_nash(MixedStrategy::pure(2, 0), kCoordination));
  const PayoffMatrix m = PayoffMatrix::from_rows({{0, 0}, {1, 0}});
  CHECK_FALSE(is_symmetric_nash(MixedStrategy::pure(2, 0), m));
}

TEST_CASE("ess_verdict on the worked examples") {
  SUBCASE("interior NE with positive discriminant is not an ESS") {
    const ESSVerdict v =
        ess_verdict(MixedStrategy::from_scalar(0.5), kCoordination);
    CHECK(v.is_nash);
    CHECK_FALSE(v.is_ess);
    CHECK(v.branch == EssBranch::kNeutralUnstable);
    REQUIRE(v.worst_invader.has_value());
    // the witness must actually refute condition (ii)
    const MixedStrategy p = MixedStrategy::from_scalar(0.5);
    const MixedStrategy& q = *v.worst_invader;
    CHECK(expected_payoff(p, q, kCoordination) <=
          expected_payoff(q, q, kCoordination) + kDefaultEssTol);
  }
  SUBCASE("strict NE is an ESS") {
    const ESSVerdict v = ess_verdict(MixedStrategy::pure(2, 0), kCoordination);
    CHECK(v.is_ess);
    CHECK(v.branch == EssBranch::kStrictNash);
  }
  SUBCASE("interior NE with negative discriminant is an ESS") {
    const ESSVerdict v =
        ess_verdict(MixedStrategy::from_scalar(0.5), kHawkDoveLike);
    CHECK(v.is_nash);
    CHECK(v.is_ess);
    CHECK(v.branch == EssBranch::kNeutralStable);
  }
}

TEST_CASE("ess_verdict on three-strategy games") {
  SUBCASE("zero-sum cyclic game: the center is a NE but drifts") {
    const PayoffMatrix rsp = PayoffMatrix::from_rows(
        {{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
    const MixedStrategy center = MixedStrategy::uniform(3);
    CHECK(is_symmetric_nash(center, rsp));
    const ESSVerdict v = ess_verdict(center, rsp);
    CHECK(v.is_nash);
    CHECK_FALSE(v.is_ess);
    CHECK(enumerate_pure_ess(rsp).empty());
  }
  SUBCASE("pure coordination: all vertices strict, the center invadable") {
    const PayoffMatrix diag =
        PayoffMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(enumerate_pure_ess(diag) == std::vector<int>{0, 1, 2});
    const ESSVerdict v = ess_verdict(MixedStrategy::uniform(3), diag);
    CHECK(v.is_nash);
    CHECK_FALSE(v.is_ess);
    REQUIRE(v.worst_invader.has_value());
    // any invader beats the center here: P(p, q) - P(q, q) = 1/3 - |q|^2 < 0
    const MixedStrategy& q = *v.worst_invader;
    double sq = 0.0;
    for (int i = 0; i < 3; ++i) sq += q[i] * q[i];
    CHECK(1.0 / 3.0 < sq + kDefaultEssTol);
  }
}

TEST_CASE("ess_verdict structural invariants on random instances") {
  auto rng = testing::make_rng(202);
  for (int it = 0; it < 300; ++it) {
    const int n = it % 3 == 0 ? 3 : 2;
    const PayoffMatrix m = testing::random_payoff(rng, n);
    const MixedStrategy p = it % 2 == 0 ? testing::random_strategy(rng, n)
                                        : MixedStrategy::pure(n, it % n);
    const ESSVerdict v = ess_verdict(p, m);
    if (v.is_ess) CHECK(v.is_nash);
    if (v.branch == EssBranch::kStrictNash) CHECK(v.is_ess);
    if (!v.is_ess) CHECK(v.worst_invader.has_value());
  }
}

TEST_CASE("ess_verdict agrees with the invader-grid oracle on 2x2 games") {
  auto rng = testing::make_rng(303);
  int checked = 0;
  for (int it = 0; it < 400; ++it) {
    const PayoffMatrix m = testing::random_payoff(rng, 2);
    for (int i = 0; i < 2; ++i) {
      const OracleVerdict o =
          testing::brute_force_ess_2x2(i == 0 ? 1.0 : 0.0, m);
      if (o == OracleVerdict::kBorderline) continue;
      const ESSVerdict v = ess_verdict(MixedStrategy::pure(2, i), m);
      CHECK(v.is_ess == (o == OracleVerdict::kEss));
      ++checked;
    }
  }
  CHECK(checked > 400);  // the filter must not eat the sample
}

TEST_CASE("invasion_payoff_difference on the worked examples") {
  const MixedStrategy half = MixedStrategy::from_scalar(0.5);
  const MixedStrategy e0 = MixedStrategy::pure(2, 0);
  const MixedStrategy e1 = MixedStrategy::pure(2, 1);

  CHECK(invasion_payoff_difference(half, half, 0.3, kCoordination) ==
        doctest::Approx(0.0));
  // At the mixed NE the eps^0 term vanishes and the eps^1 term is
  // -eps * (dx)^2 * disc = -0.01 * 0.25 * 2.
  CHECK(invasion_payoff_difference(half, e0, 0.01, kCoordination) ==
        doctest::Approx(-0.005).epsilon(1e-12));
  // 0.99 * (3 - 2) + 0.01 * (4 - 5)
  CHECK(invasion_payoff_difference(e0, e1, 0.01, kCoordination) ==
        doctest::Approx(0.98).epsilon(1e-12));
}

TEST_CASE("invasion_payoff_difference rejects eps outside (0, 1)") {
  const MixedStrategy half = MixedStrategy::from_scalar(0.5);
  CHECK_THROWS_AS(invasion_payoff_difference(half, half, 0.0, kCoordination),
                  DomainError);
  CHECK_THROWS_AS(invasion_payoff_difference(half, half, 1.0, kCoordination),
                  DomainError);
}

TEST_CASE("invasion_payoff_difference matches its bilinear expansion") {
  auto rng = testing::make_rng(404);
  for (int it = 0; it < 300; ++it) {
    const int n = it % 2 == 0 ? 2 : 3;
    const PayoffMatrix m = testing::random_payoff(rng, n);
    const MixedStrategy p = testing::random_strategy(rng, n);
    const MixedStrategy q = testing::random_strategy(rng, n);
    const double eps = testing::uniform(rng, 1e-6, 0.999);
    const double direct = invasion_payoff_difference(p, q, eps, m);
    const double expanded =
        (1.0 - eps) * (expected_payoff(p, p, m) - expected_payoff(q, p, m)) +
        eps * (expected_payoff(p, q, m) - expected_payoff(q, q, m));
    CHECK(std::abs(direct - expanded) <= 1e-12);
  }
}

TEST_CASE("support") {
  CHECK(support(MixedStrategy::from_scalar(0.5)) == std::vector<int>{0, 1});
  CHECK(support(MixedStrategy::pure(2, 0)) == std::vector<int>{0});
  CHECK(support(MixedStrategy({0.3, 0.0, 0.7})) == std::vector<int>{0, 2});
}

TEST_CASE("enumerate_pure_ess on the worked examples") {
  CHECK(enumerate_pure_ess(kCoordination) == std::vector<int>{0, 1});
  CHECK(enumerate_pure_ess(kHawkDoveLike).empty());
  // Strategy 1 is only a neutral equilibrium here and drifts out.
  const PayoffMatrix m = PayoffMatrix::from_rows({{1, 0}, {0, 0}});
  CHECK(enumerate_pure_ess(m) == std::vector<int>{0});
}

TEST_CASE("find_mixed_ne_2x2 on the worked examples") {
  SUBCASE("interior equilibrium") {
    const MixedNe2x2 ne = find_mixed_ne_2x2(kCoordination);
    CHECK(ne.status == MixedNeStatus::kFound);
    CHECK(ne.x == doctest::Approx(0.5));
  }
  SUBCASE("degenerate game") {
    const MixedNe2x2 ne =
        find_mixed_ne_2x2(PayoffMatrix::from_rows({{1, 1}, {1, 1}}));
    CHECK(ne.status == MixedNeStatus::kDegenerate);
    CHECK(std::isnan(ne.x));
    CHECK_FALSE(ne.value().has_value());
  }
  SUBCASE("formula value outside [0, 1]") {
    const MixedNe2x2 ne =
        find_mixed_ne_2x2(PayoffMatrix::from_rows({{5, 4}, {2, 3}}));
    CHECK(ne.status == MixedNeStatus::kOutOfRange);
    CHECK(ne.x == doctest::Approx(-0.5));
    CHECK_FALSE(ne.value().has_value());
  }
}

// Bishop-Cannings consequence: a mixed ESS leaves no room for pure ESSs.
TEST_CASE("mixed ESS excludes pure ESSs on random 2x2 games") {
  auto rng = testing::make_rng(505);
  int mixed_ess_seen = 0;
  for (int it = 0; it < 1000; ++it) {
    const PayoffMatrix m = testing::random_payoff(rng, 2);
    const MixedNe2x2 ne = find_mixed_ne_2x2(m);
    if (ne.status != MixedNeStatus::kFound || ne.x <= 0.0 || ne.x >= 1.0)
      continue;
    if (discriminant_2x2(m) < 0.0) {
      ++mixed_ess_seen;
      CHECK(enumerate_pure_ess(m).empty());
      // grid oracle confirms the mixed equilibrium really is an ESS
      const OracleVerdict o = testing::brute_force_ess_2x2(ne.x, m);
      if (o != OracleVerdict::kBorderline) CHECK(o == OracleVerdict::kEss);
      // and that both pure strategies really are invadable
      for (int i = 0; i < 2; ++i) {
        const OracleVerdict po =
            testing::brute_force_ess_2x2(i == 0 ? 1.0 : 0.0, m);
        if (po != OracleVerdict::kBorderline)
          CHECK(po == OracleVerdict::kNotEss);
      }
    }
  }
  CHECK(mixed_ess_seen > 100);
}
