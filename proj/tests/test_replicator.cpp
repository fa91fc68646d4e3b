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

#include "qevo/replicator.hpp"
#include "support/oracles.hpp"

using namespace qevo;

namespace {

const PayoffMatrix kCoordination = PayoffMatrix::from_rows({{3, 4}, {2, 5}});
const PayoffMatrix kHawkDoveLike = PayoffMatrix::from_rows({{3, 4}, {4, 3}});

}  // namespace

TEST_CASE("interior equilibria and vertices are fixed points") {
  const MixedStrategy ne = MixedStrategy::from_scalar(0.5);
  const MixedStrategy next = replicator_step(ne, kCoordination, 0.01);
  CHECK(std::abs(next[0] - ne[0]) <= 1e-12);
  CHECK(std::abs(next[1] - ne[1]) <= 1e-12);

  const MixedStrategy vertex = MixedStrategy::pure(2, 0);
  const MixedStrategy still = replicator_step(vertex, kCoordination, 0.01);
  CHECK(still[0] == 1.0);
  CHECK(still[1] == 0.0);
}

TEST_CASE("step moves toward the stable interior equilibrium") {
  const MixedStrategy x{{0.6, 0.4}};
  const MixedStrategy next = replicator_step(x, kHawkDoveLike, 0.01);
  CHECK(next[0] < 0.6);   // (Mx)_0 - mean < 0 at x = 0.6
  CHECK(next[0] > 0.5);
}

TEST_CASE("step validates its inputs") {
  CHECK_THROWS_AS(
      replicator_step(MixedStrategy::from_scalar(0.5), kCoordination, 0.0),
      DomainError);
  CHECK_THROWS_AS(
      replicator_step(MixedStrategy::pure(3, 0), kCoordination, 0.01),
      DimensionError);
}

TEST_CASE("simulate converges to the attractor") {
  SUBCASE("stable mixed equilibrium") {
    const Trajectory t = simulate(MixedStrategy{{0.6, 0.4}},
                                  QuantumPayoffMatrix(2, {3, 4, 4, 3}), 0.01,
                                  5000);
    CHECK(std::abs(t.final_state()[0] - 0.5) <= 1e-6);
  }
  SUBCASE("unstable interior point flows to the nearest pure ESS") {
    const Trajectory t =
        simulate(MixedStrategy{{0.51, 0.49}}, kCoordination, 0.01, 5000);
    CHECK(std::abs(t.final_state()[0] - 1.0) <= 1e-6);
  }
  SUBCASE("exact equilibrium never drifts") {
    const Trajectory t =
        simulate(MixedStrategy::from_scalar(0.5), kCoordination, 0.01, 5000);
    for (const MixedStrategy& s : t.states) CHECK(std::abs(s[0] - 0.5) <= 1e-9);
  }
}

TEST_CASE("trajectories stay on the simplex") {
  auto rng = testing::make_rng(2525);
  for (int it = 0; it < 20; ++it) {
    const int n = it % 2 == 0 ? 2 : 3;
    const PayoffMatrix m = testing::random_payoff(rng, n, -3.0, 3.0);
    const Trajectory t =
        simulate(testing::random_strategy(rng, n), m, 0.05, 500);
    CHECK(t.states.size() == 501);
    for (const MixedStrategy& s : t.states) {
      double sum = 0.0;
      for (int i = 0; i < s.size(); ++i) {
        CHECK(s[i] >= 0.0);
        sum += s[i];
      }
      CHECK(std::abs(sum - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("identical inputs give bit-identical trajectories") {
  auto rng = testing::make_rng(2626);
  const PayoffMatrix m = testing::random_payoff(rng, 3);
  const MixedStrategy x0 = testing::random_strategy(rng, 3);
  const Trajectory a = simulate(x0, m, 0.01, 2000);
  const Trajectory b = simulate(x0, m, 0.01, 2000);
  REQUIRE(a.states.size() == b.states.size());
  for (size_t i = 0; i < a.states.size(); ++i)
    for (int j = 0; j < 3; ++j) CHECK(a.states[i][j] == b.states[i][j]);
}

TEST_CASE("classify_stability on the worked examples") {
  CHECK(classify_stability(QuantumPayoffMatrix(2, {3, 4, 4, 3}), 0.5) ==
        StabilityClass::kAttracting);
  CHECK(classify_stability(kCoordination, 0.5) == StabilityClass::kRepelling);
  CHECK(classify_stability(PayoffMatrix::from_rows({{1, 1}, {1, 1}}), 0.5) ==
        StabilityClass::kInconclusive);
}

TEST_CASE("classify_stability rejects boundary-hugging equilibria") {
  CHECK_THROWS_AS(classify_stability(kCoordination, 0.005, 1e-2),
                  DomainError);
  CHECK_THROWS_AS(classify_stability(kCoordination, 1.2), DomainError);
}

// Dynamics corroborate the discriminant: attracting exactly when negative.
TEST_CASE("classification matches the discriminant sign on random games") {
  auto rng = testing::make_rng(2727);
  for (int it = 0; it < 200; ++it) {
    const double x_star = testing::uniform(rng, 0.2, 0.8);
    double disc = testing::uniform(rng, 1.5, 4.0);
    if (it % 2 == 0) disc = -disc;
    const PayoffMatrix m = testing::game_with_interior_ne(rng, x_star, disc);
    REQUIRE(find_mixed_ne_2x2(m).status == MixedNeStatus::kFound);
    CHECK(std::abs(find_mixed_ne_2x2(m).x - x_star) <= 1e-9);

    const StabilityClass c = classify_stability(m, x_star);
    if (disc < 0.0) {
      CHECK(c == StabilityClass::kAttracting);
    } else {
      CHECK(c != StabilityClass::kAttracting);
      CHECK(c == StabilityClass::kRepelling);
    }
  }
}
