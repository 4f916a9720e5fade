// Copyright 2026 The uexplore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uexplore/bench.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "uexplore/objective.h"

namespace uexplore {
namespace {

TEST_CASE("example1 layout") {
  const CalibratedInstance ex = example1(0.1, 1.0, 3.0);
  CHECK(ex.inst.num_actions() == 3);
  CHECK(ex.inst.true_rewards() == RewardVector{{1.0, 0.0, 0.0}});
  CHECK(ex.inst.pi_ref() == PolicyVector::uniform(3));
  CHECK(ex.pi_cal[0] == doctest::Approx(0.8));
  CHECK(ex.pi_cal[1] == doctest::Approx(0.1));
  CHECK_THROWS_AS(example1(0.25, 1.0, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(example1(-0.1, 1.0, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(example1(0.1, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("example2 layout and constants") {
  const BanditInstance inst = example2(8.0, 3.0, 1.0);
  CHECK(inst.true_rewards() == RewardVector{{0.0, 3.0, 1.0}});
  CHECK(inst.pi_ref()[0] == doctest::Approx(0.75));
  CHECK(inst.pi_ref()[1] == doctest::Approx(0.125));
  CHECK(assumption1_kappa(inst, std::numbers::e) == doctest::Approx(6.0));
  CHECK(assumption2_mu(inst) ==
        doctest::Approx(6.0 * std::exp(3.0)).epsilon(1e-14));
  CHECK_THROWS_AS(example2(3.9, 3.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(example2(8.0, 1.5, 1.0), std::invalid_argument);
}

TEST_CASE("assumption constants on flat references") {
  const CalibratedInstance ex = example1(0.1, 1.0, 3.0);
  CHECK(assumption1_kappa(ex.inst, std::numbers::e) == 1.0);
  CHECK(assumption2_mu(ex.inst) == doctest::Approx(std::numbers::e));
  CHECK_THROWS_AS(assumption1_kappa(ex.inst, 0.5), std::invalid_argument);
  // Gap below tau: no pair qualifies, so kappa defaults to one.
  CHECK(assumption1_kappa(ex.inst, 10.0) == 1.0);
}

TEST_CASE("optimal policy and regret") {
  const CalibratedInstance ex = example1(0.1, 1.0, 3.0);
  const PolicyVector opt = optimal_policy(ex.inst);
  const double e = std::numbers::e;
  CHECK(opt[0] == doctest::Approx(e / (e + 2)).epsilon(1e-14));
  CHECK(std::abs(per_step_regret(opt, ex.inst)) <= 1e-14);
  CHECK(per_step_regret(ex.inst.pi_ref(), ex.inst) ==
        doctest::Approx(0.11949909193060806).epsilon(1e-12));
  CHECK(per_step_regret(ex.inst.pi_ref(), ex.inst, ex.pi_cal) ==
        doctest::Approx(per_step_regret(ex.inst.pi_ref(), ex.inst))
            .epsilon(1e-12));
  CHECK(per_step_regret(PolicyVector::point_mass(3, ActionId{1}), ex.inst) >
        0.0);
}

TEST_CASE("regret is infinite outside the reference support") {
  const BanditInstance inst({1.0, 0.0}, PolicyVector::point_mass(2, ActionId{0}),
                            1.0, 1.0);
  CHECK(is_infinite_divergence(
      per_step_regret(PolicyVector::uniform(2), inst)));
}

}  // namespace
}  // namespace uexplore
