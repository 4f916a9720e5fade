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

#include "uexplore/objective.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "uexplore/bench.h"

namespace uexplore {
namespace {

TEST_CASE("kl_policies") {
  const PolicyVector u = PolicyVector::uniform(2);
  CHECK(kl_policies(u, u) == 0.0);
  CHECK(is_infinite_divergence(
      kl_policies(u, PolicyVector::point_mass(2, ActionId{0}))));
  const PolicyVector p({0.9, 0.1});
  CHECK(kl_policies(p, u) ==
        doctest::Approx(0.9 * std::log(1.8) + 0.1 * std::log(0.2)));
  // Zero entries of p contribute nothing.
  CHECK(kl_policies(PolicyVector::point_mass(2, ActionId{1}), u) ==
        doctest::Approx(std::log(2.0)));
}

TEST_CASE("j_value and j_star on example 1") {
  const CalibratedInstance ex = example1(0.1, 1.0, 3.0);
  const RewardVector r = ex.inst.true_rewards();
  const double e = std::numbers::e;
  // log((e + 2) / 3) - 1/3, 40-digit reference 0.11949909193060806...
  const double expected = 0.11949909193060806;
  CHECK(j_star(r, PolicyVector::uniform(3), ex.inst) ==
        doctest::Approx(expected).epsilon(1e-13));
  const PolicyVector hf({e / (e + 2), 1 / (e + 2), 1 / (e + 2)});
  CHECK(j_value(hf, r, PolicyVector::uniform(3), ex.inst) ==
        doctest::Approx(expected).epsilon(1e-13));
  CHECK(j_value(PolicyVector::uniform(3), r, PolicyVector::uniform(3),
                ex.inst) == 0.0);
}

TEST_CASE("j_value outside the reference support") {
  const BanditInstance inst({1.0, 0.0}, PolicyVector::point_mass(2, ActionId{0}),
                            1.0, 1.0);
  const double v = j_value(PolicyVector::uniform(2), RewardVector{{1.0, 0.0}},
                           PolicyVector::uniform(2), inst);
  CHECK(std::isinf(v));
  CHECK(v < 0);
}

TEST_CASE("gibbs_policy") {
  const BanditInstance inst({0.0, 0.0}, PolicyVector::uniform(2), 0.5, 3.0);
  const PolicyVector g = gibbs_policy(RewardVector{{1.0, 0.0}}, inst);
  CHECK(g[0] == doctest::Approx(0.8807970779778824).epsilon(1e-14));
  CHECK(g[1] == doctest::Approx(0.1192029220221176).epsilon(1e-13));

  SUBCASE("zero reward returns the reference") {
    const BanditInstance skew({0.0, 0.0, 0.0}, PolicyVector({0.2, 0.3, 0.5}),
                              1.0, 1.0);
    const PolicyVector z = gibbs_policy(RewardVector{{0, 0, 0}}, skew);
    for (std::size_t a = 0; a < 3; ++a) {
      CHECK(z[a] == doctest::Approx(skew.pi_ref()[a]).epsilon(1e-15));
    }
  }

  SUBCASE("extreme temperature stays finite") {
    const BanditInstance cold({0.0, 0.0}, PolicyVector::uniform(2), 1e-3, 3.0);
    const PolicyVector c = gibbs_policy(RewardVector{{3.0, 0.0}}, cold);
    CHECK(c[0] == 1.0);
    CHECK(c[1] >= 0.0);
    CHECK(std::isfinite(log_partition(RewardVector{{3.0, 0.0}}, cold)));
    CHECK(log_partition(RewardVector{{3.0, 0.0}}, cold) ==
          doctest::Approx(3.0 - 1e-3 * std::log(2.0)));
  }
}

TEST_CASE("j_star with a non-reference calibration") {
  const BanditInstance inst({0.0, 0.0, 0.0}, PolicyVector::uniform(3), 0.5,
                            3.0);
  // 0.5 log(mean(e^4, 1, e^2)) - 1.25, mpmath.
  CHECK(j_star(RewardVector{{2.0, 0.0, 1.0}}, PolicyVector({0.5, 0.25, 0.25}),
               inst) == doctest::Approx(0.2721596699158949).epsilon(1e-13));
}

TEST_CASE("loglik") {
  PreferenceCounts c(3);
  CHECK(loglik(RewardVector{{1.0, 2.0, 3.0}}, c) == 0.0);
  c.add(ActionId{0}, ActionId{1}, 2);
  c.add(ActionId{1}, ActionId{0});
  c.add(ActionId{2}, ActionId{1});
  // 2 log s(1) + log s(-1) + log s(0.5), mpmath.
  CHECK(loglik(RewardVector{{1.0, 0.0, 0.5}}, c) ==
        doctest::Approx(-2.413862046734775).epsilon(1e-14));
  PreferenceCounts self(2);
  self.add(ActionId{1}, ActionId{1}, 4);
  CHECK(loglik(RewardVector{{0.0, 2.0}}, self) ==
        doctest::Approx(4 * std::log(0.5)));
}

TEST_CASE("gradients") {
  const BanditInstance inst({0.0, 0.0}, PolicyVector::uniform(2), 1.0, 3.0);
  PreferenceCounts c(2);
  c.add(ActionId{0}, ActionId{1});
  const ObjectiveGradients g =
      gradients(RewardVector{{0.0, 0.0}}, c, PolicyVector({0.25, 0.75}), inst);
  CHECK(g.loglik[0] == doctest::Approx(0.5));
  CHECK(g.loglik[1] == doctest::Approx(-0.5));
  CHECK(g.jstar[0] == doctest::Approx(0.5 - 0.25));
  CHECK(g.jstar[1] == doctest::Approx(0.5 - 0.75));
  // J* gradient sums to zero whenever calibration is a distribution.
  CHECK(g.jstar[0] + g.jstar[1] == doctest::Approx(0.0));
}

TEST_CASE("regularized_objective") {
  const CalibratedInstance ex = example1(0.1, 1.0, 3.0);
  PreferenceCounts c(3);
  c.add(ActionId{0}, ActionId{2});
  const RewardVector r{{1.0, 0.0, 0.5}};
  CHECK(regularized_objective(r, c, 2.0, ex.pi_cal, ex.inst) ==
        doctest::Approx(loglik(r, c) + 2.0 * j_star(r, ex.pi_cal, ex.inst)));
  CHECK(regularized_objective(r, c, 0.0, ex.pi_cal, ex.inst) == loglik(r, c));
  CHECK_THROWS_AS(regularized_objective(r, c, -1.0, ex.pi_cal, ex.inst),
                  std::invalid_argument);
}

}  // namespace
}  // namespace uexplore
