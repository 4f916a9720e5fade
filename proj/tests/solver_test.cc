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

#include "uexplore/solver.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "uexplore/bench.h"
#include "uexplore/objective.h"

namespace uexplore {
namespace {

BanditInstance flat(std::size_t n, double beta, double r_max) {
  return BanditInstance(std::vector<double>(n, 0.0), PolicyVector::uniform(n),
                        beta, r_max);
}

bool in_box(const RewardVector& r, double r_max) {
  return std::all_of(r.values.begin(), r.values.end(),
                     [&](double v) { return v >= 0.0 && v <= r_max; });
}

TEST_CASE("single win without regularization saturates the box") {
  const BanditInstance inst = flat(2, 1.0, 3.0);
  PreferenceCounts c(2);
  c.add(ActionId{0}, ActionId{1});
  const SolveResult s =
      solve_regularized_mle(c, 0.0, PolicyVector::uniform(2), inst);
  const RewardVector r = canonicalize(s.reward);
  CHECK(r[0] == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(r[1] == doctest::Approx(0.0));
}

TEST_CASE("symmetric counts give no gap") {
  const BanditInstance inst = flat(2, 1.0, 3.0);
  PreferenceCounts c(2);
  c.add(ActionId{0}, ActionId{1}, 5);
  c.add(ActionId{1}, ActionId{0}, 5);
  const SolveResult s =
      solve_regularized_mle(c, 0.0, PolicyVector::uniform(2), inst);
  CHECK(std::abs(s.reward[0] - s.reward[1]) <= 1e-6);
}

TEST_CASE("empty data: optimum sits on a box vertex") {
  const BanditInstance inst = flat(3, 1.0, 3.0);
  const PreferenceCounts c(3);
  const SolveResult s =
      solve_regularized_mle(c, 1.0, PolicyVector::uniform(3), inst);
  int top = 0;
  for (double v : s.reward.values) {
    const bool at_lo = std::abs(v) <= 1e-9;
    const bool at_hi = std::abs(v - 3.0) <= 1e-9;
    CHECK((at_lo || at_hi));
    top += at_hi;
  }
  CHECK(top == 1);
  // beta log(mean(e^3, 1, 1)) - 1.
  CHECK(s.objective == doctest::Approx(std::log((std::exp(3.0) + 2) / 3) - 1));
}

TEST_CASE("grid with step r_max equals vertex enumeration") {
  const BanditInstance inst = flat(3, 0.5, 2.0);
  PreferenceCounts c(3);
  c.add(ActionId{0}, ActionId{1});
  c.add(ActionId{2}, ActionId{1}, 2);
  const PolicyVector cal({0.2, 0.5, 0.3});
  double best = -INFINITY;
  for (int mask = 0; mask < 8; ++mask) {
    RewardVector v{{(mask & 1) ? 2.0 : 0.0, (mask & 2) ? 2.0 : 0.0,
                    (mask & 4) ? 2.0 : 0.0}};
    best = std::max(best, regularized_objective(v, c, 3.0, cal, inst));
  }
  CHECK(grid_oracle(c, 3.0, cal, inst, 2.0).objective ==
        doctest::Approx(best).epsilon(1e-15));
}

TEST_CASE("solver matches the lattice within the slack") {
  const CalibratedInstance ex = example1(0.1, 1.0, 3.0);
  PreferenceCounts c(3);
  c.add(ActionId{1}, ActionId{0}, 2);
  c.add(ActionId{0}, ActionId{2}, 3);
  c.add(ActionId{2}, ActionId{1});
  for (double alpha : {0.0, 1.0, 10.0}) {
    CAPTURE(alpha);
    const SolveResult s = solve_regularized_mle(c, alpha, ex.pi_cal, ex.inst);
    const SolveResult g = grid_oracle(c, alpha, ex.pi_cal, ex.inst, 0.01);
    CHECK(g.objective - s.objective <= 1e-9);
    CHECK(s.objective - g.objective <= grid_slack(c, alpha, 0.01));
  }
}

TEST_CASE("ascent is monotone and feasible") {
  const BanditInstance inst = flat(4, 0.5, 2.0);
  PreferenceCounts c(4);
  c.add(ActionId{0}, ActionId{1}, 3);
  c.add(ActionId{1}, ActionId{2}, 2);
  c.add(ActionId{3}, ActionId{0});
  std::vector<double> trace;
  const SolveResult s =
      ascend_from(RewardVector{{1.0, 1.0, 1.0, 1.0}}, c, 2.0,
                  PolicyVector::uniform(4), inst, {}, &trace);
  REQUIRE(trace.size() >= 2);
  for (std::size_t i = 1; i < trace.size(); ++i) {
    CHECK(trace[i] >= trace[i - 1]);
  }
  CHECK(in_box(s.reward, 2.0));
  CHECK(s.objective == doctest::Approx(trace.back()));
}

TEST_CASE("solver output is deterministic and labelled") {
  const CalibratedInstance ex = example1(0.2, 1.0, 3.0);
  PreferenceCounts c(3);
  c.add(ActionId{0}, ActionId{1}, 4);
  c.add(ActionId{2}, ActionId{0});
  SolverOptions opts;
  opts.extra_starts.push_back(RewardVector{{0.5, 0.5, 0.5}});
  const SolveResult a = solve_regularized_mle(c, 1.0, ex.pi_cal, ex.inst, opts);
  const SolveResult b = solve_regularized_mle(c, 1.0, ex.pi_cal, ex.inst, opts);
  CHECK(a.reward == b.reward);
  CHECK(a.objective == b.objective);
  CHECK(a.start_label == b.start_label);
  CHECK(!a.start_label.empty());
  CHECK(in_box(a.reward, 3.0));
}

TEST_CASE("solver input validation") {
  const BanditInstance inst = flat(2, 1.0, 1.0);
  const PreferenceCounts c(2);
  const PolicyVector u = PolicyVector::uniform(2);
  CHECK_THROWS_AS(solve_regularized_mle(c, -1.0, u, inst),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_regularized_mle(PreferenceCounts(3), 1.0, u, inst),
                  std::invalid_argument);
  SolverOptions bad;
  bad.backtrack_factor = 1.0;
  CHECK_THROWS_AS(solve_regularized_mle(c, 1.0, u, inst, bad),
                  std::invalid_argument);
  CHECK_THROWS_AS(grid_oracle(PreferenceCounts(5), 0.0,
                              PolicyVector::uniform(5), flat(5, 1.0, 1.0), 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(grid_oracle(c, 0.0, u, inst, 0.0), std::invalid_argument);
}

TEST_CASE("canonicalize and slack") {
  CHECK(canonicalize(RewardVector{{2.0, 1.5, 3.0}}) ==
        RewardVector{{0.5, 0.0, 1.5}});
  PreferenceCounts c(2);
  c.add(ActionId{0}, ActionId{1}, 3);
  CHECK(grid_slack(c, 1.0, 0.1) == doctest::Approx((6.0 + 2.0) * 0.05));
}

}  // namespace
}  // namespace uexplore
