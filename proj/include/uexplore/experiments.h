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

#ifndef UEXPLORE_EXPERIMENTS_H_
#define UEXPLORE_EXPERIMENTS_H_

// Monte Carlo experiments: the two calibration traps (VPO with a fixed
// calibration policy on example1, fixed-calibration sampling on example2)
// and regret-versus-horizon scaling. Trial i is seeded with mix64(seed, i).

#include <cstdint>
#include <vector>

#include "uexplore/bench.h"
#include "uexplore/explorers.h"

namespace uexplore {

struct ExperimentReport {
  std::int64_t trials = 0;
  std::int64_t successes = 0;
  double success_fraction = 0.0;
  // Lower bound on the success probability the experiment is checked against.
  double success_bound = 0.0;
  // sqrt(bound (1 - bound) / trials): binomial standard error under the bound.
  double standard_error = 0.0;
  std::int64_t horizon = 0;
  std::vector<RngSeed> seeds;
  std::vector<bool> success;
  // Worst grid-oracle deficit over the certified trials; NaN if none were.
  double max_oracle_deficit = 0.0;

  // success_fraction >= success_bound - 3 * standard_error.
  bool passes() const;
};

struct TrapOptions {
  // Cross-check every solve of the first `certified_trials` trials against
  // grid_oracle at `certify_grid_step`.
  std::int64_t certified_trials = 0;
  double certify_grid_step = 0.05;
  SolverOptions solver;
};

inline constexpr double kVpoTrapRegret = 0.5;
inline constexpr double kFixedCalTrapRegret = 0.01;

// floor(exp(r_max / beta) / 2).
std::int64_t vpo_trap_horizon(double beta, double r_max);
// floor(min(kappa, exp(r_max) / 2)).
std::int64_t fixed_cal_trap_horizon(double kappa, double r_max);

// True when every logged step regret for 1 < t <= rows is >= threshold.
bool regret_stays_above(const TrajectoryLog& log, double threshold);

// VPO with pi_cal = (1-2p, p, p) on example1 from a uniform start, for
// vpo_trap_horizon rounds with constant alpha. Success: step regret >= 1/2
// for every 1 < t <= horizon, measured with the example's pi_cal. Bound:
// 4 / (9e). Throws std::invalid_argument if r_max / beta < 3 or trials < 1.
ExperimentReport vpo_trap_experiment(std::int64_t trials, double beta,
                                     double r_max, double p, double alpha,
                                     RngSeed seed, const TrapOptions& opts = {});

// Fixed calibration pi_cal = pi_ref on example2, for fixed_cal_trap_horizon
// rounds with constant alpha, starting from `init` (pi_ref when empty).
// Success: step regret >= 0.01 for every 1 < t <= horizon. Bound: 1/64.
// Throws unless beta <= 1, 4 <= kappa <= exp(r_max / beta), trials >= 1.
ExperimentReport fixed_cal_trap_experiment(
    std::int64_t trials, double beta, double r_max, double kappa, double alpha,
    RngSeed seed, const TrapOptions& opts = {},
    const std::optional<PolicyVector>& init = std::nullopt);

struct ScalingRow {
  std::int64_t horizon = 0;
  double mean_regret = 0.0;
  double stderr_regret = 0.0;
};

struct ScalingTable {
  std::vector<ScalingRow> rows;
  // Least-squares slope of log(mean regret) against log T; NaN with < 2 rows.
  double slope = 0.0;
};

// Copy of `sched` with its horizon set to T (constant schedules unchanged).
AlphaSchedule with_horizon(AlphaSchedule sched, std::int64_t horizon);

// For each T, fresh runs with seeds mix64(seed, 0..n_seeds-1), each with the
// schedule re-targeted to horizon T; averages the final cumulative regret.
ScalingTable scaling_experiment(const ExplorerKind& kind,
                                const BanditInstance& inst,
                                const AlphaSchedule& sched,
                                const std::vector<std::int64_t>& horizons,
                                std::int64_t n_seeds, RngSeed seed,
                                const InitialPolicies& init,
                                const SolverOptions& solver = {});

}  // namespace uexplore

#endif  // UEXPLORE_EXPERIMENTS_H_
