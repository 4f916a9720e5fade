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

#ifndef UEXPLORE_EXPLORERS_H_
#define UEXPLORE_EXPLORERS_H_

// Online exploration protocols for preference feedback. Each round draws an
// action pair, asks the Bradley-Terry oracle which one wins, refits the
// optimistic reward estimate, and moves to its Gibbs policy.
//
//   kAdaptive          a1 ~ pi_prev, a2 ~ pi_cur; calibration = pi_cur
//   kVpo               a1, a2 ~ pi_cur;          calibration fixed
//   kFixedCalibration  a1 ~ pi_cur, a2 ~ pi_cal; calibration = pi_cal

#include <cstdint>
#include <optional>
#include <vector>

#include "uexplore/prefcore.h"
#include "uexplore/solver.h"

namespace uexplore {

enum class ScheduleKind {
  kConstant,
  // A log T + sqrt(t / (A r_max)), for pure reward maximization.
  kRewardOnly,
  // Tuned to the alignment constant kappa between pi_ref and pi_HF.
  kKappaAligned,
  // Tuned to the preference/reference deviation factor mu.
  kMuAligned,
};

// Regularization weights alpha_t. Build with the named factories.
struct AlphaSchedule {
  ScheduleKind kind = ScheduleKind::kConstant;
  double alpha = 0.0;
  std::size_t num_actions = 0;
  std::int64_t horizon = 0;
  double r_max = 0.0;
  double kappa = 0.0;
  double mu = 0.0;
  double beta = 0.0;

  static AlphaSchedule constant(double alpha);
  static AlphaSchedule reward_only(std::size_t num_actions, double r_max,
                                   std::int64_t horizon);
  static AlphaSchedule kappa_aligned(std::size_t num_actions,
                                     std::int64_t horizon, double r_max,
                                     double kappa, double beta);
  static AlphaSchedule mu_aligned(std::size_t num_actions,
                                  std::int64_t horizon, double r_max,
                                  double mu, double beta);

  friend bool operator==(const AlphaSchedule&, const AlphaSchedule&) = default;
};

// alpha_t for round t (natural logarithms throughout). Throws
// std::invalid_argument for t outside [1, horizon] (t >= 1 for kConstant).
double alpha_value(const AlphaSchedule& sched, std::int64_t t);

enum class Protocol { kAdaptive, kVpo, kFixedCalibration };

struct ExplorerKind {
  Protocol protocol = Protocol::kAdaptive;
  // Required for kVpo and kFixedCalibration; ignored for kAdaptive.
  std::optional<PolicyVector> pi_cal;

  static ExplorerKind adaptive() { return {Protocol::kAdaptive, std::nullopt}; }
  static ExplorerKind vpo(PolicyVector pi_cal) {
    return {Protocol::kVpo, std::move(pi_cal)};
  }
  static ExplorerKind fixed_calibration(PolicyVector pi_cal) {
    return {Protocol::kFixedCalibration, std::move(pi_cal)};
  }
  friend bool operator==(const ExplorerKind&, const ExplorerKind&) = default;
};

struct ExplorerState {
  std::int64_t round = 1;
  PolicyVector policy_prev;
  PolicyVector policy_cur;
  RewardVector reward_est;
  PreferenceCounts counts;
  std::vector<ComparisonRecord> records;

  // Round 1 with an empty dataset and a zero reward estimate.
  static ExplorerState initial(const BanditInstance& inst,
                               PolicyVector policy_prev,
                               PolicyVector policy_cur);
};

struct ExplorerOptions {
  SolverOptions solver;
  // When > 0, every solve is cross-checked against grid_oracle at this step
  // (A <= 4 only) and the deficit is reported in StepInfo.
  double certify_grid_step = 0.0;
};

struct StepInfo {
  ActionId a1;
  ActionId a2;
  ComparisonRecord record;
  double alpha = 0.0;
  SolveResult solve;
  // grid objective - solver objective when certified (<= 0 means the solver
  // matched or beat the lattice); NaN otherwise.
  double oracle_deficit = 0.0;
};

struct ActionPair {
  ActionId first;
  ActionId second;
};

// Draws (a1, a2) per the protocol: exactly two categorical draws, a1 first.
ActionPair sample_pair(const ExplorerKind& kind, const ExplorerState& state,
                       Rng& rng);

// Advances `state` by one round.
StepInfo step(const ExplorerKind& kind, ExplorerState& state,
              const AlphaSchedule& sched, const BanditInstance& inst, Rng& rng,
              const ExplorerOptions& opts = {});

struct InitialPolicies {
  PolicyVector prev;
  PolicyVector cur;

  static InitialPolicies reference(const BanditInstance& inst) {
    return {inst.pi_ref(), inst.pi_ref()};
  }
  static InitialPolicies uniform(std::size_t num_actions) {
    return {PolicyVector::uniform(num_actions),
            PolicyVector::uniform(num_actions)};
  }
};

struct RoundRow {
  std::int64_t t = 0;
  ActionId a1;
  ActionId a2;
  ActionId winner;
  double alpha = 0.0;
  // Regret of the policy played in round t (before that round's update).
  double step_regret = 0.0;
  double cum_regret = 0.0;
};

struct TrajectoryLog {
  std::vector<RoundRow> rows;
  // Per-round reward estimate and policy in play, when snapshots are on.
  std::vector<RewardVector> rewards;
  std::vector<PolicyVector> policies;
  std::vector<ComparisonRecord> records;
  PreferenceCounts counts;
  // Largest StepInfo::oracle_deficit seen (NaN when not certified).
  double max_oracle_deficit = 0.0;
};

// N_t(a, b): comparisons of the unordered pair {a, b} made in rounds 1..t.
std::int64_t pair_count(const TrajectoryLog& log, std::int64_t t, ActionId a,
                        ActionId b);

struct RunOptions {
  ExplorerOptions explorer;
  bool snapshots = false;
  // Calibration used for regret; pi_ref when unset. Regret does not depend
  // on it mathematically, but experiments report with a specific choice.
  std::optional<PolicyVector> regret_cal;
};

// Runs `horizon` rounds. Fully determined by the arguments.
TrajectoryLog run(const ExplorerKind& kind, const BanditInstance& inst,
                  const AlphaSchedule& sched, std::int64_t horizon,
                  const InitialPolicies& init, RngSeed seed,
                  const RunOptions& opts = {});

}  // namespace uexplore

#endif  // UEXPLORE_EXPLORERS_H_
