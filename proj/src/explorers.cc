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

#include "uexplore/explorers.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "uexplore/bench.h"
#include "uexplore/objective.h"

namespace uexplore {
namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string("schedule parameter ") + name +
                                " must be > 0");
  }
}

AlphaSchedule shaped(ScheduleKind kind, std::size_t num_actions,
                     std::int64_t horizon, double r_max) {
  if (num_actions < 1) throw std::invalid_argument("schedule needs A >= 1");
  if (horizon < 1) throw std::invalid_argument("schedule needs T >= 1");
  require_positive(r_max, "r_max");
  AlphaSchedule s;
  s.kind = kind;
  s.num_actions = num_actions;
  s.horizon = horizon;
  s.r_max = r_max;
  return s;
}

const PolicyVector& fixed_cal(const ExplorerKind& kind) {
  if (!kind.pi_cal) {
    throw std::invalid_argument("protocol requires a calibration policy");
  }
  return *kind.pi_cal;
}

}  // namespace

AlphaSchedule AlphaSchedule::constant(double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("constant alpha must be >= 0");
  }
  AlphaSchedule s;
  s.alpha = alpha;
  return s;
}

AlphaSchedule AlphaSchedule::reward_only(std::size_t num_actions, double r_max,
                                         std::int64_t horizon) {
  return shaped(ScheduleKind::kRewardOnly, num_actions, horizon, r_max);
}

AlphaSchedule AlphaSchedule::kappa_aligned(std::size_t num_actions,
                                           std::int64_t horizon, double r_max,
                                           double kappa, double beta) {
  AlphaSchedule s =
      shaped(ScheduleKind::kKappaAligned, num_actions, horizon, r_max);
  require_positive(kappa, "kappa");
  require_positive(beta, "beta");
  s.kappa = kappa;
  s.beta = beta;
  return s;
}

AlphaSchedule AlphaSchedule::mu_aligned(std::size_t num_actions,
                                        std::int64_t horizon, double r_max,
                                        double mu, double beta) {
  AlphaSchedule s = shaped(ScheduleKind::kMuAligned, num_actions, horizon, r_max);
  require_positive(mu, "mu");
  require_positive(beta, "beta");
  s.mu = mu;
  s.beta = beta;
  return s;
}

double alpha_value(const AlphaSchedule& sched, std::int64_t t) {
  if (sched.kind == ScheduleKind::kConstant) {
    if (t < 1) throw std::invalid_argument("round index must be >= 1");
    return sched.alpha;
  }
  if (t < 1 || t > sched.horizon) {
    throw std::invalid_argument("round index outside [1, T]");
  }
  const double a = static_cast<double>(sched.num_actions);
  const double log_t = std::log(static_cast<double>(sched.horizon));
  const double tt = static_cast<double>(t);
  const double r_max = sched.r_max;
  const double b = sched.beta;
  const double info = log_t / (a * (r_max + log_t));
  switch (sched.kind) {
    case ScheduleKind::kRewardOnly:
      return a * log_t + std::sqrt(tt / (a * r_max));
    case ScheduleKind::kKappaAligned:
      return a * log_t + std::pow(tt, 1.0 / (b + 2.0)) *
                             std::pow(r_max / sched.kappa, b / (b + 2.0)) *
                             std::pow(info, (b + 1.0) / (b + 2.0));
    case ScheduleKind::kMuAligned:
      return a + std::pow(tt, (b + 1.0) / (3.0 * b + 2.0)) *
                     std::pow(r_max / sched.mu, b / (3.0 * b + 2.0)) *
                     std::pow(info, (2.0 * b + 1.0) / (3.0 * b + 2.0));
    case ScheduleKind::kConstant:
      break;
  }
  return sched.alpha;
}

ExplorerState ExplorerState::initial(const BanditInstance& inst,
                                     PolicyVector policy_prev,
                                     PolicyVector policy_cur) {
  const std::size_t n = inst.num_actions();
  if (policy_prev.size() != n || policy_cur.size() != n) {
    throw std::invalid_argument("initial policies: dimension mismatch");
  }
  ExplorerState s;
  s.policy_prev = std::move(policy_prev);
  s.policy_cur = std::move(policy_cur);
  s.reward_est = RewardVector{std::vector<double>(n, 0.0)};
  s.counts = PreferenceCounts(n);
  return s;
}

ActionPair sample_pair(const ExplorerKind& kind, const ExplorerState& state,
                       Rng& rng) {
  switch (kind.protocol) {
    case Protocol::kAdaptive: {
      const ActionId a1 = sample_categorical(state.policy_prev, rng);
      const ActionId a2 = sample_categorical(state.policy_cur, rng);
      return {a1, a2};
    }
    case Protocol::kVpo: {
      const ActionId a1 = sample_categorical(state.policy_cur, rng);
      const ActionId a2 = sample_categorical(state.policy_cur, rng);
      return {a1, a2};
    }
    case Protocol::kFixedCalibration: {
      const ActionId a1 = sample_categorical(state.policy_cur, rng);
      const ActionId a2 = sample_categorical(fixed_cal(kind), rng);
      return {a1, a2};
    }
  }
  throw std::logic_error("unknown protocol");
}

StepInfo step(const ExplorerKind& kind, ExplorerState& state,
              const AlphaSchedule& sched, const BanditInstance& inst, Rng& rng,
              const ExplorerOptions& opts) {
  if (state.round < 1) throw std::invalid_argument("state round must be >= 1");
  if (kind.protocol != Protocol::kAdaptive &&
      fixed_cal(kind).size() != inst.num_actions()) {
    throw std::invalid_argument("calibration policy: dimension mismatch");
  }
  StepInfo info;
  const ActionPair pair = sample_pair(kind, state, rng);
  info.a1 = pair.first;
  info.a2 = pair.second;
  info.record = sample_comparison(inst, pair.first, pair.second, rng,
                                  static_cast<int>(state.round));
  state.counts.add(info.record);
  state.records.push_back(info.record);

  info.alpha = alpha_value(sched, state.round);
  const PolicyVector& pi_cal = kind.protocol == Protocol::kAdaptive
                                   ? state.policy_cur
                                   : fixed_cal(kind);
  SolverOptions solver = opts.solver;
  solver.extra_starts.insert(solver.extra_starts.begin(), state.reward_est);
  info.solve =
      solve_regularized_mle(state.counts, info.alpha, pi_cal, inst, solver);

  info.oracle_deficit = std::numeric_limits<double>::quiet_NaN();
  if (opts.certify_grid_step > 0.0) {
    const SolveResult grid = grid_oracle(state.counts, info.alpha, pi_cal,
                                         inst, opts.certify_grid_step);
    info.oracle_deficit = grid.objective - info.solve.objective;
  }

  PolicyVector next = gibbs_policy(info.solve.reward, inst);
  state.policy_prev = std::move(state.policy_cur);
  state.policy_cur = std::move(next);
  state.reward_est = info.solve.reward;
  ++state.round;
  return info;
}

std::int64_t pair_count(const TrajectoryLog& log, std::int64_t t, ActionId a,
                        ActionId b) {
  std::int64_t n = 0;
  for (const ComparisonRecord& rec : log.records) {
    if (rec.round > t) break;
    if ((rec.winner == a && rec.loser == b) ||
        (rec.winner == b && rec.loser == a)) {
      ++n;
    }
  }
  return n;
}

TrajectoryLog run(const ExplorerKind& kind, const BanditInstance& inst,
                  const AlphaSchedule& sched, std::int64_t horizon,
                  const InitialPolicies& init, RngSeed seed,
                  const RunOptions& opts) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  const PolicyVector& regret_cal =
      opts.regret_cal ? *opts.regret_cal : inst.pi_ref();
  ExplorerState state = ExplorerState::initial(inst, init.prev, init.cur);
  Rng rng(seed);
  TrajectoryLog log;
  log.rows.reserve(static_cast<std::size_t>(horizon));
  log.max_oracle_deficit = opts.explorer.certify_grid_step > 0.0
                               ? -std::numeric_limits<double>::infinity()
                               : std::numeric_limits<double>::quiet_NaN();
  double cum = 0.0;
  for (std::int64_t t = 1; t <= horizon; ++t) {
    const double regret = per_step_regret(state.policy_cur, inst, regret_cal);
    if (opts.snapshots) {
      log.rewards.push_back(state.reward_est);
      log.policies.push_back(state.policy_cur);
    }
    const StepInfo info = step(kind, state, sched, inst, rng, opts.explorer);
    cum += regret;
    log.rows.push_back(RoundRow{t, info.a1, info.a2, info.record.winner,
                                info.alpha, regret, cum});
    if (opts.explorer.certify_grid_step > 0.0) {
      log.max_oracle_deficit =
          std::max(log.max_oracle_deficit, info.oracle_deficit);
    }
  }
  log.records = std::move(state.records);
  log.counts = std::move(state.counts);
  return log;
}

}  // namespace uexplore
