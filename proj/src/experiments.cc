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

#include "uexplore/experiments.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace uexplore {
namespace {

ExperimentReport summarize(std::int64_t trials, double bound) {
  ExperimentReport rep;
  rep.trials = trials;
  rep.success_bound = bound;
  rep.standard_error =
      std::sqrt(bound * (1.0 - bound) / static_cast<double>(trials));
  rep.max_oracle_deficit = std::numeric_limits<double>::quiet_NaN();
  return rep;
}

void record_trial(ExperimentReport& rep, RngSeed seed, bool ok,
                  const TrajectoryLog& log) {
  rep.seeds.push_back(seed);
  rep.success.push_back(ok);
  if (ok) ++rep.successes;
  if (!std::isnan(log.max_oracle_deficit)) {
    rep.max_oracle_deficit = std::isnan(rep.max_oracle_deficit)
                                 ? log.max_oracle_deficit
                                 : std::max(rep.max_oracle_deficit,
                                            log.max_oracle_deficit);
  }
}

RunOptions trial_options(const TrapOptions& opts, std::int64_t trial) {
  RunOptions ro;
  ro.explorer.solver = opts.solver;
  if (trial < opts.certified_trials) {
    ro.explorer.certify_grid_step = opts.certify_grid_step;
  }
  return ro;
}

}  // namespace

bool ExperimentReport::passes() const {
  return success_fraction >= success_bound - 3.0 * standard_error;
}

std::int64_t vpo_trap_horizon(double beta, double r_max) {
  return static_cast<std::int64_t>(std::floor(std::exp(r_max / beta) / 2.0));
}

std::int64_t fixed_cal_trap_horizon(double kappa, double r_max) {
  return static_cast<std::int64_t>(
      std::floor(std::min(kappa, std::exp(r_max) / 2.0)));
}

bool regret_stays_above(const TrajectoryLog& log, double threshold) {
  for (const RoundRow& row : log.rows) {
    if (row.t > 1 && !(row.step_regret >= threshold)) return false;
  }
  return true;
}

ExperimentReport vpo_trap_experiment(std::int64_t trials, double beta,
                                     double r_max, double p, double alpha,
                                     RngSeed seed, const TrapOptions& opts) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(beta > 0.0) || !(r_max / beta >= 3.0)) {
    throw std::invalid_argument("VPO trap requires r_max / beta >= 3");
  }
  const CalibratedInstance ex = example1(p, beta, r_max);
  const ExplorerKind kind = ExplorerKind::vpo(ex.pi_cal);
  const AlphaSchedule sched = AlphaSchedule::constant(alpha);
  const std::int64_t horizon = vpo_trap_horizon(beta, r_max);
  const InitialPolicies init = InitialPolicies::uniform(3);

  ExperimentReport rep = summarize(trials, 4.0 / (9.0 * std::numbers::e));
  rep.horizon = horizon;
  for (std::int64_t i = 0; i < trials; ++i) {
    const RngSeed s = mix64(seed, static_cast<std::uint64_t>(i));
    RunOptions ro = trial_options(opts, i);
    ro.regret_cal = ex.pi_cal;
    const TrajectoryLog log = run(kind, ex.inst, sched, horizon, init, s, ro);
    record_trial(rep, s, regret_stays_above(log, kVpoTrapRegret), log);
  }
  rep.success_fraction =
      static_cast<double>(rep.successes) / static_cast<double>(trials);
  return rep;
}

ExperimentReport fixed_cal_trap_experiment(
    std::int64_t trials, double beta, double r_max, double kappa, double alpha,
    RngSeed seed, const TrapOptions& opts,
    const std::optional<PolicyVector>& init) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("fixed-calibration trap requires 0 < beta <= 1");
  }
  if (!(kappa >= 4.0)) {
    throw std::invalid_argument("fixed-calibration trap requires kappa >= 4");
  }
  if (!(kappa <= std::exp(r_max / beta))) {
    throw std::invalid_argument(
        "fixed-calibration trap requires kappa <= exp(r_max / beta)");
  }
  const BanditInstance inst = example2(kappa, r_max, beta);
  const ExplorerKind kind = ExplorerKind::fixed_calibration(inst.pi_ref());
  const AlphaSchedule sched = AlphaSchedule::constant(alpha);
  const std::int64_t horizon = fixed_cal_trap_horizon(kappa, r_max);
  const PolicyVector start = init ? *init : inst.pi_ref();
  const InitialPolicies policies{start, start};

  ExperimentReport rep = summarize(trials, 1.0 / 64.0);
  rep.horizon = horizon;
  for (std::int64_t i = 0; i < trials; ++i) {
    const RngSeed s = mix64(seed, static_cast<std::uint64_t>(i));
    const TrajectoryLog log =
        run(kind, inst, sched, horizon, policies, s, trial_options(opts, i));
    record_trial(rep, s, regret_stays_above(log, kFixedCalTrapRegret), log);
  }
  rep.success_fraction =
      static_cast<double>(rep.successes) / static_cast<double>(trials);
  return rep;
}

AlphaSchedule with_horizon(AlphaSchedule sched, std::int64_t horizon) {
  if (sched.kind != ScheduleKind::kConstant) sched.horizon = horizon;
  return sched;
}

ScalingTable scaling_experiment(const ExplorerKind& kind,
                                const BanditInstance& inst,
                                const AlphaSchedule& sched,
                                const std::vector<std::int64_t>& horizons,
                                std::int64_t n_seeds, RngSeed seed,
                                const InitialPolicies& init,
                                const SolverOptions& solver) {
  if (horizons.empty()) throw std::invalid_argument("no horizons given");
  for (std::size_t i = 1; i < horizons.size(); ++i) {
    if (horizons[i] <= horizons[i - 1]) {
      throw std::invalid_argument("horizons must be strictly ascending");
    }
  }
  if (n_seeds < 1) throw std::invalid_argument("n_seeds must be >= 1");

  RunOptions ro;
  ro.explorer.solver = solver;
  ScalingTable table;
  for (std::int64_t horizon : horizons) {
    const AlphaSchedule s = with_horizon(sched, horizon);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::int64_t k = 0; k < n_seeds; ++k) {
      const RngSeed rs = mix64(seed, static_cast<std::uint64_t>(k));
      const TrajectoryLog log = run(kind, inst, s, horizon, init, rs, ro);
      const double r = log.rows.back().cum_regret;
      sum += r;
      sum_sq += r * r;
    }
    const double n = static_cast<double>(n_seeds);
    const double mean = sum / n;
    const double var =
        n > 1.0 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0)) : 0.0;
    table.rows.push_back({horizon, mean, std::sqrt(var / n)});
  }

  table.slope = std::numeric_limits<double>::quiet_NaN();
  if (table.rows.size() >= 2) {
    double mx = 0.0, my = 0.0;
    for (const ScalingRow& row : table.rows) {
      mx += std::log(static_cast<double>(row.horizon));
      my += std::log(row.mean_regret);
    }
    const double m = static_cast<double>(table.rows.size());
    mx /= m;
    my /= m;
    double sxy = 0.0, sxx = 0.0;
    for (const ScalingRow& row : table.rows) {
      const double dx = std::log(static_cast<double>(row.horizon)) - mx;
      sxy += dx * (std::log(row.mean_regret) - my);
      sxx += dx * dx;
    }
    table.slope = sxy / sxx;
  }
  return table;
}

}  // namespace uexplore
