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

#include "uexplore/commands.h"

#include <charconv>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "uexplore/experiments.h"

namespace uexplore {
namespace {

bool write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) return false;
  f << contents;
  f.close();
  return static_cast<bool>(f);
}

int write_or_fail(const std::string& path, const std::string& contents) {
  if (path.empty()) {
    std::cerr << "error: no output path given\n";
    return kExitConfig;
  }
  if (!write_file(path, contents)) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitConfig;
  }
  return kExitOk;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string trajectory_csv(const TrajectoryLog& log, std::size_t num_actions) {
  const bool snaps = !log.policies.empty();
  std::string csv = "t,a1,a2,winner,alpha,step_regret,cum_regret";
  if (snaps) {
    for (std::size_t a = 0; a < num_actions; ++a) {
      csv += ",r_" + std::to_string(a);
    }
    for (std::size_t a = 0; a < num_actions; ++a) {
      csv += ",pi_" + std::to_string(a);
    }
  }
  csv += '\n';
  for (std::size_t i = 0; i < log.rows.size(); ++i) {
    const RoundRow& row = log.rows[i];
    csv += std::to_string(row.t) + ',' + std::to_string(row.a1.index) + ',' +
           std::to_string(row.a2.index) + ',' +
           std::to_string(row.winner.index) + ',' + format_double(row.alpha) +
           ',' + format_double(row.step_regret) + ',' +
           format_double(row.cum_regret);
    if (snaps) {
      for (double r : log.rewards[i].values) csv += ',' + format_double(r);
      for (double p : log.policies[i].probs()) csv += ',' + format_double(p);
    }
    csv += '\n';
  }
  return csv;
}

int cmd_run(const RunConfig& cfg, RngSeed seed, const std::string& out_path,
            bool snapshots, std::ostream& out) {
  const ResolvedRun r = resolve(cfg);
  RunOptions opts;
  opts.snapshots = snapshots;
  const TrajectoryLog log =
      run(r.kind, r.inst, r.sched, cfg.horizon, r.init, seed, opts);
  if (int rc = write_or_fail(out_path, trajectory_csv(log, r.inst.num_actions()));
      rc != kExitOk) {
    return rc;
  }
  out << "cum_regret " << format_double(log.rows.back().cum_regret) << "\n";
  return kExitOk;
}

int cmd_repro(const ReproParams& params, std::ostream& out) {
  const bool vpo = params.which == "prop1";
  if (!vpo && params.which != "prop2") {
    throw ConfigError("repro expects prop1 or prop2, got \"" + params.which +
                      "\"");
  }
  const std::int64_t trials =
      params.trials.value_or(vpo ? std::int64_t{2000} : std::int64_t{5000});
  if (trials < 1) throw ConfigError("trials must be >= 1");

  TrapOptions opts;
  opts.certified_trials = params.certified_trials;
  ExperimentReport rep;
  try {
    rep = vpo ? vpo_trap_experiment(trials, params.beta, params.r_max, params.p,
                                    params.alpha, RngSeed{params.seed}, opts)
              : fixed_cal_trap_experiment(trials, params.beta, params.r_max,
                                          params.kappa, params.alpha,
                                          RngSeed{params.seed}, opts);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  std::string csv = "trial,seed,success\n";
  for (std::size_t i = 0; i < rep.seeds.size(); ++i) {
    csv += std::to_string(i) + ',' + std::to_string(rep.seeds[i].seed) + ',' +
           (rep.success[i] ? "1" : "0") + '\n';
  }
  if (int rc = write_or_fail(params.out, csv); rc != kExitOk) return rc;

  const double threshold = rep.success_bound - 3.0 * rep.standard_error;
  out << params.which << " trials=" << rep.trials
      << " horizon=" << rep.horizon
      << " success_fraction=" << format_double(rep.success_fraction)
      << " bound=" << format_double(rep.success_bound)
      << " se=" << format_double(rep.standard_error)
      << " threshold=" << format_double(threshold);
  if (!std::isnan(rep.max_oracle_deficit)) {
    out << " max_oracle_deficit=" << format_double(rep.max_oracle_deficit);
  }
  out << (rep.passes() ? " PASS" : " FAIL") << "\n";
  return rep.passes() ? kExitOk : kExitFail;
}

int cmd_scaling(const RunConfig& cfg, const std::vector<std::int64_t>& horizons,
                std::int64_t n_seeds, RngSeed seed, const std::string& out_path,
                std::ostream& out) {
  const ResolvedRun r = resolve(cfg);
  ScalingTable table;
  try {
    table = scaling_experiment(r.kind, r.inst, r.sched, horizons, n_seeds, seed,
                               r.init);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  std::string csv = "T,mean_cum_regret,stderr\n";
  for (const ScalingRow& row : table.rows) {
    csv += std::to_string(row.horizon) + ',' + format_double(row.mean_regret) +
           ',' + format_double(row.stderr_regret) + '\n';
  }
  if (int rc = write_or_fail(out_path, csv); rc != kExitOk) return rc;
  out << "slope " << format_double(table.slope) << "\n";
  return kExitOk;
}

int cmd_verify(std::ostream& out, std::uint64_t seed) {
  const std::vector<CheckResult> checks = run_verify_suites(seed);
  bool all = true;
  char line[160];
  std::snprintf(line, sizeof(line), "%-34s %10s %14s %10s  %s\n", "check",
                "cases", "max_violation", "tolerance", "status");
  out << line;
  for (const CheckResult& c : checks) {
    std::snprintf(line, sizeof(line), "%-34s %10lld %14.3e %10.1e  %s\n",
                  c.name.c_str(), static_cast<long long>(c.cases),
                  c.max_violation, c.tolerance, c.passed() ? "PASS" : "FAIL");
    out << line;
    all = all && c.passed();
  }
  return all ? kExitOk : kExitFail;
}

}  // namespace uexplore
