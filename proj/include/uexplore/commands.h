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

#ifndef UEXPLORE_COMMANDS_H_
#define UEXPLORE_COMMANDS_H_

// Subcommand bodies behind the uexplore binary. Each returns a process exit
// status: kExitOk, kExitFail (a check or reproduction failed) or kExitConfig
// (bad configuration, bad flags, or unwritable output).

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "uexplore/config.h"
#include "uexplore/explorers.h"

namespace uexplore {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitConfig = 2;

// Locale-independent, round-trippable (17 significant digits).
std::string format_double(double v);

// Header t,a1,a2,winner,alpha,step_regret,cum_regret, followed by
// r_0..r_{A-1},pi_0..pi_{A-1} when the log carries snapshots.
std::string trajectory_csv(const TrajectoryLog& log, std::size_t num_actions);

// Runs one configured trajectory, writes its CSV to `out_path`, prints the
// final cumulative regret to `out`.
int cmd_run(const RunConfig& cfg, RngSeed seed, const std::string& out_path,
            bool snapshots, std::ostream& out);

struct ReproParams {
  std::string which;  // "prop1" or "prop2"
  double beta = 1.0;
  double r_max = 3.0;
  double p = 0.1;
  double alpha = 1.0;
  double kappa = 8.0;
  // Defaults to 2000 (prop1) or 5000 (prop2) when unset.
  std::optional<std::int64_t> trials;
  std::uint64_t seed = 0;
  std::string out;
  // Trials whose every solve is cross-checked against the grid oracle.
  std::int64_t certified_trials = 0;
};

// Runs one of the two calibration-trap experiments, writes the per-trial
// report CSV (trial,seed,success) and prints a summary line with PASS/FAIL
// against bound - 3 SE.
int cmd_repro(const ReproParams& params, std::ostream& out);

// Regret-versus-horizon table (T,mean_cum_regret,stderr) for the configured
// run; prints the fitted log-log slope.
int cmd_scaling(const RunConfig& cfg, const std::vector<std::int64_t>& horizons,
                std::int64_t n_seeds, RngSeed seed, const std::string& out_path,
                std::ostream& out);

struct CheckResult {
  std::string name;
  std::int64_t cases = 0;
  // Largest amount by which the checked inequality was violated (<= tolerance
  // passes).
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool passed() const { return max_violation <= tolerance; }
};

// Property suites; every suite seed is offset by `seed`.
std::vector<CheckResult> run_verify_suites(std::uint64_t seed = 0);

// Prints the check table; kExitFail if any check fails.
int cmd_verify(std::ostream& out, std::uint64_t seed = 0);

}  // namespace uexplore

#endif  // UEXPLORE_COMMANDS_H_
