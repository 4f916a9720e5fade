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

// uexplore: online preference-exploration simulator.
//
//   uexplore run --config <path> [--seed <u64>] [--out <path>] [--snapshots]
//   uexplore repro prop1|prop2 [--beta --r-max --p --alpha --kappa]
//                  [--trials N] --seed <u64> --out <path> [--certify N]
//   uexplore scaling --config <path> --T <list> --seeds N --seed <u64>
//                    --out <path>
//   uexplore verify [--seed <u64>]

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uexplore/commands.h"
#include "uexplore/config.h"

int main(int argc, char** argv) {
  using namespace uexplore;
  CLI::App app{"Online preference-exploration simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  bool snapshots = false;

  CLI::App* run = app.add_subcommand("run", "Run one trajectory, write CSV");
  run->add_option("--config", config_path, "JSON run configuration")
      ->required();
  CLI::Option* run_seed =
      run->add_option("--seed", seed, "RNG seed (overrides the config)");
  CLI::Option* run_out = run->add_option(
      "--out", out_path, "Trajectory CSV path (overrides the config)");
  run->add_flag("--snapshots", snapshots,
                "Add per-round reward and policy columns");

  ReproParams repro_params;
  std::int64_t trials = 0;
  CLI::App* repro =
      app.add_subcommand("repro", "Reproduce a calibration-trap experiment");
  repro->add_option("which", repro_params.which, "prop1 or prop2")
      ->required()
      ->check(CLI::IsMember({"prop1", "prop2"}));
  repro->add_option("--beta", repro_params.beta, "KL regularization");
  repro->add_option("--r-max", repro_params.r_max, "Reward cap");
  repro->add_option("--p", repro_params.p, "example1 calibration mass");
  repro->add_option("--alpha", repro_params.alpha, "Optimism weight");
  repro->add_option("--kappa", repro_params.kappa, "example2 misalignment");
  CLI::Option* trials_opt =
      repro->add_option("--trials", trials, "Number of Monte Carlo trials");
  repro->add_option("--certify", repro_params.certified_trials,
                    "Cross-check the first N trials against the grid oracle");
  repro->add_option("--seed", repro_params.seed, "RNG seed")->required();
  repro->add_option("--out", repro_params.out, "Report CSV path")->required();

  std::vector<std::int64_t> horizons;
  std::int64_t n_seeds = 0;
  CLI::App* scaling =
      app.add_subcommand("scaling", "Mean cumulative regret versus horizon");
  scaling->add_option("--config", config_path, "JSON run configuration")
      ->required();
  scaling->add_option("--T", horizons, "Ascending horizons")
      ->required()
      ->delimiter(',');
  scaling->add_option("--seeds", n_seeds, "Runs per horizon")->required();
  scaling->add_option("--seed", seed, "RNG seed")->required();
  scaling->add_option("--out", out_path, "Table CSV path")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--seed", seed, "Offset for the suite seeds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) {
      const RunConfig cfg = load_config(config_path);
      if (!*run_seed) {
        if (!cfg.seed) throw ConfigError("no seed given (--seed or \"seed\")");
        seed = *cfg.seed;
      }
      if (!*run_out) out_path = cfg.output;
      return cmd_run(cfg, RngSeed{seed}, out_path, snapshots || cfg.snapshots,
                     std::cout);
    }
    if (*repro) {
      if (*trials_opt) repro_params.trials = trials;
      return cmd_repro(repro_params, std::cout);
    }
    if (*scaling) {
      return cmd_scaling(load_config(config_path), horizons, n_seeds,
                         RngSeed{seed}, out_path, std::cout);
    }
    if (*verify) return cmd_verify(std::cout, seed);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
