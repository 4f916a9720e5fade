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

#ifndef UEXPLORE_CONFIG_H_
#define UEXPLORE_CONFIG_H_

// JSON run configuration. Every object is parsed strictly: unknown keys,
// missing required keys and out-of-range parameters raise ConfigError.
//
//   {
//     "instance":  {"builtin": "example1", "p": 0.1, "beta": 1, "r_max": 3}
//                | {"builtin": "example2", "kappa": 8, "beta": 1, "r_max": 3}
//                | {"rewards": [...], "pi_ref": [...], "beta": .., "r_max": ..},
//     "algorithm": {"kind": "adaptive" | "vpo" | "fixed_cal",
//                   "calibration": "reference" | "example" | [probs]},
//     "schedule":  {"kind": "constant", "alpha": 1}
//                | {"kind": "reward_only"}
//                | {"kind": "kappa", "kappa": 1} | {"kind": "kappa", "tau": 2.7}
//                | {"kind": "mu"} | {"kind": "mu", "mu": 6},
//     "horizon":   100,
//     "init":      "reference" | "uniform",            (optional)
//     "seed":      7, "output": "run.csv", "snapshots": false   (optional)
//   }

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uexplore/explorers.h"
#include "uexplore/prefcore.h"

namespace uexplore {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InstanceSpec {
  // "example1", "example2", or empty for an explicit instance.
  std::string builtin;
  double p = 0.0;
  double kappa = 0.0;
  std::vector<double> rewards;
  std::vector<double> pi_ref;
  double beta = 0.0;
  double r_max = 0.0;
  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

struct AlgorithmSpec {
  // "adaptive", "vpo" or "fixed_cal".
  std::string kind;
  // "reference", "example", or empty when `calibration_probs` is given.
  std::string calibration;
  std::vector<double> calibration_probs;
  friend bool operator==(const AlgorithmSpec&, const AlgorithmSpec&) = default;
};

struct ScheduleSpec {
  // "constant", "reward_only", "kappa" or "mu".
  std::string kind;
  double alpha = 0.0;
  std::optional<double> kappa;
  std::optional<double> tau;
  std::optional<double> mu;
  friend bool operator==(const ScheduleSpec&, const ScheduleSpec&) = default;
};

struct RunConfig {
  InstanceSpec instance;
  AlgorithmSpec algorithm;
  ScheduleSpec schedule;
  std::int64_t horizon = 0;
  // "reference" or "uniform".
  std::string init = "reference";
  std::optional<std::uint64_t> seed;
  std::string output;
  bool snapshots = false;
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// A RunConfig turned into the objects the explorers consume.
struct ResolvedRun {
  BanditInstance inst;
  ExplorerKind kind;
  AlphaSchedule sched;
  InitialPolicies init;
};

// Parses and validates a configuration document.
RunConfig parse_config(std::string_view text);

// Reads and parses a file; ConfigError if it cannot be read.
RunConfig load_config(const std::string& path);

// Inverse of parse_config: parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& cfg);

// Builds the instance, protocol, schedule and initial policies. Throws
// ConfigError naming the violated constraint.
ResolvedRun resolve(const RunConfig& cfg);

}  // namespace uexplore

#endif  // UEXPLORE_CONFIG_H_
