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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "uexplore/config.h"
#include "uexplore/experiments.h"
#include "uexplore/verify.h"

namespace uexplore {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "uexplore_commands_test";
  fs::create_directories(dir);
  return dir / name;
}

RunConfig small_config(std::int64_t horizon) {
  RunConfig cfg = parse_config(R"({
    "instance": {"builtin": "example1", "p": 0.1, "beta": 1, "r_max": 3},
    "algorithm": {"kind": "adaptive"},
    "schedule": {"kind": "constant", "alpha": 1},
    "horizon": 1
  })");
  cfg.horizon = horizon;
  return cfg;
}

TEST_CASE("format_double round trips") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(3.0) == "3");
  const double x = 0.1 + 0.2;
  CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("run writes a deterministic trajectory") {
  const fs::path a = scratch("a.csv"), b = scratch("b.csv");
  std::ostringstream out;
  REQUIRE(cmd_run(small_config(3), RngSeed{4}, a.string(), false, out) ==
          kExitOk);
  REQUIRE(cmd_run(small_config(3), RngSeed{4}, b.string(), false, out) ==
          kExitOk);
  const std::string csv = slurp(a);
  CHECK(csv == slurp(b));
  const auto lines = lines_of(csv);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "t,a1,a2,winner,alpha,step_regret,cum_regret");
  double cum = 0.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> cols;
    std::stringstream ss(lines[i]);
    for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
    REQUIRE(cols.size() == 7);
    CHECK(cols[0] == std::to_string(i));
    cum += std::stod(cols[5]);
    CHECK(std::stod(cols[6]) == doctest::Approx(cum).epsilon(1e-15));
  }
  CHECK(out.str().rfind("cum_regret ", 0) == 0);
}

TEST_CASE("snapshot columns") {
  const fs::path p = scratch("snap.csv");
  std::ostringstream out;
  REQUIRE(cmd_run(small_config(2), RngSeed{1}, p.string(), true, out) ==
          kExitOk);
  const auto lines = lines_of(slurp(p));
  CHECK(lines[0] ==
        "t,a1,a2,winner,alpha,step_regret,cum_regret,r_0,r_1,r_2,pi_0,pi_1,"
        "pi_2");
  // Round 1 plays the reference with a zero estimate.
  CHECK(lines[1].find(",0,0,0,") != std::string::npos);
}

TEST_CASE("unwritable output maps to the config exit code") {
  std::ostringstream out;
  CHECK(cmd_run(small_config(2), RngSeed{1}, "/nonexistent/dir/x.csv", false,
                out) == kExitConfig);
  CHECK(cmd_run(small_config(2), RngSeed{1}, "", false, out) == kExitConfig);
}

TEST_CASE("repro") {
  ReproParams params;
  params.which = "prop1";
  params.trials = 50;
  params.seed = 3;
  params.out = scratch("repro.csv").string();
  std::ostringstream out;
  const int rc = cmd_repro(params, out);
  CHECK(rc == kExitOk);
  CHECK(out.str().find("PASS") != std::string::npos);
  const auto lines = lines_of(slurp(params.out));
  CHECK(lines.size() == 51);
  CHECK(lines[0] == "trial,seed,success");

  params.trials = 0;
  CHECK_THROWS_AS(cmd_repro(params, out), ConfigError);
  params.trials = 5;
  params.which = "prop3";
  CHECK_THROWS_AS(cmd_repro(params, out), ConfigError);
}

TEST_CASE("scaling") {
  const fs::path p = scratch("scaling.csv");
  std::ostringstream out;
  REQUIRE(cmd_scaling(small_config(1), {4, 8}, 3, RngSeed{2}, p.string(),
                      out) == kExitOk);
  const auto lines = lines_of(slurp(p));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "T,mean_cum_regret,stderr");
  CHECK(lines[1].rfind("4,", 0) == 0);
  CHECK(out.str().rfind("slope ", 0) == 0);
}

TEST_CASE("trap experiment helpers") {
  CHECK(vpo_trap_horizon(1.0, 3.0) == 10);
  CHECK(fixed_cal_trap_horizon(8.0, 3.0) == 8);
  CHECK(fixed_cal_trap_horizon(100.0, 3.0) == 10);

  TrapOptions opts;
  opts.certified_trials = 3;
  const ExperimentReport rep =
      vpo_trap_experiment(20, 1.0, 3.0, 0.1, 1.0, RngSeed{8}, opts);
  CHECK(rep.trials == 20);
  CHECK(rep.seeds.size() == 20);
  CHECK(rep.horizon == 10);
  CHECK(rep.success_bound == doctest::Approx(0.16350197385397437));
  CHECK(rep.standard_error ==
        doctest::Approx(std::sqrt(rep.success_bound * (1 - rep.success_bound) / 20)));
  CHECK(rep.max_oracle_deficit <= 1e-9);
  CHECK(rep.seeds[1].seed == mix64(RngSeed{8}, 1).seed);

  const ExperimentReport again =
      vpo_trap_experiment(20, 1.0, 3.0, 0.1, 1.0, RngSeed{8});
  CHECK(again.success == rep.success);
  CHECK(std::isnan(again.max_oracle_deficit));
}

TEST_CASE("cheap verify checks pass") {
  for (const CheckResult& r :
       {verify::sigmoid_symmetry(), verify::bernoulli_kl_nonnegative(),
        verify::regret_nonnegative(50, 1), verify::loglik_concavity(50, 2),
        verify::jstar_convexity(50, 3)}) {
    CAPTURE(r.name);
    CHECK(r.passed());
    CHECK(r.cases > 0);
  }
}

}  // namespace
}  // namespace uexplore
