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

#include "uexplore/config.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "uexplore/bench.h"

namespace uexplore {
namespace {

using json = nlohmann::json;

void check_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
}

void reject_unknown(const json& j, std::initializer_list<std::string_view> keys,
                    const std::string& where) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (std::string_view k : keys) known = known || item.key() == k;
    if (!known) {
      throw ConfigError("unknown key \"" + item.key() + "\" in " + where);
    }
  }
}

const json& required(const json& j, const std::string& key,
                     const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ConfigError("missing required field \"" + key + "\" in " + where);
  }
  return *it;
}

double as_number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError("\"" + key + "\" must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError("\"" + key + "\" must be finite");
  return d;
}

double number(const json& j, const std::string& key, const std::string& where) {
  return as_number(required(j, key, where), key);
}

std::string text(const json& j, const std::string& key,
                 const std::string& where) {
  const json& v = required(j, key, where);
  if (!v.is_string()) throw ConfigError("\"" + key + "\" must be a string");
  return v.get<std::string>();
}

std::vector<double> numbers(const json& v, const std::string& key) {
  if (!v.is_array()) throw ConfigError("\"" + key + "\" must be an array");
  std::vector<double> out;
  for (const json& e : v) out.push_back(as_number(e, key));
  return out;
}

InstanceSpec parse_instance(const json& j) {
  const std::string where = "\"instance\"";
  check_object(j, where);
  InstanceSpec s;
  if (j.contains("builtin")) {
    s.builtin = text(j, "builtin", where);
    if (s.builtin == "example1") {
      reject_unknown(j, {"builtin", "p", "beta", "r_max"}, where);
      s.p = number(j, "p", where);
    } else if (s.builtin == "example2") {
      reject_unknown(j, {"builtin", "kappa", "beta", "r_max"}, where);
      s.kappa = number(j, "kappa", where);
    } else {
      throw ConfigError("unknown builtin instance \"" + s.builtin +
                        "\" (expected example1 or example2)");
    }
  } else {
    reject_unknown(j, {"rewards", "pi_ref", "beta", "r_max"}, where);
    s.rewards = numbers(required(j, "rewards", where), "rewards");
    s.pi_ref = numbers(required(j, "pi_ref", where), "pi_ref");
  }
  s.beta = number(j, "beta", where);
  s.r_max = number(j, "r_max", where);
  return s;
}

AlgorithmSpec parse_algorithm(const json& j) {
  const std::string where = "\"algorithm\"";
  check_object(j, where);
  reject_unknown(j, {"kind", "calibration"}, where);
  AlgorithmSpec s;
  s.kind = text(j, "kind", where);
  if (s.kind != "adaptive" && s.kind != "vpo" && s.kind != "fixed_cal") {
    throw ConfigError("unknown algorithm \"" + s.kind +
                      "\" (expected adaptive, vpo or fixed_cal)");
  }
  if (s.kind == "adaptive") {
    if (j.contains("calibration")) {
      throw ConfigError(
          "adaptive calibrates against its own current policy; remove "
          "\"calibration\"");
    }
    return s;
  }
  const json& cal = required(j, "calibration", where);
  if (cal.is_string()) {
    s.calibration = cal.get<std::string>();
    if (s.calibration != "reference" && s.calibration != "example") {
      throw ConfigError("calibration must be \"reference\", \"example\" or a "
                        "probability array");
    }
  } else {
    s.calibration_probs = numbers(cal, "calibration");
  }
  return s;
}

ScheduleSpec parse_schedule(const json& j) {
  const std::string where = "\"schedule\"";
  check_object(j, where);
  ScheduleSpec s;
  s.kind = text(j, "kind", where);
  if (s.kind == "constant") {
    reject_unknown(j, {"kind", "alpha"}, where);
    s.alpha = number(j, "alpha", where);
  } else if (s.kind == "reward_only") {
    reject_unknown(j, {"kind"}, where);
  } else if (s.kind == "kappa") {
    reject_unknown(j, {"kind", "kappa", "tau"}, where);
    if (j.contains("kappa")) s.kappa = number(j, "kappa", where);
    if (j.contains("tau")) s.tau = number(j, "tau", where);
    if (s.kappa.has_value() == s.tau.has_value()) {
      throw ConfigError("kappa schedule needs exactly one of \"kappa\" or "
                        "\"tau\"");
    }
  } else if (s.kind == "mu") {
    reject_unknown(j, {"kind", "mu"}, where);
    if (j.contains("mu")) s.mu = number(j, "mu", where);
  } else {
    throw ConfigError("unknown schedule \"" + s.kind +
                      "\" (expected constant, reward_only, kappa or mu)");
  }
  return s;
}

}  // namespace

RunConfig parse_config(std::string_view text_in) {
  json doc;
  try {
    doc = json::parse(text_in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed configuration: ") + e.what());
  }
  const std::string where = "configuration";
  check_object(doc, where);
  reject_unknown(doc,
                 {"instance", "algorithm", "schedule", "horizon", "init",
                  "seed", "output", "snapshots"},
                 where);
  RunConfig cfg;
  cfg.instance = parse_instance(required(doc, "instance", where));
  cfg.algorithm = parse_algorithm(required(doc, "algorithm", where));
  cfg.schedule = parse_schedule(required(doc, "schedule", where));
  const json& horizon = required(doc, "horizon", where);
  if (!horizon.is_number_integer() || horizon.get<std::int64_t>() < 1) {
    throw ConfigError("\"horizon\" must be an integer >= 1");
  }
  cfg.horizon = horizon.get<std::int64_t>();
  if (doc.contains("init")) cfg.init = text(doc, "init", where);
  if (doc.contains("seed")) {
    const json& seed = doc["seed"];
    if (!seed.is_number_unsigned()) {
      throw ConfigError("\"seed\" must be a nonnegative integer");
    }
    cfg.seed = seed.get<std::uint64_t>();
  }
  if (doc.contains("output")) cfg.output = text(doc, "output", where);
  if (doc.contains("snapshots")) {
    if (!doc["snapshots"].is_boolean()) {
      throw ConfigError("\"snapshots\" must be true or false");
    }
    cfg.snapshots = doc["snapshots"].get<bool>();
  }
  resolve(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read configuration file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& cfg) {
  json inst;
  if (cfg.instance.builtin.empty()) {
    inst["rewards"] = cfg.instance.rewards;
    inst["pi_ref"] = cfg.instance.pi_ref;
  } else {
    inst["builtin"] = cfg.instance.builtin;
    if (cfg.instance.builtin == "example1") inst["p"] = cfg.instance.p;
    if (cfg.instance.builtin == "example2") inst["kappa"] = cfg.instance.kappa;
  }
  inst["beta"] = cfg.instance.beta;
  inst["r_max"] = cfg.instance.r_max;

  json alg;
  alg["kind"] = cfg.algorithm.kind;
  if (!cfg.algorithm.calibration.empty()) {
    alg["calibration"] = cfg.algorithm.calibration;
  } else if (!cfg.algorithm.calibration_probs.empty()) {
    alg["calibration"] = cfg.algorithm.calibration_probs;
  }

  json sched;
  sched["kind"] = cfg.schedule.kind;
  if (cfg.schedule.kind == "constant") sched["alpha"] = cfg.schedule.alpha;
  if (cfg.schedule.kappa) sched["kappa"] = *cfg.schedule.kappa;
  if (cfg.schedule.tau) sched["tau"] = *cfg.schedule.tau;
  if (cfg.schedule.mu) sched["mu"] = *cfg.schedule.mu;

  json doc;
  doc["instance"] = inst;
  doc["algorithm"] = alg;
  doc["schedule"] = sched;
  doc["horizon"] = cfg.horizon;
  doc["init"] = cfg.init;
  if (cfg.seed) doc["seed"] = *cfg.seed;
  if (!cfg.output.empty()) doc["output"] = cfg.output;
  doc["snapshots"] = cfg.snapshots;
  return doc.dump(2) + "\n";
}

ResolvedRun resolve(const RunConfig& cfg) {
  try {
    const InstanceSpec& is = cfg.instance;
    std::optional<PolicyVector> example_cal;
    std::optional<BanditInstance> inst;
    if (is.builtin == "example1") {
      CalibratedInstance ex = example1(is.p, is.beta, is.r_max);
      inst.emplace(std::move(ex.inst));
      example_cal = std::move(ex.pi_cal);
    } else if (is.builtin == "example2") {
      inst.emplace(example2(is.kappa, is.r_max, is.beta));
    } else {
      inst.emplace(is.rewards, PolicyVector(is.pi_ref), is.beta, is.r_max);
    }

    ExplorerKind kind = ExplorerKind::adaptive();
    if (cfg.algorithm.kind != "adaptive") {
      PolicyVector cal;
      if (cfg.algorithm.calibration == "reference") {
        cal = inst->pi_ref();
      } else if (cfg.algorithm.calibration == "example") {
        if (!example_cal) {
          throw ConfigError(
              "calibration \"example\" is only defined for builtin example1");
        }
        cal = *example_cal;
      } else {
        cal = PolicyVector(cfg.algorithm.calibration_probs);
      }
      if (cal.size() != inst->num_actions()) {
        throw ConfigError("calibration policy has the wrong number of actions");
      }
      kind = cfg.algorithm.kind == "vpo"
                 ? ExplorerKind::vpo(std::move(cal))
                 : ExplorerKind::fixed_calibration(std::move(cal));
    }

    const ScheduleSpec& ss = cfg.schedule;
    const std::size_t a = inst->num_actions();
    AlphaSchedule sched;
    if (ss.kind == "constant") {
      sched = AlphaSchedule::constant(ss.alpha);
    } else if (ss.kind == "reward_only") {
      sched = AlphaSchedule::reward_only(a, inst->r_max(), cfg.horizon);
    } else if (ss.kind == "kappa") {
      const double kappa =
          ss.kappa ? *ss.kappa : assumption1_kappa(*inst, *ss.tau);
      sched = AlphaSchedule::kappa_aligned(a, cfg.horizon, inst->r_max(), kappa,
                                           inst->beta());
    } else if (ss.kind == "mu") {
      const double mu = ss.mu ? *ss.mu : assumption2_mu(*inst);
      sched = AlphaSchedule::mu_aligned(a, cfg.horizon, inst->r_max(), mu,
                                        inst->beta());
    } else {
      throw ConfigError("unknown schedule \"" + ss.kind + "\"");
    }

    InitialPolicies init = InitialPolicies::reference(*inst);
    if (cfg.init == "uniform") {
      init = InitialPolicies::uniform(a);
    } else if (cfg.init != "reference") {
      throw ConfigError("\"init\" must be \"reference\" or \"uniform\"");
    }
    if (cfg.horizon < 1) throw ConfigError("\"horizon\" must be >= 1");
    return ResolvedRun{std::move(*inst), std::move(kind), sched,
                       std::move(init)};
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace uexplore
