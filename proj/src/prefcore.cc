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

#include "uexplore/prefcore.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace uexplore {

PolicyVector::PolicyVector(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw std::invalid_argument("policy must have at least one action");
  }
  double total = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw std::invalid_argument("policy entries must be finite and >= 0");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kSimplexTol) {
    throw std::invalid_argument("policy must sum to 1 (got " +
                                std::to_string(total) + ")");
  }
}

PolicyVector PolicyVector::uniform(std::size_t num_actions) {
  return PolicyVector(std::vector<double>(num_actions, 1.0 / num_actions));
}

PolicyVector PolicyVector::point_mass(std::size_t num_actions, ActionId a) {
  std::vector<double> p(num_actions, 0.0);
  p.at(a.index) = 1.0;
  return PolicyVector(std::move(p));
}

BanditInstance::BanditInstance(std::vector<double> true_rewards,
                               PolicyVector pi_ref, double beta, double r_max)
    : true_rewards_{std::move(true_rewards)},
      pi_ref_(std::move(pi_ref)),
      beta_(beta),
      r_max_(r_max) {
  if (!(beta_ > 0.0) || !std::isfinite(beta_)) {
    throw std::invalid_argument("beta must be > 0");
  }
  if (!(r_max_ > 0.0) || !std::isfinite(r_max_)) {
    throw std::invalid_argument("r_max must be > 0");
  }
  if (true_rewards_.size() != pi_ref_.size()) {
    throw std::invalid_argument("true rewards and pi_ref differ in length");
  }
  for (double r : true_rewards_.values) {
    if (!(r >= 0.0 && r <= r_max_)) {
      throw std::invalid_argument("true rewards must lie in [0, r_max]");
    }
  }
}

void PreferenceCounts::add(ActionId winner, ActionId loser, std::int64_t n) {
  if (winner.index >= num_actions_ || loser.index >= num_actions_) {
    throw std::out_of_range("action id out of range");
  }
  wins_[winner.index * num_actions_ + loser.index] += n;
  total_ += n;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngSeed mix64(RngSeed seed, std::uint64_t index) {
  return RngSeed{splitmix64(seed.seed ^ splitmix64(index))};
}

ActionId sample_categorical(const PolicyVector& pi, Rng& rng) {
  const double u = rng.uniform();
  double cum = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t a = 0; a < pi.size(); ++a) {
    if (pi[a] <= 0.0) continue;
    last_positive = a;
    cum += pi[a];
    if (u < cum) return ActionId{a};
  }
  // u landed in the rounding gap above the cumulative sum.
  return ActionId{last_positive};
}

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double log_sigmoid(double x) {
  if (x >= 0.0) return -std::log1p(std::exp(-x));
  return x - std::log1p(std::exp(x));
}

double bernoulli_kl(double p, double q) {
  double head = 0.0;
  if (p > 0.0) {
    if (q <= 0.0) return kInfiniteDivergence;
    head = p * (std::log(p) - std::log(q));
  }
  double tail = 0.0;
  if (p < 1.0) {
    if (q >= 1.0) return kInfiniteDivergence;
    tail = (1.0 - p) * (std::log1p(-p) - std::log1p(-q));
  }
  return std::max(0.0, head + tail);
}

double preference_prob(const BanditInstance& inst, ActionId a, ActionId b) {
  const auto& r = inst.true_rewards();
  return sigmoid(r.values.at(a.index) - r.values.at(b.index));
}

ComparisonRecord sample_comparison(const BanditInstance& inst, ActionId a,
                                   ActionId b, Rng& rng, int round) {
  const double p = preference_prob(inst, a, b);
  const double u = rng.uniform();
  if (u < p) return ComparisonRecord{a, b, round};
  return ComparisonRecord{b, a, round};
}

PolicyVector softmax(std::span<const double> logits) {
  double hi = -std::numeric_limits<double>::infinity();
  for (double l : logits) hi = std::max(hi, l);
  if (!std::isfinite(hi)) {
    throw std::invalid_argument("softmax needs at least one finite logit");
  }
  std::vector<double> w(logits.size());
  double total = 0.0;
  for (std::size_t a = 0; a < logits.size(); ++a) {
    w[a] = std::exp(logits[a] - hi);
    total += w[a];
  }
  for (std::size_t a = 0; a < w.size(); ++a) {
    if (std::isfinite(logits[a])) {
      w[a] = std::max(w[a] / total, std::numeric_limits<double>::denorm_min());
    } else {
      w[a] = 0.0;
    }
  }
  return PolicyVector(std::move(w));
}

PolicyVector pi_hf(const BanditInstance& inst) {
  return softmax(inst.true_rewards().values);
}

}  // namespace uexplore
