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

#include "uexplore/objective.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace uexplore {
namespace {

void check_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw std::invalid_argument(std::string(what) +
                                ": dimension mismatch with instance");
  }
}

double expectation(const PolicyVector& pi, const RewardVector& r) {
  double s = 0.0;
  for (std::size_t a = 0; a < pi.size(); ++a) {
    if (pi[a] > 0.0) s += pi[a] * r[a];
  }
  return s;
}

std::vector<double> gibbs_logits(const RewardVector& r,
                                 const BanditInstance& inst) {
  const PolicyVector& ref = inst.pi_ref();
  std::vector<double> logits(r.size());
  for (std::size_t a = 0; a < r.size(); ++a) {
    logits[a] = ref[a] > 0.0 ? std::log(ref[a]) + r[a] / inst.beta()
                             : -std::numeric_limits<double>::infinity();
  }
  return logits;
}

}  // namespace

double kl_policies(const PolicyVector& p, const PolicyVector& q) {
  check_size(p.size(), q.size(), "kl_policies");
  double kl = 0.0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (p[a] <= 0.0) continue;
    if (q[a] <= 0.0) return kInfiniteDivergence;
    kl += p[a] * (std::log(p[a]) - std::log(q[a]));
  }
  return std::max(0.0, kl);
}

double j_value(const PolicyVector& pi, const RewardVector& r,
               const PolicyVector& pi_cal, const BanditInstance& inst) {
  const std::size_t n = inst.num_actions();
  check_size(pi.size(), n, "j_value");
  check_size(r.size(), n, "j_value");
  check_size(pi_cal.size(), n, "j_value");
  const double kl = kl_policies(pi, inst.pi_ref());
  if (is_infinite_divergence(kl)) return -kInfiniteDivergence;
  return expectation(pi, r) - expectation(pi_cal, r) - inst.beta() * kl;
}

PolicyVector gibbs_policy(const RewardVector& r, const BanditInstance& inst) {
  check_size(r.size(), inst.num_actions(), "gibbs_policy");
  return softmax(gibbs_logits(r, inst));
}

double log_partition(const RewardVector& r, const BanditInstance& inst) {
  check_size(r.size(), inst.num_actions(), "log_partition");
  const std::vector<double> logits = gibbs_logits(r, inst);
  const double hi = *std::max_element(logits.begin(), logits.end());
  double s = 0.0;
  for (double l : logits) s += std::exp(l - hi);
  return inst.beta() * (hi + std::log(s));
}

double j_star(const RewardVector& r, const PolicyVector& pi_cal,
              const BanditInstance& inst) {
  check_size(pi_cal.size(), inst.num_actions(), "j_star");
  return log_partition(r, inst) - expectation(pi_cal, r);
}

double loglik(const RewardVector& r, const PreferenceCounts& counts) {
  const std::size_t n = counts.num_actions();
  if (counts.empty()) return 0.0;
  check_size(r.size(), n, "loglik");
  double ll = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto w = counts.wins(a, b);
      if (w != 0) ll += static_cast<double>(w) * log_sigmoid(r[a] - r[b]);
    }
  }
  return ll;
}

ObjectiveGradients gradients(const RewardVector& r,
                             const PreferenceCounts& counts,
                             const PolicyVector& pi_cal,
                             const BanditInstance& inst) {
  const std::size_t n = inst.num_actions();
  check_size(r.size(), n, "gradients");
  check_size(pi_cal.size(), n, "gradients");
  check_size(counts.num_actions(), n, "gradients");
  ObjectiveGradients g{std::vector<double>(n, 0.0), std::vector<double>(n)};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const auto w = counts.wins(a, b);
      if (w == 0) continue;
      // d/dr log sigmoid(r_a - r_b) = sigmoid(r_b - r_a) * (e_a - e_b).
      const double s = static_cast<double>(w) * sigmoid(r[b] - r[a]);
      g.loglik[a] += s;
      g.loglik[b] -= s;
    }
  }
  const PolicyVector pi_r = gibbs_policy(r, inst);
  for (std::size_t a = 0; a < n; ++a) g.jstar[a] = pi_r[a] - pi_cal[a];
  return g;
}

double regularized_objective(const RewardVector& r,
                             const PreferenceCounts& counts, double alpha,
                             const PolicyVector& pi_cal,
                             const BanditInstance& inst) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be >= 0");
  const double ll = loglik(r, counts);
  if (alpha == 0.0) return ll;
  return ll + alpha * j_star(r, pi_cal, inst);
}

}  // namespace uexplore
