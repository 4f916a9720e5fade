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

#include "uexplore/bench.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "uexplore/objective.h"

namespace uexplore {

CalibratedInstance example1(double p, double beta, double r_max) {
  if (!(p >= 0.0 && p < 0.25)) {
    throw std::invalid_argument("example1 requires 0 <= p < 1/4");
  }
  if (!(r_max >= 1.0)) {
    throw std::invalid_argument("example1 requires r_max >= 1");
  }
  BanditInstance inst({1.0, 0.0, 0.0}, PolicyVector::uniform(3), beta, r_max);
  PolicyVector cal({1.0 - 2.0 * p, p, p});
  return {std::move(inst), std::move(cal)};
}

BanditInstance example2(double kappa, double r_max, double beta) {
  if (!(kappa >= 4.0) || !std::isfinite(kappa)) {
    throw std::invalid_argument("example2 requires kappa >= 4");
  }
  if (!(r_max >= 2.0)) {
    throw std::invalid_argument("example2 requires r_max >= 2");
  }
  const double tail = 1.0 / kappa;
  return BanditInstance({0.0, r_max, r_max - 2.0},
                        PolicyVector({1.0 - 2.0 * tail, tail, tail}), beta,
                        r_max);
}

PolicyVector optimal_policy(const BanditInstance& inst) {
  return gibbs_policy(inst.true_rewards(), inst);
}

double per_step_regret(const PolicyVector& pi, const BanditInstance& inst) {
  return per_step_regret(pi, inst, inst.pi_ref());
}

double per_step_regret(const PolicyVector& pi, const BanditInstance& inst,
                       const PolicyVector& pi_cal) {
  const double j = j_value(pi, inst.true_rewards(), pi_cal, inst);
  if (j == -kInfiniteDivergence) return kInfiniteDivergence;
  return j_star(inst.true_rewards(), pi_cal, inst) - j;
}

double assumption1_kappa(const BanditInstance& inst, double tau) {
  if (!(tau >= 1.0)) throw std::invalid_argument("tau must be >= 1");
  // pi_HF(a+)/pi_HF(a-) = exp(r*(a+) - r*(a-)); compare in log space.
  const double log_tau = std::log(tau);
  const auto& r = inst.true_rewards();
  const auto& ref = inst.pi_ref();
  double kappa = 1.0;
  for (std::size_t hi = 0; hi < r.size(); ++hi) {
    for (std::size_t lo = 0; lo < r.size(); ++lo) {
      if (hi == lo || r[hi] - r[lo] < log_tau - 1e-12) continue;
      if (ref[hi] <= 0.0) {
        if (ref[lo] > 0.0) return kInfiniteDivergence;
        continue;
      }
      kappa = std::max(kappa, ref[lo] / ref[hi]);
    }
  }
  return kappa;
}

double assumption2_mu(const BanditInstance& inst) {
  const auto& r = inst.true_rewards();
  const auto& ref = inst.pi_ref();
  double mu = 1.0;  // pairs come in reciprocal couples, so the max is >= 1
  for (std::size_t hi = 0; hi < r.size(); ++hi) {
    for (std::size_t lo = 0; lo < r.size(); ++lo) {
      if (hi == lo) continue;
      if (ref[hi] <= 0.0 || ref[lo] <= 0.0) {
        if (ref[hi] <= 0.0 && ref[lo] > 0.0) return kInfiniteDivergence;
        continue;
      }
      mu = std::max(mu, std::exp(r[hi] - r[lo]) * ref[lo] / ref[hi]);
    }
  }
  return mu;
}

}  // namespace uexplore
