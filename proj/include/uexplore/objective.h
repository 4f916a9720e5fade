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

#ifndef UEXPLORE_OBJECTIVE_H_
#define UEXPLORE_OBJECTIVE_H_

// The KL-regularized objective J(pi, r; pi_cal), its maximizer over policies
// (the Gibbs policy pi_r), the value J*(r; pi_cal), and the Bradley-Terry
// log-likelihood of a comparison dataset.
//
//   J(pi, r; pi_cal) = E_pi[r] - E_cal[r] - beta * KL(pi || pi_ref)
//   pi_r(a)          = pi_ref(a) exp(r(a) / beta) / Z_r
//   J*(r; pi_cal)    = beta log Z_r - E_cal[r]
//   loglik(r, D)     = sum_{a,b} wins(a, b) log sigmoid(r(a) - r(b))
//
// Exponentials are evaluated through max-subtracted log-sum-exp, so r / beta
// up to ~1e4 does not overflow. All functions require beta > 0 (enforced by
// BanditInstance) and throw std::invalid_argument on dimension mismatch.

#include <vector>

#include "uexplore/prefcore.h"

namespace uexplore {

// KL(p || q) with 0 log 0 = 0; kInfiniteDivergence if p leaves support(q).
double kl_policies(const PolicyVector& p, const PolicyVector& q);

double j_value(const PolicyVector& pi, const RewardVector& r,
               const PolicyVector& pi_cal, const BanditInstance& inst);

PolicyVector gibbs_policy(const RewardVector& r, const BanditInstance& inst);

// beta * log Z_r.
double log_partition(const RewardVector& r, const BanditInstance& inst);

double j_star(const RewardVector& r, const PolicyVector& pi_cal,
              const BanditInstance& inst);

double loglik(const RewardVector& r, const PreferenceCounts& counts);

struct ObjectiveGradients {
  std::vector<double> loglik;
  std::vector<double> jstar;
};

// Analytic gradients of loglik and j_star with respect to r.
ObjectiveGradients gradients(const RewardVector& r,
                             const PreferenceCounts& counts,
                             const PolicyVector& pi_cal,
                             const BanditInstance& inst);

// loglik(r, counts) + alpha * j_star(r, pi_cal). Throws on alpha < 0.
double regularized_objective(const RewardVector& r,
                             const PreferenceCounts& counts, double alpha,
                             const PolicyVector& pi_cal,
                             const BanditInstance& inst);

}  // namespace uexplore

#endif  // UEXPLORE_OBJECTIVE_H_
