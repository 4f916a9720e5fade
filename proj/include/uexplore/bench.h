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

#ifndef UEXPLORE_BENCH_H_
#define UEXPLORE_BENCH_H_

// Benchmark instances, exact regret, and alignment diagnostics between the
// reference policy and human preference.

#include "uexplore/prefcore.h"

namespace uexplore {

struct CalibratedInstance {
  BanditInstance inst;
  PolicyVector pi_cal;
};

// Three actions, r* = (1, 0, 0), uniform pi_ref, pi_cal = (1-2p, p, p).
// Throws std::invalid_argument unless 0 <= p < 1/4 and r_max >= 1.
CalibratedInstance example1(double p, double beta, double r_max);

// Three actions, r* = (0, r_max, r_max - 2), pi_ref = (1-2/k, 1/k, 1/k).
// Throws std::invalid_argument unless kappa >= 4 and r_max >= 2.
BanditInstance example2(double kappa, double r_max, double beta);

// Gibbs policy of the true reward.
PolicyVector optimal_policy(const BanditInstance& inst);

// J(pi*, r*; pi_cal) - J(pi, r*; pi_cal). The value does not depend on
// pi_cal; the overload without it uses pi_ref. kInfiniteDivergence when pi
// leaves the support of pi_ref.
double per_step_regret(const PolicyVector& pi, const BanditInstance& inst);
double per_step_regret(const PolicyVector& pi, const BanditInstance& inst,
                       const PolicyVector& pi_cal);

// Smallest kappa >= 1 such that pi_HF(a+)/pi_HF(a-) >= tau implies
// pi_ref(a+)/pi_ref(a-) >= 1/kappa for every ordered pair. Requires tau >= 1.
double assumption1_kappa(const BanditInstance& inst, double tau);

// Largest factor by which a preference ratio exceeds the matching reference
// ratio: max over ordered pairs of [pi_HF(a+)/pi_HF(a-)] / [pi_ref(a+)/pi_ref(a-)].
double assumption2_mu(const BanditInstance& inst);

}  // namespace uexplore

#endif  // UEXPLORE_BENCH_H_
