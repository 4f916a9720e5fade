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

#ifndef UEXPLORE_VERIFY_H_
#define UEXPLORE_VERIFY_H_

// Property checks behind `uexplore verify`. Each one draws its cases from a
// fixed seed and compares the implementation with an independent route:
// finite differences, exhaustive lattice search, vertex enumeration, direct
// policy sampling, or an algebraic identity.

#include <cstdint>

#include "uexplore/commands.h"

namespace uexplore::verify {

CheckResult sigmoid_symmetry();
CheckResult sigmoid_monotone();
CheckResult bernoulli_kl_nonnegative();
// KL(s(x) || s(x + d)) >= s(x)(1 - s(x)) min(|d|, d^2) / 4 on the grid
// x, d in [-6, 6] with spacing 0.01.
CheckResult kl_quadratic_lower_bound();
// Relative error of the analytic loglik / J* gradients against central
// differences with h = 1e-4.
CheckResult gradient_finite_difference(std::int64_t cases, std::uint64_t seed);
// grid_oracle(step 0.01) objective - solver objective, over random cases with
// A in {2, 3}, |D| <= 30, alpha in {0, 1, 10}, beta in {0.5, 1}.
CheckResult solver_vs_grid_oracle(std::int64_t cases, std::uint64_t seed);
// |solver - best box vertex| with an empty dataset (pure convex J*).
CheckResult solver_vertex_enumeration(std::int64_t cases, std::uint64_t seed);
// max over random policies pi of J(pi, r) - J(pi_r, r).
CheckResult gibbs_closed_form_optimality(std::int64_t cases,
                                         std::int64_t policies_per_case,
                                         std::uint64_t seed);
CheckResult jstar_matches_gibbs_value(std::int64_t cases, std::uint64_t seed);
// loglik, J* and pi_r under r -> r + c.
CheckResult shift_invariance(std::int64_t cases, std::uint64_t seed);
CheckResult regret_calibration_invariance(std::int64_t cases,
                                          std::uint64_t seed);
CheckResult regret_nonnegative(std::int64_t cases, std::uint64_t seed);
// Midpoint-style probes: loglik concave, J* convex.
CheckResult loglik_concavity(std::int64_t cases, std::uint64_t seed);
CheckResult jstar_convexity(std::int64_t cases, std::uint64_t seed);

}  // namespace uexplore::verify

#endif  // UEXPLORE_VERIFY_H_
