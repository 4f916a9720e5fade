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

#ifndef UEXPLORE_SOLVER_H_
#define UEXPLORE_SOLVER_H_

// Maximizes loglik(r, D) + alpha * J*(r; pi_cal) over the box [0, r_max]^A.
//
// The objective is concave (loglik) plus convex (alpha * J*), so it may have
// several local maxima. solve_regularized_mle runs projected gradient ascent
// from a fixed, deterministic set of starts and keeps the best end point.
// grid_oracle is an exhaustive lattice scan used to certify it for A <= 4.

#include <string>
#include <vector>

#include "uexplore/prefcore.h"

namespace uexplore {

struct SolverOptions {
  int max_iters = 500;
  // Stop once ||clamp(r + grad) - r||_inf falls below this.
  double grad_tol = 1e-8;
  double step_init = 1.0;
  double backtrack_factor = 0.5;
  // Tried after the built-in starts, in order.
  std::vector<RewardVector> extra_starts;
};

struct SolveResult {
  RewardVector reward;
  double objective = 0.0;
  // "zero", "vertex<a>", "vertex_set<bits>", "mle", "extra<i>" or "grid".
  std::string start_label;
  int iterations = 0;
};

// Projected gradient ascent from a single start (clamped into the box first).
// When `trace` is non-null it receives the objective after every accepted
// iteration, starting with the value at the clamped start.
SolveResult ascend_from(const RewardVector& start,
                        const PreferenceCounts& counts, double alpha,
                        const PolicyVector& pi_cal, const BanditInstance& inst,
                        const SolverOptions& opts,
                        std::vector<double>* trace = nullptr);

// Best of the start set: zero vector, every vertex r_max * e_a, the
// best-scoring multi-hot box vertex (A <= 12), the unregularized MLE, then
// opts.extra_starts. Ties within 1e-12 go to the
// earliest start. Throws std::invalid_argument on alpha < 0, on dimension
// mismatch, or on invalid options.
SolveResult solve_regularized_mle(const PreferenceCounts& counts, double alpha,
                                  const PolicyVector& pi_cal,
                                  const BanditInstance& inst,
                                  const SolverOptions& opts = {});

// Exhaustive maximization over {0, step, 2 step, ..., r_max}^A. With alpha = 0
// only lattice points whose minimum coordinate is 0 are scanned. Throws for
// A > 4 or step <= 0.
SolveResult grid_oracle(const PreferenceCounts& counts, double alpha,
                        const PolicyVector& pi_cal, const BanditInstance& inst,
                        double step);

// Upper bound on (continuum maximum - lattice maximum) for grid_oracle at
// `step`: the objective's sup-norm Lipschitz constant times step / 2.
double grid_slack(const PreferenceCounts& counts, double alpha, double step);

// r - min_a r(a).
RewardVector canonicalize(const RewardVector& r);

}  // namespace uexplore

#endif  // UEXPLORE_SOLVER_H_
