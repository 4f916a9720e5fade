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

#include "uexplore/verify.h"

#include <algorithm>
#include <cmath>

#include "uexplore/bench.h"
#include "uexplore/objective.h"
#include "uexplore/solver.h"

namespace uexplore::verify {
namespace {

double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.uniform();
}

std::size_t pick(Rng& rng, std::size_t n) {
  return std::min(n - 1, static_cast<std::size_t>(rng.uniform() * n));
}

PolicyVector random_policy(Rng& rng, std::size_t n, bool allow_zeros = false) {
  std::vector<double> w(n);
  double total = 0.0;
  for (double& v : w) {
    v = allow_zeros && rng.uniform() < 0.2 ? 0.0 : uniform(rng, 0.05, 1.0);
    total += v;
  }
  if (total == 0.0) {
    w[0] = 1.0;
    total = 1.0;
  }
  for (double& v : w) v /= total;
  // Push the rounding residue into the largest entry.
  const auto it = std::max_element(w.begin(), w.end());
  double s = 0.0;
  for (double v : w) s += v;
  *it += 1.0 - s;
  return PolicyVector(std::move(w));
}

BanditInstance random_instance(Rng& rng, std::size_t n, double beta,
                               double r_max) {
  std::vector<double> r(n);
  for (double& v : r) v = uniform(rng, 0.0, r_max);
  return BanditInstance(std::move(r), random_policy(rng, n), beta, r_max);
}

RewardVector random_reward(Rng& rng, std::size_t n, double lo, double hi) {
  RewardVector r{std::vector<double>(n)};
  for (double& v : r.values) v = uniform(rng, lo, hi);
  return r;
}

PreferenceCounts random_counts(Rng& rng, std::size_t n, std::int64_t total) {
  PreferenceCounts c(n);
  for (std::int64_t i = 0; i < total; ++i) {
    c.add(ActionId{pick(rng, n)}, ActionId{pick(rng, n)});
  }
  return c;
}

CheckResult make(const char* name, double tol) {
  CheckResult c;
  c.name = name;
  c.tolerance = tol;
  c.max_violation = -std::numeric_limits<double>::infinity();
  return c;
}

void observe(CheckResult& c, double violation) {
  c.max_violation = std::max(c.max_violation, violation);
  if (std::isnan(violation)) c.max_violation = violation;
}

}  // namespace

CheckResult sigmoid_symmetry() {
  CheckResult c = make("sigmoid_symmetry", 1e-15);
  for (int i = -4000; i <= 4000; ++i) {
    const double x = i / 100.0;
    observe(c, std::abs(sigmoid(x) + sigmoid(-x) - 1.0));
    ++c.cases;
  }
  return c;
}

CheckResult sigmoid_monotone() {
  // Violation = number of non-increasing steps on [-30, 30].
  CheckResult c = make("sigmoid_strictly_increasing", 0.0);
  double violations = 0.0;
  double prev = sigmoid(-30.0);
  for (int i = -2999; i <= 3000; ++i) {
    const double cur = sigmoid(i / 100.0);
    if (!(cur > prev)) violations += 1.0;
    prev = cur;
    ++c.cases;
  }
  observe(c, violations);
  return c;
}

CheckResult bernoulli_kl_nonnegative() {
  CheckResult c = make("bernoulli_kl_nonnegative", 1e-14);
  for (int i = 0; i <= 100; ++i) {
    for (int j = 1; j < 100; ++j) {
      const double p = i / 100.0;
      const double q = j / 100.0;
      const double kl = bernoulli_kl(p, q);
      observe(c, i == j ? std::abs(kl) : -kl);
      // Strict positivity off the diagonal.
      if (i != j && !(kl > 0.0)) observe(c, 1.0);
      ++c.cases;
    }
  }
  return c;
}

CheckResult kl_quadratic_lower_bound() {
  CheckResult c = make("kl_quadratic_lower_bound", 1e-12);
  for (int i = -600; i <= 600; ++i) {
    const double x = i / 100.0;
    const double s = sigmoid(x);
    for (int j = -600; j <= 600; ++j) {
      const double d = j / 100.0;
      const double lhs = bernoulli_kl(s, sigmoid(x + d));
      const double rhs =
          0.25 * s * (1.0 - s) * std::min(std::abs(d), d * d);
      observe(c, rhs - lhs);
      ++c.cases;
    }
  }
  return c;
}

CheckResult gradient_finite_difference(std::int64_t cases, std::uint64_t seed) {
  CheckResult c = make("gradient_finite_difference", 1e-6);
  Rng rng(RngSeed{seed});
  constexpr double h = 1e-4;
  for (std::int64_t k = 0; k < cases; ++k) {
    const std::size_t n = 2 + pick(rng, 4);
    const double beta = uniform(rng, 0.3, 2.0);
    const double r_max = uniform(rng, 1.0, 4.0);
    const BanditInstance inst = random_instance(rng, n, beta, r_max);
    const RewardVector r = random_reward(rng, n, 0.0, r_max);
    const PreferenceCounts counts =
        random_counts(rng, n, static_cast<std::int64_t>(pick(rng, 31)));
    const PolicyVector cal = random_policy(rng, n);
    const ObjectiveGradients g = gradients(r, counts, cal, inst);

    std::vector<double> fd_ll(n), fd_js(n);
    for (std::size_t a = 0; a < n; ++a) {
      RewardVector up = r, down = r;
      up[a] += h;
      down[a] -= h;
      fd_ll[a] = (loglik(up, counts) - loglik(down, counts)) / (2 * h);
      fd_js[a] = (j_star(up, cal, inst) - j_star(down, cal, inst)) / (2 * h);
    }
    auto rel = [](const std::vector<double>& got,
                  const std::vector<double>& want) {
      double diff = 0.0, scale = 1.0;
      for (std::size_t a = 0; a < got.size(); ++a) {
        diff = std::max(diff, std::abs(got[a] - want[a]));
        scale = std::max(scale, std::abs(want[a]));
      }
      return diff / scale;
    };
    observe(c, rel(g.loglik, fd_ll));
    observe(c, rel(g.jstar, fd_js));
    ++c.cases;
  }
  return c;
}

CheckResult solver_vs_grid_oracle(std::int64_t cases, std::uint64_t seed) {
  CheckResult c = make("solver_vs_grid_oracle", 1e-3);
  Rng rng(RngSeed{seed});
  constexpr double kAlphas[] = {0.0, 1.0, 10.0};
  constexpr double kBetas[] = {0.5, 1.0};
  constexpr double kRmax[] = {1.0, 2.0, 3.0};
  for (std::int64_t k = 0; k < cases; ++k) {
    const std::size_t n = 2 + pick(rng, 2);
    const double alpha = kAlphas[pick(rng, 3)];
    const double beta = kBetas[pick(rng, 2)];
    const double r_max = kRmax[pick(rng, 3)];
    const BanditInstance inst = random_instance(rng, n, beta, r_max);
    const PreferenceCounts counts =
        random_counts(rng, n, static_cast<std::int64_t>(pick(rng, 31)));
    const PolicyVector cal =
        rng.uniform() < 0.3 ? inst.pi_ref() : random_policy(rng, n, true);
    const SolveResult got = solve_regularized_mle(counts, alpha, cal, inst);
    const SolveResult want = grid_oracle(counts, alpha, cal, inst, 0.01);
    observe(c, want.objective - got.objective);
    ++c.cases;
  }
  return c;
}

CheckResult solver_vertex_enumeration(std::int64_t cases, std::uint64_t seed) {
  CheckResult c = make("solver_vertex_enumeration", 1e-10);
  Rng rng(RngSeed{seed});
  for (std::int64_t k = 0; k < cases; ++k) {
    const std::size_t n = 2 + pick(rng, 3);
    const double alpha = uniform(rng, 0.1, 10.0);
    const BanditInstance inst =
        random_instance(rng, n, uniform(rng, 0.3, 2.0), uniform(rng, 0.5, 4.0));
    const PolicyVector cal = random_policy(rng, n, true);
    const PreferenceCounts empty(n);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      RewardVector v{std::vector<double>(n, 0.0)};
      for (std::size_t a = 0; a < n; ++a) {
        if (mask & (std::size_t{1} << a)) v[a] = inst.r_max();
      }
      best = std::max(best, alpha * j_star(v, cal, inst));
    }
    const SolveResult got = solve_regularized_mle(empty, alpha, cal, inst);
    observe(c, std::abs(got.objective - best));
    ++c.cases;
  }
  return c;
}

CheckResult gibbs_closed_form_optimality(std::int64_t cases,
                                         std::int64_t policies_per_case,
                                         std::uint64_t seed) {
  CheckResult c = make("gibbs_closed_form_optimality", 1e-10);
  Rng rng(RngSeed{seed});
  for (std::int64_t k = 0; k < cases; ++k) {
    const std::size_t n = 2 + pick(rng, 5);
    const BanditInstance inst =
        random_instance(rng, n, uniform(rng, 0.05, 3.0), uniform(rng, 0.5, 5.0));
    const RewardVector r = random_reward(rng, n, 0.0, inst.r_max());
    const PolicyVector cal = random_policy(rng, n, true);
    const PolicyVector best = gibbs_policy(r, inst);
    const double j_best = j_value(best, r, cal, inst);
    for (std::int64_t m = 0; m < policies_per_case; ++m) {
      PolicyVector pi = random_policy(rng, n, true);
      if (m % 2 == 1) {
        // Small perturbation of the optimum.
        const double eps = std::pow(10.0, -uniform(rng, 1.0, 6.0));
        std::vector<double> mix(n);
        double total = 0.0;
        for (std::size_t a = 0; a < n; ++a) {
          mix[a] = (1.0 - eps) * best[a] + eps * pi[a];
          total += mix[a];
        }
        for (double& v : mix) v /= total;
        pi = PolicyVector(std::move(mix));
      }
      observe(c, j_value(pi, r, cal, inst) - j_best);
      ++c.cases;
    }
  }
  return c;
}

CheckResult jstar_matches_gibbs_value(std::int64_t cases, std::uint64_t seed) {
  CheckResult c = make("jstar_matches_gibbs_value", 1e-10);
  Rng rng(RngSeed{seed});
  for (std::int64_t k = 0; k < cases; ++k) {
    const std::size_t n = 2 + pick(rng, 5);
    const BanditInstance inst =
        random_instance(rng, n, uniform(rng, 0.05, 3.0), uniform(rng, 0.5, 5.0));
    const RewardVector r = random_reward(rng, n, 0.0, inst.r_max());
    const PolicyVector cal = random_policy(rng, n, true);
    observe(c, std::abs(j_star(r, cal, inst) -
                        j_value(gibbs_policy(r, inst), r, cal, inst)));
    ++c.cases;
  }
  return c;
}

CheckResult shift_invariance(std::int64_t cases, std::uint64_t seed) {
  CheckResult c = make("shift_invariance", 1e-10);
  Rng rng(RngSeed{seed});
  for (std::int64_t k = 0; k < cases; ++k) {
    const std::size_t n = 2 + pick(rng, 5);
    const BanditInstance inst =
        random_instance(rng, n, uniform(rng, 0.3, 3.0), uniform(rng, 0.5, 5.0));
    const RewardVector r = random_reward(rng, n, 0.0, inst.r_max());
    const PreferenceCounts counts =
        random_counts(rng, n, static_cast<std::int64_t>(pick(rng, 31)));
    const PolicyVector cal = random_policy(rng, n, true);
    const double shift = uniform(rng, -5.0, 5.0);
    RewardVector moved = r;
    for (double& v : moved.values) v += shift;
    observe(c, std::abs(loglik(moved, counts) - loglik(r, counts)));
    observe(c, std::abs(j_star(moved, cal, inst) - j_star(r, cal, inst)));
    const PolicyVector p0 = gibbs_policy(r, inst);
    const PolicyVector p1 = gibbs_policy(moved, inst);
    for (std::size_t a = 0; a < n; ++a) observe(c, std::abs(p0[a] - p1[a]));
    ++c.cases;
  }
  return c;
}

CheckResult regret_calibration_invariance(std::int64_t cases,
                                          std::uint64_t seed) {
  CheckResult c = make("regret_calibration_invariance", 1e-9);
  Rng rng(RngSeed{seed});
  for (std::int64_t k = 0; k < cases; ++k) {
    const std::size_t n = 2 + pick(rng, 5);
    const BanditInstance inst =
        random_instance(rng, n, uniform(rng, 0.1, 3.0), uniform(rng, 0.5, 5.0));
    const PolicyVector pi = random_policy(rng, n, true);
    const PolicyVector cal1 = random_policy(rng, n, true);
    const PolicyVector cal2 = random_policy(rng, n, true);
    observe(c, std::abs(per_step_regret(pi, inst, cal1) -
                        per_step_regret(pi, inst, cal2)));
    ++c.cases;
  }
  return c;
}

CheckResult regret_nonnegative(std::int64_t cases, std::uint64_t seed) {
  CheckResult c = make("regret_nonnegative", 1e-10);
  Rng rng(RngSeed{seed});
  for (std::int64_t k = 0; k < cases; ++k) {
    const std::size_t n = 2 + pick(rng, 5);
    const BanditInstance inst =
        random_instance(rng, n, uniform(rng, 0.1, 3.0), uniform(rng, 0.5, 5.0));
    observe(c, -per_step_regret(random_policy(rng, n, true), inst));
    observe(c, -per_step_regret(optimal_policy(inst), inst));
    ++c.cases;
  }
  return c;
}

CheckResult loglik_concavity(std::int64_t cases, std::uint64_t seed) {
  CheckResult c = make("loglik_concavity", 1e-10);
  Rng rng(RngSeed{seed});
  for (std::int64_t k = 0; k < cases; ++k) {
    const std::size_t n = 2 + pick(rng, 5);
    const PreferenceCounts counts =
        random_counts(rng, n, 1 + static_cast<std::int64_t>(pick(rng, 30)));
    const RewardVector r1 = random_reward(rng, n, -5.0, 5.0);
    const RewardVector r2 = random_reward(rng, n, -5.0, 5.0);
    const double lam = uniform(rng, 0.01, 0.99);
    RewardVector mid{std::vector<double>(n)};
    for (std::size_t a = 0; a < n; ++a) mid[a] = lam * r1[a] + (1 - lam) * r2[a];
    observe(c, lam * loglik(r1, counts) + (1 - lam) * loglik(r2, counts) -
                   loglik(mid, counts));
    ++c.cases;
  }
  return c;
}

CheckResult jstar_convexity(std::int64_t cases, std::uint64_t seed) {
  CheckResult c = make("jstar_convexity", 1e-10);
  Rng rng(RngSeed{seed});
  for (std::int64_t k = 0; k < cases; ++k) {
    const std::size_t n = 2 + pick(rng, 5);
    const BanditInstance inst =
        random_instance(rng, n, uniform(rng, 0.1, 3.0), uniform(rng, 0.5, 5.0));
    const PolicyVector cal = random_policy(rng, n, true);
    const RewardVector r1 = random_reward(rng, n, 0.0, inst.r_max());
    const RewardVector r2 = random_reward(rng, n, 0.0, inst.r_max());
    const double lam = uniform(rng, 0.01, 0.99);
    RewardVector mid{std::vector<double>(n)};
    for (std::size_t a = 0; a < n; ++a) mid[a] = lam * r1[a] + (1 - lam) * r2[a];
    observe(c, j_star(mid, cal, inst) - lam * j_star(r1, cal, inst) -
                   (1 - lam) * j_star(r2, cal, inst));
    ++c.cases;
  }
  return c;
}

}  // namespace uexplore::verify

namespace uexplore {

std::vector<CheckResult> run_verify_suites(std::uint64_t seed) {
  using namespace verify;
  return {
      sigmoid_symmetry(),
      sigmoid_monotone(),
      bernoulli_kl_nonnegative(),
      kl_quadratic_lower_bound(),
      gradient_finite_difference(100, seed + 11),
      solver_vs_grid_oracle(200, seed + 12),
      solver_vertex_enumeration(100, seed + 13),
      gibbs_closed_form_optimality(1000, 100, seed + 14),
      jstar_matches_gibbs_value(1000, seed + 15),
      shift_invariance(1000, seed + 16),
      regret_calibration_invariance(1000, seed + 17),
      regret_nonnegative(1000, seed + 18),
      loglik_concavity(1000, seed + 19),
      jstar_convexity(1000, seed + 20),
  };
}

}  // namespace uexplore
