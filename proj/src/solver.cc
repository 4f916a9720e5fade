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

#include "uexplore/solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "uexplore/objective.h"

namespace uexplore {
namespace {

constexpr double kTieTol = 1e-12;
constexpr double kArmijo = 1e-4;
// Multi-hot vertices are screened up to this many actions.
constexpr std::size_t kMaxScreenedActions = 12;

// Allocation-free evaluation of the regularized objective and its gradient.
// Agrees with regularized_objective() / gradients() up to rounding.
class Problem {
 public:
  Problem(const PreferenceCounts& counts, double alpha,
          const PolicyVector& pi_cal, const BanditInstance& inst)
      : n_(inst.num_actions()),
        alpha_(alpha),
        beta_(inst.beta()),
        r_max_(inst.r_max()),
        log_ref_(n_),
        cal_(pi_cal.probs().begin(), pi_cal.probs().end()),
        scratch_(n_) {
    for (std::size_t a = 0; a < n_; ++a) {
      const double p = inst.pi_ref()[a];
      log_ref_[a] = p > 0.0 ? std::log(p)
                            : -std::numeric_limits<double>::infinity();
    }
    // Symmetrized pair list; self-comparisons are constant and dropped.
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (a != b && counts.wins(a, b) != 0) {
          pairs_.push_back({a, b, static_cast<double>(counts.wins(a, b))});
        }
        if (a == b && counts.wins(a, a) != 0) {
          self_ += static_cast<double>(counts.wins(a, a)) * log_sigmoid(0.0);
        }
      }
    }
  }

  std::size_t size() const { return n_; }
  double r_max() const { return r_max_; }

  double value(const std::vector<double>& r) {
    double f = self_;
    for (const Pair& p : pairs_) f += p.w * log_sigmoid(r[p.win] - r[p.lose]);
    if (alpha_ > 0.0) f += alpha_ * jstar(r, nullptr);
    return f;
  }

  // Returns the objective; fills grad and the loglik Hessian diagonal
  // magnitude (used as a preconditioner).
  double value_grad(const std::vector<double>& r, std::vector<double>& grad,
                    std::vector<double>& curv) {
    std::fill(grad.begin(), grad.end(), 0.0);
    std::fill(curv.begin(), curv.end(), 0.0);
    double f = self_;
    for (const Pair& p : pairs_) {
      const double d = r[p.win] - r[p.lose];
      f += p.w * log_sigmoid(d);
      const double s = sigmoid(-d);
      grad[p.win] += p.w * s;
      grad[p.lose] -= p.w * s;
      const double h = p.w * s * (1.0 - s);
      curv[p.win] += h;
      curv[p.lose] += h;
    }
    if (alpha_ > 0.0) {
      f += alpha_ * jstar(r, &scratch_);
      for (std::size_t a = 0; a < n_; ++a) {
        grad[a] += alpha_ * (scratch_[a] - cal_[a]);
      }
    }
    return f;
  }

 private:
  struct Pair {
    std::size_t win;
    std::size_t lose;
    double w;
  };

  // beta log Z_r - E_cal[r]; optionally writes pi_r into `gibbs`.
  double jstar(const std::vector<double>& r, std::vector<double>* gibbs) {
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < n_; ++a) {
      hi = std::max(hi, log_ref_[a] + r[a] / beta_);
    }
    double z = 0.0;
    double cal = 0.0;
    for (std::size_t a = 0; a < n_; ++a) {
      const double w = std::exp(log_ref_[a] + r[a] / beta_ - hi);
      if (gibbs != nullptr) (*gibbs)[a] = w;
      z += w;
      if (cal_[a] > 0.0) cal += cal_[a] * r[a];
    }
    if (gibbs != nullptr) {
      for (double& w : *gibbs) w /= z;
    }
    return beta_ * (hi + std::log(z)) - cal;
  }

  std::size_t n_;
  double alpha_;
  double beta_;
  double r_max_;
  std::vector<double> log_ref_;
  std::vector<double> cal_;
  std::vector<double> scratch_;
  std::vector<Pair> pairs_;
  double self_ = 0.0;
};

void validate(const PreferenceCounts& counts, double alpha,
              const PolicyVector& pi_cal, const BanditInstance& inst) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("alpha must be finite and >= 0");
  }
  const std::size_t n = inst.num_actions();
  if (counts.num_actions() != n || pi_cal.size() != n) {
    throw std::invalid_argument("solver: dimension mismatch with instance");
  }
}

void validate(const SolverOptions& opts, std::size_t n) {
  if (opts.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (!(opts.grad_tol > 0.0) || !(opts.step_init > 0.0)) {
    throw std::invalid_argument("solver tolerances must be > 0");
  }
  if (!(opts.backtrack_factor > 0.0 && opts.backtrack_factor < 1.0)) {
    throw std::invalid_argument("backtrack_factor must lie in (0, 1)");
  }
  for (const RewardVector& s : opts.extra_starts) {
    if (s.size() != n) {
      throw std::invalid_argument("extra start has the wrong dimension");
    }
  }
}

double clamp_box(double v, double r_max) {
  if (!(v > 0.0)) return 0.0;  // also maps NaN to 0
  return std::min(v, r_max);
}

struct Ascent {
  std::vector<double> r;
  double f = 0.0;
  int iterations = 0;
};

// Jacobi-preconditioned projected gradient ascent with Armijo backtracking
// along the projection arc. The diagonal scaling 1 / (1 + |H_aa|) keeps the
// box projection exact and is close to a Newton step once data accumulate.
Ascent ascend(Problem& prob, std::vector<double> r, const SolverOptions& opts,
              std::vector<double>* trace) {
  const std::size_t n = prob.size();
  const double r_max = prob.r_max();
  for (double& v : r) v = clamp_box(v, r_max);

  std::vector<double> grad(n), curv(n), trial(n), scale(n);
  double f = prob.value_grad(r, grad, curv);
  if (trace != nullptr) trace->push_back(f);

  int it = 0;
  for (; it < opts.max_iters; ++it) {
    double residual = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      residual = std::max(residual,
                          std::abs(clamp_box(r[a] + grad[a], r_max) - r[a]));
      scale[a] = 1.0 / (1.0 + curv[a]);
    }
    if (residual <= opts.grad_tol) break;

    double step = opts.step_init;
    bool accepted = false;
    double f_trial = f;
    while (step > 1e-20) {
      double decrease_model = 0.0;
      bool moved = false;
      for (std::size_t a = 0; a < n; ++a) {
        trial[a] = clamp_box(r[a] + step * scale[a] * grad[a], r_max);
        decrease_model += grad[a] * (trial[a] - r[a]);
        moved = moved || trial[a] != r[a];
      }
      if (!moved) break;
      f_trial = prob.value(trial);
      if (f_trial >= f + kArmijo * decrease_model) {
        accepted = true;
        break;
      }
      step *= opts.backtrack_factor;
    }
    if (!accepted || !(f_trial >= f)) break;
    r.swap(trial);
    f = prob.value_grad(r, grad, curv);
    if (trace != nullptr) trace->push_back(f);
  }
  return Ascent{std::move(r), f, it};
}

std::vector<double> level_grid(double r_max, double step) {
  std::vector<double> levels;
  const auto k_max = static_cast<long>(std::floor(r_max / step + 1e-9));
  for (long k = 0; k <= k_max; ++k) {
    levels.push_back(std::min(static_cast<double>(k) * step, r_max));
  }
  if (r_max - levels.back() > 1e-12) levels.push_back(r_max);
  return levels;
}

}  // namespace

SolveResult ascend_from(const RewardVector& start,
                        const PreferenceCounts& counts, double alpha,
                        const PolicyVector& pi_cal, const BanditInstance& inst,
                        const SolverOptions& opts, std::vector<double>* trace) {
  validate(counts, alpha, pi_cal, inst);
  validate(opts, inst.num_actions());
  if (start.size() != inst.num_actions()) {
    throw std::invalid_argument("start has the wrong dimension");
  }
  Problem prob(counts, alpha, pi_cal, inst);
  Ascent run = ascend(prob, start.values, opts, trace);
  RewardVector reward{std::move(run.r)};
  const double obj = regularized_objective(reward, counts, alpha, pi_cal, inst);
  return SolveResult{std::move(reward), obj, "start", run.iterations};
}

SolveResult solve_regularized_mle(const PreferenceCounts& counts, double alpha,
                                  const PolicyVector& pi_cal,
                                  const BanditInstance& inst,
                                  const SolverOptions& opts) {
  validate(counts, alpha, pi_cal, inst);
  const std::size_t n = inst.num_actions();
  validate(opts, n);

  std::vector<std::pair<std::string, std::vector<double>>> starts;
  starts.reserve(n + 2 + opts.extra_starts.size());
  starts.emplace_back("zero", std::vector<double>(n, 0.0));
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<double> v(n, 0.0);
    v[a] = inst.r_max();
    starts.emplace_back("vertex" + std::to_string(a), std::move(v));
  }
  Problem prob(counts, alpha, pi_cal, inst);
  if (n >= 3 && n <= kMaxScreenedActions) {
    // A convex objective peaks at a box vertex, which need not be one-hot.
    // Screen the remaining vertices and ascend from the best one.
    std::vector<double> v(n), best_v;
    double best_vf = -std::numeric_limits<double>::infinity();
    std::string best_label;
    const std::size_t full = (std::size_t{1} << n) - 1;
    for (std::size_t mask = 1; mask < full; ++mask) {
      if ((mask & (mask - 1)) == 0) continue;  // one-hot, already a start
      for (std::size_t a = 0; a < n; ++a) {
        v[a] = (mask >> a) & 1 ? inst.r_max() : 0.0;
      }
      const double f = prob.value(v);
      if (f > best_vf + kTieTol) {
        best_vf = f;
        best_v = v;
        best_label = "vertex_set";
        for (std::size_t a = 0; a < n; ++a) {
          best_label += (mask >> a) & 1 ? '1' : '0';
        }
      }
    }
    starts.emplace_back(best_label, std::move(best_v));
  }
  {
    Problem mle(counts, 0.0, pi_cal, inst);
    starts.emplace_back(
        "mle", ascend(mle, std::vector<double>(n, 0.0), opts, nullptr).r);
  }
  for (std::size_t i = 0; i < opts.extra_starts.size(); ++i) {
    starts.emplace_back("extra" + std::to_string(i),
                        opts.extra_starts[i].values);
  }

  SolveResult best;
  double best_f = -std::numeric_limits<double>::infinity();
  for (auto& [label, start] : starts) {
    Ascent run = ascend(prob, std::move(start), opts, nullptr);
    if (run.f > best_f + kTieTol) {
      best_f = run.f;
      best = SolveResult{RewardVector{std::move(run.r)}, run.f, label,
                         run.iterations};
    }
  }
  best.objective =
      regularized_objective(best.reward, counts, alpha, pi_cal, inst);
  return best;
}

SolveResult grid_oracle(const PreferenceCounts& counts, double alpha,
                        const PolicyVector& pi_cal, const BanditInstance& inst,
                        double step) {
  validate(counts, alpha, pi_cal, inst);
  const std::size_t n = inst.num_actions();
  if (n > 4) throw std::invalid_argument("grid_oracle supports A <= 4 only");
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be > 0");

  const std::vector<double> levels = level_grid(inst.r_max(), step);
  const std::size_t m = levels.size();

  // Tabulate every term so that a lattice point costs O(A^2) additions.
  std::vector<double> pair_term(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      pair_term[i * m + j] = log_sigmoid(levels[i] - levels[j]);
    }
  }
  // weight[a][k] = pi_ref(a) exp((levels[k] - r_max) / beta); shifting by
  // r_max keeps every weight <= 1.
  std::vector<double> weight(n * m), cal_term(n * m);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t k = 0; k < m; ++k) {
      weight[a * m + k] =
          inst.pi_ref()[a] *
          std::exp((levels[k] - inst.r_max()) / inst.beta());
      cal_term[a * m + k] = pi_cal[a] * levels[k];
    }
  }
  double self = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    self += static_cast<double>(counts.wins(a, a)) * log_sigmoid(0.0);
  }

  std::vector<std::size_t> idx(n, 0);
  std::vector<std::size_t> best_idx(n, 0);
  double best_f = -std::numeric_limits<double>::infinity();
  const bool canonical_only = alpha == 0.0;
  while (true) {
    bool scan = true;
    if (canonical_only) {
      scan = *std::min_element(idx.begin(), idx.end()) == 0;
    }
    if (scan) {
      double f = self;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (a == b) continue;
          const auto w = counts.wins(a, b);
          if (w != 0) {
            f += static_cast<double>(w) * pair_term[idx[a] * m + idx[b]];
          }
        }
      }
      if (alpha > 0.0) {
        double z = 0.0;
        double cal = 0.0;
        for (std::size_t a = 0; a < n; ++a) {
          z += weight[a * m + idx[a]];
          cal += cal_term[a * m + idx[a]];
        }
        f += alpha * (inst.beta() * std::log(z) + inst.r_max() - cal);
      }
      if (f > best_f) {
        best_f = f;
        best_idx = idx;
      }
    }
    std::size_t pos = 0;
    while (pos < n && ++idx[pos] == m) idx[pos++] = 0;
    if (pos == n) break;
  }

  RewardVector reward{std::vector<double>(n)};
  for (std::size_t a = 0; a < n; ++a) reward[a] = levels[best_idx[a]];
  const double obj = regularized_objective(reward, counts, alpha, pi_cal, inst);
  return SolveResult{std::move(reward), obj, "grid", 0};
}

double grid_slack(const PreferenceCounts& counts, double alpha, double step) {
  return (2.0 * static_cast<double>(counts.total()) + 2.0 * alpha) * step / 2.0;
}

RewardVector canonicalize(const RewardVector& r) {
  if (r.values.empty()) return r;
  const double lo = *std::min_element(r.values.begin(), r.values.end());
  RewardVector out = r;
  for (double& v : out.values) v -= lo;
  return out;
}

}  // namespace uexplore
