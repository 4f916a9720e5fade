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

#ifndef UEXPLORE_PREFCORE_H_
#define UEXPLORE_PREFCORE_H_

// Core domain types for preference-based bandits: policies, reward vectors,
// Bradley-Terry comparisons and their sufficient statistics.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

namespace uexplore {

// Returned by every divergence that is infinite (support violation). Tests
// check for it explicitly; nothing clamps it to a large finite value.
inline constexpr double kInfiniteDivergence =
    std::numeric_limits<double>::infinity();

inline bool is_infinite_divergence(double v) { return v == kInfiniteDivergence; }

// Tolerance for probability vectors summing to one.
inline constexpr double kSimplexTol = 1e-12;

struct ActionId {
  std::size_t index = 0;
  friend bool operator==(ActionId, ActionId) = default;
};

// A probability distribution over actions.
class PolicyVector {
 public:
  PolicyVector() = default;
  // Throws std::invalid_argument unless entries are finite, nonnegative and
  // sum to one within kSimplexTol.
  explicit PolicyVector(std::vector<double> probs);

  static PolicyVector uniform(std::size_t num_actions);
  static PolicyVector point_mass(std::size_t num_actions, ActionId a);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t a) const { return probs_[a]; }
  std::span<const double> probs() const { return probs_; }

  friend bool operator==(const PolicyVector&, const PolicyVector&) = default;

 private:
  std::vector<double> probs_;
};

// A candidate reward on actions. Unconstrained here; the solver keeps its
// outputs inside [0, r_max].
struct RewardVector {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t a) const { return values[a]; }
  double& operator[](std::size_t a) { return values[a]; }
  friend bool operator==(const RewardVector&, const RewardVector&) = default;
};

// Ground truth of one experiment.
class BanditInstance {
 public:
  // Throws std::invalid_argument when rewards leave [0, r_max], dimensions
  // disagree, or beta / r_max are not positive.
  BanditInstance(std::vector<double> true_rewards, PolicyVector pi_ref,
                 double beta, double r_max);

  std::size_t num_actions() const { return true_rewards_.size(); }
  const RewardVector& true_rewards() const { return true_rewards_; }
  const PolicyVector& pi_ref() const { return pi_ref_; }
  double beta() const { return beta_; }
  double r_max() const { return r_max_; }

  friend bool operator==(const BanditInstance&,
                         const BanditInstance&) = default;

 private:
  RewardVector true_rewards_;
  PolicyVector pi_ref_;
  double beta_;
  double r_max_;
};

struct ComparisonRecord {
  ActionId winner;
  ActionId loser;
  int round = 1;
  friend bool operator==(const ComparisonRecord&,
                         const ComparisonRecord&) = default;
};

// wins(a, b) = number of recorded comparisons in which a beat b. A
// self-comparison of a increments wins(a, a) once.
class PreferenceCounts {
 public:
  PreferenceCounts() = default;
  explicit PreferenceCounts(std::size_t num_actions)
      : num_actions_(num_actions), wins_(num_actions * num_actions, 0) {}

  std::size_t num_actions() const { return num_actions_; }
  std::int64_t wins(std::size_t a, std::size_t b) const {
    return wins_[a * num_actions_ + b];
  }
  std::int64_t total() const { return total_; }
  bool empty() const { return total_ == 0; }

  void add(ActionId winner, ActionId loser, std::int64_t n = 1);
  void add(const ComparisonRecord& rec) { add(rec.winner, rec.loser); }

  friend bool operator==(const PreferenceCounts&,
                         const PreferenceCounts&) = default;

 private:
  std::size_t num_actions_ = 0;
  std::vector<std::int64_t> wins_;
  std::int64_t total_ = 0;
};

struct RngSeed {
  std::uint64_t seed = 0;
};

// Seeded 64-bit generator. uniform() consumes exactly one engine output.
class Rng {
 public:
  explicit Rng(RngSeed seed) : engine_(seed.seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

// Derives an independent stream seed for trial `index` of a run seeded by
// `seed`. Adding trials never changes the seeds of earlier ones.
RngSeed mix64(RngSeed seed, std::uint64_t index);

// Draws an action from `pi` with one uniform draw. Zero-mass actions are
// never returned.
ActionId sample_categorical(const PolicyVector& pi, Rng& rng);

// 1 / (1 + exp(-x)), branching on the sign of x so that exp never overflows.
double sigmoid(double x);

// log(sigmoid(x)) without underflow for large negative x.
double log_sigmoid(double x);

// KL(Bern(p) || Bern(q)) with 0 log 0 = 0. Returns kInfiniteDivergence when q
// puts zero mass where p does not.
double bernoulli_kl(double p, double q);

// P(a beats b) = sigmoid(r*(a) - r*(b)).
double preference_prob(const BanditInstance& inst, ActionId a, ActionId b);

// Queries the Bradley-Terry oracle for the pair (a, b) with one uniform draw.
ComparisonRecord sample_comparison(const BanditInstance& inst, ActionId a,
                                   ActionId b, Rng& rng, int round = 1);

// Softmax of the true rewards at temperature one.
PolicyVector pi_hf(const BanditInstance& inst);

// Softmax of `logits` with max subtraction; entries with logit -inf get zero
// mass. Finite logits never map to an exact zero.
PolicyVector softmax(std::span<const double> logits);

}  // namespace uexplore

#endif  // UEXPLORE_PREFCORE_H_
