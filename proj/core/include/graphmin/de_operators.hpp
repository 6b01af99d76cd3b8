// Copyright 2026 The graphmin Authors
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

// Building blocks shared by the DE variants: the evaluation budget,
// mutation/crossover/selection operators, opposition, donor laws, archives,
// JADE-style parameter adaptation and the Gaussian model used by DCMAEA.

#ifndef GRAPHMIN_DE_OPERATORS_HPP_
#define GRAPHMIN_DE_OPERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "graphmin/optimizer.hpp"
#include "graphmin/random.hpp"

namespace graphmin {

using Population = std::vector<Individual>;

// Owns the RNG stream, counts objective calls and records the best-so-far
// trace. evaluate() must not be called once exhausted().
class RunContext {
 public:
  RunContext(const OptimizerConfig& config, int dimension, const PointObjective& objective);

  const OptimizerConfig& config() const { return config_; }
  int dimension() const { return dimension_; }
  Rng& rng() { return rng_; }

  bool exhausted() const { return evaluations_ >= config_.max_evaluations; }
  std::int64_t evaluations() const { return evaluations_; }

  Individual evaluate(SearchPoint point);
  SearchPoint random_point();

  RunTrace finish() &&;

 private:
  OptimizerConfig config_;
  int dimension_;
  const PointObjective& objective_;
  Rng rng_;
  std::int64_t evaluations_ = 0;
  RunTrace trace_;
};

// Clamps every coordinate into [0, 1].
void repair(SearchPoint& point);

// base + F (plus - minus), not repaired.
SearchPoint differential_mutation(const SearchPoint& base, const SearchPoint& plus,
                                  const SearchPoint& minus, double scale);

// `count` distinct indices from [0, pool), none of them in `exclude`.
std::vector<std::size_t> pick_distinct(Rng& rng, std::size_t pool, std::size_t count,
                                       std::span<const std::size_t> exclude);

// DE/rand/1: x_r1 + F (x_r2 - x_r3), r1, r2, r3 distinct and != target.
SearchPoint mutate_derand(const Population& population, std::size_t target, double scale, Rng& rng);

// DE/best/1: x_best + F (x_r1 - x_r2), r1, r2 distinct and != target.
SearchPoint mutate_debest(const Population& population, std::size_t target, std::size_t best,
                          double scale, Rng& rng);

// Each coordinate comes from the mutant with probability CR; one uniformly
// chosen coordinate always does.
SearchPoint crossover_binomial(const SearchPoint& target, const SearchPoint& mutant,
                               double crossover_rate, Rng& rng);

// Trial survives iff its fitness is <= the target's.
const Individual& select_greedy(const Individual& target, const Individual& trial);

std::size_t best_index(const Population& population);

// Indices ordered by fitness, ties by index.
std::vector<std::size_t> fitness_order(const Population& population);

// The `count` fittest members of `pool` (ties keep pool order).
Population keep_best(Population pool, std::size_t count);

// 1 - z.
SearchPoint opposite(const SearchPoint& point);

// lower + upper - z, coordinate-wise.
SearchPoint dynamic_opposite(const SearchPoint& point, const SearchPoint& lower,
                             const SearchPoint& upper);

// Normalized donor probabilities by rank: entry r - 1 is the weight of the
// rank-r individual, proportional to (np - r + 1)^rho.
std::vector<double> rank_weights(std::size_t np, double rho);

// Nearest other member by Euclidean distance; ties go to the lowest index.
std::size_t nearest_neighbor(const Population& population, std::size_t target);

// Per-individual F and CR sampling with success-driven mean updates.
class JadeAdaptation {
 public:
  JadeAdaptation(double mu_f, double mu_cr, double learning_rate)
      : mu_f_(mu_f), mu_cr_(mu_cr), c_(learning_rate) {}

  // Cauchy(mu_F, 0.1), resampled until positive, truncated at 1.
  double sample_f(Rng& rng) const;
  // Normal(mu_CR, 0.1), clipped to [0, 1].
  double sample_cr(Rng& rng) const;

  void record_success(double f, double cr);
  // Folds this generation's successes into the means; no-op if none.
  void end_generation();

  double mu_f() const { return mu_f_; }
  double mu_cr() const { return mu_cr_; }

 private:
  double mu_f_;
  double mu_cr_;
  double c_;
  std::vector<double> successful_f_;
  std::vector<double> successful_cr_;
};

// Bounded archive; once full, a uniformly chosen entry is replaced.
class RandomEvictionArchive {
 public:
  explicit RandomEvictionArchive(std::size_t capacity) : capacity_(capacity) {}

  void add(const SearchPoint& point, Rng& rng);
  std::size_t size() const { return points_.size(); }
  std::size_t capacity() const { return capacity_; }
  const SearchPoint& operator[](std::size_t i) const { return points_[i]; }

 private:
  std::size_t capacity_;
  std::vector<SearchPoint> points_;
};

// Bounded first-in first-out archive.
class FifoArchive {
 public:
  explicit FifoArchive(std::size_t capacity) : capacity_(capacity) {}

  void add(const SearchPoint& point);
  std::size_t size() const { return points_.size(); }
  std::size_t capacity() const { return capacity_; }
  const SearchPoint& operator[](std::size_t i) const { return points_[i]; }

 private:
  std::size_t capacity_;
  std::deque<SearchPoint> points_;
};

// Multivariate normal fitted to a set of points.
struct GaussianModel {
  SearchPoint mean;
  Eigen::MatrixXd covariance;  // sample covariance (divisor k - 1)

  static GaussianModel fit(std::span<const SearchPoint> points);

  // mean + A xi with A A^T = covariance + jitter I.
  SearchPoint sample(Rng& rng, double jitter = 1e-12) const;
};

}  // namespace graphmin

#endif  // GRAPHMIN_DE_OPERATORS_HPP_
