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

#include "graphmin/de_operators.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <utility>

#include <Eigen/Eigenvalues>

namespace graphmin {

RunContext::RunContext(const OptimizerConfig& config, int dimension, const PointObjective& objective)
    : config_(config), dimension_(dimension), objective_(objective), rng_(config.seed) {
  trace_.algorithm = config.algorithm;
  trace_.seed = config.seed;
  trace_.best_so_far.reserve(static_cast<std::size_t>(config.max_evaluations));
  trace_.best_fitness = std::numeric_limits<double>::infinity();
}

Individual RunContext::evaluate(SearchPoint point) {
  assert(!exhausted());
  const double fitness = objective_(point);
  ++evaluations_;
  if (fitness < trace_.best_fitness) {
    trace_.best_fitness = fitness;
    trace_.best_point = point;
  }
  trace_.best_so_far.push_back(trace_.best_fitness);
  return Individual{std::move(point), fitness, evaluations_};
}

SearchPoint RunContext::random_point() {
  SearchPoint p(dimension_);
  for (int k = 0; k < dimension_; ++k) p[k] = uniform01(rng_);
  return p;
}

RunTrace RunContext::finish() && {
  trace_.evaluations = evaluations_;
  return std::move(trace_);
}

void repair(SearchPoint& point) { point = point.cwiseMax(0.0).cwiseMin(1.0); }

SearchPoint differential_mutation(const SearchPoint& base, const SearchPoint& plus,
                                  const SearchPoint& minus, double scale) {
  return base + scale * (plus - minus);
}

std::vector<std::size_t> pick_distinct(Rng& rng, std::size_t pool, std::size_t count,
                                       std::span<const std::size_t> exclude) {
  std::vector<std::size_t> picked;
  picked.reserve(count);
  auto taken = [&](std::size_t idx) {
    return std::find(exclude.begin(), exclude.end(), idx) != exclude.end() ||
           std::find(picked.begin(), picked.end(), idx) != picked.end();
  };
  while (picked.size() < count) {
    const std::size_t idx = uniform_index(rng, pool);
    if (!taken(idx)) picked.push_back(idx);
  }
  return picked;
}

SearchPoint mutate_derand(const Population& population, std::size_t target, double scale, Rng& rng) {
  const std::size_t exclude[] = {target};
  const auto r = pick_distinct(rng, population.size(), 3, exclude);
  SearchPoint v = differential_mutation(population[r[0]].point, population[r[1]].point,
                                        population[r[2]].point, scale);
  repair(v);
  return v;
}

SearchPoint mutate_debest(const Population& population, std::size_t target, std::size_t best,
                          double scale, Rng& rng) {
  const std::size_t exclude[] = {target};
  const auto r = pick_distinct(rng, population.size(), 2, exclude);
  SearchPoint v = differential_mutation(population[best].point, population[r[0]].point,
                                        population[r[1]].point, scale);
  repair(v);
  return v;
}

SearchPoint crossover_binomial(const SearchPoint& target, const SearchPoint& mutant,
                               double crossover_rate, Rng& rng) {
  assert(target.size() == mutant.size());
  const auto d = static_cast<std::size_t>(target.size());
  const std::size_t forced = uniform_index(rng, d);
  SearchPoint trial = target;
  for (std::size_t j = 0; j < d; ++j) {
    // Always draw, so the stream position does not depend on CR.
    const bool take = uniform01(rng) < crossover_rate;
    if (take || j == forced) trial[static_cast<Eigen::Index>(j)] = mutant[static_cast<Eigen::Index>(j)];
  }
  return trial;
}

const Individual& select_greedy(const Individual& target, const Individual& trial) {
  return trial.fitness <= target.fitness ? trial : target;
}

std::size_t best_index(const Population& population) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < population.size(); ++i) {
    if (population[i].fitness < population[best].fitness) best = i;
  }
  return best;
}

std::vector<std::size_t> fitness_order(const Population& population) {
  std::vector<std::size_t> order(population.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return population[a].fitness < population[b].fitness;
  });
  return order;
}

Population keep_best(Population pool, std::size_t count) {
  std::stable_sort(pool.begin(), pool.end(),
                   [](const Individual& a, const Individual& b) { return a.fitness < b.fitness; });
  if (pool.size() > count) pool.resize(count);
  return pool;
}

SearchPoint opposite(const SearchPoint& point) { return SearchPoint::Ones(point.size()) - point; }

SearchPoint dynamic_opposite(const SearchPoint& point, const SearchPoint& lower,
                             const SearchPoint& upper) {
  return lower + upper - point;
}

std::vector<double> rank_weights(std::size_t np, double rho) {
  std::vector<double> w(np);
  for (std::size_t r = 1; r <= np; ++r) {
    // Scaled by np^-rho so large exponents cannot overflow.
    w[r - 1] = std::pow(static_cast<double>(np - r + 1) / static_cast<double>(np), rho);
  }
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= total;
  return w;
}

std::size_t nearest_neighbor(const Population& population, std::size_t target) {
  std::size_t best = target;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < population.size(); ++j) {
    if (j == target) continue;
    const double d = (population[j].point - population[target].point).squaredNorm();
    if (d < best_dist) {
      best_dist = d;
      best = j;
    }
  }
  return best;
}

double JadeAdaptation::sample_f(Rng& rng) const {
  std::cauchy_distribution<double> cauchy(mu_f_, 0.1);
  double f = cauchy(rng);
  while (f <= 0.0) f = cauchy(rng);
  return std::min(f, 1.0);
}

double JadeAdaptation::sample_cr(Rng& rng) const {
  std::normal_distribution<double> normal(mu_cr_, 0.1);
  return std::clamp(normal(rng), 0.0, 1.0);
}

void JadeAdaptation::record_success(double f, double cr) {
  successful_f_.push_back(f);
  successful_cr_.push_back(cr);
}

void JadeAdaptation::end_generation() {
  if (!successful_f_.empty()) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double f : successful_f_) {
      sum += f;
      sum_sq += f * f;
    }
    const double lehmer_mean = sum_sq / sum;
    const double mean_cr = std::accumulate(successful_cr_.begin(), successful_cr_.end(), 0.0) /
                           static_cast<double>(successful_cr_.size());
    mu_f_ = (1.0 - c_) * mu_f_ + c_ * lehmer_mean;
    mu_cr_ = (1.0 - c_) * mu_cr_ + c_ * mean_cr;
  }
  successful_f_.clear();
  successful_cr_.clear();
}

void RandomEvictionArchive::add(const SearchPoint& point, Rng& rng) {
  if (capacity_ == 0) return;
  if (points_.size() < capacity_) {
    points_.push_back(point);
  } else {
    points_[uniform_index(rng, points_.size())] = point;
  }
}

void FifoArchive::add(const SearchPoint& point) {
  if (capacity_ == 0) return;
  if (points_.size() == capacity_) points_.pop_front();
  points_.push_back(point);
}

GaussianModel GaussianModel::fit(std::span<const SearchPoint> points) {
  assert(!points.empty());
  const Eigen::Index d = points.front().size();
  GaussianModel model;
  model.mean = SearchPoint::Zero(d);
  for (const SearchPoint& p : points) model.mean += p;
  model.mean /= static_cast<double>(points.size());
  model.covariance = Eigen::MatrixXd::Zero(d, d);
  if (points.size() > 1) {
    for (const SearchPoint& p : points) {
      const SearchPoint c = p - model.mean;
      model.covariance += c * c.transpose();
    }
    model.covariance /= static_cast<double>(points.size() - 1);
  }
  return model;
}

SearchPoint GaussianModel::sample(Rng& rng, double jitter) const {
  const Eigen::Index d = mean.size();
  const Eigen::MatrixXd cov = covariance + jitter * Eigen::MatrixXd::Identity(d, d);
  // Eigen decomposition tolerates the rank-deficient covariances a
  // converged population produces.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
  const Eigen::VectorXd root = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd xi(d);
  for (Eigen::Index k = 0; k < d; ++k) xi[k] = normal(rng);
  return mean + eig.eigenvectors() * root.asDiagonal() * xi;
}

}  // namespace graphmin
