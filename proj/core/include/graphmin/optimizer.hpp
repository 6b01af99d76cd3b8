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

// Differential Evolution over the unit box [0, 1]^(n-1), searching node
// relabelings of a graph through their factoradic codes.
//
// Every run consumes exactly `max_evaluations` objective calls and records
// the best-so-far value after each one. Runs are sequential and
// deterministic in (config, objective); distinct runs share no state.

#ifndef GRAPHMIN_OPTIMIZER_HPP_
#define GRAPHMIN_OPTIMIZER_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "graphmin/combinatorics.hpp"
#include "graphmin/graph.hpp"
#include "graphmin/random.hpp"

namespace graphmin {

// Genotype: a point in [0, 1]^D.
using SearchPoint = Eigen::VectorXd;

enum class Algorithm {
  kDesps,
  kObde,
  kJade,
  kDcmaea,
  kDerand,
  kDebest,
  kRbde,
  kDesim,
};

inline constexpr std::array<Algorithm, 8> kAllAlgorithms = {
    Algorithm::kDesps,  Algorithm::kObde,   Algorithm::kJade, Algorithm::kDcmaea,
    Algorithm::kDerand, Algorithm::kDebest, Algorithm::kRbde, Algorithm::kDesim,
};

// Lower-case CLI/CSV name ("desps", ...).
std::string_view algorithm_name(Algorithm algorithm);
// Upper-case display name ("DESPS", ...).
std::string algorithm_label(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);
// Comma-separated list of valid names, for diagnostics.
std::string algorithm_names();

// Beyond this the lowest ranks underflow to zero weight for large NP.
inline constexpr double kMaxRankBias = 20.0;

struct OptimizerConfig {
  Algorithm algorithm = Algorithm::kDerand;
  int population_size = 10;
  double crossover_rate = 0.5;
  double scale_factor = 0.7;
  double rank_bias = 3.0;  // RBDE donor weight exponent
  std::int64_t max_evaluations = 1000;
  std::uint64_t seed = 0;

  // JADE / DESIM parameter adaptation.
  double jade_p = 0.1;
  double jade_c = 0.1;
  double jade_mu_f = 0.5;
  double jade_mu_cr = 0.5;
  int archive_size = 0;  // 0 means population_size

  double jump_rate = 0.3;         // OBDE generation jumping
  int stagnation_threshold = 32;  // DESPS
  double model_probability = 0.5;  // DCMAEA: chance a mutant is sampled from the Gaussian model

  // Throws ValidationError on NP < 4, CR outside [0, 1], F <= 0,
  // max_evaluations < NP, or an out-of-range variant parameter.
  void validate() const;

  int effective_archive_size() const { return archive_size > 0 ? archive_size : population_size; }
};

struct Individual {
  SearchPoint point;
  double fitness = 0.0;
  std::int64_t evaluation = 0;  // 1-based index of the call that produced `fitness`
};

struct RunTrace {
  Algorithm algorithm = Algorithm::kDerand;
  std::uint64_t seed = 0;
  int instance_id = 0;
  std::vector<double> best_so_far;  // one entry per evaluation
  SearchPoint best_point;
  double best_fitness = 0.0;
  std::int64_t evaluations = 0;  // objective calls actually made

  double final_best() const { return best_so_far.back(); }
};

// d_k = min(floor(z_k (n - k + 1)), n - k) for k = 1..n-1.
// Requires z.size() == n - 1; coordinates are clamped to [0, 1] first.
FactoradicCode point_to_factoradic(const SearchPoint& z, int n);

using PointObjective = std::function<double(const SearchPoint&)>;

// Minimizes `objective` over [0, 1]^dimension.
RunTrace run(const OptimizerConfig& config, int dimension, const PointObjective& objective);

// Minimizes L over relabelings of `graph` (dimension n - 1). Requires n >= 2.
RunTrace run(const OptimizerConfig& config, const Graph& graph, int instance_id = 0);

}  // namespace graphmin

#endif  // GRAPHMIN_OPTIMIZER_HPP_
