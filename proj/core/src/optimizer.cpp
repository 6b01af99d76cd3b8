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

#include "graphmin/optimizer.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cmath>
#include <string>

#include "graphmin/de_operators.hpp"
#include "graphmin/errors.hpp"
#include "graphmin/objective.hpp"
#include "variants.hpp"

namespace graphmin {

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kDesps: return "desps";
    case Algorithm::kObde: return "obde";
    case Algorithm::kJade: return "jade";
    case Algorithm::kDcmaea: return "dcmaea";
    case Algorithm::kDerand: return "derand";
    case Algorithm::kDebest: return "debest";
    case Algorithm::kRbde: return "rbde";
    case Algorithm::kDesim: return "desim";
  }
  return "unknown";
}

std::string algorithm_label(Algorithm algorithm) {
  std::string label(algorithm_name(algorithm));
  std::transform(label.begin(), label.end(), label.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return label;
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Algorithm a : kAllAlgorithms) {
    if (algorithm_name(a) == lower) return a;
  }
  return std::nullopt;
}

std::string algorithm_names() {
  std::string names;
  for (Algorithm a : kAllAlgorithms) {
    if (!names.empty()) names += ", ";
    names += algorithm_name(a);
  }
  return names;
}

void OptimizerConfig::validate() const {
  auto fail = [](const std::string& what) { throw ValidationError("optimizer config: " + what); };
  if (population_size < 4) fail("population size must be at least 4");
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) fail("crossover rate must lie in [0, 1]");
  if (!(scale_factor > 0.0) || !std::isfinite(scale_factor)) fail("scale factor must be positive");
  if (max_evaluations < population_size) fail("max evaluations must be at least the population size");
  if (!(rank_bias >= 0.0 && rank_bias <= kMaxRankBias)) fail("rank bias must lie in [0, 20]");
  if (!(jade_p > 0.0 && jade_p <= 1.0)) fail("JADE p must lie in (0, 1]");
  if (!(jade_c >= 0.0 && jade_c <= 1.0)) fail("JADE c must lie in [0, 1]");
  if (!(jade_mu_f > 0.0 && jade_mu_f <= 1.0)) fail("initial mu_F must lie in (0, 1]");
  if (!(jade_mu_cr >= 0.0 && jade_mu_cr <= 1.0)) fail("initial mu_CR must lie in [0, 1]");
  if (archive_size < 0) fail("archive size must be non-negative");
  if (!(jump_rate >= 0.0 && jump_rate <= 1.0)) fail("jump rate must lie in [0, 1]");
  if (stagnation_threshold < 0) fail("stagnation threshold must be non-negative");
  if (!(model_probability >= 0.0 && model_probability <= 1.0)) fail("model probability must lie in [0, 1]");
}

FactoradicCode point_to_factoradic(const SearchPoint& z, int n) {
  if (n < 1 || z.size() != n - 1) {
    throw ValidationError("point_to_factoradic: point dimension " + std::to_string(z.size()) +
                          " does not match n - 1 = " + std::to_string(n - 1));
  }
  std::vector<int> digits(static_cast<std::size_t>(n - 1));
  for (int k = 1; k < n; ++k) {
    const double coord = std::clamp(z[k - 1], 0.0, 1.0);
    const int radix = n - k + 1;
    digits[static_cast<std::size_t>(k - 1)] =
        std::min(static_cast<int>(std::floor(coord * radix)), n - k);
  }
  return FactoradicCode(std::move(digits), n);
}

RunTrace run(const OptimizerConfig& config, int dimension, const PointObjective& objective) {
  config.validate();
  if (dimension < 1) throw ValidationError("optimizer: dimension must be at least 1");
  RunContext ctx(config, dimension, objective);
  detail::run_variant(ctx);
  assert(ctx.evaluations() == config.max_evaluations);
  return std::move(ctx).finish();
}

RunTrace run(const OptimizerConfig& config, const Graph& graph, int instance_id) {
  const int n = graph.num_nodes();
  if (n < 2) throw ValidationError("optimizer: graph needs at least 2 nodes");
  const PointObjective objective = [&graph, n](const SearchPoint& z) {
    return evaluate(graph, point_to_factoradic(z, n));
  };
  RunTrace trace = run(config, n - 1, objective);
  trace.instance_id = instance_id;
  return trace;
}

}  // namespace graphmin
