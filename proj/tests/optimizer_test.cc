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
#include <cmath>
#include <limits>

#include "gtest/gtest.h"
#include "graphmin/errors.hpp"
#include "graphmin/objective.hpp"

namespace graphmin {
namespace {

Graph sample_g1() { return Graph(5, {{2, 1}, {3, 2}, {4, 3}, {4, 1}, {3, 1}}); }

// A 7-node graph whose landscape is small enough to enumerate (5040 points).
Graph seven_node_graph() {
  return Graph(7, {{2, 1}, {3, 1}, {4, 2}, {5, 3}, {6, 4}, {7, 5}, {7, 6}, {5, 2}, {6, 1}});
}

SearchPoint vec(std::initializer_list<double> xs) {
  SearchPoint p(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (double x : xs) p[k++] = x;
  return p;
}

OptimizerConfig config_for(Algorithm a, std::uint64_t seed, std::int64_t evals = 1000) {
  OptimizerConfig c;
  c.algorithm = a;
  c.seed = seed;
  c.max_evaluations = evals;
  return c;
}

TEST(AlgorithmNamesTest, ParseIsCaseInsensitiveAndRoundTrips) {
  for (Algorithm a : kAllAlgorithms) {
    EXPECT_EQ(parse_algorithm(algorithm_name(a)), a);
    EXPECT_EQ(parse_algorithm(algorithm_label(a)), a);
  }
  EXPECT_EQ(parse_algorithm("JaDe"), Algorithm::kJade);
  EXPECT_FALSE(parse_algorithm("pso").has_value());
  EXPECT_NE(algorithm_names().find("dcmaea"), std::string::npos);
}

TEST(PointToFactoradicTest, Examples) {
  EXPECT_EQ(point_to_factoradic(vec({0.6, 0.2}), 3), FactoradicCode({1, 0}, 3));
  EXPECT_EQ(point_to_factoradic(vec({0.0, 0.0, 0.0, 0.0}), 5), FactoradicCode::zero(5));
  // The top edge of each coordinate maps to the largest digit.
  const FactoradicCode top = point_to_factoradic(vec({1.0, 1.0, 1.0, 1.0}), 5);
  EXPECT_EQ(factoradic_to_permutation(top), Permutation({5, 4, 3, 2, 1}));
  EXPECT_THROW(point_to_factoradic(vec({0.5}), 3), ValidationError);
}

TEST(PointToFactoradicTest, CellsAreEqualWidth) {
  // Coordinate k has n - k + 1 cells of width 1 / (n - k + 1).
  for (int d = 0; d < 5; ++d) {
    EXPECT_EQ(point_to_factoradic(vec({(d + 0.5) / 5.0, 0, 0, 0}), 5).digits()[0], d);
    EXPECT_EQ(point_to_factoradic(vec({(d + 0.999) / 5.0, 0, 0, 0}), 5).digits()[0], d);
  }
}

TEST(ConfigTest, Validation) {
  OptimizerConfig c;
  EXPECT_NO_THROW(c.validate());
  auto bad = [](auto mutate) {
    OptimizerConfig c;
    mutate(c);
    return c;
  };
  EXPECT_THROW(bad([](auto& c) { c.population_size = 3; }).validate(), ValidationError);
  EXPECT_THROW(bad([](auto& c) { c.crossover_rate = 1.5; }).validate(), ValidationError);
  EXPECT_THROW(bad([](auto& c) { c.crossover_rate = std::nan(""); }).validate(), ValidationError);
  EXPECT_THROW(bad([](auto& c) { c.scale_factor = 0.0; }).validate(), ValidationError);
  EXPECT_THROW(bad([](auto& c) { c.max_evaluations = 9; }).validate(), ValidationError);
  EXPECT_THROW(bad([](auto& c) { c.rank_bias = -1.0; }).validate(), ValidationError);
  EXPECT_THROW(bad([](auto& c) { c.jade_p = 0.0; }).validate(), ValidationError);
  EXPECT_THROW(bad([](auto& c) { c.jump_rate = 2.0; }).validate(), ValidationError);
  EXPECT_THROW(run(bad([](auto& c) { c.population_size = 2; }), sample_g1()), ValidationError);
  EXPECT_THROW(run(OptimizerConfig{}, Graph::edgeless(1)), ValidationError);
}

class EveryAlgorithm : public testing::TestWithParam<Algorithm> {};

TEST_P(EveryAlgorithm, TraceIsMonotoneAndExactlyBudgeted) {
  for (std::int64_t evals : {10, 11, 17, 1000}) {
    const RunTrace t = run(config_for(GetParam(), 42, evals), sample_g1(), 3);
    ASSERT_EQ(t.evaluations, evals);
    ASSERT_EQ(static_cast<std::int64_t>(t.best_so_far.size()), evals);
    ASSERT_TRUE(std::is_sorted(t.best_so_far.rbegin(), t.best_so_far.rend()));
    ASSERT_EQ(t.final_best(), t.best_fitness);
    ASSERT_EQ(t.instance_id, 3);
    ASSERT_DOUBLE_EQ(evaluate(sample_g1(), point_to_factoradic(t.best_point, 5)), t.best_fitness);
    ASSERT_TRUE((t.best_point.array() >= 0.0).all() && (t.best_point.array() <= 1.0).all());
  }
}

TEST_P(EveryAlgorithm, SameSeedSameTrace) {
  const RunTrace a = run(config_for(GetParam(), 7), seven_node_graph());
  const RunTrace b = run(config_for(GetParam(), 7), seven_node_graph());
  EXPECT_EQ(a.best_so_far, b.best_so_far);
  EXPECT_EQ(a.best_point, b.best_point);
}

// On 5 nodes the optimum is found in almost every run of 1000 evaluations.
TEST_P(EveryAlgorithm, FindsSmallLandscapeOptimum) {
  const Graph g = sample_g1();
  const double optimum = landscape_minimum(exhaustive_landscape(g)).L;
  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    if (run(config_for(GetParam(), seed), g).final_best() == optimum) ++hits;
  }
  EXPECT_GE(hits, 9);
}

TEST_P(EveryAlgorithm, NeverBeatsTheExhaustiveMinimum) {
  const Graph g = seven_node_graph();
  const double optimum = landscape_minimum(exhaustive_landscape(g)).L;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    ASSERT_GE(run(config_for(GetParam(), seed), g).final_best(), optimum);
  }
}

TEST_P(EveryAlgorithm, DegenerateParametersDoNotCrash) {
  OptimizerConfig c = config_for(GetParam(), 5, 300);
  c.scale_factor = std::numeric_limits<double>::denorm_min();
  c.crossover_rate = 0.0;
  const RunTrace t = run(c, sample_g1());
  EXPECT_EQ(t.evaluations, 300);
  c.population_size = 4;
  c.crossover_rate = 1.0;
  c.scale_factor = 2.0;
  EXPECT_EQ(run(c, Graph(2, {{2, 1}})).evaluations, 300);
}

TEST_P(EveryAlgorithm, MinimizesContinuousSphere) {
  const PointObjective sphere = [](const SearchPoint& z) { return (z.array() - 0.3).square().sum(); };
  OptimizerConfig c = config_for(GetParam(), 11, 3000);
  c.population_size = 20;
  const RunTrace t = run(c, 3, sphere);
  EXPECT_LT(t.final_best(), 1e-3) << algorithm_name(GetParam());
}

INSTANTIATE_TEST_SUITE_P(All, EveryAlgorithm, testing::ValuesIn(kAllAlgorithms),
                         [](const auto& info) { return algorithm_label(info.param); });

TEST(VariantEquivalenceTest, DespsWithoutStagnationIsDerand) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    OptimizerConfig c = config_for(Algorithm::kDesps, seed);
    c.stagnation_threshold = 1 << 30;
    const RunTrace desps = run(c, seven_node_graph());
    const RunTrace derand = run(config_for(Algorithm::kDerand, seed), seven_node_graph());
    ASSERT_EQ(desps.best_so_far, derand.best_so_far);
  }
}

TEST(VariantEquivalenceTest, DcmaeaWithoutModelIsDerand) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    OptimizerConfig c = config_for(Algorithm::kDcmaea, seed);
    c.model_probability = 0.0;
    const RunTrace dcmaea = run(c, seven_node_graph());
    const RunTrace derand = run(config_for(Algorithm::kDerand, seed), seven_node_graph());
    ASSERT_EQ(dcmaea.best_so_far, derand.best_so_far);
  }
}

TEST(BudgetTest, PopulationEqualToBudgetIsInitOnly) {
  for (Algorithm a : kAllAlgorithms) {
    const RunTrace t = run(config_for(a, 9, 10), sample_g1());
    EXPECT_EQ(t.evaluations, 10) << algorithm_name(a);
  }
}

TEST(SeedTest, DifferentSeedsDiverge) {
  const RunTrace a = run(config_for(Algorithm::kDerand, 1), seven_node_graph());
  const RunTrace b = run(config_for(Algorithm::kDerand, 2), seven_node_graph());
  EXPECT_NE(a.best_point, b.best_point);
}

}  // namespace
}  // namespace graphmin
