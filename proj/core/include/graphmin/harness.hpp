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

// Benchmark protocol: a deterministic suite of 20 graph instances, every
// (algorithm, instance, run) cell executed independently, and the CSV files
// that feed convergence plots and the pairwise comparison.

#ifndef GRAPHMIN_HARNESS_HPP_
#define GRAPHMIN_HARNESS_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "graphmin/graph.hpp"
#include "graphmin/optimizer.hpp"
#include "graphmin/random.hpp"

namespace graphmin {

enum class InstanceKind { kTree, kSparse, kDense, kDisconnected };

std::string_view instance_kind_name(InstanceKind kind);

struct Instance {
  int id = 0;  // 1-based
  InstanceKind kind = InstanceKind::kTree;
  Graph graph = Graph::edgeless(1);
};

struct InstanceSuite {
  std::uint64_t master_seed = 0;
  std::vector<Instance> instances;
};

inline constexpr int kSuiteSize = 20;
inline constexpr int kSuiteMinNodes = 10;
inline constexpr int kSuiteMaxNodes = 20;
// Instance whose sampled graph gets one node's edges removed.
inline constexpr int kDisconnectedInstanceId = 5;

// Uniform labeled tree via a random Pruefer sequence.
Graph random_tree(int n, Rng& rng);

// m distinct edges drawn uniformly without replacement from all C(n, 2).
Graph random_graph(int n, std::int64_t m, Rng& rng);

// Instance i (1-based) has n = 10 + (i - 1) mod 11 nodes; kinds rotate
// tree, sparse (m = n), dense (m = 2n). Instance 5 is disconnected by
// isolating one random non-isolated node.
InstanceSuite generate_suite(std::uint64_t master_seed);

// instance_01.graph ... instance_20.graph plus suite.meta.
void write_suite(const InstanceSuite& suite, const std::filesystem::path& dir);
InstanceSuite read_suite(const std::filesystem::path& dir);

struct ExperimentSettings {
  std::vector<Algorithm> algorithms{kAllAlgorithms.begin(), kAllAlgorithms.end()};
  // Shared parameters; algorithm and seed are overwritten per cell.
  OptimizerConfig base;
  int runs = 10;
  std::uint64_t master_seed = 0;
  // 0 means std::thread::hardware_concurrency().
  unsigned jobs = 0;
};

struct CellResult {
  int instance_id = 0;
  Algorithm algorithm = Algorithm::kDerand;
  int run = 0;  // 1-based
  RunTrace trace;
};

struct ExperimentResult {
  std::vector<int> instance_ids;
  std::vector<Algorithm> algorithms;
  int runs = 0;
  std::int64_t evaluations = 0;
  // Sorted by (instance, algorithm position, run).
  std::vector<CellResult> cells;

  // Final best L of every run of one (instance, algorithm) cell group.
  std::vector<double> finals(int instance_id, Algorithm algorithm) const;
  // Per-evaluation mean of the best-so-far traces over runs.
  std::vector<double> mean_trace(int instance_id, Algorithm algorithm) const;
};

// Seed of one cell's RNG stream.
std::uint64_t cell_seed(std::uint64_t master_seed, Algorithm algorithm, int instance_id, int run);

// Runs one cell in isolation; identical to the cell stored by run_experiment.
RunTrace run_cell(const Instance& instance, const ExperimentSettings& settings,
                  Algorithm algorithm, int run);

using ProgressCallback = std::function<void(std::size_t done, std::size_t total)>;

ExperimentResult run_experiment(const InstanceSuite& suite, const ExperimentSettings& settings,
                                const ProgressCallback& progress = {});

// traces.csv: instance,algorithm,run,eval,best_L
void write_traces_csv(std::ostream& out, const ExperimentResult& result);
// mean_traces.csv: instance,algorithm,eval,mean_best_L
void write_mean_traces_csv(std::ostream& out, const ExperimentResult& result);

// Final best L per run, keyed by (instance, algorithm name); read back from
// traces.csv by taking each run's last row.
struct FinalValues {
  std::vector<int> instance_ids;
  std::vector<Algorithm> algorithms;
  std::map<std::pair<int, Algorithm>, std::vector<double>> values;
};

FinalValues finals_from_result(const ExperimentResult& result);
FinalValues read_finals_csv(std::istream& in);

}  // namespace graphmin

#endif  // GRAPHMIN_HARNESS_HPP_
