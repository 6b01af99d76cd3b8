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

#include <algorithm>
#include <atomic>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <tuple>

#include "graphmin/csv.hpp"
#include "graphmin/errors.hpp"
#include "graphmin/harness.hpp"

namespace graphmin {
namespace {

std::size_t algorithm_position(const std::vector<Algorithm>& algorithms, Algorithm a) {
  return static_cast<std::size_t>(std::find(algorithms.begin(), algorithms.end(), a) -
                                  algorithms.begin());
}

// Cells of one (instance, algorithm) group are contiguous in run order.
std::span<const CellResult> group(const ExperimentResult& result, int instance_id, Algorithm algorithm) {
  const auto inst = std::find(result.instance_ids.begin(), result.instance_ids.end(), instance_id);
  const std::size_t a = algorithm_position(result.algorithms, algorithm);
  if (inst == result.instance_ids.end() || a == result.algorithms.size()) {
    throw DomainError("experiment result has no cell group for instance " +
                      std::to_string(instance_id) + ", " + std::string(algorithm_name(algorithm)));
  }
  const auto i = static_cast<std::size_t>(inst - result.instance_ids.begin());
  const auto runs = static_cast<std::size_t>(result.runs);
  const std::size_t first = (i * result.algorithms.size() + a) * runs;
  return std::span<const CellResult>(result.cells).subspan(first, runs);
}

class LineWriter {
 public:
  explicit LineWriter(std::ostream& out) : out_(out) { buf_.reserve(1 << 16); }
  ~LineWriter() { flush(); }

  LineWriter& operator<<(std::string_view s) {
    buf_.append(s);
    if (buf_.size() > (1 << 16)) flush();
    return *this;
  }
  void flush() {
    out_.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
    buf_.clear();
  }

 private:
  std::ostream& out_;
  std::string buf_;
};

}  // namespace

std::uint64_t cell_seed(std::uint64_t master_seed, Algorithm algorithm, int instance_id, int run) {
  return derive_seed({master_seed, static_cast<std::uint64_t>(algorithm) + 1,
                      static_cast<std::uint64_t>(instance_id), static_cast<std::uint64_t>(run)});
}

RunTrace run_cell(const Instance& instance, const ExperimentSettings& settings,
                  Algorithm algorithm, int run) {
  OptimizerConfig config = settings.base;
  config.algorithm = algorithm;
  config.seed = cell_seed(settings.master_seed, algorithm, instance.id, run);
  return graphmin::run(config, instance.graph, instance.id);
}

ExperimentResult run_experiment(const InstanceSuite& suite, const ExperimentSettings& settings,
                                const ProgressCallback& progress) {
  if (settings.runs < 1) throw ValidationError("experiment: runs must be at least 1");
  if (settings.algorithms.empty()) throw ValidationError("experiment: no algorithms selected");
  settings.base.validate();

  ExperimentResult result;
  result.algorithms = settings.algorithms;
  result.runs = settings.runs;
  result.evaluations = settings.base.max_evaluations;
  for (const Instance& inst : suite.instances) result.instance_ids.push_back(inst.id);

  const std::size_t runs = static_cast<std::size_t>(settings.runs);
  const std::size_t per_instance = settings.algorithms.size() * runs;
  const std::size_t total = suite.instances.size() * per_instance;
  result.cells.resize(total);

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex mutex;
  std::exception_ptr failure;

  auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= total) return;
      const Instance& inst = suite.instances[k / per_instance];
      const Algorithm algorithm = settings.algorithms[(k % per_instance) / runs];
      const int run = static_cast<int>(k % runs) + 1;
      try {
        result.cells[k] = CellResult{inst.id, algorithm, run, run_cell(inst, settings, algorithm, run)};
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
        next.store(total);
        return;
      }
      const std::size_t finished = done.fetch_add(1) + 1;
      if (progress) {
        std::lock_guard lock(mutex);
        progress(finished, total);
      }
    }
  };

  unsigned jobs = settings.jobs != 0 ? settings.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(total, 1)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

std::vector<double> ExperimentResult::finals(int instance_id, Algorithm algorithm) const {
  std::vector<double> values;
  for (const CellResult& cell : group(*this, instance_id, algorithm)) values.push_back(cell.trace.final_best());
  return values;
}

std::vector<double> ExperimentResult::mean_trace(int instance_id, Algorithm algorithm) const {
  const auto cells = group(*this, instance_id, algorithm);
  std::vector<double> mean(static_cast<std::size_t>(evaluations), 0.0);
  for (const CellResult& cell : cells) {
    for (std::size_t e = 0; e < mean.size(); ++e) mean[e] += cell.trace.best_so_far[e];
  }
  for (double& v : mean) v /= static_cast<double>(cells.size());
  return mean;
}

void write_traces_csv(std::ostream& out, const ExperimentResult& result) {
  LineWriter w(out);
  w << "instance,algorithm,run,eval,best_L\n";
  for (const CellResult& cell : result.cells) {
    const std::string prefix = std::to_string(cell.instance_id) + "," +
                               std::string(algorithm_name(cell.algorithm)) + "," +
                               std::to_string(cell.run) + ",";
    for (std::size_t e = 0; e < cell.trace.best_so_far.size(); ++e) {
      w << prefix << std::to_string(e + 1) << "," << format_double(cell.trace.best_so_far[e]) << "\n";
    }
  }
}

void write_mean_traces_csv(std::ostream& out, const ExperimentResult& result) {
  LineWriter w(out);
  w << "instance,algorithm,eval,mean_best_L\n";
  for (int id : result.instance_ids) {
    for (Algorithm a : result.algorithms) {
      const auto mean = result.mean_trace(id, a);
      const std::string prefix = std::to_string(id) + "," + std::string(algorithm_name(a)) + ",";
      for (std::size_t e = 0; e < mean.size(); ++e) {
        w << prefix << std::to_string(e + 1) << "," << format_double(mean[e]) << "\n";
      }
    }
  }
}

FinalValues finals_from_result(const ExperimentResult& result) {
  FinalValues finals;
  finals.instance_ids = result.instance_ids;
  finals.algorithms = result.algorithms;
  for (int id : result.instance_ids) {
    for (Algorithm a : result.algorithms) finals.values[{id, a}] = result.finals(id, a);
  }
  return finals;
}

FinalValues read_finals_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || split_csv(line) != std::vector<std::string_view>{"instance", "algorithm", "run", "eval", "best_L"}) {
    throw ParseError(1, "traces.csv: expected header instance,algorithm,run,eval,best_L");
  }
  struct Last {
    long eval = 0;
    double value = 0.0;
  };
  std::map<std::tuple<int, Algorithm, int>, Last> last;
  FinalValues finals;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 5) throw ParseError(line_no, "traces.csv: expected 5 fields");
    try {
      const int instance = std::stoi(std::string(fields[0]));
      const auto algorithm = parse_algorithm(fields[1]);
      if (!algorithm) throw ParseError(line_no, "traces.csv: unknown algorithm '" + std::string(fields[1]) + "'");
      const int run = std::stoi(std::string(fields[2]));
      const long eval = std::stol(std::string(fields[3]));
      const double value = parse_double(fields[4]);
      if (std::find(finals.instance_ids.begin(), finals.instance_ids.end(), instance) == finals.instance_ids.end()) {
        finals.instance_ids.push_back(instance);
      }
      if (std::find(finals.algorithms.begin(), finals.algorithms.end(), *algorithm) == finals.algorithms.end()) {
        finals.algorithms.push_back(*algorithm);
      }
      Last& entry = last[{instance, *algorithm, run}];
      if (eval > entry.eval) entry = Last{eval, value};
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line_no, std::string("traces.csv: ") + e.what());
    }
  }
  // std::map orders by run within each (instance, algorithm).
  for (const auto& [key, entry] : last) {
    finals.values[{std::get<0>(key), std::get<1>(key)}].push_back(entry.value);
  }
  return finals;
}

}  // namespace graphmin
