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

#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <stdexcept>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif

#include "graphmin/csv.hpp"
#include "graphmin/errors.hpp"
#include "graphmin/graph.hpp"
#include "graphmin/harness.hpp"
#include "graphmin/objective.hpp"
#include "graphmin/optimizer.hpp"
#include "graphmin/stats.hpp"

namespace graphmin::cli {
namespace {

namespace fs = std::filesystem;

Graph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string label_order(const Permutation& p) {
  std::string s;
  for (int label : p.images()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(label);
  }
  return s;
}

struct DeFlags {
  std::int64_t evals = 1000;
  int pop = 10;
  double cr = 0.5;
  double f = 0.7;
  double rho = 3.0;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--evals", evals, "objective evaluations per run")->capture_default_str();
    cmd.add_option("--pop", pop, "population size")->capture_default_str();
    cmd.add_option("--cr", cr, "crossover rate")->capture_default_str();
    cmd.add_option("--f", f, "scale factor")->capture_default_str();
    cmd.add_option("--rho", rho, "rank bias exponent (rbde)")->capture_default_str();
  }

  OptimizerConfig config() const {
    OptimizerConfig c;
    c.max_evaluations = evals;
    c.population_size = pop;
    c.crossover_rate = cr;
    c.scale_factor = f;
    c.rank_bias = rho;
    return c;
  }
};

struct Options {
  std::string input;
  std::string output;
  std::string outdir;
  std::string algo = "derand";
  std::string trace;
  std::string g;
  int n = 0;
  std::int64_t m = 0;
  std::uint64_t seed = 1;
  std::uint64_t suite_seed = 1;
  int runs = 10;
  unsigned jobs = 0;
  double alpha = 0.05;
  DeFlags de;
};

void cmd_encode(const Options& o, std::ostream& out) {
  const Graph graph = load_graph(o.input);
  const GraphCode code = encode_graph(graph);
  out << code.n << ' ' << code.m << ' ' << code.g.str() << '\n'
      << format_fixed(log10_one_plus(code.g), 6) << '\n';
}

void cmd_decode(const Options& o, std::ostream& out) {
  BigNat g;
  if (o.g.empty() || o.g.find_first_not_of("0123456789") != std::string::npos) {
    throw ValidationError("--g must be a non-negative decimal integer, got '" + o.g + "'");
  }
  g.assign(o.g);
  out << serialize_graph(decode_graph(GraphCode{o.n, o.m, g}));
}

void cmd_landscape(const Options& o, std::ostream& out) {
  const Graph graph = load_graph(o.input);
  const auto points = exhaustive_landscape(graph);
  write_file_atomically(o.output, [&](std::ostream& csv) { write_landscape_csv(csv, points); });
  const LandscapeMinimum min = landscape_minimum(points);
  const Permutation p = factoradic_to_permutation(factoradic_from_integer(min.x_index, graph.num_nodes()));
  out << "points " << points.size() << '\n'
      << "min_x_index " << min.x_index << '\n'
      << "min_L " << format_fixed(min.L, 6) << '\n'
      << "labels " << label_order(p) << '\n';
}

void cmd_optimize(const Options& o, std::ostream& out) {
  const auto algorithm = parse_algorithm(o.algo);
  if (!algorithm) {
    throw ValidationError("unknown algorithm '" + o.algo + "'; valid names: " + algorithm_names());
  }
  if (o.runs < 1) throw ValidationError("--runs must be at least 1");
  const Graph graph = load_graph(o.input);
  OptimizerConfig config = o.de.config();
  config.algorithm = *algorithm;
  config.validate();

  std::vector<RunTrace> traces;
  for (int r = 1; r <= o.runs; ++r) {
    config.seed = derive_seed({o.seed, static_cast<std::uint64_t>(r)});
    traces.push_back(run(config, graph));
    const RunTrace& t = traces.back();
    const Permutation p = factoradic_to_permutation(point_to_factoradic(t.best_point, graph.num_nodes()));
    out << "run " << r << " L " << format_fixed(t.final_best(), 6) << " labels " << label_order(p) << '\n';
  }
  if (!o.trace.empty()) {
    write_file_atomically(o.trace, [&](std::ostream& csv) {
      csv << "run,eval,best_L\n";
      for (std::size_t r = 0; r < traces.size(); ++r) {
        const auto& best = traces[r].best_so_far;
        for (std::size_t e = 0; e < best.size(); ++e) {
          csv << r + 1 << ',' << e + 1 << ',' << format_double(best[e]) << '\n';
        }
      }
    });
  }
}

void cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  const fs::path dir(o.outdir);
  fs::create_directories(dir / "suite");
  const InstanceSuite suite = generate_suite(o.suite_seed);
  write_suite(suite, dir / "suite");

  ExperimentSettings settings;
  settings.base = o.de.config();
  settings.runs = o.runs;
  settings.master_seed = o.suite_seed;
  settings.jobs = o.jobs;
  const auto start = std::chrono::steady_clock::now();
  std::size_t last_percent = 0;
  const ExperimentResult result = run_experiment(suite, settings, [&](std::size_t done, std::size_t total) {
    const std::size_t percent = done * 100 / total;
    if (percent >= last_percent + 10 || done == total) {
      last_percent = percent;
      err << "bench: " << done << '/' << total << " cells\n";
    }
  });
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  write_file_atomically(dir / "traces.csv", [&](std::ostream& csv) { write_traces_csv(csv, result); });
  write_file_atomically(dir / "mean_traces.csv", [&](std::ostream& csv) { write_mean_traces_csv(csv, result); });
  out << "cells " << result.cells.size() << '\n'
      << "seconds " << format_fixed(seconds, 1) << '\n'
      << "outdir " << dir.string() << '\n';
}

void cmd_stats(const Options& o, std::ostream& out) {
  const fs::path dir(o.outdir);
  std::istringstream traces(read_file(dir / "traces.csv"));
  FinalValues finals;
  try {
    finals = read_finals_csv(traces);
  } catch (const ParseError& e) {
    throw std::runtime_error((dir / "traces.csv").string() + ": " + e.what());
  }
  const StatsReport report = compare_algorithms(finals, o.alpha);
  const auto counts = count_performance(report);
  std::ostringstream csv;
  write_stats_csv(csv, report, counts);
  write_file_atomically(dir / "stats.csv", [&](std::ostream& file) { file << csv.str(); });
  out << csv.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal integer encodings of graphs under node relabeling"};
  app.name("graphmin");
  app.require_subcommand(1);
  Options o;

  auto* encode = app.add_subcommand("encode", "print n m g and L for a graph file");
  encode->add_option("--input", o.input, "graph file")->required();

  auto* decode = app.add_subcommand("decode", "print the graph file for a code");
  decode->add_option("--n", o.n, "nodes")->required();
  decode->add_option("--m", o.m, "edges")->required();
  decode->add_option("--g", o.g, "rank, decimal")->required();

  auto* landscape = app.add_subcommand("landscape", "write L for every relabeling (n <= 9)");
  landscape->add_option("--input", o.input, "graph file")->required();
  landscape->add_option("--output", o.output, "CSV path")->required();

  auto* optimize = app.add_subcommand("optimize", "minimize L with one DE variant");
  optimize->add_option("--input", o.input, "graph file")->required();
  optimize->add_option("--algo", o.algo, algorithm_names())->capture_default_str();
  optimize->add_option("--seed", o.seed, "master seed")->capture_default_str();
  optimize->add_option("--runs", o.runs, "independent runs")->capture_default_str();
  optimize->add_option("--trace", o.trace, "per-evaluation CSV path");
  o.de.add_to(*optimize);

  auto* bench = app.add_subcommand("bench", "run every variant on the generated instance suite");
  bench->add_option("--suite-seed", o.suite_seed, "seed for instances and runs")->capture_default_str();
  bench->add_option("--outdir", o.outdir, "output directory")->required();
  bench->add_option("--jobs", o.jobs, "worker threads, 0 = all cores")->capture_default_str();
  bench->add_option("--runs", o.runs, "runs per cell")->capture_default_str();
  o.de.add_to(*bench);

  auto* stats = app.add_subcommand("stats", "pairwise rank-sum comparison of a bench outdir");
  stats->add_option("--outdir", o.outdir, "bench output directory")->required();
  stats->add_option("--alpha", o.alpha, "significance level")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (*encode) cmd_encode(o, out);
    if (*decode) cmd_decode(o, out);
    if (*landscape) cmd_landscape(o, out);
    if (*optimize) cmd_optimize(o, out);
    if (*bench) cmd_bench(o, out, err);
    if (*stats) cmd_stats(o, out);
  } catch (const std::exception& e) {
    err << "graphmin: " << e.what() << '\n';
    return kExitFailure;
  }
  out.flush();
  return kExitOk;
}

}  // namespace graphmin::cli
