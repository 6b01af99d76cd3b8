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
#include <charconv>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "graphmin/csv.hpp"
#include "graphmin/errors.hpp"
#include "graphmin/harness.hpp"

namespace graphmin {
namespace {

constexpr std::uint64_t kSuiteStream = 0x5317e;

InstanceKind scheduled_kind(int id) {
  if (id == kDisconnectedInstanceId) return InstanceKind::kDisconnected;
  switch ((id - 1) % 3) {
    case 0: return InstanceKind::kTree;
    case 1: return InstanceKind::kSparse;
    default: return InstanceKind::kDense;
  }
}

int scheduled_nodes(int id) {
  return kSuiteMinNodes + (id - 1) % (kSuiteMaxNodes - kSuiteMinNodes + 1);
}

std::string instance_file_name(int id) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "instance_%02d.graph", id);
  return buf;
}

}  // namespace

std::string_view instance_kind_name(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kTree: return "tree";
    case InstanceKind::kSparse: return "sparse";
    case InstanceKind::kDense: return "dense";
    case InstanceKind::kDisconnected: return "disconnected";
  }
  return "unknown";
}

Graph random_tree(int n, Rng& rng) {
  if (n < 1) throw ValidationError("random_tree: n must be at least 1");
  if (n == 1) return Graph::edgeless(1);
  if (n == 2) return Graph(2, {{2, 1}});
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& c : code) c = static_cast<int>(uniform_index(rng, static_cast<std::size_t>(n))) + 1;

  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (int c : code) ++degree[static_cast<std::size_t>(c)];
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  }
  for (int c : code) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({leaf, c});
    if (--degree[static_cast<std::size_t>(c)] == 1) leaves.insert(c);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  edges.push_back({a, b});
  return Graph(n, std::move(edges));
}

Graph random_graph(int n, std::int64_t m, Rng& rng) {
  const std::int64_t slots = edge_slots(n);
  if (m < 0 || m > slots) throw ValidationError("random_graph: m outside [0, C(n, 2)]");
  std::vector<std::int64_t> labels(static_cast<std::size_t>(slots));
  std::iota(labels.begin(), labels.end(), std::int64_t{1});
  // Partial Fisher-Yates: the first m slots become a uniform m-subset.
  for (std::int64_t k = 0; k < m; ++k) {
    const auto j = static_cast<std::int64_t>(uniform_index(rng, static_cast<std::size_t>(slots - k))) + k;
    std::swap(labels[static_cast<std::size_t>(k)], labels[static_cast<std::size_t>(j)]);
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t k = 0; k < m; ++k) edges.push_back(edge_from_index(EdgeIndex{labels[static_cast<std::size_t>(k)]}, n));
  return Graph(n, std::move(edges));
}

InstanceSuite generate_suite(std::uint64_t master_seed) {
  InstanceSuite suite;
  suite.master_seed = master_seed;
  for (int id = 1; id <= kSuiteSize; ++id) {
    Rng rng(derive_seed({master_seed, kSuiteStream, static_cast<std::uint64_t>(id)}));
    const int n = scheduled_nodes(id);
    const InstanceKind kind = scheduled_kind(id);
    Graph graph = Graph::edgeless(n);
    switch (kind) {
      case InstanceKind::kTree:
        graph = random_tree(n, rng);
        break;
      case InstanceKind::kSparse:
        graph = random_graph(n, n, rng);
        break;
      case InstanceKind::kDense:
        graph = random_graph(n, 2 * static_cast<std::int64_t>(n), rng);
        break;
      case InstanceKind::kDisconnected: {
        const Graph sampled = random_graph(n, n, rng);
        std::vector<int> touched;
        for (int v = 1; v <= n; ++v) {
          const bool has_edge = std::any_of(sampled.edges().begin(), sampled.edges().end(),
                                            [v](const Edge& e) { return e.u == v || e.v == v; });
          if (has_edge) touched.push_back(v);
        }
        const int isolated = touched[uniform_index(rng, touched.size())];
        std::vector<Edge> kept;
        for (const Edge& e : sampled.edges()) {
          if (e.u != isolated && e.v != isolated) kept.push_back(e);
        }
        graph = Graph(n, std::move(kept));
        break;
      }
    }
    suite.instances.push_back(Instance{id, kind, std::move(graph)});
  }
  return suite;
}

void write_suite(const InstanceSuite& suite, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const Instance& inst : suite.instances) {
    write_file_atomically(dir / instance_file_name(inst.id),
                          [&](std::ostream& out) { out << serialize_graph(inst.graph); });
  }
  write_file_atomically(dir / "suite.meta", [&](std::ostream& out) {
    out << "master_seed " << suite.master_seed << " generator " << kRngName << " instances "
        << suite.instances.size() << '\n';
  });
}

InstanceSuite read_suite(const std::filesystem::path& dir) {
  const std::string meta = read_file(dir / "suite.meta");
  std::istringstream in(meta);
  std::string key_seed;
  std::string key_gen;
  std::string key_count;
  std::string generator;
  InstanceSuite suite;
  int count = 0;
  if (!(in >> key_seed >> suite.master_seed >> key_gen >> generator >> key_count >> count) ||
      key_seed != "master_seed" || key_gen != "generator" || key_count != "instances") {
    throw ParseError(1, (dir / "suite.meta").string() + ": malformed suite metadata");
  }
  for (int id = 1; id <= count; ++id) {
    const auto path = dir / instance_file_name(id);
    try {
      suite.instances.push_back(Instance{id, scheduled_kind(id), parse_graph(read_file(path))});
    } catch (const ParseError& e) {
      throw std::runtime_error(path.string() + ": " + e.what());
    }
  }
  return suite;
}

}  // namespace graphmin
