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

// Labeled undirected simple graphs and their integer codec.
//
// Nodes are labeled 1..n. Edge {u, v} with u > v gets the label
//   i = C(u - 1, 2) + v,
// which enumerates all unordered pairs as 1..C(n, 2). A graph with m edges is
// the m-subset of those labels, and its code is the revolving-door rank of
// that subset inside the class of all (n, m) graphs.

#ifndef GRAPHMIN_GRAPH_HPP_
#define GRAPHMIN_GRAPH_HPP_

#include <cstdint>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphmin/combinatorics.hpp"

namespace graphmin {

// Canonical orientation: u > v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeIndex {
  std::int64_t value = 0;

  friend auto operator<=>(const EdgeIndex&, const EdgeIndex&) = default;
};

// C(n, 2), the number of edge slots.
std::int64_t edge_slots(int n);

// Throws ValidationError unless 1 <= v < u <= n.
EdgeIndex edge_index(int u, int v, int n);

// Inverse of edge_index. Throws DomainError unless 1 <= index <= C(n, 2).
Edge edge_from_index(EdgeIndex index, int n);

class Graph {
 public:
  // Pairs given as (v, u) are flipped to (u, v). Throws ValidationError on
  // self-loops, duplicate edges, labels outside [1, n] or n < 1.
  Graph(int n, std::vector<Edge> edges);

  static Graph edgeless(int n) { return Graph(n, {}); }

  int num_nodes() const { return n_; }
  std::int64_t num_edges() const { return static_cast<std::int64_t>(edges_.size()); }
  // Sorted by ascending edge index.
  std::span<const Edge> edges() const { return edges_; }

  bool has_edge(int a, int b) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
};

// Ascending edge labels of `graph`.
std::vector<std::int64_t> edge_indices(const Graph& graph);

struct GraphCode {
  int n = 0;
  std::int64_t m = 0;
  BigNat g;

  friend bool operator==(const GraphCode&, const GraphCode&) = default;
};

GraphCode encode_graph(const Graph& graph);

// Throws DomainError if g is outside [0, C(C(n, 2), m) - 1] or m > C(n, 2).
Graph decode_graph(const GraphCode& code);

// Edge {u, v} becomes {pi(u), pi(v)}.
Graph relabel(const Graph& graph, const Permutation& permutation);

// Rank of relabel(graph, permutation) without materializing the graph.
BigNat relabeled_rank(const Graph& graph, const Permutation& permutation);

// Text format: "n m\n" followed by m lines "u v\n". Labels may appear in
// either order on input; output uses u > v in ascending edge-index order.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& graph);

// Text format: "n m\n" then g in decimal on its own line.
GraphCode parse_graph_code(std::string_view text);
std::string serialize_graph_code(const GraphCode& code);

bool is_connected(const Graph& graph);

}  // namespace graphmin

#endif  // GRAPHMIN_GRAPH_HPP_
