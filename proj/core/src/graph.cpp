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

#include "graphmin/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "graphmin/errors.hpp"

namespace graphmin {
namespace {

std::string edge_text(int a, int b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

template <typename Int>
bool parse_int(std::string_view token, Int& out) {
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

// Non-blank lines with their 1-based line numbers.
std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    const std::string_view line = text.substr(pos, end - pos);
    if (!split_ws(line).empty()) lines.emplace_back(number, line);
    pos = end + 1;
  }
  return lines;
}

std::pair<int, std::int64_t> parse_header(const std::vector<std::pair<int, std::string_view>>& lines) {
  if (lines.empty()) throw ParseError(1, "missing header line \"n m\"");
  const auto [line_no, line] = lines.front();
  const auto tokens = split_ws(line);
  int n = 0;
  std::int64_t m = 0;
  if (tokens.size() != 2 || !parse_int(tokens[0], n) || !parse_int(tokens[1], m)) {
    throw ParseError(line_no, "expected header \"n m\"");
  }
  if (n < 1) throw ParseError(line_no, "node count must be at least 1");
  if (m < 0) throw ParseError(line_no, "edge count must be non-negative");
  if (m > edge_slots(n)) {
    throw ParseError(line_no, "edge count " + std::to_string(m) + " exceeds C(n, 2) = " +
                                  std::to_string(edge_slots(n)));
  }
  return {n, m};
}

}  // namespace

std::int64_t edge_slots(int n) {
  const auto nn = static_cast<std::int64_t>(n);
  return nn < 2 ? 0 : nn * (nn - 1) / 2;
}

EdgeIndex edge_index(int u, int v, int n) {
  if (!(1 <= v && v < u && u <= n)) {
    throw ValidationError("edge_index: need 1 <= v < u <= n, got u=" + std::to_string(u) +
                          " v=" + std::to_string(v) + " n=" + std::to_string(n));
  }
  return EdgeIndex{edge_slots(u - 1) + v};
}

Edge edge_from_index(EdgeIndex index, int n) {
  const std::int64_t i = index.value;
  if (i < 1 || i > edge_slots(n)) {
    throw DomainError("edge_from_index: index " + std::to_string(i) + " outside [1, " +
                      std::to_string(edge_slots(n)) + "]");
  }
  // Smallest u with C(u, 2) >= i; start from the real root and fix up.
  auto u = static_cast<std::int64_t>(std::ceil((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(i))) / 2.0));
  while (u > 2 && edge_slots(static_cast<int>(u - 1)) >= i) --u;
  while (edge_slots(static_cast<int>(u)) < i) ++u;
  const std::int64_t v = i - edge_slots(static_cast<int>(u - 1));
  return Edge{static_cast<int>(u), static_cast<int>(v)};
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw ValidationError("graph: node count must be at least 1");
  for (Edge& e : edges_) {
    if (e.u == e.v) throw ValidationError("graph: self-loop at node " + std::to_string(e.u));
    if (e.u < e.v) std::swap(e.u, e.v);
    if (e.v < 1 || e.u > n_) {
      throw ValidationError("graph: edge " + edge_text(e.u, e.v) + " has a label outside [1, " +
                            std::to_string(n_) + "]");
    }
  }
  // (u, v) lexicographic order is edge-index order.
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw ValidationError("graph: duplicate edge " + edge_text(dup->u, dup->v));
  }
}

bool Graph::has_edge(int a, int b) const {
  if (a < b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::vector<std::int64_t> edge_indices(const Graph& graph) {
  std::vector<std::int64_t> indices;
  indices.reserve(graph.edges().size());
  for (const Edge& e : graph.edges()) indices.push_back(edge_index(e.u, e.v, graph.num_nodes()).value);
  return indices;
}

GraphCode encode_graph(const Graph& graph) {
  const int n = graph.num_nodes();
  Combination combination(edge_indices(graph), edge_slots(n));
  return GraphCode{n, graph.num_edges(), rank_revdoor(combination)};
}

Graph decode_graph(const GraphCode& code) {
  if (code.n < 1) throw DomainError("decode_graph: node count must be at least 1");
  const std::int64_t slots = edge_slots(code.n);
  if (code.m < 0 || code.m > slots) {
    throw DomainError("decode_graph: edge count " + std::to_string(code.m) + " outside [0, " +
                      std::to_string(slots) + "]");
  }
  const Combination combination = unrank_revdoor(code.g, slots, code.m);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(code.m));
  for (std::int64_t i : combination.elements()) edges.push_back(edge_from_index(EdgeIndex{i}, code.n));
  return Graph(code.n, std::move(edges));
}

Graph relabel(const Graph& graph, const Permutation& permutation) {
  if (permutation.size() != graph.num_nodes()) {
    throw ValidationError("relabel: permutation has " + std::to_string(permutation.size()) +
                          " labels, graph has " + std::to_string(graph.num_nodes()) + " nodes");
  }
  std::vector<Edge> edges;
  edges.reserve(graph.edges().size());
  for (const Edge& e : graph.edges()) edges.push_back(Edge{permutation(e.u), permutation(e.v)});
  return Graph(graph.num_nodes(), std::move(edges));
}

BigNat relabeled_rank(const Graph& graph, const Permutation& permutation) {
  const int n = graph.num_nodes();
  if (permutation.size() != n) {
    throw ValidationError("relabeled_rank: permutation size does not match graph");
  }
  std::vector<std::int64_t> indices;
  indices.reserve(graph.edges().size());
  for (const Edge& e : graph.edges()) {
    int a = permutation(e.u);
    int b = permutation(e.v);
    if (a < b) std::swap(a, b);
    indices.push_back(edge_slots(a - 1) + b);
  }
  std::sort(indices.begin(), indices.end());
  return rank_revdoor(Combination(std::move(indices), edge_slots(n)));
}

Graph parse_graph(std::string_view text) {
  const auto lines = content_lines(text);
  const auto [n, m] = parse_header(lines);
  if (static_cast<std::int64_t>(lines.size()) - 1 != m) {
    const int at = lines.size() > static_cast<std::size_t>(m) + 1
                       ? lines[static_cast<std::size_t>(m) + 1].first
                       : lines.back().first;
    throw ParseError(at, "header declares " + std::to_string(m) + " edges, found " +
                             std::to_string(lines.size() - 1));
  }
  std::set<Edge> seen;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto [line_no, line] = lines[k];
    const auto tokens = split_ws(line);
    int a = 0;
    int b = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], a) || !parse_int(tokens[1], b)) {
      throw ParseError(line_no, "expected edge line \"u v\"");
    }
    if (a == b) throw ParseError(line_no, "self-loop at node " + std::to_string(a));
    if (a < 1 || b < 1 || a > n || b > n) {
      throw ParseError(line_no, "edge " + edge_text(a, b) + " has a label outside [1, " +
                                    std::to_string(n) + "]");
    }
    Edge e{std::max(a, b), std::min(a, b)};
    if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge " + edge_text(e.u, e.v));
    edges.push_back(e);
  }
  return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& graph) {
  std::string out = std::to_string(graph.num_nodes()) + " " + std::to_string(graph.num_edges()) + "\n";
  for (const Edge& e : graph.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

GraphCode parse_graph_code(std::string_view text) {
  const auto lines = content_lines(text);
  const auto [n, m] = parse_header(lines);
  if (lines.size() != 2) throw ParseError(lines.back().first, "expected exactly one line holding g");
  const auto [line_no, line] = lines[1];
  const auto tokens = split_ws(line);
  if (tokens.size() != 1 || tokens[0].empty() ||
      !std::all_of(tokens[0].begin(), tokens[0].end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line_no, "g must be a non-negative decimal integer");
  }
  return GraphCode{n, m, BigNat(std::string(tokens[0]))};
}

std::string serialize_graph_code(const GraphCode& code) {
  return std::to_string(code.n) + " " + std::to_string(code.m) + "\n" + code.g.str() + "\n";
}

bool is_connected(const Graph& graph) {
  const int n = graph.num_nodes();
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int components = n;
  for (const Edge& e : graph.edges()) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace graphmin
