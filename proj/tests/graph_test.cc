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
#include <numeric>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "graphmin/errors.hpp"
#include "graphmin/harness.hpp"
#include "graphmin/random.hpp"
#include "oracles/oracles.hpp"

namespace graphmin {
namespace {

// Every graph on n nodes, by edge-set bitmask over the C(n, 2) slots.
std::vector<Graph> all_graphs(int n) {
  const auto slots = static_cast<int>(edge_slots(n));
  std::vector<Graph> graphs;
  for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
    std::vector<Edge> edges;
    for (int i = 0; i < slots; ++i) {
      if (mask & (1u << i)) edges.push_back(edge_from_index(EdgeIndex{i + 1}, n));
    }
    graphs.emplace_back(n, std::move(edges));
  }
  return graphs;
}

TEST(EdgeIndexTest, Examples) {
  EXPECT_EQ(edge_index(2, 1, 2).value, 1);
  EXPECT_EQ(edge_index(2, 1, 9).value, 1);
  EXPECT_EQ(edge_index(3, 2, 5).value, 3);
  EXPECT_EQ(edge_index(5, 4, 5).value, 10);
}

TEST(EdgeIndexTest, InvalidPairsAreValidationErrors) {
  EXPECT_THROW(edge_index(1, 2, 5), ValidationError);
  EXPECT_THROW(edge_index(3, 3, 5), ValidationError);
  EXPECT_THROW(edge_index(6, 1, 5), ValidationError);
  EXPECT_THROW(edge_index(2, 0, 5), ValidationError);
}

TEST(EdgeFromIndexTest, Examples) {
  EXPECT_EQ(edge_from_index(EdgeIndex{1}, 5), (Edge{2, 1}));
  EXPECT_EQ(edge_from_index(EdgeIndex{3}, 5), (Edge{3, 2}));
  EXPECT_EQ(edge_from_index(EdgeIndex{10}, 5), (Edge{5, 4}));
  EXPECT_THROW(edge_from_index(EdgeIndex{0}, 5), DomainError);
  EXPECT_THROW(edge_from_index(EdgeIndex{11}, 5), DomainError);
}

TEST(EdgeIndexTest, MutuallyInverseBijectionUpTo30) {
  for (int n = 2; n <= 30; ++n) {
    std::set<std::int64_t> seen;
    for (int u = 2; u <= n; ++u) {
      for (int v = 1; v < u; ++v) {
        const EdgeIndex i = edge_index(u, v, n);
        ASSERT_GE(i.value, 1);
        ASSERT_LE(i.value, edge_slots(n));
        ASSERT_TRUE(seen.insert(i.value).second);
        ASSERT_EQ(edge_from_index(i, n), (Edge{u, v}));
      }
    }
    ASSERT_EQ(static_cast<std::int64_t>(seen.size()), edge_slots(n));
  }
}

TEST(GraphTest, CanonicalizesAndValidates) {
  const Graph g(4, {{1, 2}, {4, 3}, {3, 1}});
  ASSERT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.edges()[0], (Edge{2, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{3, 1}));
  EXPECT_EQ(g.edges()[2], (Edge{4, 3}));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(1, 4));
  EXPECT_THROW(Graph(3, {{2, 2}}), ValidationError);
  EXPECT_THROW(Graph(3, {{2, 1}, {1, 2}}), ValidationError);
  EXPECT_THROW(Graph(3, {{4, 1}}), ValidationError);
  EXPECT_THROW(Graph(0, {}), ValidationError);
}

TEST(EncodeGraphTest, Examples) {
  EXPECT_EQ(encode_graph(Graph(3, {{2, 1}, {3, 2}})).g, 2);
  // Indices {1..5} are the first 5-subset.
  std::vector<Edge> first;
  for (int i = 1; i <= 5; ++i) first.push_back(edge_from_index(EdgeIndex{i}, 5));
  EXPECT_EQ(encode_graph(Graph(5, first)).g, 0);
}

TEST(EncodeGraphTest, MatchesRevolvingDoorPositionForAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    const auto slots = static_cast<int>(edge_slots(n));
    for (const Graph& g : all_graphs(n)) {
      const auto m = static_cast<int>(g.num_edges());
      const auto list = oracle::revolving_door(slots, m);
      const auto pos = std::find(list.begin(), list.end(), edge_indices(g)) - list.begin();
      const GraphCode code = encode_graph(g);
      ASSERT_EQ(code.g, BigNat(pos));
      ASSERT_LT(code.g, binomial(slots, m));
      ASSERT_EQ(code.n, n);
      ASSERT_EQ(code.m, m);
    }
  }
}

TEST(DecodeGraphTest, Examples) {
  EXPECT_EQ(decode_graph(GraphCode{3, 2, 2}), Graph(3, {{2, 1}, {3, 2}}));
  EXPECT_EQ(decode_graph(GraphCode{5, 0, 0}), Graph::edgeless(5));
  EXPECT_EQ(decode_graph(GraphCode{5, 5, 0}), Graph(5, {{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}}));
}

TEST(DecodeGraphTest, OutOfRangeIsDomainError) {
  EXPECT_THROW(decode_graph(GraphCode{3, 2, 3}), DomainError);
  EXPECT_THROW(decode_graph(GraphCode{3, 2, 99}), DomainError);
  EXPECT_THROW(decode_graph(GraphCode{3, 4, 0}), DomainError);
  EXPECT_THROW(decode_graph(GraphCode{5, 0, 1}), DomainError);
}

TEST(DecodeGraphTest, RoundTripExhaustiveUpTo5) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) ASSERT_EQ(decode_graph(encode_graph(g)), g);
  }
}

TEST(DecodeGraphTest, RoundTripRandomUpTo12) {
  Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(uniform_index(rng, 12)) + 1;
    const auto m = static_cast<std::int64_t>(uniform_index(rng, static_cast<std::size_t>(edge_slots(n)) + 1));
    const Graph g = random_graph(n, m, rng);
    ASSERT_EQ(decode_graph(encode_graph(g)), g);
  }
}

TEST(RelabelTest, Examples) {
  const Graph g(3, {{2, 1}});
  EXPECT_EQ(relabel(g, Permutation::identity(3)), g);
  EXPECT_EQ(relabel(g, Permutation({3, 2, 1})), Graph(3, {{3, 2}}));
  EXPECT_THROW(relabel(g, Permutation::identity(4)), ValidationError);
}

TEST(RelabelTest, InverseRestoresAndPreservesCounts) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(uniform_index(rng, 9)) + 2;
    const Graph g = random_graph(n, static_cast<std::int64_t>(uniform_index(rng, static_cast<std::size_t>(edge_slots(n)) + 1)), rng);
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    const Permutation pi(images);
    const Graph h = relabel(g, pi);
    ASSERT_EQ(h.num_nodes(), g.num_nodes());
    ASSERT_EQ(h.num_edges(), g.num_edges());
    ASSERT_EQ(relabel(h, pi.inverse()), g);
    ASSERT_EQ(relabeled_rank(g, pi), encode_graph(h).g);
    for (const Edge& e : g.edges()) ASSERT_TRUE(h.has_edge(pi(e.u), pi(e.v)));
  }
}

TEST(GraphTextTest, ParseAndSerialize) {
  const Graph g = parse_graph("3 1\n2 1\n");
  EXPECT_EQ(g, Graph(3, {{2, 1}}));
  EXPECT_EQ(serialize_graph(g), "3 1\n2 1\n");
  EXPECT_EQ(parse_graph("3 1\n1 2"), g);  // flipped pair, no trailing newline
  EXPECT_EQ(serialize_graph(Graph::edgeless(5)), "5 0\n");
}

TEST(GraphTextTest, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("3 1\n1 1\n"), 2);          // self-loop
  EXPECT_EQ(line_of("3 2\n2 1\n1 2\n"), 3);     // duplicate
  EXPECT_EQ(line_of("3 1\n4 1\n"), 2);          // label out of range
  EXPECT_EQ(line_of("3 1\n2 x\n"), 2);          // malformed
  EXPECT_EQ(line_of("3\n"), 1);                 // malformed header
  EXPECT_EQ(line_of("3 4\n"), 1);               // m > C(n, 2)
  EXPECT_EQ(line_of("3 2\n2 1\n"), 2);          // too few edges
  EXPECT_EQ(line_of("3 1\n2 1\n3 1\n"), 3);     // too many edges
  EXPECT_EQ(line_of(""), 1);
}

TEST(GraphTextTest, SerializeParseRoundTrip) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(uniform_index(rng, 15)) + 1;
    const Graph g = random_graph(n, static_cast<std::int64_t>(uniform_index(rng, static_cast<std::size_t>(edge_slots(n)) + 1)), rng);
    const std::string text = serialize_graph(g);
    ASSERT_EQ(parse_graph(text), g);
    ASSERT_EQ(serialize_graph(parse_graph(text)), text);
  }
}

TEST(GraphCodeTextTest, RoundTripsLargeIntegers) {
  const GraphCode code{20, 40, binomial(190, 40) - 1};
  const std::string text = serialize_graph_code(code);
  EXPECT_EQ(text.find('e'), std::string::npos);
  EXPECT_EQ(parse_graph_code(text), code);
  EXPECT_THROW(parse_graph_code("3 2\n-1\n"), ParseError);
  EXPECT_THROW(parse_graph_code("3 2\n1.5\n"), ParseError);
}

TEST(ConnectivityTest, Basics) {
  EXPECT_TRUE(is_connected(Graph(3, {{2, 1}, {3, 2}})));
  EXPECT_FALSE(is_connected(Graph(3, {{2, 1}})));
  EXPECT_TRUE(is_connected(Graph::edgeless(1)));
}

}  // namespace
}  // namespace graphmin
