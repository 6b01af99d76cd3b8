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

#ifndef GRAPHMIN_OBJECTIVE_HPP_
#define GRAPHMIN_OBJECTIVE_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "graphmin/combinatorics.hpp"
#include "graphmin/graph.hpp"

namespace graphmin {

// log10(1 + g), from the exact integer. Relative error below 1e-15 for any
// magnitude: the top 64 bits carry the mantissa, the bit length the exponent.
double log10_one_plus(const BigNat& g);

// Rank of the graph after relabeling its nodes by the permutation `code`
// decodes to.
BigNat relabeled_code(const Graph& graph, const FactoradicCode& code);

// L = log10(1 + g) of the relabeled graph; 0 means rank 0.
double evaluate(const Graph& graph, const FactoradicCode& code);

// Upper bound of L over the class G(n, m): log10(C(C(n, 2), m)).
double max_objective(int n, std::int64_t m);

struct LandscapePoint {
  std::uint64_t x_index = 0;  // factoradic integer of the relabeling
  BigNat g;
  double L = 0.0;
};

inline constexpr int kMaxLandscapeNodes = 9;

// One point per permutation, ordered by x_index. Throws DomainError when
// n > kMaxLandscapeNodes.
std::vector<LandscapePoint> exhaustive_landscape(const Graph& graph);

struct LandscapeMinimum {
  std::uint64_t x_index = 0;
  double L = 0.0;
};

// Smallest L, ties broken by smallest x_index. Throws DomainError on empty
// input.
LandscapeMinimum landscape_minimum(std::span<const LandscapePoint> points);

// "x_index,L" header, then one row per point.
void write_landscape_csv(std::ostream& out, std::span<const LandscapePoint> points);

}  // namespace graphmin

#endif  // GRAPHMIN_OBJECTIVE_HPP_
