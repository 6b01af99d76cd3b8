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

#include "graphmin/objective.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "graphmin/csv.hpp"
#include "graphmin/errors.hpp"

namespace graphmin {

double log10_one_plus(const BigNat& g) {
  const BigNat h = g + 1;
  const auto bits = static_cast<long>(boost::multiprecision::msb(h)) + 1;
  if (bits <= 64) return std::log10(static_cast<double>(h.convert_to<std::uint64_t>()));
  const long shift = bits - 64;
  const auto top = static_cast<std::uint64_t>(h >> static_cast<unsigned>(shift));
  return std::log10(static_cast<double>(top)) + static_cast<double>(shift) * std::log10(2.0);
}

BigNat relabeled_code(const Graph& graph, const FactoradicCode& code) {
  if (code.n() != graph.num_nodes()) {
    throw ValidationError("evaluate: factoradic code is for n=" + std::to_string(code.n()) +
                          ", graph has n=" + std::to_string(graph.num_nodes()));
  }
  return relabeled_rank(graph, factoradic_to_permutation(code));
}

double evaluate(const Graph& graph, const FactoradicCode& code) {
  return log10_one_plus(relabeled_code(graph, code));
}

double max_objective(int n, std::int64_t m) {
  const BigNat count = binomial(edge_slots(n), m);
  return count == 0 ? 0.0 : log10_one_plus(count - 1);
}

std::vector<LandscapePoint> exhaustive_landscape(const Graph& graph) {
  const int n = graph.num_nodes();
  if (n > kMaxLandscapeNodes) {
    throw DomainError("exhaustive landscape needs n <= " + std::to_string(kMaxLandscapeNodes) +
                      " (n = " + std::to_string(n) + " would enumerate n! relabelings)");
  }
  const auto count = factorial(n).convert_to<std::uint64_t>();
  std::vector<LandscapePoint> points;
  points.reserve(count);
  // Mixed-radix counter over the digits; increments in x_index order.
  std::vector<int> digits(static_cast<std::size_t>(n - 1), 0);
  for (std::uint64_t x = 0; x < count; ++x) {
    const FactoradicCode code(digits, n);
    BigNat g = relabeled_code(graph, code);
    const double L = log10_one_plus(g);
    points.push_back(LandscapePoint{x, std::move(g), L});
    for (int k = n - 2; k >= 0; --k) {
      const int radix = n - k;
      if (++digits[static_cast<std::size_t>(k)] < radix) break;
      digits[static_cast<std::size_t>(k)] = 0;
    }
  }
  return points;
}

LandscapeMinimum landscape_minimum(std::span<const LandscapePoint> points) {
  if (points.empty()) throw DomainError("landscape_minimum: empty landscape");
  const LandscapePoint* best = &points.front();
  for (const LandscapePoint& p : points) {
    if (p.L < best->L || (p.L == best->L && p.x_index < best->x_index)) best = &p;
  }
  return LandscapeMinimum{best->x_index, best->L};
}

void write_landscape_csv(std::ostream& out, std::span<const LandscapePoint> points) {
  out << "x_index,L\n";
  for (const LandscapePoint& p : points) out << p.x_index << ',' << format_double(p.L) << '\n';
}

}  // namespace graphmin
