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

// Exact combinatorial arithmetic: binomial coefficients, revolving-door
// ranking of m-subsets, and the factoradic (Lehmer) permutation codec.

#ifndef GRAPHMIN_COMBINATORICS_HPP_
#define GRAPHMIN_COMBINATORICS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace graphmin {

// Arbitrary-precision integer. Every value produced by this library is
// non-negative; the signed type is used so the alternating rank sum can be
// accumulated without wrap-around.
using BigNat = boost::multiprecision::cpp_int;

// Largest argument served from the precomputed Pascal table.
inline constexpr int kBinomialTableLimit = 200;

// C(a, b) exactly. Returns 0 when b > a. Throws DomainError on negative input.
BigNat binomial(std::int64_t a, std::int64_t b);

// Same value, by reference into the immutable table. Requires
// 0 <= b <= a <= kBinomialTableLimit (not checked in release builds).
const BigNat& binomial_table(int a, int b);

// A strictly increasing sequence i_1 < ... < i_m drawn from [1, N].
class Combination {
 public:
  // Throws ValidationError unless elements are strictly increasing and in
  // [1, universe].
  Combination(std::vector<std::int64_t> elements, std::int64_t universe);

  std::span<const std::int64_t> elements() const { return elements_; }
  std::int64_t universe() const { return universe_; }
  std::int64_t size() const { return static_cast<std::int64_t>(elements_.size()); }

  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  std::vector<std::int64_t> elements_;
  std::int64_t universe_;
};

// Revolving-door rank:
//   g = sum_{c=1..m} (-1)^(m-c) * (C(i_c, c) - 1)
// A bijection from the m-subsets of [1, N] onto [0, C(N, m) - 1].
BigNat rank_revdoor(const Combination& combination);

// Inverse of rank_revdoor. Throws DomainError unless 0 <= rank < C(N, m).
Combination unrank_revdoor(const BigNat& rank, std::int64_t universe, std::int64_t m);

// A bijection on {1..n}, stored as the image sequence pi(1), ..., pi(n).
class Permutation {
 public:
  // Throws ValidationError unless `images` holds each of 1..n exactly once.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  // 1-based label in, 1-based label out.
  int operator()(int label) const { return images_[static_cast<std::size_t>(label - 1)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Lehmer digits d_1..d_{n-1} with 0 <= d_k <= n - k.
class FactoradicCode {
 public:
  // Throws ValidationError if digits.size() != n - 1 (n >= 1) or a digit is
  // outside its radix.
  FactoradicCode(std::vector<int> digits, int n);

  static FactoradicCode zero(int n);

  int n() const { return n_; }
  std::span<const int> digits() const { return digits_; }

  friend bool operator==(const FactoradicCode&, const FactoradicCode&) = default;

 private:
  std::vector<int> digits_;
  int n_;
};

// pi(k) is the d_k-th (0-based) smallest label still unused; pi(n) is the
// label left over.
Permutation factoradic_to_permutation(const FactoradicCode& code);

// Lehmer encoding, the inverse of factoradic_to_permutation.
FactoradicCode permutation_to_factoradic(const Permutation& permutation);

// sum_k d_k * (n - k)!, a bijection onto [0, n! - 1].
BigNat factoradic_to_integer(const FactoradicCode& code);

// Inverse of factoradic_to_integer. Throws DomainError unless value < n!.
FactoradicCode factoradic_from_integer(const BigNat& value, int n);

BigNat factorial(int n);

}  // namespace graphmin

#endif  // GRAPHMIN_COMBINATORICS_HPP_
