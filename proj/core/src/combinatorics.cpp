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

#include "graphmin/combinatorics.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>

#include "graphmin/errors.hpp"

namespace graphmin {
namespace {

constexpr int kRow = kBinomialTableLimit + 1;

// Built once on first use (thread-safe static init), read-only afterwards.
const std::vector<BigNat>& pascal_table() {
  static const std::vector<BigNat> table = [] {
    std::vector<BigNat> t(static_cast<std::size_t>(kRow) * kRow);
    auto at = [&t](int a, int b) -> BigNat& {
      return t[static_cast<std::size_t>(a) * kRow + static_cast<std::size_t>(b)];
    };
    for (int a = 0; a <= kBinomialTableLimit; ++a) {
      at(a, 0) = 1;
      for (int b = 1; b <= a; ++b) at(a, b) = at(a - 1, b - 1) + at(a - 1, b);
    }
    return t;
  }();
  return table;
}

BigNat binomial_multiplicative(std::int64_t a, std::int64_t b) {
  b = std::min(b, a - b);
  BigNat result = 1;
  for (std::int64_t k = 1; k <= b; ++k) {
    result *= a - b + k;
    result /= k;  // exact: result is C(a - b + k, k) here
  }
  return result;
}

// Avoids a copy when the table can serve the value.
template <typename Fn>
decltype(auto) with_binomial(std::int64_t a, std::int64_t b, Fn&& fn) {
  if (a <= kBinomialTableLimit && b <= a) {
    return fn(binomial_table(static_cast<int>(a), static_cast<int>(b)));
  }
  return fn(binomial(a, b));
}

}  // namespace

BigNat binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) {
    throw DomainError("binomial: negative argument (" + std::to_string(a) + ", " +
                      std::to_string(b) + ")");
  }
  if (b > a) return 0;
  if (a <= kBinomialTableLimit) return binomial_table(static_cast<int>(a), static_cast<int>(b));
  return binomial_multiplicative(a, b);
}

const BigNat& binomial_table(int a, int b) {
  assert(0 <= b && b <= a && a <= kBinomialTableLimit);
  return pascal_table()[static_cast<std::size_t>(a) * kRow + static_cast<std::size_t>(b)];
}

Combination::Combination(std::vector<std::int64_t> elements, std::int64_t universe)
    : elements_(std::move(elements)), universe_(universe) {
  if (universe_ < 0) throw ValidationError("combination: negative universe size");
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    const std::int64_t e = elements_[k];
    if (e < 1 || e > universe_) {
      throw ValidationError("combination: element " + std::to_string(e) + " outside [1, " +
                            std::to_string(universe_) + "]");
    }
    if (k > 0 && elements_[k - 1] >= e) {
      throw ValidationError("combination: elements must be strictly increasing");
    }
  }
}

BigNat rank_revdoor(const Combination& combination) {
  const auto elements = combination.elements();
  const auto m = static_cast<std::int64_t>(elements.size());
  BigNat g = 0;
  for (std::int64_t c = 1; c <= m; ++c) {
    const bool negative = ((m - c) % 2) != 0;
    with_binomial(elements[static_cast<std::size_t>(c - 1)], c, [&](const BigNat& term) {
      if (negative) {
        g -= term;
        g += 1;
      } else {
        g += term;
        g -= 1;
      }
      return 0;
    });
  }
  assert(g >= 0);
  return g;
}

Combination unrank_revdoor(const BigNat& rank, std::int64_t universe, std::int64_t m) {
  if (universe < 0 || m < 0) throw DomainError("unrank_revdoor: negative size");
  if (rank < 0 || rank >= binomial(universe, m)) {
    throw DomainError("unrank_revdoor: rank outside [0, C(" + std::to_string(universe) + ", " +
                      std::to_string(m) + ") - 1]");
  }
  std::vector<std::int64_t> elements(static_cast<std::size_t>(m));
  BigNat residual = rank;
  std::int64_t x = universe;
  for (std::int64_t i = m; i >= 1; --i) {
    // Largest x with C(x, i) <= residual; the element is x + 1.
    while (with_binomial(x, i, [&](const BigNat& v) { return v > residual; })) --x;
    elements[static_cast<std::size_t>(i - 1)] = x + 1;
    with_binomial(x + 1, i, [&](const BigNat& v) {
      residual = v - residual - 1;
      return 0;
    });
  }
  return Combination(std::move(elements), universe);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int label : images_) {
    if (label < 1 || label > n || seen[static_cast<std::size_t>(label)]) {
      throw ValidationError("permutation: images must contain each of 1.." +
                            std::to_string(n) + " exactly once");
    }
    seen[static_cast<std::size_t>(label)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) images[static_cast<std::size_t>(k)] = k + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
  }
  return Permutation(std::move(inv));
}

FactoradicCode::FactoradicCode(std::vector<int> digits, int n) : digits_(std::move(digits)), n_(n) {
  if (n_ < 1) throw ValidationError("factoradic: n must be at least 1");
  if (digits_.size() != static_cast<std::size_t>(n_ - 1)) {
    throw ValidationError("factoradic: expected " + std::to_string(n_ - 1) + " digits, got " +
                          std::to_string(digits_.size()));
  }
  for (std::size_t k = 0; k < digits_.size(); ++k) {
    // digit k (0-based) has radix n - k
    const int max_digit = n_ - 1 - static_cast<int>(k);
    if (digits_[k] < 0 || digits_[k] > max_digit) {
      throw ValidationError("factoradic: digit " + std::to_string(k + 1) + " = " +
                            std::to_string(digits_[k]) + " outside [0, " +
                            std::to_string(max_digit) + "]");
    }
  }
}

FactoradicCode FactoradicCode::zero(int n) {
  return FactoradicCode(std::vector<int>(static_cast<std::size_t>(std::max(n - 1, 0)), 0), n);
}

Permutation factoradic_to_permutation(const FactoradicCode& code) {
  const int n = code.n();
  std::vector<int> unused(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) unused[static_cast<std::size_t>(k)] = k + 1;
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int d : code.digits()) {
    const auto it = unused.begin() + d;
    images.push_back(*it);
    unused.erase(it);
  }
  images.push_back(unused.front());
  return Permutation(std::move(images));
}

FactoradicCode permutation_to_factoradic(const Permutation& permutation) {
  const int n = permutation.size();
  std::vector<int> digits;
  digits.reserve(static_cast<std::size_t>(std::max(n - 1, 0)));
  const auto images = permutation.images();
  for (int k = 0; k + 1 < n; ++k) {
    int smaller_later = 0;
    for (int j = k + 1; j < n; ++j) {
      if (images[static_cast<std::size_t>(j)] < images[static_cast<std::size_t>(k)]) {
        ++smaller_later;
      }
    }
    digits.push_back(smaller_later);
  }
  return FactoradicCode(std::move(digits), n);
}

BigNat factorial(int n) {
  if (n < 0) throw DomainError("factorial: negative argument");
  BigNat f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

BigNat factoradic_to_integer(const FactoradicCode& code) {
  // Horner form of sum_k d_k (n - k)!
  BigNat value = 0;
  const int n = code.n();
  const auto digits = code.digits();
  for (std::size_t k = 0; k < digits.size(); ++k) {
    value = value * (n - static_cast<int>(k)) + digits[k];
  }
  // The implicit last digit is 0 with radix 1, so no final multiply.
  return value;
}

FactoradicCode factoradic_from_integer(const BigNat& value, int n) {
  if (n < 1) throw DomainError("factoradic_from_integer: n must be at least 1");
  if (value < 0 || value >= factorial(n)) {
    throw DomainError("factoradic_from_integer: value outside [0, n! - 1]");
  }
  std::vector<int> digits(static_cast<std::size_t>(n - 1));
  BigNat rest = value;
  // Least significant stored digit is d_{n-1} with radix 2.
  for (int k = n - 1; k >= 1; --k) {
    const int radix = n - k + 1;
    digits[static_cast<std::size_t>(k - 1)] = static_cast<int>(rest % radix);
    rest /= radix;
  }
  return FactoradicCode(std::move(digits), n);
}

}  // namespace graphmin
