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

#ifndef GRAPHMIN_RANDOM_HPP_
#define GRAPHMIN_RANDOM_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace graphmin {

using Rng = std::mt19937_64;

// Recorded in run metadata.
inline constexpr std::string_view kRngName = "mt19937_64";

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Order-sensitive hash of the parts, used to give every (seed, algorithm,
// instance, run) cell its own stream independent of scheduling.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts);

// Uniform in [0, bound).
std::size_t uniform_index(Rng& rng, std::size_t bound);

// Uniform in [0, 1).
double uniform01(Rng& rng);

}  // namespace graphmin

#endif  // GRAPHMIN_RANDOM_HPP_
