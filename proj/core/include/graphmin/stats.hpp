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

#ifndef GRAPHMIN_STATS_HPP_
#define GRAPHMIN_STATS_HPP_

#include <iosfwd>
#include <span>
#include <vector>

#include "graphmin/harness.hpp"
#include "graphmin/optimizer.hpp"

namespace graphmin {

// Outcome for sample a against sample b under minimization.
enum class Verdict { kBetter, kEqual, kWorse };

char verdict_symbol(Verdict verdict);  // '+', '=', '-'

struct RankSumTest {
  double rank_sum = 0.0;  // sum of pooled mid-ranks of sample a
  double z = 0.0;
  double p_value = 1.0;   // two-sided
  Verdict verdict = Verdict::kEqual;
};

// Two-sided Wilcoxon rank-sum (Mann-Whitney) test, normal approximation
// with tie-corrected variance and continuity correction. kBetter when a is
// significantly lower. A zero-variance comparison (all values tied) is
// kEqual. Throws DomainError if either sample is empty.
RankSumTest wilcoxon_ranksum(std::span<const double> a, std::span<const double> b,
                             double alpha = 0.05);

struct StatsReport {
  std::vector<int> instance_ids;
  std::vector<Algorithm> algorithms;
  // verdicts[instance][a][b]: algorithm a against algorithm b; diagonal kEqual.
  std::vector<std::vector<std::vector<Verdict>>> verdicts;
};

StatsReport compare_algorithms(const FinalValues& finals, double alpha = 0.05);

struct PerformanceCounts {
  int outperform = 0;
  int equal = 0;
  int underperform = 0;

  int total() const { return outperform + equal + underperform; }
};

// One entry per report algorithm, accumulated over all opponents and
// instances.
std::vector<PerformanceCounts> count_performance(const StatsReport& report);

// stats.csv: algorithm,outperform,equal,underperform
void write_stats_csv(std::ostream& out, const StatsReport& report,
                     std::span<const PerformanceCounts> counts);

}  // namespace graphmin

#endif  // GRAPHMIN_STATS_HPP_
