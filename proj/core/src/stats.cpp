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

#include "graphmin/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>

#include "graphmin/errors.hpp"

namespace graphmin {

char verdict_symbol(Verdict verdict) {
  switch (verdict) {
    case Verdict::kBetter: return '+';
    case Verdict::kEqual: return '=';
    case Verdict::kWorse: return '-';
  }
  return '?';
}

RankSumTest wilcoxon_ranksum(std::span<const double> a, std::span<const double> b, double alpha) {
  if (a.empty() || b.empty()) throw DomainError("wilcoxon_ranksum: empty sample");
  const std::size_t n1 = a.size();
  const std::size_t total = n1 + b.size();

  std::vector<std::pair<double, bool>> pooled;  // (value, from a)
  pooled.reserve(total);
  for (double x : a) pooled.emplace_back(x, true);
  for (double x : b) pooled.emplace_back(x, false);
  std::sort(pooled.begin(), pooled.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });

  RankSumTest test;
  double tie_term = 0.0;  // sum of t^3 - t over tie groups
  for (std::size_t i = 0; i < total;) {
    std::size_t j = i;
    while (j < total && pooled[j].first == pooled[i].first) ++j;
    const double mid_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (pooled[k].second) test.rank_sum += mid_rank;
    }
    const auto t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }

  const auto dn1 = static_cast<double>(n1);
  const auto dn2 = static_cast<double>(b.size());
  const auto dn = static_cast<double>(total);
  const double mean = dn1 * (dn + 1.0) / 2.0;
  const double variance = dn1 * dn2 / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
  if (!(variance > 0.0)) return test;  // every value tied

  const double deviation = test.rank_sum - mean;
  const double corrected = std::max(std::abs(deviation) - 0.5, 0.0);
  test.z = std::copysign(corrected / std::sqrt(variance), deviation);
  test.p_value = std::erfc(std::abs(test.z) / std::sqrt(2.0));
  if (test.p_value < alpha) test.verdict = deviation < 0.0 ? Verdict::kBetter : Verdict::kWorse;
  return test;
}

StatsReport compare_algorithms(const FinalValues& finals, double alpha) {
  StatsReport report;
  report.instance_ids = finals.instance_ids;
  report.algorithms = finals.algorithms;
  const std::size_t k = finals.algorithms.size();
  for (int id : finals.instance_ids) {
    std::vector<std::vector<Verdict>> table(k, std::vector<Verdict>(k, Verdict::kEqual));
    for (std::size_t i = 0; i < k; ++i) {
      const auto it_i = finals.values.find({id, finals.algorithms[i]});
      if (it_i == finals.values.end()) {
        throw DomainError("missing finals for instance " + std::to_string(id) + ", " +
                          std::string(algorithm_name(finals.algorithms[i])));
      }
      for (std::size_t j = i + 1; j < k; ++j) {
        const auto it_j = finals.values.find({id, finals.algorithms[j]});
        if (it_j == finals.values.end()) {
          throw DomainError("missing finals for instance " + std::to_string(id) + ", " +
                            std::string(algorithm_name(finals.algorithms[j])));
        }
        const Verdict v = wilcoxon_ranksum(it_i->second, it_j->second, alpha).verdict;
        table[i][j] = v;
        table[j][i] = v == Verdict::kBetter ? Verdict::kWorse
                      : v == Verdict::kWorse ? Verdict::kBetter
                                             : Verdict::kEqual;
      }
    }
    report.verdicts.push_back(std::move(table));
  }
  return report;
}

std::vector<PerformanceCounts> count_performance(const StatsReport& report) {
  const std::size_t k = report.algorithms.size();
  std::vector<PerformanceCounts> counts(k);
  for (const auto& table : report.verdicts) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        switch (table[i][j]) {
          case Verdict::kBetter: ++counts[i].outperform; break;
          case Verdict::kEqual: ++counts[i].equal; break;
          case Verdict::kWorse: ++counts[i].underperform; break;
        }
      }
    }
  }
  return counts;
}

void write_stats_csv(std::ostream& out, const StatsReport& report,
                     std::span<const PerformanceCounts> counts) {
  out << "algorithm,outperform,equal,underperform\n";
  for (std::size_t i = 0; i < report.algorithms.size(); ++i) {
    out << algorithm_name(report.algorithms[i]) << ',' << counts[i].outperform << ','
        << counts[i].equal << ',' << counts[i].underperform << '\n';
  }
}

}  // namespace graphmin
