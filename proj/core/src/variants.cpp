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

// The eight DE variants. All share one generational loop: every trial of a
// generation is built from the population as it stood at the start of the
// generation, then survivors are chosen target by target. A generation cut
// short by the evaluation budget keeps the trials it did evaluate.

#include "variants.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

namespace graphmin::detail {
namespace {

struct Outcome {
  bool replaced = false;
  bool improved = false;  // strictly better than the parent
};

template <typename MakeTrial, typename OnOutcome>
void generation(RunContext& ctx, Population& population, MakeTrial&& make_trial,
                OnOutcome&& on_outcome) {
  std::vector<Individual> trials;
  trials.reserve(population.size());
  for (std::size_t i = 0; i < population.size() && !ctx.exhausted(); ++i) {
    trials.push_back(ctx.evaluate(make_trial(i)));
  }
  for (std::size_t i = 0; i < trials.size(); ++i) {
    const Individual& parent = population[i];
    const Individual& trial = trials[i];
    const Outcome outcome{&select_greedy(parent, trial) == &trial, trial.fitness < parent.fitness};
    on_outcome(i, parent, trial, outcome);
    if (outcome.replaced) population[i] = std::move(trials[i]);
  }
}

constexpr auto kNoOutcome = [](std::size_t, const Individual&, const Individual&, Outcome) {};

std::size_t pop_size(const RunContext& ctx) {
  return static_cast<std::size_t>(ctx.config().population_size);
}

Population uniform_population(RunContext& ctx) {
  Population population;
  population.reserve(pop_size(ctx));
  while (population.size() < pop_size(ctx) && !ctx.exhausted()) {
    population.push_back(ctx.evaluate(ctx.random_point()));
  }
  return population;
}

// NP uniform points and their box opposites; the best NP of the 2NP survive.
Population opposition_population(RunContext& ctx) {
  Population pool = uniform_population(ctx);
  const std::size_t np = pool.size();
  for (std::size_t i = 0; i < np && !ctx.exhausted(); ++i) {
    pool.push_back(ctx.evaluate(opposite(pool[i].point)));
  }
  return keep_best(std::move(pool), pop_size(ctx));
}

void run_derand(RunContext& ctx) {
  const auto& cfg = ctx.config();
  Population population = uniform_population(ctx);
  while (!ctx.exhausted()) {
    generation(
        ctx, population,
        [&](std::size_t i) {
          const SearchPoint mutant = mutate_derand(population, i, cfg.scale_factor, ctx.rng());
          return crossover_binomial(population[i].point, mutant, cfg.crossover_rate, ctx.rng());
        },
        kNoOutcome);
  }
}

void run_debest(RunContext& ctx) {
  const auto& cfg = ctx.config();
  Population population = uniform_population(ctx);
  while (!ctx.exhausted()) {
    const std::size_t best = best_index(population);
    generation(
        ctx, population,
        [&](std::size_t i) {
          const SearchPoint mutant =
              mutate_debest(population, i, best, cfg.scale_factor, ctx.rng());
          return crossover_binomial(population[i].point, mutant, cfg.crossover_rate, ctx.rng());
        },
        kNoOutcome);
  }
}

// DE/rand/1/bin with donors drawn by rank: weight (NP - rank + 1)^rho.
void run_rbde(RunContext& ctx) {
  const auto& cfg = ctx.config();
  Population population = uniform_population(ctx);
  const std::vector<double> by_rank = rank_weights(population.size(), cfg.rank_bias);
  while (!ctx.exhausted()) {
    const auto order = fitness_order(population);
    std::vector<double> by_index(population.size());
    for (std::size_t r = 0; r < order.size(); ++r) by_index[order[r]] = by_rank[r];
    std::discrete_distribution<std::size_t> donor(by_index.begin(), by_index.end());
    generation(
        ctx, population,
        [&](std::size_t i) {
          std::size_t r[3];
          for (std::size_t k = 0; k < 3; ++k) {
            do {
              r[k] = donor(ctx.rng());
            } while (r[k] == i || std::find(r, r + k, r[k]) != r + k);
          }
          SearchPoint mutant = differential_mutation(population[r[0]].point, population[r[1]].point,
                                                     population[r[2]].point, cfg.scale_factor);
          repair(mutant);
          return crossover_binomial(population[i].point, mutant, cfg.crossover_rate, ctx.rng());
        },
        kNoOutcome);
  }
}

// DE/rand/1/bin until a target has failed more than Q times in a row; from
// then on its donors come from an archive of recent successful trials.
void run_desps(RunContext& ctx) {
  const auto& cfg = ctx.config();
  Population population = uniform_population(ctx);
  std::vector<int> failures(population.size(), 0);
  FifoArchive successes(population.size());
  while (!ctx.exhausted()) {
    generation(
        ctx, population,
        [&](std::size_t i) {
          SearchPoint mutant;
          if (failures[i] > cfg.stagnation_threshold && successes.size() >= 3) {
            const auto r = pick_distinct(ctx.rng(), successes.size(), 3, {});
            mutant = differential_mutation(successes[r[0]], successes[r[1]], successes[r[2]],
                                           cfg.scale_factor);
            repair(mutant);
          } else {
            mutant = mutate_derand(population, i, cfg.scale_factor, ctx.rng());
          }
          return crossover_binomial(population[i].point, mutant, cfg.crossover_rate, ctx.rng());
        },
        [&](std::size_t i, const Individual&, const Individual& trial, Outcome outcome) {
          if (outcome.improved) {
            failures[i] = 0;
            successes.add(trial.point);
          } else {
            ++failures[i];
          }
        });
  }
}

// DE/rand/1/bin plus generation jumping to dynamic opposites.
void run_obde(RunContext& ctx) {
  const auto& cfg = ctx.config();
  Population population = opposition_population(ctx);
  while (!ctx.exhausted()) {
    generation(
        ctx, population,
        [&](std::size_t i) {
          const SearchPoint mutant = mutate_derand(population, i, cfg.scale_factor, ctx.rng());
          return crossover_binomial(population[i].point, mutant, cfg.crossover_rate, ctx.rng());
        },
        kNoOutcome);
    if (ctx.exhausted() || uniform01(ctx.rng()) >= cfg.jump_rate) continue;
    SearchPoint lower = population.front().point;
    SearchPoint upper = population.front().point;
    for (const Individual& ind : population) {
      lower = lower.cwiseMin(ind.point);
      upper = upper.cwiseMax(ind.point);
    }
    Population pool = population;
    for (std::size_t i = 0; i < population.size() && !ctx.exhausted(); ++i) {
      SearchPoint p = dynamic_opposite(population[i].point, lower, upper);
      repair(p);
      pool.push_back(ctx.evaluate(std::move(p)));
    }
    population = keep_best(std::move(pool), population.size());
  }
}

// current-to-pbest/1 with an archive of replaced parents and adaptive F, CR.
void run_jade(RunContext& ctx) {
  const auto& cfg = ctx.config();
  Population population = uniform_population(ctx);
  const std::size_t np = population.size();
  JadeAdaptation adaptation(cfg.jade_mu_f, cfg.jade_mu_cr, cfg.jade_c);
  RandomEvictionArchive archive(static_cast<std::size_t>(cfg.effective_archive_size()));
  const auto top = static_cast<std::size_t>(
      std::max<long>(1, std::lround(cfg.jade_p * static_cast<double>(np))));
  std::vector<double> f(np);
  std::vector<double> cr(np);
  while (!ctx.exhausted()) {
    const auto order = fitness_order(population);
    generation(
        ctx, population,
        [&](std::size_t i) {
          f[i] = adaptation.sample_f(ctx.rng());
          cr[i] = adaptation.sample_cr(ctx.rng());
          const std::size_t pbest = order[uniform_index(ctx.rng(), std::min(top, np))];
          const std::size_t not_i[] = {i};
          const std::size_t r1 = pick_distinct(ctx.rng(), np, 1, not_i).front();
          const std::size_t not_i_r1[] = {i, r1};
          const std::size_t r2 = pick_distinct(ctx.rng(), np + archive.size(), 1, not_i_r1).front();
          const SearchPoint& x = population[i].point;
          const SearchPoint& x_r2 = r2 < np ? population[r2].point : archive[r2 - np];
          SearchPoint mutant = x + f[i] * (population[pbest].point - x) +
                               f[i] * (population[r1].point - x_r2);
          repair(mutant);
          return crossover_binomial(x, mutant, cr[i], ctx.rng());
        },
        [&](std::size_t i, const Individual& parent, const Individual&, Outcome outcome) {
          if (outcome.improved) {
            archive.add(parent.point, ctx.rng());
            adaptation.record_success(f[i], cr[i]);
          }
        });
    adaptation.end_generation();
  }
}

// Opposition-based start, JADE adaptation, and a pull towards the nearest
// neighbour instead of towards an elite.
void run_desim(RunContext& ctx) {
  const auto& cfg = ctx.config();
  Population population = opposition_population(ctx);
  const std::size_t np = population.size();
  JadeAdaptation adaptation(cfg.jade_mu_f, cfg.jade_mu_cr, cfg.jade_c);
  std::vector<double> f(np);
  std::vector<double> cr(np);
  while (!ctx.exhausted()) {
    generation(
        ctx, population,
        [&](std::size_t i) {
          f[i] = adaptation.sample_f(ctx.rng());
          cr[i] = adaptation.sample_cr(ctx.rng());
          const std::size_t similar = nearest_neighbor(population, i);
          const std::size_t not_i[] = {i};
          const auto r = pick_distinct(ctx.rng(), np, 2, not_i);
          const SearchPoint& x = population[i].point;
          SearchPoint mutant = x + f[i] * (population[similar].point - x) +
                               f[i] * (population[r[0]].point - population[r[1]].point);
          repair(mutant);
          return crossover_binomial(x, mutant, cr[i], ctx.rng());
        },
        [&](std::size_t i, const Individual&, const Individual&, Outcome outcome) {
          if (outcome.improved) adaptation.record_success(f[i], cr[i]);
        });
    adaptation.end_generation();
  }
}

// Simplified differential covariance-matrix adaptation: each mutant is either
// DE/rand/1 or a draw from a Gaussian fitted to the better half.
void run_dcmaea(RunContext& ctx) {
  const auto& cfg = ctx.config();
  Population population = uniform_population(ctx);
  const std::size_t elite = (population.size() + 1) / 2;
  while (!ctx.exhausted()) {
    GaussianModel model;
    if (cfg.model_probability > 0.0) {
      const auto order = fitness_order(population);
      std::vector<SearchPoint> best;
      best.reserve(elite);
      for (std::size_t r = 0; r < elite; ++r) best.push_back(population[order[r]].point);
      model = GaussianModel::fit(best);
    }
    generation(
        ctx, population,
        [&](std::size_t i) {
          SearchPoint mutant;
          if (cfg.model_probability > 0.0 && uniform01(ctx.rng()) < cfg.model_probability) {
            mutant = model.sample(ctx.rng());
            repair(mutant);
          } else {
            mutant = mutate_derand(population, i, cfg.scale_factor, ctx.rng());
          }
          return crossover_binomial(population[i].point, mutant, cfg.crossover_rate, ctx.rng());
        },
        kNoOutcome);
  }
}

}  // namespace

void run_variant(RunContext& ctx) {
  switch (ctx.config().algorithm) {
    case Algorithm::kDesps: return run_desps(ctx);
    case Algorithm::kObde: return run_obde(ctx);
    case Algorithm::kJade: return run_jade(ctx);
    case Algorithm::kDcmaea: return run_dcmaea(ctx);
    case Algorithm::kDerand: return run_derand(ctx);
    case Algorithm::kDebest: return run_debest(ctx);
    case Algorithm::kRbde: return run_rbde(ctx);
    case Algorithm::kDesim: return run_desim(ctx);
  }
}

}  // namespace graphmin::detail
