// Copyright 2026 The smti Authors
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

// Approximate solvers for maximum-cardinality weakly stable matchings:
// deferred acceptance with random tie-breaking, the LTIU random-restart
// stochastic hill climber, and a genetic algorithm over stable matchings.
//
// Every routine is deterministic given its seed.

#ifndef SMTI_HEURISTICS_HPP_
#define SMTI_HEURISTICS_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "smti/core.hpp"
#include "smti/rng.hpp"
#include "smti/solve_report.hpp"
#include "smti/stability.hpp"

namespace smti {

struct LtiuParams {
  std::uint64_t step_limit = 50000;
  // Probability of a random-walk move instead of a greedy one.
  double random_walk_p = 0.2;
  std::uint64_t seed = 0;
};

struct GaParams {
  int population_size = 50;
  int rounds = 1000;
  double crossover_p = 0.7;
  double mutation_p = 0.2;
  std::uint64_t seed = 0;
};

// Breaks every tie by a seeded random strict refinement, then runs
// men-proposing Gale-Shapley over mutually acceptable pairs. The result is
// weakly stable.
Matching deferred_acceptance(const Instance& inst, std::uint64_t seed);

// Uniform random permutation of women onto men, keeping only mutually
// acceptable pairs.
Matching random_matching(const Instance& inst, Rng& rng);

// Marries bp.man and bp.woman, leaving their former partners single.
// Throws std::domain_error if the pair does not block mu.
Matching apply_blocking_pair(const Instance& inst, const Matching& mu, const BlockingPair& bp);

// eval_ltiu of apply_blocking_pair(inst, mu, bp), computed from mu_eval by
// re-examining only pairs that touch the four agents whose partner changes.
std::int64_t eval_after_move(const Instance& inst, const Matching& mu, std::int64_t mu_eval,
                             const BlockingPair& bp);

// Repeatedly satisfies a random undominated blocking pair, at most n*n times.
// Returns true if mu ended up stable.
bool greedy_stabilize(const Instance& inst, Matching& mu, Rng& rng);

// Random-restart stochastic hill climbing on singles + blocking pairs.
// Every loop iteration, restarts included, consumes one step. The best
// matching found is stabilized before it is returned; the report carries its
// eval before and after. Cost is reported under `objective`.
SolveReport ltiu_solve(const Instance& inst, const LtiuParams& params,
                       Objective objective = Objective::MaxCardinality);

// chance(i) = fitness(i) / sum of fitness; uniform when every fitness is 0.
std::vector<double> selection_probabilities(std::span<const std::int64_t> fitness);

// Roulette-wheel draw with the probabilities above, using integer arithmetic.
int select_parent(std::span<const std::int64_t> fitness, Rng& rng);

// Cycle crossover on two matchings viewed as per-man genes. Starting at a
// random man whose wives differ, the first child takes the second parent's
// wife for each man along the chain m -> husband_in_first(wife_in_second(m))
// until the chain closes or runs off a single agent; the second child is
// built symmetrically. Identical parents yield two clones.
std::pair<Matching, Matching> cycle_crossover(const Instance& inst, const Matching& first,
                                              const Matching& second, Rng& rng);

// One greedy pass looking for Pareto improvements that add a pair without
// introducing a blocking pair: first a single man and single woman who are
// mutually acceptable, then exchanges where a married man moves to a single
// woman he likes as much and his wife takes a single man she likes as much.
// Returns mu unchanged when nothing applies.
Matching mutate_pareto(const Instance& inst, const Matching& mu, std::uint64_t seed);

// Population of stable matchings seeded by deferred acceptance, the first
// with params.seed and the rest with seeds drawn from the GA's stream; fitness
// is the number of pairs; survivors are the fittest of parents plus
// offspring, so the result has at least as many pairs as
// deferred_acceptance(inst, params.seed).
// Cost is reported under `objective`.
SolveReport ga_solve(const Instance& inst, const GaParams& params,
                     Objective objective = Objective::MaxCardinality);

}  // namespace smti

#endif  // SMTI_HEURISTICS_HPP_
