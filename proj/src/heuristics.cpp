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

#include "smti/heuristics.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace smti {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Agents whose partner changes when a blocking pair is satisfied, or when a
// mutation rewires a few pairs. Entries equal to kSingle are ignored.
struct Touched {
  std::array<int, 4> men{kSingle, kSingle, kSingle, kSingle};
  std::array<int, 4> women{kSingle, kSingle, kSingle, kSingle};
};

// Calls fn(man, woman) once for every mutually acceptable pair touching a
// touched agent.
template <typename Fn>
void for_each_touched_pair(const Instance& inst, const Touched& t, Fn fn) {
  std::array<int, 4> seen_men{kSingle, kSingle, kSingle, kSingle};
  std::size_t men_count = 0;
  for (int m : t.men) {
    if (m == kSingle || std::find(seen_men.begin(), seen_men.end(), m) != seen_men.end()) continue;
    seen_men[men_count++] = m;
    for (int w : inst.acceptable_partners(AgentId::man(m))) fn(m, w);
  }
  std::array<int, 4> seen_women{kSingle, kSingle, kSingle, kSingle};
  std::size_t women_count = 0;
  for (int w : t.women) {
    if (w == kSingle ||
        std::find(seen_women.begin(), seen_women.end(), w) != seen_women.end()) {
      continue;
    }
    seen_women[women_count++] = w;
    for (int m : inst.acceptable_partners(AgentId::woman(w))) {
      if (std::find(seen_men.begin(), seen_men.end(), m) == seen_men.end()) fn(m, w);
    }
  }
}

std::int64_t touched_blocking_count(const Instance& inst, const Matching& mu, const Touched& t) {
  std::int64_t count = 0;
  for_each_touched_pair(inst, t, [&](int m, int w) {
    if (is_blocking(inst, mu, m, w)) ++count;
  });
  return count;
}

// True if `after` has a blocking pair touching t that `before` does not.
bool introduces_blocking_pair(const Instance& inst, const Matching& before, const Matching& after,
                              const Touched& t) {
  bool found = false;
  for_each_touched_pair(inst, t, [&](int m, int w) {
    if (!found && is_blocking(inst, after, m, w) && !is_blocking(inst, before, m, w)) found = true;
  });
  return found;
}

Touched touched_by_move(const Matching& mu, const BlockingPair& bp) {
  Touched t;
  t.men = {bp.man, mu.husband_of(bp.woman), kSingle, kSingle};
  t.women = {bp.woman, mu.wife_of(bp.man), kSingle, kSingle};
  return t;
}

}  // namespace

Matching deferred_acceptance(const Instance& inst, std::uint64_t seed) {
  const int n = inst.size();
  Rng rng(seed);

  // Men's proposal orders: mutually acceptable women by rank, ties shuffled.
  std::vector<std::vector<int>> proposals(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    const auto ranked = inst.ranked(AgentId::man(m));
    std::vector<int> order(ranked.begin(), ranked.end());
    for (std::size_t lo = 0; lo < order.size();) {
      std::size_t hi = lo + 1;
      while (hi < order.size() && inst.mrank(m, order[hi]) == inst.mrank(m, order[lo])) ++hi;
      rng.shuffle(std::span<int>(order.data() + lo, hi - lo));
      lo = hi;
    }
    auto& list = proposals[static_cast<std::size_t>(m)];
    for (int w : order) {
      if (inst.wrank(w, m) > 0) list.push_back(w);
    }
  }

  // Women's strict priorities: position in a tie-shuffled list.
  std::vector<int> priority(static_cast<std::size_t>(n) * n, std::numeric_limits<int>::max());
  for (int w = 0; w < n; ++w) {
    const auto ranked = inst.ranked(AgentId::woman(w));
    std::vector<int> order(ranked.begin(), ranked.end());
    for (std::size_t lo = 0; lo < order.size();) {
      std::size_t hi = lo + 1;
      while (hi < order.size() && inst.wrank(w, order[hi]) == inst.wrank(w, order[lo])) ++hi;
      rng.shuffle(std::span<int>(order.data() + lo, hi - lo));
      lo = hi;
    }
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      priority[static_cast<std::size_t>(w) * n + order[pos]] = static_cast<int>(pos);
    }
  }

  std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
  std::vector<int> husband(static_cast<std::size_t>(n), kSingle);
  std::vector<int> free_men(static_cast<std::size_t>(n));
  std::iota(free_men.rbegin(), free_men.rend(), 0);
  while (!free_men.empty()) {
    const int m = free_men.back();
    free_men.pop_back();
    const auto& list = proposals[static_cast<std::size_t>(m)];
    auto& cursor = next[static_cast<std::size_t>(m)];
    if (cursor >= list.size()) continue;
    const int w = list[cursor++];
    int& h = husband[static_cast<std::size_t>(w)];
    if (h == kSingle) {
      h = m;
    } else if (priority[static_cast<std::size_t>(w) * n + m] <
               priority[static_cast<std::size_t>(w) * n + h]) {
      free_men.push_back(h);
      h = m;
    } else {
      free_men.push_back(m);
    }
  }

  Matching mu(n);
  for (int w = 0; w < n; ++w) {
    if (husband[static_cast<std::size_t>(w)] != kSingle) {
      mu.match(inst, husband[static_cast<std::size_t>(w)], w);
    }
  }
  return mu;
}

Matching random_matching(const Instance& inst, Rng& rng) {
  const int n = inst.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(std::span<int>(perm));
  Matching mu(n);
  for (int m = 0; m < n; ++m) {
    const int w = perm[static_cast<std::size_t>(m)];
    if (inst.mrank(m, w) > 0 && inst.wrank(w, m) > 0) mu.match(inst, m, w);
  }
  return mu;
}

Matching apply_blocking_pair(const Instance& inst, const Matching& mu, const BlockingPair& bp) {
  if (!is_blocking(inst, mu, bp.man, bp.woman)) {
    throw std::domain_error("(" + std::to_string(bp.man) + ", " + std::to_string(bp.woman) +
                            ") is not a blocking pair");
  }
  Matching next = mu;
  next.match(inst, bp.man, bp.woman);
  return next;
}

std::int64_t eval_after_move(const Instance& inst, const Matching& mu, std::int64_t mu_eval,
                             const BlockingPair& bp) {
  const Touched t = touched_by_move(mu, bp);
  const Matching next = apply_blocking_pair(inst, mu, bp);
  return mu_eval - mu.single_count() + next.single_count() -
         touched_blocking_count(inst, mu, t) + touched_blocking_count(inst, next, t);
}

bool greedy_stabilize(const Instance& inst, Matching& mu, Rng& rng) {
  const auto cap = static_cast<std::int64_t>(inst.size()) * inst.size();
  for (std::int64_t move = 0; move < cap; ++move) {
    const auto candidates = undominated_blocking_pairs(inst, mu);
    if (candidates.empty()) return true;
    const auto& bp = candidates[static_cast<std::size_t>(rng.index(candidates.size()))];
    mu.match(inst, bp.man, bp.woman);
  }
  return is_stable(inst, mu);
}

SolveReport ltiu_solve(const Instance& inst, const LtiuParams& params, Objective objective) {
  if (!(params.random_walk_p >= 0.0 && params.random_walk_p <= 1.0)) {
    throw std::invalid_argument("random walk probability must be in [0, 1]");
  }
  const auto start = Clock::now();
  Rng rng(params.seed);
  SolveReport report;
  report.objective = objective;

  Matching mu = random_matching(inst, rng);
  std::int64_t mu_eval = eval_ltiu(inst, mu);
  Matching best = mu;
  std::int64_t best_eval = mu_eval;

  std::vector<std::int64_t> neighbor_evals;
  std::vector<std::size_t> argmin;
  std::uint64_t step = 0;
  while (step < params.step_limit) {
    if (mu_eval == 0) {
      best = mu;
      best_eval = 0;
      break;
    }
    const auto bps = undominated_blocking_pairs(inst, mu);
    if (bps.empty()) {
      if (mu_eval < best_eval) {
        best = mu;
        best_eval = mu_eval;
      }
      mu = random_matching(inst, rng);
      mu_eval = eval_ltiu(inst, mu);
      ++report.stats.restarts;
    } else if (rng.chance(params.random_walk_p)) {
      const auto& bp = bps[static_cast<std::size_t>(rng.index(bps.size()))];
      mu_eval = eval_after_move(inst, mu, mu_eval, bp);
      mu.match(inst, bp.man, bp.woman);
    } else {
      neighbor_evals.clear();
      for (const auto& bp : bps) neighbor_evals.push_back(eval_after_move(inst, mu, mu_eval, bp));
      const std::int64_t lowest = *std::min_element(neighbor_evals.begin(), neighbor_evals.end());
      std::size_t pick;
      if (mu_eval > lowest) {
        argmin.clear();
        for (std::size_t i = 0; i < neighbor_evals.size(); ++i) {
          if (neighbor_evals[i] == lowest) argmin.push_back(i);
        }
        pick = argmin[static_cast<std::size_t>(rng.index(argmin.size()))];
      } else {
        pick = static_cast<std::size_t>(rng.index(bps.size()));
      }
      mu.match(inst, bps[pick].man, bps[pick].woman);
      mu_eval = neighbor_evals[pick];
    }
    ++step;
  }
  report.stats.steps = step;
  report.raw_eval = best_eval;

  if (is_stable(inst, best)) {
    report.stabilized_by = "none";
  } else {
    Matching repaired = best;
    if (greedy_stabilize(inst, repaired, rng)) {
      report.stabilized_by = "greedy";
    } else {
      // Random blocking-pair paths reach stability with probability one but
      // not within any fixed budget.
      repaired = deferred_acceptance(inst, rng.fork());
      report.stabilized_by = "deferred-acceptance";
    }
    best = std::move(repaired);
  }
  report.final_eval = eval_ltiu(inst, best);
  report.cost = cost(inst, best, objective);
  report.matching = std::move(best);
  report.stats.elapsed_ms = ms_since(start);
  return report;
}

std::vector<double> selection_probabilities(std::span<const std::int64_t> fitness) {
  std::vector<double> out(fitness.size(), 0.0);
  if (fitness.empty()) return out;
  const std::int64_t total = std::accumulate(fitness.begin(), fitness.end(), std::int64_t{0});
  for (std::size_t i = 0; i < fitness.size(); ++i) {
    out[i] = total == 0 ? 1.0 / static_cast<double>(fitness.size())
                        : static_cast<double>(fitness[i]) / static_cast<double>(total);
  }
  return out;
}

int select_parent(std::span<const std::int64_t> fitness, Rng& rng) {
  const std::int64_t total = std::accumulate(fitness.begin(), fitness.end(), std::int64_t{0});
  if (total <= 0) return rng.index(fitness.size());
  auto ticket = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(total)));
  for (std::size_t i = 0; i < fitness.size(); ++i) {
    if (ticket < fitness[i]) return static_cast<int>(i);
    ticket -= fitness[i];
  }
  return static_cast<int>(fitness.size()) - 1;
}

namespace {

// `base` with each chain man taking his wife from `donor`.
std::vector<int> crossover_child(const Matching& base, const Matching& donor, int start) {
  std::vector<int> genes = base.assignment();
  int man = start;
  while (true) {
    const int woman = donor.wife_of(man);
    genes[static_cast<std::size_t>(man)] = woman;
    if (woman == kSingle) break;
    const int next = base.husband_of(woman);
    if (next == kSingle || next == start) break;
    man = next;
  }
  return genes;
}

}  // namespace

std::pair<Matching, Matching> cycle_crossover(const Instance& inst, const Matching& first,
                                              const Matching& second, Rng& rng) {
  std::vector<int> differing;
  for (int m = 0; m < inst.size(); ++m) {
    if (first.wife_of(m) != second.wife_of(m)) differing.push_back(m);
  }
  if (differing.empty()) return {first, second};
  const int start = differing[static_cast<std::size_t>(rng.index(differing.size()))];
  const auto a = crossover_child(first, second, start);
  const auto b = crossover_child(second, first, start);
  return {Matching::from_assignment(inst, a), Matching::from_assignment(inst, b)};
}

Matching mutate_pareto(const Instance& inst, const Matching& mu, std::uint64_t seed) {
  const int n = inst.size();
  Rng rng(seed);
  Matching out = mu;
  std::vector<int> men(static_cast<std::size_t>(n));
  std::iota(men.begin(), men.end(), 0);

  // Single man with a single, mutually acceptable woman.
  rng.shuffle(std::span<int>(men));
  for (int m : men) {
    if (out.wife_of(m) != kSingle) continue;
    for (int w : inst.acceptable_partners(AgentId::man(m))) {
      if (out.husband_of(w) != kSingle) continue;
      Matching candidate = out;
      candidate.match(inst, m, w);
      Touched t;
      t.men[0] = m;
      t.women[0] = w;
      if (!introduces_blocking_pair(inst, out, candidate, t)) {
        out = std::move(candidate);
        break;
      }
    }
  }

  // Married (m1, w1) plus singles m2, w2: m1 takes w2, w1 takes m2, and
  // neither m1 nor w1 ends up worse off.
  rng.shuffle(std::span<int>(men));
  for (int m1 : men) {
    const int w1 = out.wife_of(m1);
    if (w1 == kSingle) continue;
    bool applied = false;
    for (int w2 : inst.acceptable_partners(AgentId::man(m1))) {
      if (inst.mrank(m1, w2) > inst.mrank(m1, w1)) break;
      if (out.husband_of(w2) != kSingle) continue;
      for (int m2 : inst.acceptable_partners(AgentId::woman(w1))) {
        if (inst.wrank(w1, m2) > inst.wrank(w1, m1)) break;
        if (out.wife_of(m2) != kSingle) continue;
        Matching candidate = out;
        candidate.match(inst, m1, w2);
        candidate.match(inst, m2, w1);
        Touched t;
        t.men = {m1, m2, kSingle, kSingle};
        t.women = {w1, w2, kSingle, kSingle};
        if (!introduces_blocking_pair(inst, out, candidate, t)) {
          out = std::move(candidate);
          applied = true;
          break;
        }
      }
      if (applied) break;
    }
  }
  return out;
}

SolveReport ga_solve(const Instance& inst, const GaParams& params, Objective objective) {
  if (params.population_size < 2) throw std::invalid_argument("population size must be >= 2");
  if (params.rounds < 0) throw std::invalid_argument("rounds must be non-negative");
  if (!(params.crossover_p >= 0.0 && params.crossover_p <= 1.0) ||
      !(params.mutation_p >= 0.0 && params.mutation_p <= 1.0)) {
    throw std::invalid_argument("probabilities must be in [0, 1]");
  }
  const auto start = Clock::now();
  Rng rng(params.seed);
  const auto size = static_cast<std::size_t>(params.population_size);

  std::vector<Matching> population;
  population.reserve(size);
  // Member 0 is deferred acceptance under the GA's own seed, so elitist
  // survival keeps the result at least as large as that baseline.
  population.push_back(deferred_acceptance(inst, params.seed));
  for (std::size_t i = 1; i < size; ++i) population.push_back(deferred_acceptance(inst, rng.fork()));

  auto by_fitness = [](const Matching& a, const Matching& b) {
    return a.cardinality() > b.cardinality();
  };
  std::stable_sort(population.begin(), population.end(), by_fitness);

  std::vector<std::int64_t> fitness;
  std::vector<Matching> temporary;
  SolveReport report;
  report.objective = objective;

  for (int round = 0; round < params.rounds; ++round) {
    temporary = population;
    fitness.clear();
    for (const auto& mu : population) fitness.push_back(mu.cardinality());

    for (std::size_t pair = 0; pair < size / 2; ++pair) {
      if (!rng.chance(params.crossover_p)) continue;
      const int a = select_parent(fitness, rng);
      const int b = select_parent(fitness, rng);
      const auto& pa = population[static_cast<std::size_t>(a)];
      const auto& pb = population[static_cast<std::size_t>(b)];
      auto [child_a, child_b] = cycle_crossover(inst, pa, pb, rng);
      temporary.push_back(is_stable(inst, child_a) ? std::move(child_a) : pa);
      temporary.push_back(is_stable(inst, child_b) ? std::move(child_b) : pb);
    }

    for (auto& solution : temporary) {
      if (rng.chance(params.mutation_p)) solution = mutate_pareto(inst, solution, rng.fork());
    }

    std::stable_sort(temporary.begin(), temporary.end(), by_fitness);
    temporary.erase(temporary.begin() + static_cast<std::ptrdiff_t>(size), temporary.end());
    population.swap(temporary);
    ++report.stats.steps;
  }

  report.cost = cost(inst, population.front(), objective);
  report.matching = population.front();
  report.stats.elapsed_ms = ms_since(start);
  return report;
}

}  // namespace smti
