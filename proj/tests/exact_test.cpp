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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "smti/core.hpp"
#include "smti/exact.hpp"
#include "smti/gen.hpp"
#include "smti/stability.hpp"
#include "support.hpp"

namespace smti {
namespace {

using testing::for_each_assignment;
using testing::oracle_costs;
using testing::oracle_optima;
using testing::oracle_stable;
using testing::random_instance;

constexpr Objective kObjectives[] = {Objective::MaxCardinality, Objective::Egalitarian,
                                     Objective::SexEqual};

std::int64_t pick(const testing::OracleCosts& c, Objective o) {
  switch (o) {
    case Objective::MaxCardinality:
      return c.cardinality;
    case Objective::Egalitarian:
      return c.egalitarian;
    case Objective::SexEqual:
      return c.sex_equal;
  }
  return -1;
}

Instance mutual_one() { return Instance::from_ranks(1, {1}, {1}); }

TEST(BruteForce, MutualOne) {
  const Instance inst = mutual_one();
  EXPECT_EQ(brute_force(inst, Objective::MaxCardinality).cost, 1);
  EXPECT_EQ(brute_force(inst, Objective::Egalitarian).cost, 2);
  EXPECT_EQ(brute_force(inst, Objective::SexEqual).cost, 0);
  EXPECT_TRUE(brute_force(inst, Objective::SexEqual).optimal);
}

TEST(BruteForce, NoAcceptablePairs) {
  // Man i ranks only wi; woman i ranks only the other man.
  const Instance inst = Instance::from_lists({{{0}}, {{1}}}, {{{1}}, {{0}}});
  EXPECT_EQ(inst.acceptable_pair_count(), 0);
  const SolveReport r = brute_force(inst, Objective::MaxCardinality);
  EXPECT_EQ(r.cost, 0);
  EXPECT_EQ(r.matching.cardinality(), 0);
  EXPECT_TRUE(is_stable(inst, r.matching));
}

// m0: w0=1, w1=2; m1: w0=1; w0: m0=1, m1=2; w1: m0=1. The four candidate
// matchings, checked against the definition by hand:
//   {}                   (m0,w0) A3a blocks
//   {(m0,w0)}            stable
//   {(m0,w1)}            (m1,w0) A3a blocks
//   {(m1,w0)}            (m0,w1) A3a blocks
//   {(m0,w1),(m1,w0)}    (m0,w0) A3d blocks
// so {(m0,w0)} is the only stable matching.
TEST(BruteForce, TwoByTwoFixture) {
  const Instance inst = Instance::from_lists({{{0}, {1}}, {{0}}}, {{{0}, {1}}, {{0}}});
  int stable = 0;
  for_each_assignment(inst, [&](const std::vector<int>& wife) {
    if (oracle_stable(inst, wife)) {
      ++stable;
      EXPECT_EQ(wife, (std::vector<int>{0, -1}));
    }
  });
  EXPECT_EQ(stable, 1);
  for (Objective o : kObjectives) {
    const SolveReport r = brute_force(inst, o);
    EXPECT_EQ(r.matching.assignment(), (std::vector<int>{0, -1}));
  }
  EXPECT_EQ(brute_force(inst, Objective::MaxCardinality).cost, 1);
  EXPECT_EQ(brute_force(inst, Objective::Egalitarian).cost, 2);
  EXPECT_EQ(brute_force(inst, Objective::SexEqual).cost, 0);
}

TEST(BruteForce, RefusesLargeInstances) {
  const Instance inst = generate({kBruteForceMaxSize + 1, 0.5, 0.5, 1});
  EXPECT_THROW(brute_force(inst, Objective::MaxCardinality), SizeError);
}

TEST(BruteForce, MatchesOracleWithLexicographicTieBreak) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Instance inst = random_instance(rng, n, 0.6, 3);
    for (Objective o : kObjectives) {
      // Oracle: first optimum in lexicographic order of the assignment with
      // single = -1.
      std::vector<int> best_wife;
      std::int64_t best = 0;
      bool have = false;
      std::vector<std::vector<int>> stable;
      for_each_assignment(inst, [&](const std::vector<int>& wife) {
        if (oracle_stable(inst, wife)) stable.push_back(wife);
      });
      std::sort(stable.begin(), stable.end());
      for (const auto& wife : stable) {
        const std::int64_t c = pick(oracle_costs(inst, wife), o);
        if (!have || better_cost(o, c, best)) {
          best = c;
          best_wife = wife;
          have = true;
        }
      }
      ASSERT_TRUE(have);
      const SolveReport r = brute_force(inst, o);
      EXPECT_EQ(r.cost, best);
      EXPECT_EQ(r.matching.assignment(), best_wife);
      EXPECT_TRUE(r.optimal);
    }
  }
}

TEST(BranchAndBound, MutualOne) {
  for (Objective o : kObjectives) {
    const SolveReport r = branch_and_bound(mutual_one(), o);
    EXPECT_EQ(r.cost, brute_force(mutual_one(), o).cost);
    EXPECT_TRUE(r.optimal);
    EXPECT_LE(r.stats.nodes_explored, 3U);
  }
}

TEST(BranchAndBound, AgreesWithOracle) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Instance inst = random_instance(rng, n, 0.3 + 0.6 * static_cast<double>(rng() % 2), 4);
    const auto optima = oracle_optima(inst);
    for (Objective o : kObjectives) {
      const SolveReport r = branch_and_bound(inst, o);
      ASSERT_TRUE(r.optimal);
      EXPECT_FALSE(r.timed_out);
      EXPECT_EQ(r.cost, pick(optima, o));
      EXPECT_EQ(r.cost, cost(inst, r.matching, o));
      EXPECT_TRUE(oracle_stable(inst, r.matching.assignment()));
      EXPECT_EQ(violated_stability_rows(inst, r.matching), 0U);
    }
  }
}

TEST(BranchAndBound, ClassicalInstancesArePerfect) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = generate({10, 0.0, 0.0, seed});
    const SolveReport r = branch_and_bound(inst, Objective::MaxCardinality);
    EXPECT_TRUE(r.optimal);
    EXPECT_EQ(r.cost, 10);
  }
}

TEST(BranchAndBound, TimeoutKeepsStableIncumbent) {
  const Instance inst = generate({40, 0.3, 0.7, 5});
  const SolveReport r = branch_and_bound(inst, Objective::SexEqual, 1);
  if (r.timed_out) { EXPECT_FALSE(r.optimal); }
  EXPECT_TRUE(is_stable(inst, r.matching));
  EXPECT_EQ(r.cost, cost(inst, r.matching, Objective::SexEqual));
}

TEST(BranchAndBound, RelaxingTimeLimitNeverWorsens) {
  const Instance inst = generate({30, 0.4, 0.6, 8});
  std::int64_t previous = branch_and_bound(inst, Objective::Egalitarian, 1).cost;
  for (std::int64_t limit : {5, 50, 500}) {
    const SolveReport r = branch_and_bound(inst, Objective::Egalitarian, limit);
    EXPECT_LE(r.cost, previous);
    previous = r.cost;
  }
}

TEST(StabilityRows, ZeroExactlyWhenStable) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Instance inst = random_instance(rng, n, 0.6, 3);
    const Matching mu = Matching::from_assignment(inst, testing::random_assignment(rng, inst));
    EXPECT_EQ(violated_stability_rows(inst, mu) == 0, oracle_stable(inst, mu.assignment()));
  }
}

}  // namespace
}  // namespace smti
