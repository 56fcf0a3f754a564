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

// Benchmark grid over (n, p1, p2) cells.
//
// Config is flat `key = value` text; '#' starts a comment line. Keys:
//
//   n               comma-separated sizes                    (required)
//   p1_min p1_max p1_step                                     (required)
//   p2_min p2_max p2_step                                     (required)
//   replicates      instances per cell, >= 1                 (default 10)
//   solvers         comma-separated: bf, bnb, ltiu, ga, da   (required)
//   objective       max_cardinality | egalitarian | sex_equal (default max_cardinality)
//   time_limit_ms   per solve, 0 = none                      (default 0)
//   base_seed       unsigned 64-bit                          (default 0)
//   output          CSV path used by the CLI                 (default bench.csv)
//   ltiu.steps ltiu.walk_p ltiu.seed
//   ga.population ga.rounds ga.crossover ga.mutation ga.seed
//
// Grid value k of a range is min + k * step rounded to 1e-9, for every k with
// value <= max. Probabilities must lie in [0, 1).
//
// Replicate r of cell (p1 index i, p2 index j) is generated with
// grid_seed(base_seed, i, j, r). Solver seeds are mix64(instance seed ^ the
// solver's own seed), and deferred acceptance uses the instance seed.

#ifndef SMTI_BENCH_HPP_
#define SMTI_BENCH_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "smti/heuristics.hpp"
#include "smti/stability.hpp"

namespace smti {

struct BenchConfig {
  std::vector<int> sizes;
  double p1_min = 0.0, p1_max = 0.0, p1_step = 0.0;
  double p2_min = 0.0, p2_max = 0.0, p2_step = 0.0;
  int replicates = 10;
  std::vector<std::string> solvers;
  Objective objective = Objective::MaxCardinality;
  std::int64_t time_limit_ms = 0;
  std::uint64_t base_seed = 0;
  std::string output = "bench.csv";
  LtiuParams ltiu;
  GaParams ga;
};

// Throws ParseError (see encode.hpp) on unknown keys, malformed values or
// violated invariants.
BenchConfig parse_bench_config(std::string_view text);

std::vector<double> grid_values(double min, double max, double step);

struct BenchRow {
  std::string solver;
  int n = 0;
  double p1 = 0.0;
  double p2 = 0.0;
  double mean_time_ms = 0.0;  // over solved replicates
  double mean_cost = 0.0;     // over solved replicates
  int solved_count = 0;
  int optimal_count = 0;
  int timed_out_count = 0;
  int refused_count = 0;  // brute force beyond its size limit
};

// Rows ordered by solver (config order), n, p1, p2 regardless of jobs.
std::vector<BenchRow> run_bench(const BenchConfig& config, int jobs = 1);

// Header `solver,n,p1,p2,mean_time_ms,mean_cost,solved_count,optimal_count`.
// A cell where nothing was solved shows TO in both mean columns when a
// replicate hit the time limit, NA otherwise.
std::string format_csv(const std::vector<BenchRow>& rows);

}  // namespace smti

#endif  // SMTI_BENCH_HPP_
