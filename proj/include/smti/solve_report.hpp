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

#ifndef SMTI_SOLVE_REPORT_HPP_
#define SMTI_SOLVE_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "smti/core.hpp"
#include "smti/stability.hpp"

namespace smti {

struct SolveStats {
  std::uint64_t nodes_explored = 0;
  std::uint64_t steps = 0;
  std::uint64_t restarts = 0;
  double elapsed_ms = 0.0;
};

struct SolveReport {
  Matching matching{0};
  Objective objective = Objective::MaxCardinality;
  std::int64_t cost = 0;
  // Set only when cost is the optimum over all weakly stable matchings.
  bool optimal = false;
  // The search stopped at its time limit before proving optimality.
  bool timed_out = false;
  SolveStats stats;

  // Local search only: eval (singles + blocking pairs) of the best matching
  // found, before and after stabilization, and how it was stabilized
  // ("none", "greedy" or "deferred-acceptance").
  std::optional<std::int64_t> raw_eval;
  std::optional<std::int64_t> final_eval;
  std::string stabilized_by;
};

}  // namespace smti

#endif  // SMTI_SOLVE_REPORT_HPP_
