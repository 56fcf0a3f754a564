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

// Exact solvers over weakly stable matchings.

#ifndef SMTI_EXACT_HPP_
#define SMTI_EXACT_HPP_

#include <cstdint>
#include <stdexcept>

#include "smti/core.hpp"
#include "smti/solve_report.hpp"
#include "smti/stability.hpp"

namespace smti {

inline constexpr int kBruteForceMaxSize = 8;

class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Enumerates every injective partial assignment over mutually acceptable
// pairs, keeps the stable ones and returns an optimum. Among optima the
// lexicographically smallest assignment vector wins, with single = -1.
// Throws SizeError when n > kBruteForceMaxSize.
SolveReport brute_force(const Instance& inst, Objective objective);

// Depth-first branch and bound over men in index order. Each man takes a
// mutually acceptable woman (by rank, then index) or stays single (last).
// Nodes are pruned on capacity, on stability rows
//   1 - sum_{q ranked by i at least as well as j} x_iq
//     <= sum_{p ranked by j at least as well as i} x_pj
// once they are decided, and on objective bounds. The incumbent starts from
// deferred acceptance. time_limit_ms == 0 means no limit; on timeout the
// incumbent is returned with optimal == false and timed_out == true.
SolveReport branch_and_bound(const Instance& inst, Objective objective,
                             std::int64_t time_limit_ms = 0);

// Number of violated stability rows (one per mutually acceptable pair) for
// mu, evaluated directly from the rank sets. Zero iff mu is weakly stable.
std::size_t violated_stability_rows(const Instance& inst, const Matching& mu);

}  // namespace smti

#endif  // SMTI_EXACT_HPP_
