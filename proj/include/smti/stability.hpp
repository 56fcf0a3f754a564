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

// Weak stability: blocking pairs, dominance among them, and objective costs.
//
// A pair (x, y) blocks a matching when x and y are mutually acceptable, not
// married to each other, and one of
//   A3a  both are single,
//   A3b  x strictly prefers y to his wife and y is single,
//   A3c  y strictly prefers x to her husband and x is single,
//   A3d  both strictly prefer each other to their partners.
// Ties never block.

#ifndef SMTI_STABILITY_HPP_
#define SMTI_STABILITY_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "smti/core.hpp"

namespace smti {

enum class BlockingCase : std::uint8_t { A3a, A3b, A3c, A3d };

std::string_view to_string(BlockingCase c);

struct BlockingPair {
  int man;
  int woman;
  // First satisfied case in a, b, c, d order. Diagnostic only.
  BlockingCase kind;

  friend bool operator==(const BlockingPair&, const BlockingPair&) = default;
};

enum class Objective : std::uint8_t { MaxCardinality, Egalitarian, SexEqual };

std::string_view to_string(Objective objective);
// Accepts "max_cardinality", "egalitarian", "sex_equal" (also with '-').
std::optional<Objective> parse_objective(std::string_view name);

std::optional<BlockingPair> is_blocking(const Instance& inst, const Matching& mu, int man,
                                        int woman);

// All blocking pairs, man-major then woman.
std::vector<BlockingPair> blocking_pairs(const Instance& inst, const Matching& mu);

std::size_t count_blocking_pairs(const Instance& inst, const Matching& mu);

bool is_stable(const Instance& inst, const Matching& mu);

// Union of men-undominated and women-undominated blocking pairs, in the same
// order as blocking_pairs. (m, w) is men-dominated when some other blocking
// pair (m, w') has m strictly preferring w'; women-dominated symmetrically.
std::vector<BlockingPair> undominated_blocking_pairs(const Instance& inst, const Matching& mu);

// Objective value of mu. Singles contribute nothing to the rank sums.
//   MaxCardinality: number of pairs (higher is better)
//   Egalitarian:    sum of mrank + wrank over pairs (lower is better)
//   SexEqual:       |sum of mrank - sum of wrank| over pairs (lower is better)
std::int64_t cost(const Instance& inst, const Matching& mu, Objective objective);

// True when cost a is strictly better than cost b under objective.
constexpr bool better_cost(Objective objective, std::int64_t a, std::int64_t b) {
  return objective == Objective::MaxCardinality ? a > b : a < b;
}

// Singles (men and women) plus blocking pairs.
std::int64_t eval_ltiu(const Instance& inst, const Matching& mu);

}  // namespace smti

#endif  // SMTI_STABILITY_HPP_
