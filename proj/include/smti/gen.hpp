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

#ifndef SMTI_GEN_HPP_
#define SMTI_GEN_HPP_

#include <cstdint>

#include "smti/core.hpp"

namespace smti {

struct GenParams {
  int n = 10;
  // Probability of deleting each entry of a full list. Must be in [0, 1).
  double p1 = 0.0;
  // Probability of tying an entry with its predecessor. Must be in [0, 1].
  double p2 = 0.0;
  std::uint64_t seed = 0;
};

// Random instance in the Gent-Prosser style.
//
// Agents are processed men 0..n-1, then women 0..n-1, from a single Rng
// stream seeded with params.seed. For each agent:
//   1. shuffle the n opposite-side indices (Rng::shuffle),
//   2. walk the permutation and drop each entry when unit() < p1,
//   3. if nothing survived, repeat from 1 for this agent only,
//   4. walk the survivors: the first gets rank 1; each later one keeps its
//      predecessor's rank when unit() < p2, else takes predecessor + 1.
//
// Acceptability is not made mutual. Throws std::invalid_argument on n <= 0 or
// probabilities outside their ranges.
Instance generate(const GenParams& params);

}  // namespace smti

#endif  // SMTI_GEN_HPP_
