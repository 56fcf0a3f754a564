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

#include "smti/gen.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "smti/rng.hpp"

namespace smti {

namespace {

void draw_list(Rng& rng, const GenParams& params, std::vector<int>& order,
               std::vector<int>& kept, int* row) {
  do {
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(std::span<int>(order));
    kept.clear();
    for (int b : order) {
      if (!rng.chance(params.p1)) kept.push_back(b);
    }
  } while (kept.empty());

  int rank = 1;
  row[kept.front()] = rank;
  for (std::size_t i = 1; i < kept.size(); ++i) {
    if (!rng.chance(params.p2)) ++rank;
    row[kept[i]] = rank;
  }
}

}  // namespace

Instance generate(const GenParams& params) {
  if (params.n <= 0) throw std::invalid_argument("n must be positive");
  if (!(params.p1 >= 0.0 && params.p1 < 1.0)) throw std::invalid_argument("p1 must be in [0, 1)");
  if (!(params.p2 >= 0.0 && params.p2 <= 1.0)) throw std::invalid_argument("p2 must be in [0, 1]");

  const int n = params.n;
  Rng rng(params.seed);
  std::vector<int> mrank(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> wrank(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::vector<int> kept;
  kept.reserve(static_cast<std::size_t>(n));

  for (int m = 0; m < n; ++m) {
    draw_list(rng, params, order, kept, mrank.data() + static_cast<std::size_t>(m) * n);
  }
  for (int w = 0; w < n; ++w) {
    draw_list(rng, params, order, kept, wrank.data() + static_cast<std::size_t>(w) * n);
  }
  return Instance::from_ranks(n, std::move(mrank), std::move(wrank));
}

}  // namespace smti
