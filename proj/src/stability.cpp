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

#include "smti/stability.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace smti {

std::string_view to_string(BlockingCase c) {
  switch (c) {
    case BlockingCase::A3a: return "A3a";
    case BlockingCase::A3b: return "A3b";
    case BlockingCase::A3c: return "A3c";
    case BlockingCase::A3d: return "A3d";
  }
  return "?";
}

std::string_view to_string(Objective objective) {
  switch (objective) {
    case Objective::MaxCardinality: return "max_cardinality";
    case Objective::Egalitarian: return "egalitarian";
    case Objective::SexEqual: return "sex_equal";
  }
  return "?";
}

std::optional<Objective> parse_objective(std::string_view name) {
  std::string normalized(name);
  std::replace(normalized.begin(), normalized.end(), '-', '_');
  if (normalized == "max_cardinality" || normalized == "maxcard") return Objective::MaxCardinality;
  if (normalized == "egalitarian") return Objective::Egalitarian;
  if (normalized == "sex_equal") return Objective::SexEqual;
  return std::nullopt;
}

std::optional<BlockingPair> is_blocking(const Instance& inst, const Matching& mu, int man,
                                        int woman) {
  if (!inst.acceptable(man, woman)) return std::nullopt;  // A1
  const int wife = mu.wife_of(man);
  const int husband = mu.husband_of(woman);
  if (wife == woman) return std::nullopt;  // A2

  const bool man_single = wife == kSingle;
  const bool woman_single = husband == kSingle;
  const bool man_prefers = !man_single && inst.mrank(man, woman) < inst.mrank(man, wife);
  const bool woman_prefers = !woman_single && inst.wrank(woman, man) < inst.wrank(woman, husband);

  if (man_single && woman_single) return BlockingPair{man, woman, BlockingCase::A3a};
  if (man_prefers && woman_single) return BlockingPair{man, woman, BlockingCase::A3b};
  if (woman_prefers && man_single) return BlockingPair{man, woman, BlockingCase::A3c};
  if (man_prefers && woman_prefers) return BlockingPair{man, woman, BlockingCase::A3d};
  return std::nullopt;
}

std::vector<BlockingPair> blocking_pairs(const Instance& inst, const Matching& mu) {
  std::vector<BlockingPair> out;
  for (int m = 0; m < inst.size(); ++m) {
    for (int w = 0; w < inst.size(); ++w) {
      if (auto bp = is_blocking(inst, mu, m, w)) out.push_back(*bp);
    }
  }
  return out;
}

std::size_t count_blocking_pairs(const Instance& inst, const Matching& mu) {
  std::size_t count = 0;
  for (int m = 0; m < inst.size(); ++m) {
    for (int w : inst.acceptable_partners(AgentId::man(m))) {
      if (is_blocking(inst, mu, m, w)) ++count;
    }
  }
  return count;
}

bool is_stable(const Instance& inst, const Matching& mu) {
  for (int m = 0; m < inst.size(); ++m) {
    for (int w : inst.acceptable_partners(AgentId::man(m))) {
      if (is_blocking(inst, mu, m, w)) return false;
    }
  }
  return true;
}

std::vector<BlockingPair> undominated_blocking_pairs(const Instance& inst, const Matching& mu) {
  const auto all = blocking_pairs(inst, mu);
  const auto n = static_cast<std::size_t>(inst.size());
  constexpr int kNone = std::numeric_limits<int>::max();
  // Best rank among each agent's blocking partners.
  std::vector<int> best_for_man(n, kNone);
  std::vector<int> best_for_woman(n, kNone);
  for (const auto& bp : all) {
    auto& bm = best_for_man[static_cast<std::size_t>(bp.man)];
    auto& bw = best_for_woman[static_cast<std::size_t>(bp.woman)];
    bm = std::min(bm, inst.mrank(bp.man, bp.woman));
    bw = std::min(bw, inst.wrank(bp.woman, bp.man));
  }
  std::vector<BlockingPair> out;
  for (const auto& bp : all) {
    const bool men_undominated =
        inst.mrank(bp.man, bp.woman) == best_for_man[static_cast<std::size_t>(bp.man)];
    const bool women_undominated =
        inst.wrank(bp.woman, bp.man) == best_for_woman[static_cast<std::size_t>(bp.woman)];
    if (men_undominated || women_undominated) out.push_back(bp);
  }
  return out;
}

std::int64_t cost(const Instance& inst, const Matching& mu, Objective objective) {
  std::int64_t men_sum = 0;
  std::int64_t women_sum = 0;
  for (int m = 0; m < inst.size(); ++m) {
    const int w = mu.wife_of(m);
    if (w == kSingle) continue;
    men_sum += inst.mrank(m, w);
    women_sum += inst.wrank(w, m);
  }
  switch (objective) {
    case Objective::MaxCardinality: return mu.cardinality();
    case Objective::Egalitarian: return men_sum + women_sum;
    case Objective::SexEqual: return std::abs(men_sum - women_sum);
  }
  return 0;
}

std::int64_t eval_ltiu(const Instance& inst, const Matching& mu) {
  return mu.single_count() + static_cast<std::int64_t>(count_blocking_pairs(inst, mu));
}

}  // namespace smti
