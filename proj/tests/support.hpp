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

// Test oracles and random builders. Nothing here calls the stability, exact
// or heuristics modules; oracles work directly on the rank tables.

#ifndef SMTI_TESTS_SUPPORT_HPP_
#define SMTI_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

#include "smti/core.hpp"

namespace smti::testing {

struct OraclePair {
  int man;
  int woman;
  char kind;  // 'a'..'d'
  friend bool operator==(const OraclePair&, const OraclePair&) = default;
};

// Blocking pairs straight from the definition, man-major.
inline std::vector<OraclePair> oracle_blocking(const Instance& inst,
                                               const std::vector<int>& wife) {
  const int n = inst.size();
  std::vector<int> husband(static_cast<std::size_t>(n), -1);
  for (int m = 0; m < n; ++m) {
    if (wife[static_cast<std::size_t>(m)] >= 0) husband[static_cast<std::size_t>(wife[m])] = m;
  }
  std::vector<OraclePair> out;
  for (int m = 0; m < n; ++m) {
    for (int w = 0; w < n; ++w) {
      if (inst.mrank(m, w) == 0 || inst.wrank(w, m) == 0) continue;
      const int mw = wife[static_cast<std::size_t>(m)];
      const int wh = husband[static_cast<std::size_t>(w)];
      if (mw == w) continue;
      const bool m_single = mw < 0;
      const bool w_single = wh < 0;
      const bool m_prefers = !m_single && inst.mrank(m, w) < inst.mrank(m, mw);
      const bool w_prefers = !w_single && inst.wrank(w, m) < inst.wrank(w, wh);
      char kind = 0;
      if (m_single && w_single) {
        kind = 'a';
      } else if (m_prefers && w_single) {
        kind = 'b';
      } else if (w_prefers && m_single) {
        kind = 'c';
      } else if (m_prefers && w_prefers) {
        kind = 'd';
      }
      if (kind != 0) out.push_back({m, w, kind});
    }
  }
  return out;
}

inline bool oracle_stable(const Instance& inst, const std::vector<int>& wife) {
  return oracle_blocking(inst, wife).empty();
}

// Calls visit(wife) for every injective partial assignment over mutually
// acceptable pairs.
inline void for_each_assignment(const Instance& inst,
                                const std::function<void(const std::vector<int>&)>& visit) {
  const int n = inst.size();
  std::vector<int> wife(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void(int)> rec = [&](int m) {
    if (m == n) {
      visit(wife);
      return;
    }
    rec(m + 1);
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || inst.mrank(m, w) == 0 || inst.wrank(w, m) == 0) {
        continue;
      }
      used[static_cast<std::size_t>(w)] = true;
      wife[static_cast<std::size_t>(m)] = w;
      rec(m + 1);
      wife[static_cast<std::size_t>(m)] = -1;
      used[static_cast<std::size_t>(w)] = false;
    }
  };
  rec(0);
}

struct OracleCosts {
  std::int64_t cardinality = 0;
  std::int64_t egalitarian = 0;
  std::int64_t sex_equal = 0;
};

inline OracleCosts oracle_costs(const Instance& inst, const std::vector<int>& wife) {
  OracleCosts c;
  std::int64_t men = 0;
  std::int64_t women = 0;
  for (int m = 0; m < inst.size(); ++m) {
    const int w = wife[static_cast<std::size_t>(m)];
    if (w < 0) continue;
    ++c.cardinality;
    men += inst.mrank(m, w);
    women += inst.wrank(w, m);
  }
  c.egalitarian = men + women;
  c.sex_equal = std::llabs(men - women);
  return c;
}

// Optima over all stable assignments: max cardinality, min egalitarian,
// min sex-equal.
inline OracleCosts oracle_optima(const Instance& inst) {
  OracleCosts best{-1, INT64_MAX, INT64_MAX};
  for_each_assignment(inst, [&](const std::vector<int>& wife) {
    if (!oracle_stable(inst, wife)) return;
    const OracleCosts c = oracle_costs(inst, wife);
    best.cardinality = std::max(best.cardinality, c.cardinality);
    best.egalitarian = std::min(best.egalitarian, c.egalitarian);
    best.sex_equal = std::min(best.sex_equal, c.sex_equal);
  });
  return best;
}

// Random instance built from rank tables: each agent ranks every partner
// with probability keep (at least one), ranks drawn from 1..levels and then
// compressed to contiguous levels.
inline Instance random_instance(std::mt19937_64& rng, int n, double keep, int max_levels) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> level(1, max_levels);
  std::uniform_int_distribution<int> pick(0, n - 1);
  auto make_table = [&] {
    std::vector<int> table(static_cast<std::size_t>(n * n), 0);
    for (int a = 0; a < n; ++a) {
      int* row = &table[static_cast<std::size_t>(a * n)];
      for (int b = 0; b < n; ++b) {
        if (coin(rng) < keep) row[b] = level(rng);
      }
      bool any = false;
      for (int b = 0; b < n; ++b) any = any || row[b] != 0;
      if (!any) row[pick(rng)] = level(rng);
      std::vector<int> present(static_cast<std::size_t>(max_levels) + 1, 0);
      for (int b = 0; b < n; ++b) present[static_cast<std::size_t>(row[b])] = 1;
      std::vector<int> remap(present.size(), 0);
      int next = 0;
      for (std::size_t r = 1; r < present.size(); ++r) {
        if (present[r] != 0) remap[r] = ++next;
      }
      for (int b = 0; b < n; ++b) row[b] = remap[static_cast<std::size_t>(row[b])];
    }
    return table;
  };
  std::vector<int> mrank = make_table();
  std::vector<int> wrank = make_table();
  return Instance::from_ranks(n, std::move(mrank), std::move(wrank));
}

// Random injective assignment over mutually acceptable pairs.
inline std::vector<int> random_assignment(std::mt19937_64& rng, const Instance& inst) {
  const int n = inst.size();
  std::vector<int> wife(static_cast<std::size_t>(n), -1);
  std::vector<int> women(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w) women[static_cast<std::size_t>(w)] = w;
  std::shuffle(women.begin(), women.end(), rng);
  std::bernoulli_distribution keep(0.7);
  for (int m = 0; m < n; ++m) {
    const int w = women[static_cast<std::size_t>(m)];
    if (inst.mrank(m, w) != 0 && inst.wrank(w, m) != 0 && keep(rng)) {
      wife[static_cast<std::size_t>(m)] = w;
    }
  }
  return wife;
}

}  // namespace smti::testing

#endif  // SMTI_TESTS_SUPPORT_HPP_
