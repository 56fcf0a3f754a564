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

#include "smti/exact.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <string>
#include <vector>

#include "smti/heuristics.hpp"

namespace smti {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

class Enumerator {
 public:
  Enumerator(const Instance& inst, Objective objective)
      : inst_(inst),
        objective_(objective),
        genes_(static_cast<std::size_t>(inst.size()), kSingle),
        used_(static_cast<std::size_t>(inst.size()), false) {}

  void run() { visit(0); }

  bool found() const { return found_; }
  const std::vector<int>& best_genes() const { return best_genes_; }
  std::int64_t best_cost() const { return best_cost_; }
  std::uint64_t leaves() const { return leaves_; }

 private:
  void visit(int man) {
    if (man == inst_.size()) {
      ++leaves_;
      const Matching mu = Matching::from_assignment(inst_, genes_);
      if (!is_stable(inst_, mu)) return;
      const std::int64_t c = cost(inst_, mu, objective_);
      if (!found_ || better_cost(objective_, c, best_cost_) ||
          (c == best_cost_ && genes_ < best_genes_)) {
        found_ = true;
        best_cost_ = c;
        best_genes_ = genes_;
      }
      return;
    }
    const auto slot = static_cast<std::size_t>(man);
    genes_[slot] = kSingle;
    visit(man + 1);
    for (int w : inst_.acceptable_partners(AgentId::man(man))) {
      if (used_[static_cast<std::size_t>(w)]) continue;
      used_[static_cast<std::size_t>(w)] = true;
      genes_[slot] = w;
      visit(man + 1);
      used_[static_cast<std::size_t>(w)] = false;
    }
    genes_[slot] = kSingle;
  }

  const Instance& inst_;
  Objective objective_;
  std::vector<int> genes_;
  std::vector<bool> used_;
  bool found_ = false;
  std::vector<int> best_genes_;
  std::int64_t best_cost_ = 0;
  std::uint64_t leaves_ = 0;
};

constexpr int kNoNeed = std::numeric_limits<int>::max();

class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, Objective objective, std::int64_t time_limit_ms)
      : inst_(inst),
        n_(inst.size()),
        objective_(objective),
        time_limit_ms_(time_limit_ms),
        assign_(static_cast<std::size_t>(n_), kSingle),
        owner_(static_cast<std::size_t>(n_), kSingle),
        need_(static_cast<std::size_t>(n_), kNoNeed),
        best_(n_) {
    // last_at_most_[w * (n + 1) + r]: highest man index acceptable to w at
    // rank <= r, or -1.
    last_at_most_.assign(static_cast<std::size_t>(n_) * (n_ + 1), -1);
    for (int w = 0; w < n_; ++w) {
      int* row = last_at_most_.data() + static_cast<std::size_t>(w) * (n_ + 1);
      for (int m : inst.acceptable_partners(AgentId::woman(w))) {
        const int r = inst.wrank(w, m);
        row[r] = std::max(row[r], m);
      }
      for (int r = 1; r <= n_; ++r) row[r] = std::max(row[r], row[r - 1]);
    }
    // Suffix extremes of mrank - wrank for the sex-equal bound; a single
    // man contributes 0.
    suffix_lo_.assign(static_cast<std::size_t>(n_) + 1, 0);
    suffix_hi_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int m = n_ - 1; m >= 0; --m) {
      std::int64_t lo = 0;
      std::int64_t hi = 0;
      for (int w : inst.acceptable_partners(AgentId::man(m))) {
        const std::int64_t delta = inst.mrank(m, w) - inst.wrank(w, m);
        lo = std::min(lo, delta);
        hi = std::max(hi, delta);
      }
      suffix_lo_[static_cast<std::size_t>(m)] = suffix_lo_[static_cast<std::size_t>(m) + 1] + lo;
      suffix_hi_[static_cast<std::size_t>(m)] = suffix_hi_[static_cast<std::size_t>(m) + 1] + hi;
    }
  }

  SolveReport solve() {
    start_ = Clock::now();
    best_ = deferred_acceptance(inst_, 0);
    best_cost_ = cost(inst_, best_, objective_);
    search(0);

    SolveReport report;
    report.objective = objective_;
    report.matching = best_;
    report.cost = best_cost_;
    report.optimal = !timed_out_;
    report.timed_out = timed_out_;
    report.stats.nodes_explored = nodes_;
    report.stats.elapsed_ms = ms_since(start_);
    return report;
  }

 private:
  void search(int man) {
    ++nodes_;
    if (time_limit_ms_ > 0 && (nodes_ & 1023) == 0 && ms_since(start_) > time_limit_ms_) {
      timed_out_ = true;
    }
    if (timed_out_) return;

    if (man == n_) {
      leaf();
      return;
    }
    if (!can_improve(man)) return;

    for (int w : inst_.acceptable_partners(AgentId::man(man))) {
      if (owner_[static_cast<std::size_t>(w)] != kSingle) continue;
      if (inst_.wrank(w, man) > need_[static_cast<std::size_t>(w)]) continue;
      branch(man, w);
      if (timed_out_) return;
    }
    branch(man, kSingle);
  }

  void branch(int man, int woman) {
    const std::size_t mark = trail_.size();
    assign_[static_cast<std::size_t>(man)] = woman;
    if (woman != kSingle) {
      owner_[static_cast<std::size_t>(woman)] = man;
      ++pairs_;
      men_sum_ += inst_.mrank(man, woman);
      women_sum_ += inst_.wrank(woman, man);
    }

    if (rows_of_man_hold(man, woman) && unassigned_rows_satisfiable(man)) search(man + 1);

    while (trail_.size() > mark) {
      need_[static_cast<std::size_t>(trail_.back().first)] = trail_.back().second;
      trail_.pop_back();
    }
    if (woman != kSingle) {
      owner_[static_cast<std::size_t>(woman)] = kSingle;
      --pairs_;
      men_sum_ -= inst_.mrank(man, woman);
      women_sum_ -= inst_.wrank(woman, man);
    }
    assign_[static_cast<std::size_t>(man)] = kSingle;
  }

  // Rows (man, j) become decided on their left side once man is assigned:
  // when man is single or strictly prefers j to his wife, j must end up with
  // someone she ranks at least as well as man.
  bool rows_of_man_hold(int man, int wife) {
    const int wife_rank = wife == kSingle ? kNoNeed : inst_.mrank(man, wife);
    for (int j : inst_.acceptable_partners(AgentId::man(man))) {
      if (inst_.mrank(man, j) >= wife_rank) break;
      const int threshold = inst_.wrank(j, man);
      const int holder = owner_[static_cast<std::size_t>(j)];
      if (holder != kSingle) {
        if (inst_.wrank(j, holder) > threshold) return false;
      } else if (threshold < need_[static_cast<std::size_t>(j)]) {
        trail_.emplace_back(j, need_[static_cast<std::size_t>(j)]);
        need_[static_cast<std::size_t>(j)] = threshold;
      }
    }
    return true;
  }

  // Every unassigned woman with a pending requirement still has a later man
  // who could satisfy it.
  bool unassigned_rows_satisfiable(int man) const {
    for (int w = 0; w < n_; ++w) {
      const int need = need_[static_cast<std::size_t>(w)];
      if (need == kNoNeed || owner_[static_cast<std::size_t>(w)] != kSingle) continue;
      if (last_at_most_[static_cast<std::size_t>(w) * (n_ + 1) + need] <= man) return false;
    }
    return true;
  }

  bool can_improve(int man) const {
    switch (objective_) {
      case Objective::MaxCardinality: {
        int men_left = 0;
        for (int m = man; m < n_; ++m) {
          for (int w : inst_.acceptable_partners(AgentId::man(m))) {
            if (owner_[static_cast<std::size_t>(w)] == kSingle) {
              ++men_left;
              break;
            }
          }
        }
        const int women_left = n_ - pairs_;
        return pairs_ + std::min(men_left, women_left) > best_cost_;
      }
      case Objective::Egalitarian: {
        std::int64_t bound = men_sum_ + women_sum_;
        for (int w = 0; w < n_; ++w) {
          // A pending requirement forces a future pair worth at least 2.
          if (need_[static_cast<std::size_t>(w)] != kNoNeed &&
              owner_[static_cast<std::size_t>(w)] == kSingle) {
            bound += 2;
          }
        }
        return bound < best_cost_;
      }
      case Objective::SexEqual: {
        const std::int64_t d = men_sum_ - women_sum_;
        const std::int64_t lo = d + suffix_lo_[static_cast<std::size_t>(man)];
        const std::int64_t hi = d + suffix_hi_[static_cast<std::size_t>(man)];
        const std::int64_t bound = lo > 0 ? lo : (hi < 0 ? -hi : 0);
        return bound < best_cost_;
      }
    }
    return true;
  }

  void leaf() {
    const Matching mu = Matching::from_assignment(inst_, assign_);
    if (!is_stable(inst_, mu)) return;
    const std::int64_t c = cost(inst_, mu, objective_);
    if (better_cost(objective_, c, best_cost_)) {
      best_cost_ = c;
      best_ = mu;
    }
  }

  const Instance& inst_;
  const int n_;
  const Objective objective_;
  const std::int64_t time_limit_ms_;

  std::vector<int> assign_;
  std::vector<int> owner_;
  std::vector<int> need_;
  std::vector<std::pair<int, int>> trail_;
  std::vector<int> last_at_most_;
  std::vector<std::int64_t> suffix_lo_;
  std::vector<std::int64_t> suffix_hi_;

  int pairs_ = 0;
  std::int64_t men_sum_ = 0;
  std::int64_t women_sum_ = 0;

  Matching best_;
  std::int64_t best_cost_ = 0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
  Clock::time_point start_;
};

}  // namespace

SolveReport brute_force(const Instance& inst, Objective objective) {
  if (inst.size() > kBruteForceMaxSize) {
    throw SizeError("brute force is limited to n <= " + std::to_string(kBruteForceMaxSize) +
                    ", got n = " + std::to_string(inst.size()));
  }
  const auto start = Clock::now();
  Enumerator enumerator(inst, objective);
  enumerator.run();

  SolveReport report;
  report.objective = objective;
  // The empty assignment is always enumerated and some stable matching
  // exists, so found() holds.
  report.matching = Matching::from_assignment(inst, enumerator.best_genes());
  report.cost = enumerator.best_cost();
  report.optimal = true;
  report.stats.nodes_explored = enumerator.leaves();
  report.stats.elapsed_ms = ms_since(start);
  return report;
}

SolveReport branch_and_bound(const Instance& inst, Objective objective,
                             std::int64_t time_limit_ms) {
  BranchAndBound search(inst, objective, time_limit_ms);
  return search.solve();
}

std::size_t violated_stability_rows(const Instance& inst, const Matching& mu) {
  const int n = inst.size();
  std::size_t violated = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (inst.mrank(i, j) == 0 || inst.wrank(j, i) == 0) continue;
      int lhs_sum = 0;
      for (int q = 0; q < n; ++q) {
        if (inst.mrank(i, q) > 0 && inst.mrank(i, q) <= inst.mrank(i, j) && mu.wife_of(i) == q) {
          ++lhs_sum;
        }
      }
      int rhs_sum = 0;
      for (int p = 0; p < n; ++p) {
        if (inst.wrank(j, p) > 0 && inst.wrank(j, p) <= inst.wrank(j, i) && mu.husband_of(j) == p) {
          ++rhs_sum;
        }
      }
      if (1 - lhs_sum > rhs_sum) ++violated;
    }
  }
  return violated;
}

}  // namespace smti
