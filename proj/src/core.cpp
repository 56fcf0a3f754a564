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

#include "smti/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace smti {

namespace {

std::string agent_name(Side side, int index) {
  return (side == Side::Man ? "man " : "woman ") + std::to_string(index);
}

// Checks that the ranks of one agent form the levels 1..L, L >= 1.
void check_levels(const std::vector<int>& table, int n, int row, Side side) {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int top = 0;
  for (int j = 0; j < n; ++j) {
    const int r = table[static_cast<std::size_t>(row) * n + j];
    if (r < 0 || r > n) {
      throw std::invalid_argument(agent_name(side, row) + ": rank " + std::to_string(r) +
                                  " outside [0, " + std::to_string(n) + "]");
    }
    if (r > 0) {
      seen[static_cast<std::size_t>(r)] = true;
      top = std::max(top, r);
    }
  }
  if (top == 0) throw std::invalid_argument(agent_name(side, row) + ": empty preference list");
  for (int r = 1; r <= top; ++r) {
    if (!seen[static_cast<std::size_t>(r)]) {
      throw std::invalid_argument(agent_name(side, row) + ": rank levels are not contiguous");
    }
  }
}

}  // namespace

Instance Instance::from_ranks(int n, std::vector<int> mrank, std::vector<int> wrank) {
  if (n <= 0) throw std::invalid_argument("instance size must be positive");
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (mrank.size() != cells || wrank.size() != cells) {
    throw std::invalid_argument("rank tables must have n*n entries");
  }
  for (int i = 0; i < n; ++i) {
    check_levels(mrank, n, i, Side::Man);
    check_levels(wrank, n, i, Side::Woman);
  }
  Instance inst;
  inst.n_ = n;
  inst.mrank_ = std::move(mrank);
  inst.wrank_ = std::move(wrank);
  inst.build_views();
  return inst;
}

Instance Instance::from_lists(const std::vector<PreferenceList>& men,
                              const std::vector<PreferenceList>& women) {
  const auto n = static_cast<int>(men.size());
  if (n == 0 || women.size() != men.size()) {
    throw std::invalid_argument("need the same positive number of men and women");
  }
  std::vector<int> mrank(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> wrank(static_cast<std::size_t>(n) * n, 0);
  auto fill = [n](const std::vector<PreferenceList>& lists, std::vector<int>& table, Side side) {
    for (int a = 0; a < n; ++a) {
      const auto& list = lists[static_cast<std::size_t>(a)];
      if (list.empty()) throw std::invalid_argument(agent_name(side, a) + ": empty preference list");
      int level = 0;
      for (const auto& group : list) {
        ++level;
        if (group.empty()) throw std::invalid_argument(agent_name(side, a) + ": empty tie group");
        for (int b : group) {
          if (b < 0 || b >= n) {
            throw std::invalid_argument(agent_name(side, a) + ": partner index " +
                                        std::to_string(b) + " out of range");
          }
          int& cell = table[static_cast<std::size_t>(a) * n + b];
          if (cell != 0) {
            throw std::invalid_argument(agent_name(side, a) + ": duplicate partner " +
                                        std::to_string(b));
          }
          cell = level;
        }
      }
    }
  };
  fill(men, mrank, Side::Man);
  fill(women, wrank, Side::Woman);
  return from_ranks(n, std::move(mrank), std::move(wrank));
}

void Instance::build_views() {
  const auto slots = static_cast<std::size_t>(2 * n_);
  ranked_.clear();
  mutual_.clear();
  ranked_offsets_.assign(slots + 1, 0);
  mutual_offsets_.assign(slots + 1, 0);
  levels_.assign(slots, 0);

  std::vector<int> buffer;
  for (std::size_t slot = 0; slot < slots; ++slot) {
    const bool is_man = slot < static_cast<std::size_t>(n_);
    const int a = static_cast<int>(is_man ? slot : slot - static_cast<std::size_t>(n_));
    auto own = [&](int b) { return is_man ? mrank(a, b) : wrank(a, b); };
    auto back = [&](int b) { return is_man ? wrank(b, a) : mrank(b, a); };

    buffer.clear();
    for (int b = 0; b < n_; ++b) {
      if (own(b) > 0) buffer.push_back(b);
    }
    std::stable_sort(buffer.begin(), buffer.end(),
                     [&](int x, int y) { return own(x) < own(y); });
    for (int b : buffer) {
      ranked_.push_back(b);
      levels_[slot] = std::max(levels_[slot], own(b));
      if (back(b) > 0) mutual_.push_back(b);
    }
    ranked_offsets_[slot + 1] = ranked_.size();
    mutual_offsets_[slot + 1] = mutual_.size();
  }
}

void Instance::check_index(int i) const {
  if (i < 0 || i >= n_) {
    throw std::invalid_argument("agent index " + std::to_string(i) + " out of range [0, " +
                                std::to_string(n_) + ")");
  }
}

bool Instance::acceptable(int man, int woman) const {
  check_index(man);
  check_index(woman);
  return mrank(man, woman) > 0 && wrank(woman, man) > 0;
}

bool Instance::at_least_as_good(AgentId agent, AgentId candidate, AgentId reference) const {
  check_index(agent.index);
  check_index(candidate.index);
  check_index(reference.index);
  if (candidate.side == agent.side || reference.side == agent.side) {
    throw std::invalid_argument("candidates must be on the opposite side");
  }
  const int rc = rank(agent, candidate.index);
  const int rr = rank(agent, reference.index);
  if (rc == 0 || rr == 0) {
    throw std::domain_error("candidate or reference is not on " +
                            agent_name(agent.side, agent.index) + "'s list");
  }
  return rc <= rr;
}

std::span<const int> Instance::ranked(AgentId agent) const {
  check_index(agent.index);
  const auto slot = static_cast<std::size_t>(agent.index + (agent.side == Side::Man ? 0 : n_));
  return {ranked_.data() + ranked_offsets_[slot], ranked_offsets_[slot + 1] - ranked_offsets_[slot]};
}

std::span<const int> Instance::acceptable_partners(AgentId agent) const {
  check_index(agent.index);
  const auto slot = static_cast<std::size_t>(agent.index + (agent.side == Side::Man ? 0 : n_));
  return {mutual_.data() + mutual_offsets_[slot], mutual_offsets_[slot + 1] - mutual_offsets_[slot]};
}

int Instance::levels(AgentId agent) const {
  check_index(agent.index);
  return levels_[static_cast<std::size_t>(agent.index + (agent.side == Side::Man ? 0 : n_))];
}

Instance::PreferenceList Instance::preference_list(AgentId agent) const {
  PreferenceList list(static_cast<std::size_t>(levels(agent)));
  for (int b : ranked(agent)) {
    list[static_cast<std::size_t>(rank(agent, b) - 1)].push_back(b);
  }
  return list;
}

int Instance::acceptable_pair_count() const {
  // Men occupy the first n slots.
  return static_cast<int>(mutual_offsets_[static_cast<std::size_t>(n_)]);
}

Instance Instance::transposed() const {
  return from_ranks(n_, wrank_, mrank_);
}

Matching::Matching(int n) {
  if (n < 0) throw std::invalid_argument("matching size must be non-negative");
  wife_.assign(static_cast<std::size_t>(n), kSingle);
  husband_.assign(static_cast<std::size_t>(n), kSingle);
}

Matching Matching::from_assignment(const Instance& inst, std::span<const int> wife_of_man) {
  const int n = inst.size();
  if (static_cast<int>(wife_of_man.size()) != n) {
    throw std::invalid_argument("assignment length differs from instance size");
  }
  Matching mu(n);
  for (int m = 0; m < n; ++m) {
    const int w = wife_of_man[static_cast<std::size_t>(m)];
    if (w == kSingle) continue;
    if (w < 0 || w >= n) throw std::invalid_argument("woman index out of range");
    if (mu.husband_of(w) != kSingle) {
      throw std::invalid_argument("woman " + std::to_string(w) + " assigned twice");
    }
    mu.match(inst, m, w);
  }
  return mu;
}

std::optional<int> Matching::partner_of(AgentId agent) const {
  if (agent.index < 0 || agent.index >= size()) {
    throw std::invalid_argument("agent index out of range");
  }
  const int p = agent.side == Side::Man ? wife_of(agent.index) : husband_of(agent.index);
  if (p == kSingle) return std::nullopt;
  return p;
}

void Matching::match(const Instance& inst, int man, int woman) {
  if (inst.size() != size()) throw std::invalid_argument("matching and instance sizes differ");
  if (!inst.acceptable(man, woman)) {
    throw std::domain_error("man " + std::to_string(man) + " and woman " +
                            std::to_string(woman) + " are not mutually acceptable");
  }
  if (wife_of(man) == woman) return;
  unmatch(AgentId::man(man));
  unmatch(AgentId::woman(woman));
  wife_[static_cast<std::size_t>(man)] = woman;
  husband_[static_cast<std::size_t>(woman)] = man;
  ++pairs_;
}

void Matching::unmatch(AgentId agent) {
  const auto partner = partner_of(agent);
  if (!partner) return;
  const int man = agent.side == Side::Man ? agent.index : *partner;
  const int woman = agent.side == Side::Man ? *partner : agent.index;
  wife_[static_cast<std::size_t>(man)] = kSingle;
  husband_[static_cast<std::size_t>(woman)] = kSingle;
  --pairs_;
}

}  // namespace smti
