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

// Domain model for stable marriage instances with ties and incomplete lists.
//
// An Instance holds n men and n women. Every agent ranks a nonempty subset of
// the opposite side; ranks are dense levels 1..L where agents sharing a level
// are tied. Acceptability is stored one-sided: a man may rank a woman who does
// not rank him back, in which case the pair is simply not mutually acceptable.
//
// Indices are 0-based on both sides.

#ifndef SMTI_CORE_HPP_
#define SMTI_CORE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace smti {

enum class Side : std::uint8_t { Man, Woman };

struct AgentId {
  Side side;
  int index;

  static constexpr AgentId man(int i) { return {Side::Man, i}; }
  static constexpr AgentId woman(int i) { return {Side::Woman, i}; }

  friend constexpr bool operator==(AgentId, AgentId) = default;
};

// Marker for "no partner" in assignment vectors.
inline constexpr int kSingle = -1;

class Instance {
 public:
  // One rank level: partner indices sharing that level.
  using TieGroup = std::vector<int>;
  // Tie groups in ascending rank order (first group is rank 1).
  using PreferenceList = std::vector<TieGroup>;

  // Builds from per-agent tie groups. Throws std::invalid_argument on an
  // empty list, an empty group, a duplicate partner or an index >= n.
  static Instance from_lists(const std::vector<PreferenceList>& men,
                             const std::vector<PreferenceList>& women);

  // Builds from row-major n*n rank tables, mrank[man * n + woman] and
  // wrank[woman * n + man], with 0 meaning "not ranked". Throws
  // std::invalid_argument unless every agent's ranks are the contiguous
  // levels 1..L with L >= 1.
  static Instance from_ranks(int n, std::vector<int> mrank, std::vector<int> wrank);

  int size() const { return n_; }

  // Rank of woman on man's list, 0 if she is not on it.
  int mrank(int man, int woman) const { return mrank_[idx(man, woman)]; }
  // Rank of man on woman's list, 0 if he is not on it.
  int wrank(int woman, int man) const { return wrank_[idx(woman, man)]; }

  // Rank of partner on agent's list, 0 if absent.
  int rank(AgentId agent, int partner) const {
    return agent.side == Side::Man ? mrank(agent.index, partner)
                                   : wrank(agent.index, partner);
  }

  // Throws std::invalid_argument on out-of-range indices.
  bool acceptable(int man, int woman) const;

  // True iff agent ranks candidate at the same level as reference or better.
  // Throws std::invalid_argument when candidate or reference is on the same
  // side as agent or out of range, and std::domain_error when either is not
  // on agent's list.
  bool at_least_as_good(AgentId agent, AgentId candidate, AgentId reference) const;

  // Everyone the agent ranks, ordered by (rank, index).
  std::span<const int> ranked(AgentId agent) const;

  // Mutually acceptable partners, ordered by (agent's rank, index).
  std::span<const int> acceptable_partners(AgentId agent) const;

  // Number of rank levels on agent's list.
  int levels(AgentId agent) const;

  PreferenceList preference_list(AgentId agent) const;

  // Number of mutually acceptable pairs.
  int acceptable_pair_count() const;

  // Same instance with the roles of men and women exchanged.
  Instance transposed() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.n_ == b.n_ && a.mrank_ == b.mrank_ && a.wrank_ == b.wrank_;
  }

 private:
  Instance() = default;

  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(b);
  }
  void check_index(int i) const;
  void build_views();

  int n_ = 0;
  std::vector<int> mrank_;
  std::vector<int> wrank_;

  // CSR-style views, men first then women: agent slot a covers
  // [offsets[a], offsets[a+1]).
  std::vector<int> ranked_;
  std::vector<std::size_t> ranked_offsets_;
  std::vector<int> mutual_;
  std::vector<std::size_t> mutual_offsets_;
  std::vector<int> levels_;
};

// Partial injective assignment of men to women.
class Matching {
 public:
  explicit Matching(int n);

  // Builds from a per-man vector of women (kSingle for single men). Throws
  // std::invalid_argument when the size is wrong or a woman is used twice and
  // std::domain_error when a pair is not mutually acceptable.
  static Matching from_assignment(const Instance& inst, std::span<const int> wife_of_man);

  int size() const { return static_cast<int>(wife_.size()); }
  int cardinality() const { return pairs_; }
  // Single men plus single women.
  int single_count() const { return 2 * (size() - pairs_); }

  int wife_of(int man) const { return wife_[static_cast<std::size_t>(man)]; }
  int husband_of(int woman) const { return husband_[static_cast<std::size_t>(woman)]; }

  std::optional<int> partner_of(AgentId agent) const;
  bool is_single(AgentId agent) const { return !partner_of(agent).has_value(); }

  // Marries man and woman, first releasing their current partners. Throws
  // std::domain_error if the pair is not mutually acceptable.
  void match(const Instance& inst, int man, int woman);

  // Releases agent and its partner; no-op on a single agent.
  void unmatch(AgentId agent);

  // Per-man wife index, kSingle for single men.
  const std::vector<int>& assignment() const { return wife_; }

  friend bool operator==(const Matching& a, const Matching& b) { return a.wife_ == b.wife_; }

 private:
  std::vector<int> wife_;
  std::vector<int> husband_;
  int pairs_ = 0;
};

}  // namespace smti

#endif  // SMTI_CORE_HPP_
