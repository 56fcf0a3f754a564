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

// Text formats.
//
// Native instance file (".smti"), all indices 0-based:
//
//   #smti-v1
//   2
//   0 : (1 0)
//   1 : (0) (1)
//   0 : (0 1)
//   1 : (1)
//
// The optional header line comes first. The next non-blank line is n. Then n
// lines for men followed by n lines for women, each `index : group group...`
// where a group is a parenthesised, space-separated list of partner indices
// sharing one rank level, groups in ascending rank order. Lines starting with
// '#' after the header and blank lines are ignored.
//
// Matching file: one `man woman` line per married pair; unlisted men are
// single.

#ifndef SMTI_ENCODE_HPP_
#define SMTI_ENCODE_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "smti/core.hpp"
#include "smti/stability.hpp"

namespace smti {

inline constexpr std::string_view kFormatHeader = "#smti-v1";

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

Instance parse_instance(std::string_view text);
std::string emit_instance(const Instance& inst);

// Rejects out-of-range indices, men or women listed twice and pairs that are
// not mutually acceptable.
Matching parse_matching(const Instance& inst, std::string_view text);
std::string emit_matching(const Matching& mu);

// Answer set program in clingo syntax: instance facts (men as m<i>, women as
// w<j>), the stable-matching program and, when a variant is given, its weak
// constraints.
std::string emit_asp(const Instance& inst, std::optional<Objective> variant);

// Integer program in CPLEX LP format with one binary x_<man>_<woman> per
// mutually acceptable pair, capacity rows per agent, one stability row per
// pair and the objective. Sex-equal minimizes an auxiliary t bounded below by
// the signed rank difference and its negation.
std::string emit_lp(const Instance& inst, Objective objective);

}  // namespace smti

#endif  // SMTI_ENCODE_HPP_
