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

#include "smti/encode.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace smti {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Non-blank lines with 1-based line numbers.
std::vector<Line> content_lines_with_comments(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    const auto body = trim(raw);
    if (!body.empty()) out.push_back({number, body});
  }
  return out;
}

std::vector<Line> content_lines(std::string_view text) {
  auto lines = content_lines_with_comments(text);
  std::erase_if(lines, [](const Line& line) { return line.text.front() == '#'; });
  return lines;
}

class Cursor {
 public:
  Cursor(Line line) : line_(line), rest_(line.text) {}

  void skip_space() {
    while (!rest_.empty() && std::isspace(static_cast<unsigned char>(rest_.front()))) {
      rest_.remove_prefix(1);
    }
  }

  bool at_end() {
    skip_space();
    return rest_.empty();
  }

  bool peek(char c) {
    skip_space();
    return !rest_.empty() && rest_.front() == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    rest_.remove_prefix(1);
  }

  int integer() {
    skip_space();
    int value = 0;
    const auto [ptr, ec] = std::from_chars(rest_.data(), rest_.data() + rest_.size(), value);
    if (ec != std::errc{} || ptr == rest_.data()) fail("expected an integer");
    rest_.remove_prefix(static_cast<std::size_t>(ptr - rest_.data()));
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_.number, message);
  }

 private:
  Line line_;
  std::string_view rest_;
};

std::string man_atom(int m) { return "m" + std::to_string(m); }
std::string woman_atom(int w) { return "w" + std::to_string(w); }
std::string var(int m, int w) { return "x_" + std::to_string(m) + "_" + std::to_string(w); }

// Writes "name: t1 + t2 ... <rhs>" wrapping long rows, as LP readers cap
// line length.
class RowWriter {
 public:
  explicit RowWriter(std::ostringstream& out) : out_(out) {}

  void begin(const std::string& name) {
    out_ << ' ' << name << ':';
    width_ = name.size() + 2;
    first_ = true;
  }

  void term(std::int64_t coefficient, const std::string& variable) {
    std::string token;
    if (first_) {
      if (coefficient < 0) token += "- ";
    } else {
      token += coefficient < 0 ? "- " : "+ ";
    }
    const std::int64_t magnitude = coefficient < 0 ? -coefficient : coefficient;
    if (magnitude != 1) token += std::to_string(magnitude) + ' ';
    token += variable;
    put(token);
    first_ = false;
  }

  void end(const std::string& tail) {
    put(tail);
    out_ << '\n';
  }

 private:
  void put(const std::string& token) {
    if (width_ + 1 + token.size() > kMaxWidth) {
      out_ << "\n  ";
      width_ = 2;
    } else {
      out_ << ' ';
      ++width_;
    }
    out_ << token;
    width_ += token.size();
  }

  static constexpr std::size_t kMaxWidth = 78;
  std::ostringstream& out_;
  std::size_t width_ = 0;
  bool first_ = true;
};

constexpr std::string_view kAspProgram =
    "maccept(X,Y) :- mrank(X,Y,R).\n"
    "waccept(Y,X) :- wrank(Y,X,R).\n"
    "acceptable(X,Y) :- maccept(X,Y), waccept(Y,X).\n"
    "mprefer(X,Y,Y1) :- mrank(X,Y1,R), mrank(X,Y,R1), R > R1.\n"
    "wprefer(Y,X,X1) :- wrank(Y,X1,R), wrank(Y,X,R1), R > R1.\n"
    "{ marry(X,Y) : acceptable(X,Y) } 1 :- man(X).\n"
    ":- { marry(X,Y) : man(X) } > 1, woman(Y).\n"
    "msingle(X) :- man(X), { marry(X,Y) : woman(Y) } 0.\n"
    "wsingle(Y) :- woman(Y), { marry(X,Y) : man(X) } 0.\n"
    ":- acceptable(X,Y), msingle(X), wsingle(Y).\n"
    ":- wsingle(Y), marry(X,Y1), mprefer(X,Y,Y1), acceptable(X,Y).\n"
    ":- msingle(X), marry(X1,Y), wprefer(Y,X,X1), acceptable(X,Y).\n"
    ":- marry(X,Y1), marry(X1,Y), mprefer(X,Y,Y1), wprefer(Y,X,X1).\n";

}  // namespace

Instance parse_instance(std::string_view text) {
  // The header is the only '#' line with meaning; content_lines drops it.
  const auto raw = content_lines_with_comments(text);
  if (!raw.empty() && raw.front().text.starts_with("#smti-") &&
      raw.front().text != kFormatHeader) {
    throw ParseError(raw.front().number,
                     "unsupported format version " + std::string(raw.front().text));
  }
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty instance file");

  Cursor size_cursor(lines.front());
  const int n = size_cursor.integer();
  if (!size_cursor.at_end()) size_cursor.fail("trailing characters after n");
  if (n <= 0) size_cursor.fail("n must be positive");

  const auto agents = 2 * static_cast<std::size_t>(n);
  if (lines.size() - 1 < agents) {
    const int last = lines.back().number;
    throw ParseError(last, "expected " + std::to_string(agents) + " agent lines, found " +
                               std::to_string(lines.size() - 1));
  }
  if (lines.size() - 1 > agents) {
    throw ParseError(lines[agents + 1].number, "unexpected line after the last woman");
  }

  std::vector<Instance::PreferenceList> men(static_cast<std::size_t>(n));
  std::vector<Instance::PreferenceList> women(static_cast<std::size_t>(n));
  std::vector<bool> seen(agents, false);

  for (std::size_t k = 0; k < agents; ++k) {
    const bool is_man = k < static_cast<std::size_t>(n);
    Cursor cur(lines[k + 1]);
    const int index = cur.integer();
    if (index < 0 || index >= n) cur.fail("agent index " + std::to_string(index) + " out of range");
    const auto slot = static_cast<std::size_t>(index + (is_man ? 0 : n));
    if (seen[slot]) cur.fail(std::string(is_man ? "man " : "woman ") + std::to_string(index) +
                             " listed twice");
    seen[slot] = true;
    cur.expect(':');

    auto& list = (is_man ? men : women)[static_cast<std::size_t>(index)];
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    while (!cur.at_end()) {
      cur.expect('(');
      Instance::TieGroup group;
      while (!cur.peek(')')) {
        if (cur.at_end()) cur.fail("unterminated tie group");
        const int partner = cur.integer();
        if (partner < 0 || partner >= n) {
          cur.fail("partner index " + std::to_string(partner) + " out of range");
        }
        if (used[static_cast<std::size_t>(partner)]) {
          cur.fail("duplicate partner " + std::to_string(partner));
        }
        used[static_cast<std::size_t>(partner)] = true;
        group.push_back(partner);
      }
      cur.expect(')');
      if (group.empty()) cur.fail("empty tie group");
      list.push_back(std::move(group));
    }
    if (list.empty()) cur.fail("empty preference list");
  }
  return Instance::from_lists(men, women);
}

std::string emit_instance(const Instance& inst) {
  std::ostringstream out;
  out << kFormatHeader << '\n' << inst.size() << '\n';
  for (Side side : {Side::Man, Side::Woman}) {
    for (int a = 0; a < inst.size(); ++a) {
      out << a << " :";
      for (const auto& group : inst.preference_list({side, a})) {
        out << " (";
        for (std::size_t i = 0; i < group.size(); ++i) out << (i ? " " : "") << group[i];
        out << ')';
      }
      out << '\n';
    }
  }
  return out.str();
}

Matching parse_matching(const Instance& inst, std::string_view text) {
  const int n = inst.size();
  Matching mu(n);
  for (const auto& line : content_lines(text)) {
    Cursor cur(line);
    const int m = cur.integer();
    const int w = cur.integer();
    if (!cur.at_end()) cur.fail("expected `man woman`");
    if (m < 0 || m >= n || w < 0 || w >= n) cur.fail("index out of range");
    if (mu.wife_of(m) != kSingle) cur.fail("man " + std::to_string(m) + " matched twice");
    if (mu.husband_of(w) != kSingle) cur.fail("woman " + std::to_string(w) + " matched twice");
    if (!inst.acceptable(m, w)) {
      cur.fail("man " + std::to_string(m) + " and woman " + std::to_string(w) +
               " are not mutually acceptable");
    }
    mu.match(inst, m, w);
  }
  return mu;
}

std::string emit_matching(const Matching& mu) {
  std::ostringstream out;
  for (int m = 0; m < mu.size(); ++m) {
    if (mu.wife_of(m) != kSingle) out << m << ' ' << mu.wife_of(m) << '\n';
  }
  return out.str();
}

std::string emit_asp(const Instance& inst, std::optional<Objective> variant) {
  const int n = inst.size();
  std::ostringstream out;
  out << "% instance\n";
  for (int m = 0; m < n; ++m) out << "man(" << man_atom(m) << ").\n";
  for (int w = 0; w < n; ++w) out << "woman(" << woman_atom(w) << ").\n";
  for (int m = 0; m < n; ++m) {
    for (int w : inst.ranked(AgentId::man(m))) {
      out << "mrank(" << man_atom(m) << ',' << woman_atom(w) << ',' << inst.mrank(m, w) << ").\n";
    }
  }
  for (int w = 0; w < n; ++w) {
    for (int m : inst.ranked(AgentId::woman(w))) {
      out << "wrank(" << woman_atom(w) << ',' << man_atom(m) << ',' << inst.wrank(w, m) << ").\n";
    }
  }
  out << "\n% stable matching\n" << kAspProgram;
  if (variant) {
    out << "\n% " << to_string(*variant) << '\n';
    switch (*variant) {
      case Objective::MaxCardinality:
        out << ":~ wsingle(Y). [1@1,w,Y]\n"
               ":~ msingle(X). [1@1,m,X]\n";
        break;
      case Objective::Egalitarian:
        out << ":~ marry(X,Y), mrank(X,Y,R1), wrank(Y,X,R2). [R1+R2@1,X,Y]\n";
        break;
      case Objective::SexEqual:
        out << ":~ T = #sum { R1-R2,X,Y : marry(X,Y), mrank(X,Y,R1), wrank(Y,X,R2) }. [|T|@1]\n";
        break;
    }
  }
  return out.str();
}

std::string emit_lp(const Instance& inst, Objective objective) {
  const int n = inst.size();
  std::ostringstream out;
  RowWriter row(out);

  out << "\\ smti " << to_string(objective) << " n=" << n << '\n';
  out << (objective == Objective::MaxCardinality ? "Maximize\n" : "Minimize\n");
  row.begin("obj");
  if (objective == Objective::SexEqual) {
    row.term(1, "t");
  } else {
    for (int m = 0; m < n; ++m) {
      for (int w : inst.acceptable_partners(AgentId::man(m))) {
        const std::int64_t c =
            objective == Objective::Egalitarian ? inst.mrank(m, w) + inst.wrank(w, m) : 1;
        row.term(c, var(m, w));
      }
    }
  }
  out << '\n';

  out << "Subject To\n";
  for (int m = 0; m < n; ++m) {
    const auto women = inst.acceptable_partners(AgentId::man(m));
    if (women.empty()) continue;
    row.begin("m_" + std::to_string(m));
    for (int w : women) row.term(1, var(m, w));
    row.end("<= 1");
  }
  for (int w = 0; w < n; ++w) {
    const auto men = inst.acceptable_partners(AgentId::woman(w));
    if (men.empty()) continue;
    row.begin("w_" + std::to_string(w));
    for (int m : men) row.term(1, var(m, w));
    row.end("<= 1");
  }
  // x_ij sits in both sums of its own row; it is written once, which is
  // equivalent over binaries.
  for (int i = 0; i < n; ++i) {
    for (int j : inst.acceptable_partners(AgentId::man(i))) {
      row.begin("s_" + std::to_string(i) + "_" + std::to_string(j));
      for (int q : inst.acceptable_partners(AgentId::man(i))) {
        if (inst.mrank(i, q) <= inst.mrank(i, j)) row.term(1, var(i, q));
      }
      for (int p : inst.acceptable_partners(AgentId::woman(j))) {
        if (p != i && inst.wrank(j, p) <= inst.wrank(j, i)) row.term(1, var(p, j));
      }
      row.end(">= 1");
    }
  }
  if (objective == Objective::SexEqual) {
    for (int sign : {-1, 1}) {
      row.begin(sign < 0 ? "d_pos" : "d_neg");
      row.term(1, "t");
      for (int m = 0; m < n; ++m) {
        for (int w : inst.acceptable_partners(AgentId::man(m))) {
          const std::int64_t delta = inst.mrank(m, w) - inst.wrank(w, m);
          if (delta != 0) row.term(sign * delta, var(m, w));
        }
      }
      row.end(">= 0");
    }
  }

  if (inst.acceptable_pair_count() > 0) {
    out << "Binary\n";
    for (int m = 0; m < n; ++m) {
      for (int w : inst.acceptable_partners(AgentId::man(m))) out << ' ' << var(m, w) << '\n';
    }
  }
  out << "End\n";
  return out.str();
}

}  // namespace smti
