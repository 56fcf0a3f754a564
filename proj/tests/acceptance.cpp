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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "smti/bench.hpp"
#include "smti/core.hpp"
#include "smti/encode.hpp"
#include "smti/exact.hpp"
#include "smti/gen.hpp"
#include "smti/heuristics.hpp"
#include "smti/rng.hpp"
#include "smti/stability.hpp"

namespace {

using namespace smti;

using Clock = std::chrono::steady_clock;

constexpr Objective kObjectives[] = {Objective::MaxCardinality, Objective::Egalitarian,
                                     Objective::SexEqual};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Verdict {
  bool pass;
  std::string detail;
};

// The n <= 7 corpus: every (n, p1, p2) cell of the small grid, two replicates.
struct CorpusItem {
  GenParams params;
  Instance inst;
};

std::vector<CorpusItem> small_corpus() {
  std::vector<CorpusItem> corpus;
  for (int n = 4; n <= 7; ++n) {
    for (int i = 1; i <= 8; ++i) {
      for (int j = 1; j <= 9; ++j) {
        for (int k = 0; k < 2; ++k) {
          const GenParams params{n, i / 10.0, j / 10.0,
                                 grid_seed(1000 + static_cast<std::uint64_t>(n),
                                           static_cast<std::uint64_t>(i),
                                           static_cast<std::uint64_t>(j),
                                           static_cast<std::uint64_t>(k))};
          corpus.push_back({params, generate(params)});
        }
      }
    }
  }
  return corpus;
}

LtiuParams ltiu_params(std::uint64_t seed) {
  LtiuParams p;
  p.step_limit = 2000;
  p.seed = seed;
  return p;
}

GaParams ga_params(std::uint64_t seed) {
  GaParams p;
  p.population_size = 20;
  p.rounds = 100;
  p.seed = seed;
  return p;
}

Verdict oracle_equivalence(const std::vector<CorpusItem>& corpus) {
  const auto start = Clock::now();
  int mismatches = 0;
  int not_optimal = 0;
  for (const auto& item : corpus) {
    for (Objective o : kObjectives) {
      const SolveReport bnb = branch_and_bound(item.inst, o);
      const SolveReport bf = brute_force(item.inst, o);
      if (!bnb.optimal) ++not_optimal;
      if (bnb.cost != bf.cost) ++mismatches;
    }
  }
  const double seconds = ms_since(start) / 1000.0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%zu instances x 3 objectives, %d mismatches, %d not optimal, %.1f s",
                corpus.size(), mismatches, not_optimal, seconds);
  return {corpus.size() >= 500 && mismatches == 0 && not_optimal == 0 && seconds < 300.0, detail};
}

Verdict stability_soundness() {
  constexpr int kChecks = 10000;
  int checks = 0;
  int failures = 0;
  auto record = [&](const Instance& inst, const Matching& mu) {
    ++checks;
    if (!is_stable(inst, mu)) ++failures;
  };
  for (std::uint64_t k = 0; checks < kChecks; ++k) {
    const int n = 3 + static_cast<int>(k % 6);
    const double p1 = static_cast<double>(k % 8) / 10.0;
    const double p2 = static_cast<double>(k % 10) / 10.0;
    const Instance inst = generate({n, p1, p2, grid_seed(2000, k % 8, k % 10, k)});
    const Objective o = kObjectives[k % 3];
    record(inst, deferred_acceptance(inst, k));
    record(inst, ltiu_solve(inst, ltiu_params(k), o).matching);
    record(inst, ga_solve(inst, ga_params(k), o).matching);
    record(inst, branch_and_bound(inst, o).matching);
    record(inst, brute_force(inst, o).matching);
  }
  return {failures == 0, std::to_string(checks) + " checks, " + std::to_string(failures) +
                             " unstable"};
}

Verdict heuristic_bounds(const std::vector<CorpusItem>& corpus) {
  int violations = 0;
  for (const auto& item : corpus) {
    const std::uint64_t seed = item.params.seed;
    const std::int64_t optimum = brute_force(item.inst, Objective::MaxCardinality).cost;
    const int ltiu = ltiu_solve(item.inst, ltiu_params(seed)).matching.cardinality();
    const int ga = ga_solve(item.inst, ga_params(seed)).matching.cardinality();
    const int da = deferred_acceptance(item.inst, seed).cardinality();
    if (ltiu > optimum) ++violations;
    if (ga > optimum) ++violations;
    if (ga < da) ++violations;
  }
  return {violations == 0,
          std::to_string(corpus.size()) + " instances, " + std::to_string(violations) +
              " violations"};
}

Verdict local_search_trend() {
  auto mean_ms = [](double p1) {
    double total = 0.0;
    for (std::uint64_t k = 0; k < 10; ++k) {
      const Instance inst = generate({50, p1, 0.5, grid_seed(3000, 0, 0, k)});
      LtiuParams params;
      params.step_limit = 5000;
      params.seed = k;
      total += ltiu_solve(inst, params).stats.elapsed_ms;
    }
    return total / 10.0;
  };
  const double low = mean_ms(0.1);
  const double high = mean_ms(0.8);
  char detail[128];
  std::snprintf(detail, sizeof detail, "mean LTIU ms at p1=0.1: %.2f, at p1=0.8: %.2f", low, high);
  return {high > low, detail};
}

Verdict generator_statistics() {
  struct Cell {
    double p1;
    double p2;
  };
  std::string detail;
  bool pass = true;
  for (const Cell cell : {Cell{0.2, 0.3}, Cell{0.5, 0.5}, Cell{0.8, 0.7}}) {
    constexpr int n = 50;
    std::uint64_t lists = 0;
    std::uint64_t entries = 0;
    std::uint64_t followers = 0;  // entries after the first of their list
    std::uint64_t tied = 0;       // followers sharing their predecessor's level
    for (std::uint64_t k = 0; entries < 100000; ++k) {
      const Instance inst = generate({n, cell.p1, cell.p2, grid_seed(4000, 0, 0, k)});
      for (int a = 0; a < n; ++a) {
        for (const AgentId agent : {AgentId::man(a), AgentId::woman(a)}) {
          const auto list = inst.ranked(agent);
          auto rank = [&](int other) {
            return agent.side == Side::Man ? inst.mrank(a, other) : inst.wrank(a, other);
          };
          ++lists;
          entries += list.size();
          for (std::size_t i = 1; i < list.size(); ++i) {
            ++followers;
            if (rank(list[i]) == rank(list[i - 1])) ++tied;
          }
        }
      }
    }
    const double mean_length = static_cast<double>(entries) / static_cast<double>(lists);
    const double expected = n * (1.0 - cell.p1);
    const double tie_fraction = static_cast<double>(tied) / static_cast<double>(followers);
    const bool ok = std::abs(mean_length - expected) <= 0.04 * expected &&
                    std::abs(tie_fraction - cell.p2) <= 0.02;
    pass = pass && ok;
    char part[160];
    std::snprintf(part, sizeof part, "%s(p1=%.1f p2=%.1f: length %.2f/%.1f, ties %.4f)",
                  detail.empty() ? "" : " ", cell.p1, cell.p2, mean_length, expected,
                  tie_fraction);
    detail += part;
  }
  return {pass, detail};
}

Verdict determinism() {
  auto run = [] {
    std::string out;
    for (std::uint64_t k = 0; k < 20; ++k) {
      const Instance inst = generate({7, 0.1 + 0.03 * static_cast<double>(k), 0.4, 5000 + k});
      out += emit_instance(inst);
      out += emit_asp(inst, kObjectives[k % 3]);
      out += emit_lp(inst, kObjectives[k % 3]);
      for (Objective o : kObjectives) {
        out += std::to_string(brute_force(inst, o).cost) + ' ';
        out += std::to_string(branch_and_bound(inst, o).cost) + ' ';
        out += std::to_string(ltiu_solve(inst, ltiu_params(k), o).cost) + ' ';
        out += std::to_string(ga_solve(inst, ga_params(k), o).cost) + ' ';
      }
      out += std::to_string(deferred_acceptance(inst, k).cardinality()) + '\n';
    }
    const BenchConfig config = parse_bench_config(
        "n = 6\np1_min = 0.2\np1_max = 0.6\np1_step = 0.2\np2_min = 0.5\np2_max = 0.5\n"
        "p2_step = 0\nreplicates = 3\nsolvers = bnb, ltiu, ga, da\nga.rounds = 50\n");
    for (const auto& row : run_bench(config, 4)) {
      out += row.solver + ' ' + std::to_string(row.mean_cost) + '\n';
    }
    return out;
  };
  const std::string first = run();
  const std::string second = run();
  return {first == second, std::to_string(first.size()) + " bytes compared"};
}

Verdict round_trip() {
  int failures = 0;
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const int n = 1 + static_cast<int>(k % 30);
    const double p1 = static_cast<double>(k % 9) / 10.0;
    const double p2 = static_cast<double>(k % 11) / 10.0;
    const Instance inst = generate({n, p1, p2, grid_seed(6000, k % 9, k % 11, k)});
    const std::string text = emit_instance(inst);
    const Instance back = parse_instance(text);
    if (!(back == inst) || emit_instance(back) != text) ++failures;
  }
  return {failures == 0, "1000 instances, " + std::to_string(failures) + " failures"};
}

Verdict perfect_matchings() {
  int tested = 0;
  int failures = 0;
  for (int n : {10, 20}) {
    for (std::uint64_t k = 0; k < 25; ++k) {
      const Instance inst = generate({n, 0.0, 0.0, grid_seed(7000, 0, 0, k)});
      const SolveReport r = branch_and_bound(inst, Objective::MaxCardinality);
      ++tested;
      if (!r.optimal || r.cost != n) ++failures;
    }
  }
  return {failures == 0,
          std::to_string(tested) + " instances, " + std::to_string(failures) + " not perfect"};
}

}  // namespace

int main() {
  const std::vector<CorpusItem> corpus = small_corpus();
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"oracle equivalence", [&] { return oracle_equivalence(corpus); }},
      {"stability soundness", stability_soundness},
      {"heuristic quality bound", [&] { return heuristic_bounds(corpus); }},
      {"local search time trend", local_search_trend},
      {"generator statistics", generator_statistics},
      {"determinism", determinism},
      {"encoder round trip", round_trip},
      {"perfect matching sanity", perfect_matchings},
  };
  bool all = true;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    all = all && v.pass;
    std::printf("%s criterion %d (%s): %s\n", v.pass ? "PASS" : "FAIL", index++, name,
                v.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
