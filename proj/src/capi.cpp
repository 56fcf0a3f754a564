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

#include "smti/smti.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "smti/bench.hpp"
#include "smti/core.hpp"
#include "smti/encode.hpp"
#include "smti/exact.hpp"
#include "smti/gen.hpp"
#include "smti/heuristics.hpp"
#include "smti/rng.hpp"
#include "smti/stability.hpp"

struct smti_instance {
  smti::Instance value;
};

struct smti_matching {
  smti::Matching value;
};

struct smti_report {
  smti::SolveReport value;
  smti_matching matching;
};

namespace {

thread_local std::string last_error;

smti_status fail(smti_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Maps the library's exception taxonomy onto status codes. SizeError and
// ParseError must be tested before their std bases.
template <typename F>
smti_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return SMTI_OK;
  } catch (const smti::SizeError& e) {
    return fail(SMTI_ERR_SIZE, e.what());
  } catch (const smti::ParseError& e) {
    return fail(SMTI_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SMTI_ERR_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(SMTI_ERR_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(SMTI_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SMTI_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SMTI_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SMTI_ERR_INTERNAL, "unknown error");
  }
}

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

smti::Objective to_objective(smti_objective objective) {
  switch (objective) {
    case SMTI_MAX_CARDINALITY:
      return smti::Objective::MaxCardinality;
    case SMTI_EGALITARIAN:
      return smti::Objective::Egalitarian;
    case SMTI_SEX_EQUAL:
      return smti::Objective::SexEqual;
  }
  throw std::invalid_argument("unknown objective");
}

void check_index(const smti_instance* inst, int i) {
  require(i >= 0 && i < inst->value.size(), "agent index out of range");
}

smti::SolveReport solve(const smti::Instance& inst, const smti_solve_options& o) {
  const smti::Objective objective = to_objective(o.objective);
  switch (o.solver) {
    case SMTI_SOLVER_BRUTE_FORCE:
      return smti::brute_force(inst, objective);
    case SMTI_SOLVER_BRANCH_AND_BOUND:
      require(o.time_limit_ms >= 0, "time limit must be non-negative");
      return smti::branch_and_bound(inst, objective, o.time_limit_ms);
    case SMTI_SOLVER_LTIU: {
      require(o.ltiu_walk_p >= 0.0 && o.ltiu_walk_p <= 1.0, "walk probability must be in [0, 1]");
      return smti::ltiu_solve(inst, {o.ltiu_steps, o.ltiu_walk_p, o.seed}, objective);
    }
    case SMTI_SOLVER_GA: {
      require(o.ga_population >= 2, "population must be at least 2");
      require(o.ga_rounds >= 0, "rounds must be non-negative");
      require(o.ga_crossover_p >= 0.0 && o.ga_crossover_p <= 1.0,
              "crossover probability must be in [0, 1]");
      require(o.ga_mutation_p >= 0.0 && o.ga_mutation_p <= 1.0,
              "mutation probability must be in [0, 1]");
      return smti::ga_solve(
          inst, {o.ga_population, o.ga_rounds, o.ga_crossover_p, o.ga_mutation_p, o.seed},
          objective);
    }
    case SMTI_SOLVER_DEFERRED_ACCEPTANCE: {
      const auto start = std::chrono::steady_clock::now();
      smti::SolveReport report;
      report.matching = smti::deferred_acceptance(inst, o.seed);
      report.objective = objective;
      report.cost = smti::cost(inst, report.matching, objective);
      report.stats.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      return report;
    }
  }
  throw std::invalid_argument("unknown solver");
}

}  // namespace

extern "C" {

const char* smti_version(void) { return "1.0.0"; }

const char* smti_last_error(void) { return last_error.c_str(); }

void smti_string_free(char* s) { std::free(s); }

smti_status smti_instance_parse(const char* text, smti_instance** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new smti_instance{smti::parse_instance(text)};
  });
}

smti_status smti_instance_generate(int n, double p1, double p2, uint64_t seed,
                                   smti_instance** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new smti_instance{smti::generate({n, p1, p2, seed})};
  });
}

smti_status smti_instance_emit(const smti_instance* inst, char** out) {
  return guarded([&] {
    require(inst != nullptr && out != nullptr, "null argument");
    *out = dup_string(smti::emit_instance(inst->value));
  });
}

int smti_instance_size(const smti_instance* inst) {
  return inst == nullptr ? 0 : inst->value.size();
}

smti_status smti_instance_acceptable(const smti_instance* inst, int man, int woman, int* out) {
  return guarded([&] {
    require(inst != nullptr && out != nullptr, "null argument");
    *out = inst->value.acceptable(man, woman) ? 1 : 0;
  });
}

void smti_instance_free(smti_instance* inst) { delete inst; }

uint64_t smti_grid_seed(uint64_t base_seed, uint64_t p1_index, uint64_t p2_index,
                        uint64_t replicate) {
  return smti::grid_seed(base_seed, p1_index, p2_index, replicate);
}

smti_status smti_matching_new(const smti_instance* inst, smti_matching** out) {
  return guarded([&] {
    require(inst != nullptr && out != nullptr, "null argument");
    *out = new smti_matching{smti::Matching(inst->value.size())};
  });
}

smti_status smti_matching_parse(const smti_instance* inst, const char* text,
                                smti_matching** out) {
  return guarded([&] {
    require(inst != nullptr && text != nullptr && out != nullptr, "null argument");
    *out = new smti_matching{smti::parse_matching(inst->value, text)};
  });
}

smti_status smti_matching_emit(const smti_matching* mu, char** out) {
  return guarded([&] {
    require(mu != nullptr && out != nullptr, "null argument");
    *out = dup_string(smti::emit_matching(mu->value));
  });
}

smti_status smti_matching_match(smti_matching* mu, const smti_instance* inst, int man,
                                int woman) {
  return guarded([&] {
    require(mu != nullptr && inst != nullptr, "null argument");
    require(mu->value.size() == inst->value.size(), "matching and instance sizes differ");
    check_index(inst, man);
    check_index(inst, woman);
    mu->value.match(inst->value, man, woman);
  });
}

int smti_matching_wife(const smti_matching* mu, int man) {
  if (mu == nullptr || man < 0 || man >= mu->value.size()) return -1;
  return mu->value.wife_of(man);
}

int smti_matching_husband(const smti_matching* mu, int woman) {
  if (mu == nullptr || woman < 0 || woman >= mu->value.size()) return -1;
  return mu->value.husband_of(woman);
}

int smti_matching_cardinality(const smti_matching* mu) {
  return mu == nullptr ? 0 : mu->value.cardinality();
}

void smti_matching_free(smti_matching* mu) { delete mu; }

smti_status smti_blocking_pairs(const smti_instance* inst, const smti_matching* mu,
                                smti_blocking_pair* pairs, size_t capacity, size_t* count) {
  return guarded([&] {
    require(inst != nullptr && mu != nullptr && count != nullptr, "null argument");
    require(capacity == 0 || pairs != nullptr, "null buffer with nonzero capacity");
    require(mu->value.size() == inst->value.size(), "matching and instance sizes differ");
    const auto found = smti::blocking_pairs(inst->value, mu->value);
    for (std::size_t i = 0; i < found.size() && i < capacity; ++i) {
      pairs[i] = {found[i].man, found[i].woman, static_cast<smti_blocking_case>(found[i].kind)};
    }
    *count = found.size();
  });
}

smti_status smti_is_stable(const smti_instance* inst, const smti_matching* mu, int* out) {
  return guarded([&] {
    require(inst != nullptr && mu != nullptr && out != nullptr, "null argument");
    require(mu->value.size() == inst->value.size(), "matching and instance sizes differ");
    *out = smti::is_stable(inst->value, mu->value) ? 1 : 0;
  });
}

smti_status smti_cost(const smti_instance* inst, const smti_matching* mu,
                      smti_objective objective, int64_t* out) {
  return guarded([&] {
    require(inst != nullptr && mu != nullptr && out != nullptr, "null argument");
    require(mu->value.size() == inst->value.size(), "matching and instance sizes differ");
    *out = smti::cost(inst->value, mu->value, to_objective(objective));
  });
}

void smti_solve_options_init(smti_solve_options* options) {
  if (options == nullptr) return;
  const smti::LtiuParams ltiu;
  const smti::GaParams ga;
  options->solver = SMTI_SOLVER_BRANCH_AND_BOUND;
  options->objective = SMTI_MAX_CARDINALITY;
  options->seed = 0;
  options->time_limit_ms = 0;
  options->ltiu_steps = ltiu.step_limit;
  options->ltiu_walk_p = ltiu.random_walk_p;
  options->ga_population = ga.population_size;
  options->ga_rounds = ga.rounds;
  options->ga_crossover_p = ga.crossover_p;
  options->ga_mutation_p = ga.mutation_p;
}

smti_status smti_solve(const smti_instance* inst, const smti_solve_options* options,
                       smti_report** out) {
  return guarded([&] {
    require(inst != nullptr && options != nullptr && out != nullptr, "null argument");
    smti::SolveReport report = solve(inst->value, *options);
    smti::Matching mu = report.matching;
    *out = new smti_report{std::move(report), smti_matching{std::move(mu)}};
  });
}

const smti_matching* smti_report_matching(const smti_report* report) {
  return report == nullptr ? nullptr : &report->matching;
}

int64_t smti_report_cost(const smti_report* report) {
  return report == nullptr ? 0 : report->value.cost;
}

int smti_report_optimal(const smti_report* report) {
  return report != nullptr && report->value.optimal ? 1 : 0;
}

int smti_report_timed_out(const smti_report* report) {
  return report != nullptr && report->value.timed_out ? 1 : 0;
}

uint64_t smti_report_nodes(const smti_report* report) {
  return report == nullptr ? 0 : report->value.stats.nodes_explored;
}

uint64_t smti_report_steps(const smti_report* report) {
  return report == nullptr ? 0 : report->value.stats.steps;
}

uint64_t smti_report_restarts(const smti_report* report) {
  return report == nullptr ? 0 : report->value.stats.restarts;
}

double smti_report_elapsed_ms(const smti_report* report) {
  return report == nullptr ? 0.0 : report->value.stats.elapsed_ms;
}

int smti_report_raw_eval(const smti_report* report, int64_t* out) {
  if (report == nullptr || out == nullptr || !report->value.raw_eval) return 0;
  *out = *report->value.raw_eval;
  return 1;
}

int smti_report_final_eval(const smti_report* report, int64_t* out) {
  if (report == nullptr || out == nullptr || !report->value.final_eval) return 0;
  *out = *report->value.final_eval;
  return 1;
}

const char* smti_report_stabilized_by(const smti_report* report) {
  return report == nullptr ? "" : report->value.stabilized_by.c_str();
}

void smti_report_free(smti_report* report) { delete report; }

smti_status smti_emit_asp(const smti_instance* inst, int variant, char** out) {
  return guarded([&] {
    require(inst != nullptr && out != nullptr, "null argument");
    std::optional<smti::Objective> objective;
    if (variant >= 0) objective = to_objective(static_cast<smti_objective>(variant));
    *out = dup_string(smti::emit_asp(inst->value, objective));
  });
}

smti_status smti_emit_lp(const smti_instance* inst, smti_objective objective, char** out) {
  return guarded([&] {
    require(inst != nullptr && out != nullptr, "null argument");
    *out = dup_string(smti::emit_lp(inst->value, to_objective(objective)));
  });
}

smti_status smti_bench_run(const char* config_text, int jobs, char** csv, char** output_path) {
  return guarded([&] {
    require(config_text != nullptr, "null argument");
    require(jobs >= 1, "jobs must be at least 1");
    const smti::BenchConfig config = smti::parse_bench_config(config_text);
    const std::string text = smti::format_csv(smti::run_bench(config, jobs));
    if (csv != nullptr) *csv = dup_string(text);
    if (output_path != nullptr) *output_path = dup_string(config.output);
  });
}

}  // extern "C"
