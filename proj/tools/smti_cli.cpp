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

// smti command-line tool. Uses libsmti through its C interface only.
//
// Exit codes: 0 success, 1 input or runtime error, 2 solver timed out without
// proving optimality, 64 usage error.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "smti/smti.h"

namespace {

constexpr int kExitError = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitUsage = 64;

// Carries a C API failure up to main.
class ApiError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(smti_status status) {
  if (status != SMTI_OK) throw ApiError(smti_last_error());
}

struct InstanceDeleter {
  void operator()(smti_instance* p) const { smti_instance_free(p); }
};
struct MatchingDeleter {
  void operator()(smti_matching* p) const { smti_matching_free(p); }
};
struct ReportDeleter {
  void operator()(smti_report* p) const { smti_report_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { smti_string_free(p); }
};
using InstancePtr = std::unique_ptr<smti_instance, InstanceDeleter>;
using MatchingPtr = std::unique_ptr<smti_matching, MatchingDeleter>;
using ReportPtr = std::unique_ptr<smti_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) {
  StringPtr owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out.flush()) throw std::runtime_error("cannot write " + path);
}

// "-" means standard output.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

InstancePtr load_instance(const std::string& path) {
  const std::string text = read_file(path);
  smti_instance* raw = nullptr;
  check(smti_instance_parse(text.c_str(), &raw));
  return InstancePtr(raw);
}

std::string shortest(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

const std::map<std::string, smti_objective> kObjectives = {
    {"max_cardinality", SMTI_MAX_CARDINALITY}, {"max-cardinality", SMTI_MAX_CARDINALITY},
    {"maxcard", SMTI_MAX_CARDINALITY},         {"egalitarian", SMTI_EGALITARIAN},
    {"sex_equal", SMTI_SEX_EQUAL},             {"sex-equal", SMTI_SEX_EQUAL},
};

const char* objective_name(smti_objective objective) {
  switch (objective) {
    case SMTI_MAX_CARDINALITY:
      return "max_cardinality";
    case SMTI_EGALITARIAN:
      return "egalitarian";
    case SMTI_SEX_EQUAL:
      return "sex_equal";
  }
  return "?";
}

const std::map<std::string, smti_solver> kSolvers = {
    {"bf", SMTI_SOLVER_BRUTE_FORCE}, {"bnb", SMTI_SOLVER_BRANCH_AND_BOUND},
    {"ltiu", SMTI_SOLVER_LTIU},      {"ga", SMTI_SOLVER_GA},
    {"da", SMTI_SOLVER_DEFERRED_ACCEPTANCE},
};

const char* case_name(smti_blocking_case kind) {
  switch (kind) {
    case SMTI_A3A:
      return "A3a";
    case SMTI_A3B:
      return "A3b";
    case SMTI_A3C:
      return "A3c";
    case SMTI_A3D:
      return "A3d";
  }
  return "?";
}

struct GenerateArgs {
  int n = 10;
  double p1 = 0.0;
  double p2 = 0.0;
  int count = 1;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
};

int cmd_generate(const GenerateArgs& args) {
  std::filesystem::create_directories(args.out_dir);
  for (int k = 0; k < args.count; ++k) {
    smti_instance* raw = nullptr;
    check(smti_instance_generate(args.n, args.p1, args.p2,
                                 smti_grid_seed(args.seed, 0, 0, static_cast<std::uint64_t>(k)),
                                 &raw));
    InstancePtr inst(raw);
    char* text = nullptr;
    check(smti_instance_emit(inst.get(), &text));
    const std::string name = "inst_" + std::to_string(args.n) + "_" + shortest(args.p1) + "_" +
                             shortest(args.p2) + "_" + std::to_string(k) + ".smti";
    const std::filesystem::path path = std::filesystem::path(args.out_dir) / name;
    write_file(path.string(), take(text));
    std::cout << path.string() << '\n';
  }
  return 0;
}

struct SolveArgs {
  std::string instance;
  std::string solver = "bnb";
  smti_objective objective = SMTI_MAX_CARDINALITY;
  smti_solve_options options{};
};

int cmd_solve(SolveArgs& args) {
  const InstancePtr inst = load_instance(args.instance);
  args.options.solver = kSolvers.at(args.solver);
  args.options.objective = args.objective;
  smti_report* raw = nullptr;
  check(smti_solve(inst.get(), &args.options, &raw));
  const ReportPtr report(raw);

  std::ostringstream out;
  out << "solver: " << args.solver << '\n'
      << "objective: " << objective_name(args.objective) << '\n'
      << "cost: " << smti_report_cost(report.get()) << '\n'
      << "optimal: " << (smti_report_optimal(report.get()) ? "true" : "false") << '\n'
      << "timed_out: " << (smti_report_timed_out(report.get()) ? "true" : "false") << '\n'
      << "nodes: " << smti_report_nodes(report.get()) << '\n'
      << "steps: " << smti_report_steps(report.get()) << '\n'
      << "restarts: " << smti_report_restarts(report.get()) << '\n'
      << "elapsed_ms: " << smti_report_elapsed_ms(report.get()) << '\n';
  std::int64_t eval = 0;
  if (smti_report_raw_eval(report.get(), &eval)) out << "raw_eval: " << eval << '\n';
  if (smti_report_final_eval(report.get(), &eval)) out << "final_eval: " << eval << '\n';
  const std::string stabilized = smti_report_stabilized_by(report.get());
  if (!stabilized.empty()) out << "stabilized_by: " << stabilized << '\n';

  const smti_matching* mu = smti_report_matching(report.get());
  out << "pairs: " << smti_matching_cardinality(mu) << '\n' << "matching:\n";
  char* text = nullptr;
  check(smti_matching_emit(mu, &text));
  out << take(text);
  std::cout << out.str();

  const bool timed_out = smti_report_timed_out(report.get()) != 0;
  const bool optimal = smti_report_optimal(report.get()) != 0;
  return timed_out && !optimal ? kExitTimeout : 0;
}

int cmd_check(const std::string& instance_path, const std::string& matching_path) {
  const InstancePtr inst = load_instance(instance_path);
  const std::string text = read_file(matching_path);
  smti_matching* raw = nullptr;
  check(smti_matching_parse(inst.get(), text.c_str(), &raw));
  const MatchingPtr mu(raw);

  std::size_t count = 0;
  check(smti_blocking_pairs(inst.get(), mu.get(), nullptr, 0, &count));
  std::vector<smti_blocking_pair> pairs(count);
  check(smti_blocking_pairs(inst.get(), mu.get(), pairs.data(), pairs.size(), &count));

  std::cout << (count == 0 ? "stable" : "unstable") << ", " << count << " blocking pair"
            << (count == 1 ? "" : "s") << '\n';
  for (const auto& bp : pairs) {
    std::cout << "(" << bp.man << ", " << bp.woman << ") " << case_name(bp.kind) << '\n';
  }
  for (const smti_objective objective : {SMTI_MAX_CARDINALITY, SMTI_EGALITARIAN, SMTI_SEX_EQUAL}) {
    std::int64_t value = 0;
    check(smti_cost(inst.get(), mu.get(), objective, &value));
    std::cout << objective_name(objective) << ": " << value << '\n';
  }
  return 0;
}

struct EncodeArgs {
  std::string instance;
  std::string format = "asp";
  std::string objective = "none";
  std::string out = "-";
};

int cmd_encode(const EncodeArgs& args) {
  const InstancePtr inst = load_instance(args.instance);
  char* text = nullptr;
  if (args.format == "asp") {
    const int variant =
        args.objective == "none" ? -1 : static_cast<int>(kObjectives.at(args.objective));
    check(smti_emit_asp(inst.get(), variant, &text));
  } else {
    if (args.objective == "none") {
      throw std::invalid_argument("--format lp needs an --objective");
    }
    check(smti_emit_lp(inst.get(), kObjectives.at(args.objective), &text));
  }
  write_output(args.out, take(text));
  return 0;
}

int cmd_bench(const std::string& config_path, int jobs, const std::string& out) {
  const std::string config = read_file(config_path);
  char* csv = nullptr;
  char* configured = nullptr;
  check(smti_bench_run(config.c_str(), jobs, &csv, &configured));
  const std::string text = take(csv);
  std::string path = take(configured);
  if (!out.empty()) path = out;
  write_output(path, text);
  if (path != "-") std::cerr << "wrote " << path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable marriage with ties and incomplete lists: solvers and tooling"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(smti_version()));

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write random instance files");
  generate->add_option("--n", gen.n, "Agents per side")->check(CLI::PositiveNumber);
  generate->add_option("--p1", gen.p1, "Deletion probability, in [0, 1)");
  generate->add_option("--p2", gen.p2, "Tie probability, in [0, 1]");
  generate->add_option("--count", gen.count, "Number of instances")->check(CLI::PositiveNumber);
  generate->add_option("--seed", gen.seed, "Base seed");
  generate->add_option("--out-dir", gen.out_dir, "Output directory");

  SolveArgs solve;
  smti_solve_options_init(&solve.options);
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("instance", solve.instance, "Instance file")->required();
  solve_cmd->add_option("--solver", solve.solver, "bf, bnb, ltiu, ga or da")
      ->check(CLI::IsMember({"bf", "bnb", "ltiu", "ga", "da"}));
  solve_cmd->add_option("--objective", solve.objective, "max_cardinality, egalitarian, sex_equal")
      ->transform(CLI::CheckedTransformer(kObjectives));
  solve_cmd->add_option("--seed", solve.options.seed, "Seed for randomized solvers");
  solve_cmd->add_option("--time-limit-ms", solve.options.time_limit_ms,
                        "Branch-and-bound time limit, 0 for none")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--ltiu-steps", solve.options.ltiu_steps, "LTIU step budget");
  solve_cmd->add_option("--ltiu-walk-p", solve.options.ltiu_walk_p, "LTIU random-walk probability");
  solve_cmd->add_option("--ga-population", solve.options.ga_population, "GA population size");
  solve_cmd->add_option("--ga-rounds", solve.options.ga_rounds, "GA rounds");
  solve_cmd->add_option("--ga-crossover", solve.options.ga_crossover_p, "GA crossover probability");
  solve_cmd->add_option("--ga-mutation", solve.options.ga_mutation_p, "GA mutation probability");

  std::string check_instance;
  std::string check_matching;
  auto* check_cmd = app.add_subcommand("check", "Check a matching for weak stability");
  check_cmd->add_option("instance", check_instance, "Instance file")->required();
  check_cmd->add_option("matching", check_matching, "Matching file")->required();

  EncodeArgs enc;
  auto* encode = app.add_subcommand("encode", "Emit an ASP or LP model");
  encode->add_option("instance", enc.instance, "Instance file")->required();
  encode->add_option("--format", enc.format, "asp or lp")->check(CLI::IsMember({"asp", "lp"}));
  encode->add_option("--objective", enc.objective,
                     "max_cardinality, egalitarian, sex_equal, or none (asp only)")
      ->check(CLI::IsMember({"none", "max_cardinality", "max-cardinality", "maxcard",
                             "egalitarian", "sex_equal", "sex-equal"}));
  encode->add_option("--out", enc.out, "Output file, - for stdout");

  std::string bench_config;
  int bench_jobs = 1;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "Run a benchmark grid and write CSV");
  bench->add_option("config", bench_config, "Config file")->required();
  bench->add_option("--jobs", bench_jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_option("--out", bench_out, "CSV path, - for stdout; overrides the config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen);
    if (solve_cmd->parsed()) return cmd_solve(solve);
    if (check_cmd->parsed()) return cmd_check(check_instance, check_matching);
    if (encode->parsed()) return cmd_encode(enc);
    if (bench->parsed()) return cmd_bench(bench_config, bench_jobs, bench_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}
