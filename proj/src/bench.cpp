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

#include "smti/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "smti/encode.hpp"
#include "smti/exact.hpp"
#include "smti/gen.hpp"
#include "smti/rng.hpp"

namespace smti {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T number(std::string_view text, int line, std::string_view key) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(line, "bad value for " + std::string(key) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(trim(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

const std::set<std::string, std::less<>> kSolvers = {"bf", "bnb", "ltiu", "ga", "da"};

struct Outcome {
  double time_ms = 0.0;
  std::int64_t cost = 0;
  bool solved = false;
  bool optimal = false;
  bool timed_out = false;
  bool refused = false;
};

Outcome run_solver(const std::string& solver, const Instance& inst, std::uint64_t instance_seed,
                   const BenchConfig& config) {
  Outcome out;
  if (solver == "da") {
    const auto start = std::chrono::steady_clock::now();
    const Matching mu = deferred_acceptance(inst, instance_seed);
    out.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                      .count();
    out.cost = cost(inst, mu, config.objective);
    out.solved = true;
    return out;
  }
  SolveReport report;
  if (solver == "bf") {
    if (inst.size() > kBruteForceMaxSize) {
      out.refused = true;
      return out;
    }
    report = brute_force(inst, config.objective);
  } else if (solver == "bnb") {
    report = branch_and_bound(inst, config.objective, config.time_limit_ms);
  } else if (solver == "ltiu") {
    LtiuParams params = config.ltiu;
    params.seed = mix64(instance_seed ^ config.ltiu.seed);
    report = ltiu_solve(inst, params, config.objective);
  } else {
    GaParams params = config.ga;
    params.seed = mix64(instance_seed ^ config.ga.seed);
    report = ga_solve(inst, params, config.objective);
  }
  out.time_ms = report.stats.elapsed_ms;
  out.cost = report.cost;
  out.timed_out = report.timed_out;
  out.solved = !report.timed_out;
  out.optimal = report.optimal;
  return out;
}

std::string fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

std::string shortest(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

}  // namespace

std::vector<double> grid_values(double min, double max, double step) {
  if (!(min <= max)) throw std::invalid_argument("range minimum exceeds maximum");
  if (min == max) return {min};
  if (!(step > 0.0)) throw std::invalid_argument("range step must be positive");
  std::vector<double> out;
  for (int k = 0;; ++k) {
    const double value = std::round((min + k * step) * 1e9) / 1e9;
    if (value > max + 1e-9) break;
    out.push_back(value);
  }
  return out;
}

BenchConfig parse_bench_config(std::string_view text) {
  BenchConfig config;
  std::set<std::string, std::less<>> seen;
  int line_number = 0;
  while (!text.empty()) {
    ++line_number;
    const auto end = text.find('\n');
    const auto line = trim(text.substr(0, end));
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_number, "expected `key = value`");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (!seen.emplace(key).second) {
      throw ParseError(line_number, "duplicate key " + std::string(key));
    }
    const int ln = line_number;

    if (key == "n") {
      for (auto item : split_list(value)) {
        const int n = number<int>(item, ln, key);
        if (n <= 0) throw ParseError(ln, "sizes must be positive");
        config.sizes.push_back(n);
      }
    } else if (key == "p1_min") {
      config.p1_min = number<double>(value, ln, key);
    } else if (key == "p1_max") {
      config.p1_max = number<double>(value, ln, key);
    } else if (key == "p1_step") {
      config.p1_step = number<double>(value, ln, key);
    } else if (key == "p2_min") {
      config.p2_min = number<double>(value, ln, key);
    } else if (key == "p2_max") {
      config.p2_max = number<double>(value, ln, key);
    } else if (key == "p2_step") {
      config.p2_step = number<double>(value, ln, key);
    } else if (key == "replicates") {
      config.replicates = number<int>(value, ln, key);
      if (config.replicates < 1) throw ParseError(ln, "replicates must be >= 1");
    } else if (key == "solvers") {
      for (auto item : split_list(value)) {
        if (!kSolvers.contains(item)) {
          throw ParseError(ln, "unknown solver '" + std::string(item) + "'");
        }
        config.solvers.emplace_back(item);
      }
    } else if (key == "objective") {
      const auto objective = parse_objective(value);
      if (!objective) throw ParseError(ln, "unknown objective '" + std::string(value) + "'");
      config.objective = *objective;
    } else if (key == "time_limit_ms") {
      config.time_limit_ms = number<std::int64_t>(value, ln, key);
      if (config.time_limit_ms < 0) throw ParseError(ln, "time_limit_ms must be >= 0");
    } else if (key == "base_seed") {
      config.base_seed = number<std::uint64_t>(value, ln, key);
    } else if (key == "output") {
      config.output = std::string(value);
    } else if (key == "ltiu.steps") {
      config.ltiu.step_limit = number<std::uint64_t>(value, ln, key);
    } else if (key == "ltiu.walk_p") {
      config.ltiu.random_walk_p = number<double>(value, ln, key);
    } else if (key == "ltiu.seed") {
      config.ltiu.seed = number<std::uint64_t>(value, ln, key);
    } else if (key == "ga.population") {
      config.ga.population_size = number<int>(value, ln, key);
    } else if (key == "ga.rounds") {
      config.ga.rounds = number<int>(value, ln, key);
    } else if (key == "ga.crossover") {
      config.ga.crossover_p = number<double>(value, ln, key);
    } else if (key == "ga.mutation") {
      config.ga.mutation_p = number<double>(value, ln, key);
    } else if (key == "ga.seed") {
      config.ga.seed = number<std::uint64_t>(value, ln, key);
    } else {
      throw ParseError(ln, "unknown key '" + std::string(key) + "'");
    }
  }

  for (const char* key : {"n", "p1_min", "p1_max", "p1_step", "p2_min", "p2_max", "p2_step",
                          "solvers"}) {
    if (!seen.contains(std::string_view(key))) {
      throw ParseError(line_number, std::string("missing key ") + key);
    }
  }
  auto in_unit = [](double p) { return p >= 0.0 && p < 1.0; };
  if (!in_unit(config.p1_min) || !in_unit(config.p1_max) || !in_unit(config.p2_min) ||
      !in_unit(config.p2_max)) {
    throw ParseError(line_number, "probability ranges must lie in [0, 1)");
  }
  auto check_range = [&](double lo, double hi, double step, const char* name) {
    if (lo > hi) throw ParseError(line_number, std::string(name) + " range is empty");
    if (lo < hi && !(step > 0.0)) {
      throw ParseError(line_number, std::string(name) + "_step must be positive");
    }
  };
  check_range(config.p1_min, config.p1_max, config.p1_step, "p1");
  check_range(config.p2_min, config.p2_max, config.p2_step, "p2");
  if (config.ga.population_size < 2) throw ParseError(line_number, "ga.population must be >= 2");
  if (config.ga.rounds < 0) throw ParseError(line_number, "ga.rounds must be >= 0");
  auto is_probability = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!is_probability(config.ltiu.random_walk_p) || !is_probability(config.ga.crossover_p) ||
      !is_probability(config.ga.mutation_p)) {
    throw ParseError(line_number, "solver probabilities must lie in [0, 1]");
  }
  return config;
}

std::vector<BenchRow> run_bench(const BenchConfig& config, int jobs) {
  const auto p1_values = grid_values(config.p1_min, config.p1_max, config.p1_step);
  const auto p2_values = grid_values(config.p2_min, config.p2_max, config.p2_step);

  struct Cell {
    int n;
    std::size_t i1;
    std::size_t i2;
  };
  std::vector<Cell> cells;
  for (int n : config.sizes) {
    for (std::size_t i1 = 0; i1 < p1_values.size(); ++i1) {
      for (std::size_t i2 = 0; i2 < p2_values.size(); ++i2) cells.push_back({n, i1, i2});
    }
  }

  // results[cell][solver]
  const std::size_t solver_count = config.solvers.size();
  std::vector<BenchRow> results(cells.size() * solver_count);

  auto run_cell = [&](std::size_t c) {
    const Cell& cell = cells[c];
    std::vector<std::vector<Outcome>> outcomes(solver_count);
    for (int r = 0; r < config.replicates; ++r) {
      const std::uint64_t seed =
          grid_seed(config.base_seed, cell.i1, cell.i2, static_cast<std::uint64_t>(r));
      const Instance inst =
          generate({cell.n, p1_values[cell.i1], p2_values[cell.i2], seed});
      for (std::size_t s = 0; s < solver_count; ++s) {
        outcomes[s].push_back(run_solver(config.solvers[s], inst, seed, config));
      }
    }
    for (std::size_t s = 0; s < solver_count; ++s) {
      BenchRow row;
      row.solver = config.solvers[s];
      row.n = cell.n;
      row.p1 = p1_values[cell.i1];
      row.p2 = p2_values[cell.i2];
      double time_sum = 0.0;
      double cost_sum = 0.0;
      for (const auto& o : outcomes[s]) {
        row.timed_out_count += o.timed_out;
        row.refused_count += o.refused;
        if (!o.solved) continue;
        ++row.solved_count;
        row.optimal_count += o.optimal;
        time_sum += o.time_ms;
        cost_sum += static_cast<double>(o.cost);
      }
      if (row.solved_count > 0) {
        row.mean_time_ms = time_sum / row.solved_count;
        row.mean_cost = cost_sum / row.solved_count;
      }
      results[c * solver_count + s] = std::move(row);
    }
  };

  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || cells.size() <= 1) {
    for (std::size_t c = 0; c < cells.size(); ++c) run_cell(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < std::min(workers, cells.size()); ++t) {
        pool.emplace_back([&] {
          for (std::size_t c = next++; c < cells.size(); c = next++) {
            try {
              run_cell(c);
            } catch (...) {
              std::lock_guard lock(error_mutex);
              if (!error) error = std::current_exception();
            }
          }
        });
      }
    }
    if (error) std::rethrow_exception(error);
  }

  std::vector<BenchRow> rows;
  rows.reserve(results.size());
  for (std::size_t s = 0; s < solver_count; ++s) {
    for (std::size_t c = 0; c < cells.size(); ++c) rows.push_back(results[c * solver_count + s]);
  }
  return rows;
}

std::string format_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "solver,n,p1,p2,mean_time_ms,mean_cost,solved_count,optimal_count\n";
  for (const auto& row : rows) {
    out << row.solver << ',' << row.n << ',' << shortest(row.p1) << ',' << shortest(row.p2) << ',';
    if (row.solved_count == 0) {
      const char* mark = row.timed_out_count > 0 ? "TO" : "NA";
      out << mark << ',' << mark;
    } else {
      out << fixed(row.mean_time_ms, 3) << ',' << fixed(row.mean_cost, 4);
    }
    out << ',' << row.solved_count << ',' << row.optimal_count << '\n';
  }
  return out.str();
}

}  // namespace smti
