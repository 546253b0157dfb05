// Copyright 2026 The cbj Authors.
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

// Command-line front end. Talks to the engines only through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cbj/cbj.h"
#include "json.hpp"

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;
constexpr int kExitMismatch = 4;

constexpr std::uint64_t kDefaultMaxTrials = 50'000'000;

struct InstanceDeleter {
  void operator()(cbj_instance* p) const { cbj_instance_free(p); }
};
struct OutcomeDeleter {
  void operator()(cbj_outcome* p) const { cbj_outcome_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { cbj_string_free(p); }
};
using InstancePtr = std::unique_ptr<cbj_instance, InstanceDeleter>;
using OutcomePtr = std::unique_ptr<cbj_outcome, OutcomeDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(cbj_status status) {
  if (status != CBJ_OK) {
    throw UsageError(std::string(cbj_status_name(status)) + ": " + cbj_last_error());
  }
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw UsageError("bad " + what + " '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

// paper:V,K | queens:N | file:PATH
InstancePtr load_problem(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("bad --problem '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  cbj_instance* raw = nullptr;
  if (kind == "paper") {
    const auto comma = arg.find(',');
    if (comma == std::string::npos) throw UsageError("expected paper:V,K");
    check(cbj_instance_paper(parse_count(arg.substr(0, comma), "variable count"),
                             parse_count(arg.substr(comma + 1), "value count"), &raw));
  } else if (kind == "queens") {
    check(cbj_instance_queens(parse_count(arg, "board size"), &raw));
  } else if (kind == "file") {
    check(cbj_instance_load(arg.c_str(), &raw));
  } else {
    throw UsageError("unknown problem kind '" + kind + "'");
  }
  return InstancePtr(raw);
}

void apply_mode(const std::string& mode, cbj_solve_options& options) {
  if (mode == "first") {
    options.mode = CBJ_MODE_FIRST;
  } else if (mode == "all") {
    options.mode = CBJ_MODE_ALL;
  } else if (mode.rfind("limit:", 0) == 0) {
    options.mode = CBJ_MODE_LIMIT;
    options.solution_limit = parse_count(mode.substr(6), "solution limit");
    if (options.solution_limit == 0) throw UsageError("solution limit must be at least 1");
  } else {
    throw UsageError("unknown --mode '" + mode + "'");
  }
}

cbj_strategy parse_strategy(const std::string& name) {
  if (name == "chrono") return CBJ_STRATEGY_CHRONO;
  if (name == "alg1") return CBJ_STRATEGY_ALG1;
  if (name == "alg2") return CBJ_STRATEGY_ALG2;
  throw UsageError("unknown --strategy '" + name + "'");
}

struct CommonArgs {
  std::string problem;
  std::string mode = "first";
  std::uint64_t max_trials = kDefaultMaxTrials;
  std::string stats = "text";
  bool quiet = false;
};

void add_common(CLI::App& cmd, CommonArgs& args) {
  cmd.add_option("--problem", args.problem, "paper:V,K | queens:N | file:PATH")->required();
  cmd.add_option("--mode", args.mode, "first | all | limit:N");
  cmd.add_option("--max-trials", args.max_trials, "abort after this many trials");
  cmd.add_option("--stats", args.stats, "text | json")->check(CLI::IsMember({"text", "json"}));
  cmd.add_flag("--quiet", args.quiet, "do not print solutions");
}

cbj_stats stats_of(const cbj_outcome* outcome) {
  cbj_stats s{};
  check(cbj_outcome_stats(outcome, &s));
  return s;
}

std::string render_stats(const cbj_outcome* outcome, bool json) {
  const cbj_stats s = stats_of(outcome);
  char* raw = nullptr;
  check(cbj_format_stats(&s, cbj_outcome_termination(outcome), json ? 1 : 0, &raw));
  return StringPtr(raw).get();
}

void print_solutions(const cbj_outcome* outcome, std::size_t var_count) {
  std::vector<std::int32_t> values(var_count);
  const std::size_t count = cbj_outcome_solution_count(outcome);
  for (std::size_t k = 0; k < count; ++k) {
    check(cbj_outcome_solution(outcome, k, values.data(), values.size()));
    std::cout << "solution " << k + 1 << ':';
    for (std::int32_t v : values) std::cout << ' ' << v;
    std::cout << '\n';
  }
}

int exit_code(const cbj_outcome* outcome) {
  if (cbj_outcome_termination(outcome) == CBJ_TERM_LIMIT_REACHED) return kExitLimit;
  return cbj_outcome_solution_count(outcome) > 0 ? kExitSolved : kExitNoSolution;
}

void write_line(const char* line, void* user) {
  std::FILE* out = static_cast<std::FILE*>(user);
  std::fputs(line, out);
  std::fputc('\n', out);
}

int run_solve(const CommonArgs& args, const std::string& strategy,
              const std::optional<std::string>& trace_path) {
  InstancePtr instance = load_problem(args.problem);
  cbj_solve_options options;
  cbj_solve_options_init(&options);
  options.strategy = parse_strategy(strategy);
  options.max_trials = args.max_trials;
  apply_mode(args.mode, options);

  std::unique_ptr<std::FILE, int (*)(std::FILE*)> trace(nullptr, &std::fclose);
  if (trace_path) {
    trace.reset(std::fopen(trace_path->c_str(), "w"));
    if (!trace) throw UsageError("cannot write trace file " + *trace_path);
    options.trace = &write_line;
    options.trace_user = trace.get();
  }

  cbj_outcome* raw = nullptr;
  check(cbj_solve(instance.get(), &options, &raw));
  OutcomePtr outcome(raw);
  if (!args.quiet) print_solutions(outcome.get(), cbj_instance_var_count(instance.get()));
  std::cout << render_stats(outcome.get(), args.stats == "json");
  return exit_code(outcome.get());
}

int run_compare(const CommonArgs& args) {
  InstancePtr instance = load_problem(args.problem);
  const cbj_strategy strategies[] = {CBJ_STRATEGY_CHRONO, CBJ_STRATEGY_ALG1, CBJ_STRATEGY_ALG2};
  std::vector<OutcomePtr> outcomes;
  for (cbj_strategy s : strategies) {
    cbj_solve_options options;
    cbj_solve_options_init(&options);
    options.strategy = s;
    options.max_trials = args.max_trials;
    apply_mode(args.mode, options);
    cbj_outcome* raw = nullptr;
    check(cbj_solve(instance.get(), &options, &raw));
    outcomes.emplace_back(raw);
  }

  bool identical = true;
  for (std::size_t k = 1; k < outcomes.size(); ++k) {
    identical = identical && cbj_outcome_same_solutions(outcomes[0].get(), outcomes[k].get());
  }
  const char* verdict = identical ? "identical" : "differ";

  if (!args.quiet) print_solutions(outcomes[0].get(), cbj_instance_var_count(instance.get()));
  if (args.stats == "json") {
    nlohmann::ordered_json report;
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      report[cbj_strategy_name(strategies[k])] =
          nlohmann::ordered_json::parse(render_stats(outcomes[k].get(), true));
    }
    report["solutions"] = verdict;
    std::cout << report.dump() << '\n';
  } else {
    std::cout << std::left << std::setw(10) << "strategy" << std::right << std::setw(12) << "trials"
              << std::setw(20) << "consistency_checks" << std::setw(17) << "local_conflicts"
              << std::setw(13) << "exhaustions" << std::setw(11) << "backjumps" << std::setw(11)
              << "solutions"
              << "  termination\n";
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      const cbj_stats s = stats_of(outcomes[k].get());
      std::cout << std::left << std::setw(10) << cbj_strategy_name(strategies[k]) << std::right
                << std::setw(12) << s.trials << std::setw(20) << s.consistency_checks
                << std::setw(17) << s.local_conflicts << std::setw(13) << s.exhaustions
                << std::setw(11) << s.backjumps << std::setw(11) << s.solutions << "  "
                << cbj_termination_name(cbj_outcome_termination(outcomes[k].get())) << '\n';
    }
    std::cout << "solutions: " << verdict << '\n';
  }

  if (!identical) return kExitMismatch;
  for (const OutcomePtr& o : outcomes) {
    if (cbj_outcome_termination(o.get()) == CBJ_TERM_LIMIT_REACHED) return kExitLimit;
  }
  return exit_code(outcomes[0].get());
}

int run_export(const std::string& problem, const std::optional<std::string>& output) {
  InstancePtr instance = load_problem(problem);
  char* raw = nullptr;
  check(cbj_instance_serialize(instance.get(), &raw));
  StringPtr text(raw);
  if (!output) {
    std::cout << text.get();
    return 0;
  }
  std::ofstream out(*output, std::ios::binary);
  if (!out || !(out << text.get())) throw UsageError("cannot write " + *output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-domain CSP search with conflict-directed backjumping"};
  app.require_subcommand(1);

  CommonArgs solve_args;
  std::string strategy = "chrono";
  std::optional<std::string> trace_path;
  CLI::App* solve = app.add_subcommand("solve", "solve one instance with one strategy");
  add_common(*solve, solve_args);
  solve->add_option("--strategy", strategy, "chrono | alg1 | alg2");
  solve->add_option("--trace", trace_path, "write the search trace to this file");

  CommonArgs compare_args;
  CLI::App* compare = app.add_subcommand("compare", "run all strategies on one instance");
  add_common(*compare, compare_args);

  std::string export_problem;
  std::optional<std::string> export_output;
  CLI::App* exporter = app.add_subcommand("export", "write an instance in the text format");
  exporter->add_option("--problem", export_problem, "paper:V,K | queens:N | file:PATH")->required();
  exporter->add_option("--output", export_output, "destination file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(solve_args, strategy, trace_path);
    if (compare->parsed()) return run_compare(compare_args);
    return run_export(export_problem, export_output);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
