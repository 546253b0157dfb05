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

#include "cbj/cbj.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "cbj/engine.hpp"
#include "cbj/oracle.hpp"
#include "cbj/problems.hpp"

struct cbj_instance {
  cbj::CspInstance model;
};

struct cbj_outcome {
  cbj::SearchOutcome result;
};

namespace {

thread_local std::string last_error;

cbj_status fail(cbj_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
cbj_status guarded(F&& body) {
  try {
    return body();
  } catch (const cbj::ParseError& e) {
    return fail(CBJ_ERR_PARSE, e.what());
  } catch (const cbj::InvalidInstance& e) {
    return fail(CBJ_ERR_INVALID_INSTANCE, e.what());
  } catch (const cbj::OracleTooLarge& e) {
    return fail(CBJ_ERR_TOO_LARGE, e.what());
  } catch (const cbj::ContractViolation& e) {
    return fail(CBJ_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CBJ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CBJ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CBJ_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cbj_status emit_instance(cbj::CspInstance model, cbj_instance** out) {
  *out = new cbj_instance{std::move(model)};
  return CBJ_OK;
}

}  // namespace

extern "C" {

const char* cbj_last_error(void) { return last_error.c_str(); }

const char* cbj_status_name(cbj_status status) {
  switch (status) {
    case CBJ_OK: return "ok";
    case CBJ_ERR_ARGUMENT: return "invalid argument";
    case CBJ_ERR_PARSE: return "parse error";
    case CBJ_ERR_INVALID_INSTANCE: return "invalid instance";
    case CBJ_ERR_IO: return "i/o error";
    case CBJ_ERR_TOO_LARGE: return "too large";
    case CBJ_ERR_BUFFER: return "buffer too small";
    case CBJ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

cbj_status cbj_instance_paper(size_t var_card, size_t value_card, cbj_instance** out) {
  if (!out) return fail(CBJ_ERR_ARGUMENT, "null output handle");
  return guarded([&] { return emit_instance(cbj::paper_problem(var_card, value_card), out); });
}

cbj_status cbj_instance_queens(size_t n, cbj_instance** out) {
  if (!out) return fail(CBJ_ERR_ARGUMENT, "null output handle");
  return guarded([&] { return emit_instance(cbj::queens(n), out); });
}

cbj_status cbj_instance_parse(const char* text, cbj_instance** out) {
  if (!text || !out) return fail(CBJ_ERR_ARGUMENT, "null argument");
  return guarded([&] { return emit_instance(cbj::parse_instance(text), out); });
}

cbj_status cbj_instance_load(const char* path, cbj_instance** out) {
  if (!path || !out) return fail(CBJ_ERR_ARGUMENT, "null argument");
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(CBJ_ERR_IO, std::string("cannot open ") + path);
  std::ostringstream text;
  text << in.rdbuf();
  return guarded([&] {
    try {
      return emit_instance(cbj::parse_instance(text.str()), out);
    } catch (const cbj::ParseError& e) {
      return fail(CBJ_ERR_PARSE, std::string(path) + ": " + e.what());
    }
  });
}

cbj_status cbj_instance_serialize(const cbj_instance* instance, char** out_text) {
  if (!instance || !out_text) return fail(CBJ_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out_text = copy_string(cbj::serialize_instance(instance->model));
    return CBJ_OK;
  });
}

size_t cbj_instance_var_count(const cbj_instance* instance) {
  return instance ? instance->model.var_count() : 0;
}

void cbj_instance_free(cbj_instance* instance) { delete instance; }

void cbj_solve_options_init(cbj_solve_options* options) {
  if (!options) return;
  options->strategy = CBJ_STRATEGY_CHRONO;
  options->mode = CBJ_MODE_FIRST;
  options->solution_limit = 1;
  options->max_trials = CBJ_UNLIMITED;
  options->trace = nullptr;
  options->trace_user = nullptr;
}

cbj_status cbj_solve(const cbj_instance* instance, const cbj_solve_options* options,
                     cbj_outcome** out) {
  if (!instance || !options || !out) return fail(CBJ_ERR_ARGUMENT, "null argument");

  cbj::Strategy strategy;
  switch (options->strategy) {
    case CBJ_STRATEGY_CHRONO: strategy = cbj::Strategy::Chrono; break;
    case CBJ_STRATEGY_ALG1: strategy = cbj::Strategy::Alg1; break;
    case CBJ_STRATEGY_ALG2: strategy = cbj::Strategy::Alg2; break;
    default: return fail(CBJ_ERR_ARGUMENT, "unknown strategy");
  }
  cbj::SearchMode mode;
  switch (options->mode) {
    case CBJ_MODE_FIRST: mode = cbj::SearchMode::first(); break;
    case CBJ_MODE_ALL: mode = cbj::SearchMode::all(); break;
    case CBJ_MODE_LIMIT:
      if (options->solution_limit == 0) return fail(CBJ_ERR_ARGUMENT, "solution limit must be >= 1");
      mode = cbj::SearchMode::up_to(options->solution_limit);
      break;
    default: return fail(CBJ_ERR_ARGUMENT, "unknown mode");
  }
  cbj::SearchLimits limits;
  if (options->max_trials != CBJ_UNLIMITED) limits.max_trials = options->max_trials;

  cbj::TraceSink sink;
  if (options->trace) {
    sink = [fn = options->trace, user = options->trace_user](const cbj::TraceEvent& e) {
      const std::string line = cbj::format_event(e);
      fn(line.c_str(), user);
    };
  }
  return guarded([&] {
    *out = new cbj_outcome{cbj::solve(instance->model, strategy, mode, limits, sink)};
    return CBJ_OK;
  });
}

cbj_status cbj_enumerate_all(const cbj_instance* instance, uint64_t tuple_cap, cbj_outcome** out) {
  if (!instance || !out) return fail(CBJ_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    cbj::SearchOutcome result;
    result.solutions = cbj::enumerate_all(instance->model, tuple_cap);
    result.stats.solutions = result.solutions.size();
    result.termination = result.solutions.empty() ? cbj::Termination::Unsatisfiable
                                                  : cbj::Termination::Exhausted;
    *out = new cbj_outcome{std::move(result)};
    return CBJ_OK;
  });
}

cbj_status cbj_outcome_stats(const cbj_outcome* outcome, cbj_stats* out) {
  if (!outcome || !out) return fail(CBJ_ERR_ARGUMENT, "null argument");
  const cbj::SearchStats& s = outcome->result.stats;
  *out = cbj_stats{s.trials, s.consistency_checks, s.local_conflicts,
                   s.exhaustions, s.backjumps, s.solutions};
  return CBJ_OK;
}

cbj_termination cbj_outcome_termination(const cbj_outcome* outcome) {
  if (!outcome) return CBJ_TERM_UNSATISFIABLE;
  return static_cast<cbj_termination>(outcome->result.termination);
}

size_t cbj_outcome_solution_count(const cbj_outcome* outcome) {
  return outcome ? outcome->result.solutions.size() : 0;
}

cbj_status cbj_outcome_solution(const cbj_outcome* outcome, size_t index, int32_t* values,
                                size_t capacity) {
  if (!outcome) return fail(CBJ_ERR_ARGUMENT, "null outcome");
  if (index >= outcome->result.solutions.size()) {
    return fail(CBJ_ERR_ARGUMENT, "solution index " + std::to_string(index) + " out of range");
  }
  const cbj::Solution& s = outcome->result.solutions[index];
  if (capacity < s.size()) return fail(CBJ_ERR_BUFFER, "need room for " + std::to_string(s.size()) + " values");
  if (s.empty()) return CBJ_OK;
  if (!values) return fail(CBJ_ERR_ARGUMENT, "null value buffer");
  return guarded([&] {
    const std::vector<cbj::Value> by_var = cbj::values_by_var(s);
    std::copy(by_var.begin(), by_var.end(), values);
    return CBJ_OK;
  });
}

int cbj_outcome_same_solutions(const cbj_outcome* a, const cbj_outcome* b) {
  if (!a || !b) return 0;
  return a->result.solutions == b->result.solutions ? 1 : 0;
}

int cbj_outcome_first_contains_queens(const cbj_outcome* outcome) {
  if (!outcome || outcome->result.solutions.empty()) return 0;
  try {
    return cbj::first_solution_contains_queens(outcome->result.solutions.front()) ? 1 : 0;
  } catch (...) {
    return 0;
  }
}

void cbj_outcome_free(cbj_outcome* outcome) { delete outcome; }

const char* cbj_strategy_name(cbj_strategy strategy) {
  switch (strategy) {
    case CBJ_STRATEGY_CHRONO: return "chrono";
    case CBJ_STRATEGY_ALG1: return "alg1";
    case CBJ_STRATEGY_ALG2: return "alg2";
  }
  return "unknown";
}

const char* cbj_termination_name(cbj_termination termination) {
  switch (termination) {
    case CBJ_TERM_FIRST_FOUND: return "FirstFound";
    case CBJ_TERM_EXHAUSTED: return "Exhausted";
    case CBJ_TERM_UNSATISFIABLE: return "Unsatisfiable";
    case CBJ_TERM_LIMIT_REACHED: return "LimitReached";
  }
  return "unknown";
}

cbj_status cbj_format_stats(const cbj_stats* stats, cbj_termination termination, int json,
                            char** out_text) {
  if (!stats || !out_text) return fail(CBJ_ERR_ARGUMENT, "null argument");
  if (termination < CBJ_TERM_FIRST_FOUND || termination > CBJ_TERM_LIMIT_REACHED) {
    return fail(CBJ_ERR_ARGUMENT, "unknown termination");
  }
  return guarded([&] {
    const cbj::SearchStats s{stats->trials,      stats->consistency_checks, stats->local_conflicts,
                             stats->exhaustions, stats->backjumps,          stats->solutions};
    const auto t = static_cast<cbj::Termination>(termination);
    *out_text = copy_string(json ? cbj::format_stats_json(s, t) : cbj::format_stats_text(s, t));
    return CBJ_OK;
  });
}

void cbj_string_free(char* text) { std::free(text); }

}  // extern "C"
