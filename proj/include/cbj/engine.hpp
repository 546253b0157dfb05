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

// Search engines: chronological backtracking and two conflict-directed
// backjumping variants over an explicit choice-point stack.

#ifndef CBJ_ENGINE_HPP
#define CBJ_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cbj/conflict_set.hpp"
#include "cbj/model.hpp"

namespace cbj {

enum class Strategy : std::uint8_t {
  Chrono,  // chronological backtracking
  Alg1,    // backjumping, one explanation per eliminated value
  Alg2,    // backjumping, single unioned explanation per variable
};

struct SearchMode {
  enum class Kind : std::uint8_t { First, All, Limit };
  Kind kind = Kind::First;
  std::size_t limit = 1;  // Limit only: stop after this many solutions

  static constexpr SearchMode first() { return {Kind::First, 1}; }
  static constexpr SearchMode all() { return {Kind::All, 0}; }
  static constexpr SearchMode up_to(std::size_t n) { return {Kind::Limit, n}; }
};

struct SearchLimits {
  std::optional<std::uint64_t> max_trials;  // unlimited when empty
};

enum class Termination : std::uint8_t { FirstFound, Exhausted, Unsatisfiable, LimitReached };

struct SearchStats {
  std::uint64_t trials = 0;              // values taken from a frame and tested
  std::uint64_t consistency_checks = 0;  // binary constraint evaluations
  std::uint64_t local_conflicts = 0;     // violated verdicts
  std::uint64_t exhaustions = 0;         // frames that ran out of values
  std::uint64_t backjumps = 0;           // frames skipped because var ∉ C
  std::uint64_t solutions = 0;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

/// Full assignment, entries in static assignment order.
using Solution = std::vector<Assignment>;

struct SearchOutcome {
  std::vector<Solution> solutions;
  SearchStats stats;
  Termination termination = Termination::Unsatisfiable;
};

namespace trace {
struct Assign { VarId var; Value value; };
struct ConflictSaved { ConflictSet conflict; };
struct Backjump { VarId var; };  // frame of `var` skipped
struct Exhaust { VarId var; };
struct SolutionFound { Solution solution; };
struct Fail {};
}  // namespace trace

using TraceEvent = std::variant<trace::Assign, trace::ConflictSaved, trace::Backjump,
                                trace::Exhaust, trace::SolutionFound, trace::Fail>;
using TraceSink = std::function<void(const TraceEvent&)>;

/// Runs one search. The sink, if set, is called synchronously for every
/// event and has no effect on the search itself.
SearchOutcome solve(const CspInstance& instance, Strategy strategy, SearchMode mode,
                    SearchLimits limits = {}, const TraceSink& sink = {});

/// Renders one event as a line of the trace text format (no newline).
///   A <var> <value> | C <v1>,<v2>,... | C - | J <var> | X <var>
///   S <val1>,...,<valN> | F
/// Solution values are listed by ascending variable id.
std::string format_event(const TraceEvent& event);

/// key=value lines for trials, consistency_checks, local_conflicts,
/// exhaustions, backjumps, solutions, termination.
std::string format_stats_text(const SearchStats& stats, Termination termination);
std::string format_stats_json(const SearchStats& stats, Termination termination);

std::string_view to_string(Strategy s);
std::string_view to_string(Termination t);
std::optional<Strategy> parse_strategy(std::string_view s);

/// Values of `solution` ordered by ascending variable id.
std::vector<Value> values_by_var(const Solution& solution);

/// For a full assignment of paper_problem(2n, n): true iff the odd-id
/// variables and the even-id variables each form a valid n-queens placement
/// and the two placements differ.
bool first_solution_contains_queens(const Solution& solution);

}  // namespace cbj

#endif  // CBJ_ENGINE_HPP
