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

#include "cbj/engine.hpp"

#include <utility>

#include "cbj/conflict.hpp"

namespace cbj {
namespace {

// One live choice point. The untried values are domain[next..].
struct Frame {
  VarId var;
  std::size_t next = 0;
  Value current = 0;
  Explanation explanation;                             // Alg2: union of eliminating sets
  std::vector<std::pair<Value, Explanation>> per_value;  // Alg1: one set per tried value
};

class Engine {
 public:
  Engine(const CspInstance& instance, Strategy strategy, SearchMode mode, SearchLimits limits,
         const TraceSink& sink)
      : instance_(instance),
        strategy_(strategy),
        mode_(mode),
        limits_(limits),
        sink_(sink),
        partial_(instance.var_count()) {}

  SearchOutcome run();

 private:
  enum class Step { Continue, Done };

  bool backjumping() const { return strategy_ != Strategy::Chrono; }
  const Domain& domain_of(const Frame& f) const { return instance_.domain(f.var); }
  bool exhausted(const Frame& f) const { return f.next == domain_of(f).size(); }

  void emit(TraceEvent event) {
    if (sink_) sink_(event);
  }

  void push_frame() {
    Frame f;
    f.var = instance_.order()[partial_.size()];
    stack_.push_back(std::move(f));
  }

  void save(ConflictSet c) {
    if (sink_) sink_(trace::ConflictSaved{c});
    slot_.save(std::move(c));
  }

  Step chrono_exhaust();
  void exhaust_top();
  Step jump_back();
  Step on_solution();
  Step finish(Termination t) {
    outcome_.termination = t;
    return Step::Done;
  }
  Step finish_exhausted() {
    emit(trace::Fail{});
    return finish(outcome_.stats.solutions > 0 ? Termination::Exhausted
                                               : Termination::Unsatisfiable);
  }

  const CspInstance& instance_;
  const Strategy strategy_;
  const SearchMode mode_;
  const SearchLimits limits_;
  const TraceSink& sink_;

  PartialSolution partial_;
  std::vector<Frame> stack_;
  ConflictSlot slot_;
  SearchOutcome outcome_;
};

SearchOutcome Engine::run() {
  if (instance_.var_count() == 0) {
    if (on_solution() == Step::Continue) finish_exhausted();
    return std::move(outcome_);
  }

  push_frame();
  SearchStats& stats = outcome_.stats;
  for (;;) {
    Frame& f = stack_.back();
    if (exhausted(f)) {
      if (backjumping()) {
        exhaust_top();
        if (jump_back() == Step::Done) break;
      } else if (chrono_exhaust() == Step::Done) {
        break;
      }
      continue;
    }

    if (limits_.max_trials && stats.trials >= *limits_.max_trials) {
      finish(Termination::LimitReached);
      break;
    }
    f.current = domain_of(f)[f.next++];
    ++stats.trials;
    emit(trace::Assign{f.var, f.current});

    const Verdict verdict = consistent(instance_, partial_, f.var, f.current);
    stats.consistency_checks += verdict.checks();
    if (verdict.ok()) {
      partial_.push({f.var, f.current});
      if (partial_.size() == instance_.var_count()) {
        if (on_solution() == Step::Done) break;
      } else {
        push_frame();
      }
      continue;
    }

    ++stats.local_conflicts;
    if (!backjumping()) continue;
    // The failing value joins P notionally so the conflict's newest member
    // is an assigned variable.
    partial_.push({f.var, f.current});
    save(verdict.conflict());
    if (jump_back() == Step::Done) break;
  }
  return std::move(outcome_);
}

// Pops an exhausted frame and resumes its predecessor with its next value.
Engine::Step Engine::chrono_exhaust() {
  ++outcome_.stats.exhaustions;
  emit(trace::Exhaust{stack_.back().var});
  stack_.pop_back();
  if (stack_.empty()) return finish_exhausted();
  partial_.pop();
  return Step::Continue;
}

// Removes the top frame, whose values are all eliminated, and saves the
// hyperresolvent of its explanations as the new conflict. The frame's own
// variable is not in P at this point.
void Engine::exhaust_top() {
  Frame& f = stack_.back();
  ++outcome_.stats.exhaustions;
  emit(trace::Exhaust{f.var});
  ConflictSet c;
  if (strategy_ == Strategy::Alg1) {
    std::vector<Explanation> sets;
    sets.reserve(f.per_value.size());
    for (auto& [value, e] : f.per_value) sets.push_back(std::move(e));
    c = conflict_union(sets);
  } else {
    c = std::move(f.explanation);
  }
  stack_.pop_back();
  save(std::move(c));
}

// Unwinds to the culprit of the saved conflict, records the eliminating
// explanation there and returns once a frame with untried values is on top.
// Every frame on the stack has its variable in P on entry.
Engine::Step Engine::jump_back() {
  for (;;) {
    const ConflictSet& c = slot_.get();
    const std::optional<VarId> target = culprit(partial_, c);
    while (!stack_.empty() && (!target || stack_.back().var != *target)) {
      ++outcome_.stats.backjumps;
      emit(trace::Backjump{stack_.back().var});
      stack_.pop_back();
      partial_.pop();
    }
    if (stack_.empty()) return finish_exhausted();

    Frame& f = stack_.back();
    partial_.pop();
    if (strategy_ == Strategy::Alg1) {
      f.per_value.emplace_back(f.current, merge_explanation({}, c, f.var));
    } else {
      f.explanation = merge_explanation(std::move(f.explanation), c, f.var);
    }
    if (!exhausted(f)) return Step::Continue;
    exhaust_top();
  }
}

Engine::Step Engine::on_solution() {
  SearchStats& stats = outcome_.stats;
  ++stats.solutions;
  Solution s(partial_.entries().begin(), partial_.entries().end());
  if (sink_) sink_(trace::SolutionFound{s});
  outcome_.solutions.push_back(std::move(s));

  const bool enough = mode_.kind == SearchMode::Kind::First ||
                      (mode_.kind == SearchMode::Kind::Limit && stats.solutions >= mode_.limit);
  if (enough) return finish(Termination::FirstFound);
  if (instance_.var_count() == 0) return Step::Continue;

  if (!backjumping()) {
    partial_.pop();
    return Step::Continue;
  }
  save(solution_conflict(instance_, partial_));
  return jump_back();
}

bool is_queens_placement(const std::vector<Value>& rows) {
  const auto n = static_cast<std::int64_t>(rows.size());
  for (std::int64_t a = 0; a < n; ++a) {
    if (rows[a] < 1 || rows[a] > n) return false;
    for (std::int64_t b = a + 1; b < n; ++b) {
      const std::int64_t gap = static_cast<std::int64_t>(rows[a]) - rows[b];
      if (gap == 0 || gap == b - a || gap == a - b) return false;
    }
  }
  return true;
}

}  // namespace

SearchOutcome solve(const CspInstance& instance, Strategy strategy, SearchMode mode,
                    SearchLimits limits, const TraceSink& sink) {
  if (mode.kind == SearchMode::Kind::Limit && mode.limit == 0) {
    throw ContractViolation("solution limit must be at least 1");
  }
  return Engine(instance, strategy, mode, limits, sink).run();
}

std::vector<Value> values_by_var(const Solution& solution) {
  std::vector<Value> out(solution.size());
  for (const Assignment& a : solution) {
    const auto k = static_cast<std::size_t>(to_int(a.var) - 1);
    if (k >= out.size()) throw ContractViolation("solution is not a full assignment");
    out[k] = a.value;
  }
  return out;
}

bool first_solution_contains_queens(const Solution& solution) {
  if (solution.empty() || solution.size() % 2 != 0) return false;
  const std::vector<Value> values = values_by_var(solution);
  std::vector<Value> odd, even;
  for (std::size_t k = 0; k < values.size(); ++k) (k % 2 == 0 ? odd : even).push_back(values[k]);
  return is_queens_placement(odd) && is_queens_placement(even) && odd != even;
}

}  // namespace cbj
