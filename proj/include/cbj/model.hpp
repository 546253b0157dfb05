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

// Finite-domain CSP model: binary constraints, per-variable check plans,
// partial solutions and single-assignment consistency checking.

#ifndef CBJ_MODEL_HPP
#define CBJ_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cbj/conflict_set.hpp"
#include "cbj/var.hpp"

namespace cbj {

/// Binary constraint between a newer variable i and an older partner j.
///
///   NotEqual     holds iff value(i) != value(j)
///   DiagDiff(d)  holds iff |value(i) - value(j)| != floor(|i - j| / d)
struct Constraint {
  enum class Kind : std::uint8_t { NotEqual, DiagDiff };

  Kind kind = Kind::NotEqual;
  std::int32_t divisor = 1;  // DiagDiff only

  static constexpr Constraint not_equal() { return {Kind::NotEqual, 1}; }
  static constexpr Constraint diag_diff(std::int32_t d) { return {Kind::DiagDiff, d}; }

  bool holds(VarId newer, Value newer_value, VarId older, Value older_value) const;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct Assignment {
  VarId var;
  Value value;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// One entry of a check plan: run `constraint` against `partner`.
struct Check {
  VarId partner;
  Constraint constraint;
  friend bool operator==(const Check&, const Check&) = default;
};

using Domain = std::vector<Value>;    // trial order, front first
using CheckPlan = std::vector<Check>;  // execution order, first failure wins

class InvalidInstance : public std::runtime_error {
 public:
  explicit InvalidInstance(const std::string& what) : std::runtime_error(what) {}
};

/// Immutable CSP instance with a static assignment order.
///
/// Variables are 1..var_count. `domains[k]` and `plans[k]` belong to
/// variable k+1. Every plan partner must precede its owner in `order`.
class CspInstance {
 public:
  CspInstance() = default;
  /// Throws InvalidInstance if the data violates the invariants above.
  CspInstance(std::vector<VarId> order, std::vector<Domain> domains,
              std::vector<CheckPlan> plans);

  std::size_t var_count() const { return order_.size(); }
  std::span<const VarId> order() const { return order_; }
  const Domain& domain(VarId v) const { return domains_[index(v)]; }
  std::span<const Check> plan(VarId v) const { return plans_[index(v)]; }
  /// Position of `v` in the static assignment order.
  std::uint32_t rank(VarId v) const { return ranks_[index(v)]; }
  bool has_var(VarId v) const {
    return to_int(v) >= 1 && static_cast<std::size_t>(to_int(v)) <= order_.size();
  }

  /// Builds a ConflictSet over `vars` ordered by this instance's recency.
  ConflictSet conflict_of(std::span<const VarId> vars) const;

  friend bool operator==(const CspInstance& a, const CspInstance& b) {
    return a.order_ == b.order_ && a.domains_ == b.domains_ && a.plans_ == b.plans_;
  }

 private:
  static std::size_t index(VarId v) { return static_cast<std::size_t>(to_int(v) - 1); }

  std::vector<VarId> order_;
  std::vector<Domain> domains_;
  std::vector<CheckPlan> plans_;
  std::vector<std::uint32_t> ranks_;
};

/// Time-ordered assignments, oldest first.
class PartialSolution {
 public:
  PartialSolution() = default;
  explicit PartialSolution(std::size_t var_count) : values_(var_count) {}

  /// Throws ContractViolation if the variable is already assigned.
  void push(Assignment a);
  /// Removes the newest entry. Precondition: !empty().
  Assignment pop();

  bool contains(VarId v) const;
  std::optional<Value> value_of(VarId v) const;
  std::span<const Assignment> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Assignment> entries_;
  std::vector<std::optional<Value>> values_;
};

/// Outcome of a consistency test. A violated verdict carries the two
/// variables of the failing constraint.
class Verdict {
 public:
  static Verdict satisfied(std::size_t checks = 0) { return Verdict(checks); }
  static Verdict violated(ConflictSet c, std::size_t checks = 0) {
    return Verdict(std::move(c), checks);
  }

  bool ok() const { return !conflict_; }
  /// Precondition: !ok().
  const ConflictSet& conflict() const { return *conflict_; }
  /// Number of binary constraint evaluations that produced this verdict.
  std::size_t checks() const { return checks_; }

 private:
  explicit Verdict(std::size_t checks) : checks_(checks) {}
  Verdict(ConflictSet c, std::size_t checks) : conflict_(std::move(c)), checks_(checks) {}

  std::optional<ConflictSet> conflict_;
  std::size_t checks_ = 0;
};

/// Evaluates one constraint. `newer` must come after `older` in the
/// instance order.
Verdict check(const CspInstance& instance, const Constraint& constraint, Assignment newer,
              Assignment older);

/// Runs plan(i) in order against `p` extended with (i, v). Partners not
/// present in `p` are skipped. Returns the first violation found.
/// Throws ContractViolation if `i` is already assigned in `p`.
Verdict consistent(const CspInstance& instance, const PartialSolution& p, VarId i, Value v);

}  // namespace cbj

#endif  // CBJ_MODEL_HPP
