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

#include "cbj/model.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace cbj {

bool Constraint::holds(VarId newer, Value newer_value, VarId older, Value older_value) const {
  switch (kind) {
    case Kind::NotEqual:
      return newer_value != older_value;
    case Kind::DiagDiff: {
      const std::int64_t value_gap =
          std::llabs(static_cast<std::int64_t>(newer_value) - older_value);
      const std::int64_t var_gap =
          std::llabs(static_cast<std::int64_t>(to_int(newer)) - to_int(older)) / divisor;
      return value_gap != var_gap;
    }
  }
  return false;
}

CspInstance::CspInstance(std::vector<VarId> order, std::vector<Domain> domains,
                         std::vector<CheckPlan> plans)
    : order_(std::move(order)), domains_(std::move(domains)), plans_(std::move(plans)) {
  const std::size_t n = order_.size();
  if (domains_.size() != n || plans_.size() != n) {
    throw InvalidInstance("domain and plan tables must cover all " + std::to_string(n) +
                          " variables");
  }
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  ranks_.assign(n, kUnset);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const VarId v = order_[pos];
    if (!has_var(v)) {
      throw InvalidInstance("order names unknown variable " + std::to_string(to_int(v)));
    }
    if (ranks_[index(v)] != kUnset) {
      throw InvalidInstance("variable " + std::to_string(to_int(v)) +
                            " appears twice in the order");
    }
    ranks_[index(v)] = static_cast<std::uint32_t>(pos);
  }
  for (std::size_t k = 0; k < n; ++k) {
    Domain sorted = domains_[k];
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
      throw InvalidInstance("domain of variable " + std::to_string(k + 1) +
                            " repeats value " + std::to_string(*dup));
    }
    for (const Check& c : plans_[k]) {
      if (!has_var(c.partner)) {
        throw InvalidInstance("variable " + std::to_string(k + 1) +
                              " checks unknown partner " + std::to_string(to_int(c.partner)));
      }
      if (ranks_[index(c.partner)] >= ranks_[k]) {
        throw InvalidInstance("variable " + std::to_string(k + 1) + " checks partner " +
                              std::to_string(to_int(c.partner)) +
                              " which is not assigned before it");
      }
      if (c.constraint.kind == Constraint::Kind::DiagDiff && c.constraint.divisor <= 0) {
        throw InvalidInstance("diag divisor must be positive");
      }
    }
  }
}

ConflictSet CspInstance::conflict_of(std::span<const VarId> vars) const {
  ConflictSet c;
  for (VarId v : vars) {
    if (!has_var(v)) throw ContractViolation("unknown variable " + std::to_string(to_int(v)));
    c.insert(v, rank(v));
  }
  return c;
}

void PartialSolution::push(Assignment a) {
  const auto k = static_cast<std::size_t>(to_int(a.var) - 1);
  if (k >= values_.size()) {
    throw ContractViolation("variable " + std::to_string(to_int(a.var)) + " out of range");
  }
  if (values_[k]) {
    throw ContractViolation("variable " + std::to_string(to_int(a.var)) +
                            " is already assigned");
  }
  values_[k] = a.value;
  entries_.push_back(a);
}

Assignment PartialSolution::pop() {
  if (entries_.empty()) throw ContractViolation("pop() on an empty partial solution");
  const Assignment a = entries_.back();
  entries_.pop_back();
  values_[static_cast<std::size_t>(to_int(a.var) - 1)].reset();
  return a;
}

bool PartialSolution::contains(VarId v) const { return value_of(v).has_value(); }

std::optional<Value> PartialSolution::value_of(VarId v) const {
  const auto k = static_cast<std::size_t>(to_int(v) - 1);
  if (k >= values_.size()) return std::nullopt;
  return values_[k];
}

Verdict check(const CspInstance& instance, const Constraint& constraint, Assignment newer,
              Assignment older) {
  if (constraint.holds(newer.var, newer.value, older.var, older.value)) {
    return Verdict::satisfied(1);
  }
  const VarId pair[] = {newer.var, older.var};
  return Verdict::violated(instance.conflict_of(pair), 1);
}

Verdict consistent(const CspInstance& instance, const PartialSolution& p, VarId i, Value v) {
  if (p.contains(i)) {
    throw ContractViolation("consistent(): variable " + std::to_string(to_int(i)) +
                            " is already assigned");
  }
  std::size_t checks = 0;
  for (const Check& c : instance.plan(i)) {
    const std::optional<Value> partner_value = p.value_of(c.partner);
    if (!partner_value) continue;
    ++checks;
    if (!c.constraint.holds(i, v, c.partner, *partner_value)) {
      const VarId pair[] = {i, c.partner};
      return Verdict::violated(instance.conflict_of(pair), checks);
    }
  }
  return Verdict::satisfied(checks);
}

}  // namespace cbj
