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

#include "cbj/conflict.hpp"

#include <string>

namespace cbj {

const ConflictSet& ConflictSlot::get() const {
  if (!current_) throw ContractViolation("conflict slot read before any conflict was saved");
  return *current_;
}

std::optional<VarId> culprit(const PartialSolution& p, const ConflictSet& c) {
  if (c.empty()) return std::nullopt;
  for (VarId v : c.vars()) {
    if (!p.contains(v)) {
      throw ContractViolation("culprit(): conflict member " + std::to_string(to_int(v)) +
                              " is not assigned");
    }
  }
  const auto entries = p.entries();
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    if (c.contains(it->var)) return it->var;
  }
  return std::nullopt;
}

Explanation merge_explanation(Explanation e, const ConflictSet& c, VarId i) {
  if (!c.contains(i)) {
    throw ContractViolation("merge_explanation(): variable " + std::to_string(to_int(i)) +
                            " is not in the conflict");
  }
  ConflictSet rest = c;
  rest.erase(i);
  e.unite(rest);
  return e;
}

ConflictSet conflict_union(std::span<const Explanation> explanations) {
  ConflictSet out;
  for (const Explanation& e : explanations) out.unite(e);
  return out;
}

ConflictSet solution_conflict(const CspInstance& instance, const PartialSolution& solution) {
  ConflictSet out;
  for (const Assignment& a : solution.entries()) out.insert(a.var, instance.rank(a.var));
  return out;
}

}  // namespace cbj
