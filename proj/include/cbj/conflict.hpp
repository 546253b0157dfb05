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

// Look-back machinery shared by the backjumping engines: the conflict slot,
// culprit selection and the explanation unions.

#ifndef CBJ_CONFLICT_HPP
#define CBJ_CONFLICT_HPP

#include <optional>
#include <span>
#include <utility>

#include "cbj/conflict_set.hpp"
#include "cbj/model.hpp"

namespace cbj {

/// Single cell carrying the latest conflict across a failure path.
/// Written on every save, never cleared during a search.
class ConflictSlot {
 public:
  void save(ConflictSet c) { current_ = std::move(c); }
  /// Throws ContractViolation if nothing was saved yet.
  const ConflictSet& get() const;
  bool has_value() const { return current_.has_value(); }

 private:
  std::optional<ConflictSet> current_;
};

inline void save_conflict(ConflictSlot& slot, ConflictSet c) { slot.save(std::move(c)); }
inline const ConflictSet& get_conflict(const ConflictSlot& slot) { return slot.get(); }

/// The member of `c` assigned most recently in `p`, or nullopt when `c` is
/// empty. Throws ContractViolation if a member of `c` is not assigned in `p`.
std::optional<VarId> culprit(const PartialSolution& p, const ConflictSet& c);

/// e ∪ (c \ {i}). Throws ContractViolation if i ∉ c.
Explanation merge_explanation(Explanation e, const ConflictSet& c, VarId i);

/// Hyperresolvent of a variable's per-value explanations: the union of all
/// of them. Empty input yields the empty conflict.
ConflictSet conflict_union(std::span<const Explanation> explanations);

/// Conflict recorded after emitting a solution: every variable it assigns.
ConflictSet solution_conflict(const CspInstance& instance, const PartialSolution& solution);

}  // namespace cbj

#endif  // CBJ_CONFLICT_HPP
