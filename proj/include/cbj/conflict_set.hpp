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

// Conflict sets and eliminating explanations: sets of variables kept
// sorted by assignment recency, newest first.

#ifndef CBJ_CONFLICT_SET_HPP
#define CBJ_CONFLICT_SET_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cbj/var.hpp"

namespace cbj {

/// A set of variables, ordered by the position each variable takes in the
/// static assignment order (highest position, i.e. most recently assigned,
/// first). The first member is therefore always the culprit of the set.
class ConflictSet {
 public:
  struct Member {
    std::uint32_t rank;  // position in the static assignment order
    VarId var;
    friend bool operator==(const Member&, const Member&) = default;
  };

  ConflictSet() = default;

  /// Inserts `var` at assignment position `rank`. No-op if already present.
  void insert(VarId var, std::uint32_t rank);
  /// Removes `var`; returns false if it was not a member.
  bool erase(VarId var);
  /// In-place union with `other`.
  void unite(const ConflictSet& other);

  bool contains(VarId var) const;
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  /// Most recently assigned member. Precondition: !empty().
  VarId newest() const;

  std::span<const Member> members() const { return members_; }
  /// Members newest first.
  std::vector<VarId> vars() const;

  friend bool operator==(const ConflictSet&, const ConflictSet&) = default;

 private:
  std::vector<Member> members_;
};

/// Eliminating explanation E_i owned by a variable: the union of the
/// variable sets that ruled out its tried values.
using Explanation = ConflictSet;

}  // namespace cbj

#endif  // CBJ_CONFLICT_SET_HPP
