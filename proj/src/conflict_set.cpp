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

#include "cbj/conflict_set.hpp"

#include <algorithm>
#include <iterator>

namespace cbj {
namespace {

// Newest first.
bool newer(const ConflictSet::Member& a, const ConflictSet::Member& b) {
  return a.rank > b.rank;
}

}  // namespace

void ConflictSet::insert(VarId var, std::uint32_t rank) {
  const Member m{rank, var};
  auto it = std::lower_bound(members_.begin(), members_.end(), m, newer);
  if (it != members_.end() && it->var == var) return;
  members_.insert(it, m);
}

bool ConflictSet::erase(VarId var) {
  auto it = std::find_if(members_.begin(), members_.end(),
                         [var](const Member& m) { return m.var == var; });
  if (it == members_.end()) return false;
  members_.erase(it);
  return true;
}

void ConflictSet::unite(const ConflictSet& other) {
  if (other.members_.empty()) return;
  std::vector<Member> merged;
  merged.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(merged), newer);
  members_ = std::move(merged);
}

bool ConflictSet::contains(VarId var) const {
  return std::any_of(members_.begin(), members_.end(),
                     [var](const Member& m) { return m.var == var; });
}

VarId ConflictSet::newest() const {
  if (members_.empty()) throw ContractViolation("newest() on an empty conflict set");
  return members_.front().var;
}

std::vector<VarId> ConflictSet::vars() const {
  std::vector<VarId> out;
  out.reserve(members_.size());
  for (const Member& m : members_) out.push_back(m.var);
  return out;
}

}  // namespace cbj
