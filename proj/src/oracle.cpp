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

#include "cbj/oracle.hpp"

#include <cstdlib>
#include <sstream>

namespace cbj {
namespace {

// Constraint semantics restated here so the oracle does not depend on
// Constraint::holds.
bool satisfied(const Check& c, std::int64_t owner_id, std::int64_t owner_value,
               std::int64_t partner_value) {
  const std::int64_t partner_id = to_int(c.partner);
  if (c.constraint.kind == Constraint::Kind::NotEqual) return owner_value != partner_value;
  const std::int64_t value_gap = std::llabs(owner_value - partner_value);
  const std::int64_t id_gap = std::llabs(owner_id - partner_id);
  return value_gap != id_gap / c.constraint.divisor;
}

}  // namespace

OracleTooLarge::OracleTooLarge(double tuples, std::uint64_t cap)
    : std::runtime_error([&] {
        std::ostringstream out;
        out << "oracle refuses to enumerate " << tuples << " tuples (cap " << cap << ")";
        return out.str();
      }()),
      tuples_(tuples) {}

std::vector<Solution> enumerate_all(const CspInstance& instance, std::uint64_t cap) {
  const std::size_t n = instance.var_count();
  const auto order = instance.order();

  double tuples = 1.0;
  for (VarId v : order) tuples *= static_cast<double>(instance.domain(v).size());
  if (tuples > static_cast<double>(cap)) throw OracleTooLarge(tuples, cap);

  std::vector<Solution> out;
  if (tuples == 0.0) return out;

  // Odometer over positions in the assignment order; position 0 is the
  // most significant digit.
  std::vector<std::size_t> digit(n, 0);
  std::vector<std::int64_t> value_of(n + 1, 0);  // by variable id
  for (;;) {
    for (std::size_t pos = 0; pos < n; ++pos) {
      value_of[static_cast<std::size_t>(to_int(order[pos]))] = instance.domain(order[pos])[digit[pos]];
    }
    bool good = true;
    for (std::size_t id = 1; id <= n && good; ++id) {
      for (const Check& c : instance.plan(var(static_cast<std::int32_t>(id)))) {
        if (!satisfied(c, static_cast<std::int64_t>(id), value_of[id],
                       value_of[static_cast<std::size_t>(to_int(c.partner))])) {
          good = false;
          break;
        }
      }
    }
    if (good) {
      Solution s;
      s.reserve(n);
      for (std::size_t pos = 0; pos < n; ++pos) {
        s.push_back({order[pos], static_cast<Value>(value_of[static_cast<std::size_t>(to_int(order[pos]))])});
      }
      out.push_back(std::move(s));
    }

    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < instance.domain(order[pos]).size()) break;
      digit[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace cbj
