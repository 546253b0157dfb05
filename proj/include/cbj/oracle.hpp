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

// Generate-and-test reference solver. Shares only the data model with the
// engines; constraint semantics are evaluated independently.

#ifndef CBJ_ORACLE_HPP
#define CBJ_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cbj/engine.hpp"
#include "cbj/model.hpp"

namespace cbj {

class OracleTooLarge : public std::runtime_error {
 public:
  OracleTooLarge(double tuples, std::uint64_t cap);
  double tuples() const { return tuples_; }

 private:
  double tuples_;
};

inline constexpr std::uint64_t kDefaultOracleCap = 1'000'000;

/// Every full assignment satisfying all checks, in the lexicographic order
/// induced by the variable order and domain trial orders.
std::vector<Solution> enumerate_all(const CspInstance& instance,
                                    std::uint64_t cap = kDefaultOracleCap);

}  // namespace cbj

#endif  // CBJ_ORACLE_HPP
