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

#ifndef CBJ_PROBLEMS_HPP
#define CBJ_PROBLEMS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cbj/model.hpp"

namespace cbj {

/// Benchmark family built from two interleaved n-queens problems.
///
/// Variables are assigned var_card, var_card-1, ..., 1 and every domain is
/// tried value_card, value_card-1, ..., 1. Variable i is checked against each
/// same-parity partner j = i+2, i+4, ... (largest j first, NotEqual then
/// DiagDiff(2)) and finally against i+1 with NotEqual.
CspInstance paper_problem(std::size_t var_card, std::size_t value_card);

/// n-queens with the same ordering conventions as paper_problem: partners
/// j = n, n-1, ..., i+1, each NotEqual then DiagDiff(1).
CspInstance queens(std::size_t n);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads the line-oriented instance format:
///
///   csp <var_count>
///   order <id> <id> ...
///   domain <var> <value> ...
///   check <var> <partner> neq
///   check <var> <partner> diag <divisor>
///
/// '#' starts a comment. Checks run in file order per variable. Throws
/// ParseError for malformed text and InvalidInstance when the data is
/// inconsistent (e.g. a check against a later variable).
CspInstance parse_instance(std::string_view text);
std::string serialize_instance(const CspInstance& instance);

}  // namespace cbj

#endif  // CBJ_PROBLEMS_HPP
