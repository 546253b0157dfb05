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

#ifndef CBJ_VAR_HPP
#define CBJ_VAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cbj {

/// Variable identifier, 1..var_count within an instance.
enum class VarId : std::int32_t {};

constexpr std::int32_t to_int(VarId v) { return static_cast<std::int32_t>(v); }
constexpr VarId var(std::int32_t id) { return static_cast<VarId>(id); }

using Value = std::int32_t;

/// Raised when an operation is called outside its precondition.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cbj

#endif  // CBJ_VAR_HPP
