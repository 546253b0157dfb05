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

#include "cbj/problems.hpp"

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cbj {
namespace {

std::vector<VarId> descending_vars(std::size_t n) {
  std::vector<VarId> order;
  order.reserve(n);
  for (std::size_t k = n; k >= 1; --k) order.push_back(var(static_cast<std::int32_t>(k)));
  return order;
}

Domain descending_values(std::size_t card) {
  Domain d;
  d.reserve(card);
  for (std::size_t k = card; k >= 1; --k) d.push_back(static_cast<Value>(k));
  return d;
}

}  // namespace

CspInstance paper_problem(std::size_t var_card, std::size_t value_card) {
  const auto n = static_cast<std::int32_t>(var_card);
  std::vector<CheckPlan> plans(var_card);
  for (std::int32_t i = 1; i <= n; ++i) {
    CheckPlan& plan = plans[static_cast<std::size_t>(i - 1)];
    // Same-parity partners, oldest-assigned (largest id) first.
    std::int32_t top = i + 2;
    while (top + 2 <= n) top += 2;
    for (std::int32_t j = top; j > i && j <= n; j -= 2) {
      plan.push_back({var(j), Constraint::not_equal()});
      plan.push_back({var(j), Constraint::diag_diff(2)});
    }
    if (i + 1 <= n) plan.push_back({var(i + 1), Constraint::not_equal()});
  }
  return CspInstance(descending_vars(var_card),
                     std::vector<Domain>(var_card, descending_values(value_card)),
                     std::move(plans));
}

CspInstance queens(std::size_t n) {
  const auto last = static_cast<std::int32_t>(n);
  std::vector<CheckPlan> plans(n);
  for (std::int32_t i = 1; i <= last; ++i) {
    CheckPlan& plan = plans[static_cast<std::size_t>(i - 1)];
    for (std::int32_t j = last; j > i; --j) {
      plan.push_back({var(j), Constraint::not_equal()});
      plan.push_back({var(j), Constraint::diag_diff(1)});
    }
  }
  return CspInstance(descending_vars(n), std::vector<Domain>(n, descending_values(n)),
                     std::move(plans));
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

class LineReader {
 public:
  LineReader(std::size_t line, std::string_view text) : line_(line) {
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) tokens_.push_back(tok);
  }

  bool done() const { return pos_ == tokens_.size(); }
  const std::string& word() {
    if (done()) throw ParseError(line_, "unexpected end of line");
    return tokens_[pos_++];
  }
  std::int64_t integer(std::int64_t min) {
    const std::string& tok = word();
    std::int64_t out = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    if (ec != std::errc() || end != tok.data() + tok.size()) {
      throw ParseError(line_, "expected an integer, got '" + tok + "'");
    }
    if (out < min || out > INT32_MAX) {
      throw ParseError(line_, "integer " + tok + " out of range");
    }
    return out;
  }
  void expect_end() {
    if (!done()) throw ParseError(line_, "unexpected token '" + tokens_[pos_] + "'");
  }

 private:
  std::size_t line_;
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

constexpr std::size_t kMaxVars = std::size_t{1} << 20;

struct PendingCheck {
  std::size_t line;
  VarId owner;
  Check check;
};

}  // namespace

CspInstance parse_instance(std::string_view text) {
  std::optional<std::size_t> var_count;
  std::optional<std::vector<VarId>> order;
  std::vector<std::optional<Domain>> domains;
  std::vector<PendingCheck> checks;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineReader in(line_no, line);
    if (in.done()) continue;
    const std::string keyword = in.word();

    auto var_arg = [&](LineReader& r) {
      const std::int64_t id = r.integer(1);
      if (static_cast<std::size_t>(id) > *var_count) {
        throw ParseError(line_no, "variable " + std::to_string(id) + " exceeds csp size " +
                                      std::to_string(*var_count));
      }
      return var(static_cast<std::int32_t>(id));
    };

    if (keyword == "csp") {
      if (var_count) throw ParseError(line_no, "duplicate csp line");
      var_count = static_cast<std::size_t>(in.integer(0));
      in.expect_end();
      if (*var_count > kMaxVars) {
        throw ParseError(line_no, "csp size exceeds " + std::to_string(kMaxVars));
      }
      domains.resize(*var_count);
      continue;
    }
    if (!var_count) throw ParseError(line_no, "'" + keyword + "' before csp line");

    if (keyword == "order") {
      if (order) throw ParseError(line_no, "duplicate order line");
      order.emplace();
      while (!in.done()) order->push_back(var_arg(in));
      if (order->size() != *var_count) {
        throw ParseError(line_no, "order lists " + std::to_string(order->size()) +
                                      " variables, expected " + std::to_string(*var_count));
      }
    } else if (keyword == "domain") {
      const VarId v = var_arg(in);
      auto& slot = domains[static_cast<std::size_t>(to_int(v) - 1)];
      if (slot) throw ParseError(line_no, "duplicate domain for variable " + std::to_string(to_int(v)));
      slot.emplace();
      while (!in.done()) slot->push_back(static_cast<Value>(in.integer(1)));
    } else if (keyword == "check") {
      const VarId owner = var_arg(in);
      const VarId partner = var_arg(in);
      const std::string kind = in.word();
      Constraint c;
      if (kind == "neq") {
        c = Constraint::not_equal();
      } else if (kind == "diag") {
        c = Constraint::diag_diff(static_cast<std::int32_t>(in.integer(1)));
      } else {
        throw ParseError(line_no, "unknown constraint kind '" + kind + "'");
      }
      in.expect_end();
      checks.push_back({line_no, owner, {partner, c}});
    } else {
      throw ParseError(line_no, "unknown directive '" + keyword + "'");
    }
  }

  if (!var_count) throw ParseError(line_no, "missing csp line");
  if (!order) throw ParseError(line_no, "missing order line");
  std::vector<Domain> final_domains;
  final_domains.reserve(*var_count);
  for (std::size_t k = 0; k < *var_count; ++k) {
    if (!domains[k]) throw ParseError(line_no, "no domain for variable " + std::to_string(k + 1));
    final_domains.push_back(std::move(*domains[k]));
  }

  std::vector<std::size_t> rank(*var_count);
  for (std::size_t pos = 0; pos < order->size(); ++pos) {
    rank[static_cast<std::size_t>(to_int((*order)[pos]) - 1)] = pos;
  }
  std::vector<CheckPlan> plans(*var_count);
  for (const PendingCheck& pc : checks) {
    const auto owner = static_cast<std::size_t>(to_int(pc.owner) - 1);
    const auto partner = static_cast<std::size_t>(to_int(pc.check.partner) - 1);
    if (rank[partner] >= rank[owner]) {
      throw InvalidInstance("line " + std::to_string(pc.line) + ": variable " +
                            std::to_string(owner + 1) + " checks partner " +
                            std::to_string(partner + 1) + " which is not assigned before it");
    }
    plans[owner].push_back(pc.check);
  }
  return CspInstance(std::move(*order), std::move(final_domains), std::move(plans));
}

std::string serialize_instance(const CspInstance& instance) {
  std::ostringstream out;
  const std::size_t n = instance.var_count();
  out << "csp " << n << '\n' << "order";
  for (VarId v : instance.order()) out << ' ' << to_int(v);
  out << '\n';
  for (std::size_t k = 1; k <= n; ++k) {
    out << "domain " << k;
    for (Value value : instance.domain(var(static_cast<std::int32_t>(k)))) out << ' ' << value;
    out << '\n';
  }
  for (std::size_t k = 1; k <= n; ++k) {
    for (const Check& c : instance.plan(var(static_cast<std::int32_t>(k)))) {
      out << "check " << k << ' ' << to_int(c.partner);
      if (c.constraint.kind == Constraint::Kind::NotEqual) {
        out << " neq\n";
      } else {
        out << " diag " << c.constraint.divisor << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace cbj
