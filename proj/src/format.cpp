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

// Text renderings of trace events and search statistics.

#include <sstream>
#include <string>
#include <type_traits>

#include "cbj/engine.hpp"
#include "json.hpp"

namespace cbj {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void append_list(std::ostringstream& out, const std::vector<Value>& values) {
  for (std::size_t k = 0; k < values.size(); ++k) out << (k ? "," : "") << values[k];
}

}  // namespace

std::string format_event(const TraceEvent& event) {
  std::ostringstream out;
  std::visit(overloaded{
                 [&](const trace::Assign& e) { out << "A " << to_int(e.var) << ' ' << e.value; },
                 [&](const trace::ConflictSaved& e) {
                   out << "C ";
                   if (e.conflict.empty()) {
                     out << '-';
                     return;
                   }
                   bool first = true;
                   for (VarId v : e.conflict.vars()) {
                     out << (first ? "" : ",") << to_int(v);
                     first = false;
                   }
                 },
                 [&](const trace::Backjump& e) { out << "J " << to_int(e.var); },
                 [&](const trace::Exhaust& e) { out << "X " << to_int(e.var); },
                 [&](const trace::SolutionFound& e) {
                   out << "S ";
                   if (e.solution.empty()) {
                     out << '-';
                     return;
                   }
                   append_list(out, values_by_var(e.solution));
                 },
                 [&](const trace::Fail&) { out << 'F'; },
             },
             event);
  return out.str();
}

std::string format_stats_text(const SearchStats& stats, Termination termination) {
  std::ostringstream out;
  out << "trials=" << stats.trials << '\n'
      << "consistency_checks=" << stats.consistency_checks << '\n'
      << "local_conflicts=" << stats.local_conflicts << '\n'
      << "exhaustions=" << stats.exhaustions << '\n'
      << "backjumps=" << stats.backjumps << '\n'
      << "solutions=" << stats.solutions << '\n'
      << "termination=" << to_string(termination) << '\n';
  return out.str();
}

std::string format_stats_json(const SearchStats& stats, Termination termination) {
  nlohmann::ordered_json j;
  j["trials"] = stats.trials;
  j["consistency_checks"] = stats.consistency_checks;
  j["local_conflicts"] = stats.local_conflicts;
  j["exhaustions"] = stats.exhaustions;
  j["backjumps"] = stats.backjumps;
  j["solutions"] = stats.solutions;
  j["termination"] = std::string(to_string(termination));
  return j.dump() + '\n';
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Chrono: return "chrono";
    case Strategy::Alg1: return "alg1";
    case Strategy::Alg2: return "alg2";
  }
  return "?";
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::FirstFound: return "FirstFound";
    case Termination::Exhausted: return "Exhausted";
    case Termination::Unsatisfiable: return "Unsatisfiable";
    case Termination::LimitReached: return "LimitReached";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view s) {
  if (s == "chrono") return Strategy::Chrono;
  if (s == "alg1") return Strategy::Alg1;
  if (s == "alg2") return Strategy::Alg2;
  return std::nullopt;
}

}  // namespace cbj
