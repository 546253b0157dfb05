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
#include "cbj/problems.hpp"
#include "doctest.h"

using namespace cbj;

TEST_SUITE("oracle") {
  TEST_CASE("single variable") {
    const CspInstance inst = parse_instance("csp 1\norder 1\ndomain 1 1\n");
    CHECK(enumerate_all(inst) == std::vector<Solution>{{{var(1), 1}}});
  }

  TEST_CASE("queens(2) and queens(3) have no solutions") {
    CHECK(enumerate_all(queens(2)).empty());
    CHECK(enumerate_all(queens(3)).empty());
  }

  TEST_CASE("queens(4): the two placements, in trial order") {
    const std::vector<Solution> expected{
        {{var(4), 3}, {var(3), 1}, {var(2), 4}, {var(1), 2}},
        {{var(4), 2}, {var(3), 4}, {var(2), 1}, {var(1), 3}},
    };
    CHECK(enumerate_all(queens(4)) == expected);
  }

  TEST_CASE("unconstrained instance enumerates the full product lexicographically") {
    const CspInstance inst = parse_instance(
        "csp 2\norder 2 1\ndomain 1 5 6\ndomain 2 9 8 7\n");
    const std::vector<Solution> all = enumerate_all(inst);
    REQUIRE(all.size() == 6);
    CHECK(all.front() == Solution{{var(2), 9}, {var(1), 5}});
    CHECK(all[1] == Solution{{var(2), 9}, {var(1), 6}});
    CHECK(all.back() == Solution{{var(2), 7}, {var(1), 6}});
  }

  TEST_CASE("degenerate instances") {
    CHECK(enumerate_all(paper_problem(0, 3)) == std::vector<Solution>{Solution{}});
    CHECK(enumerate_all(paper_problem(3, 0)).empty());
  }

  TEST_CASE("tuple cap") {
    CHECK_THROWS_AS(enumerate_all(paper_problem(16, 8)), OracleTooLarge);
    CHECK_THROWS_AS(enumerate_all(queens(5), 100), OracleTooLarge);
    CHECK_NOTHROW(enumerate_all(queens(5), 3125));
    try {
      enumerate_all(queens(5), 100);
    } catch (const OracleTooLarge& e) {
      CHECK(e.tuples() == 3125.0);
    }
  }

  TEST_CASE("paper_problem(4,3) against a hand-written rule check") {
    // Direct restatement of the benchmark's rules on ids 1..4: adjacent ids
    // differ; same-parity ids differ and |v_i - v_j| != |i - j| / 2.
    std::vector<Solution> expected;
    for (int a = 3; a >= 1; --a)          // var 4
      for (int b = 3; b >= 1; --b)        // var 3
        for (int c = 3; c >= 1; --c)      // var 2
          for (int d = 3; d >= 1; --d) {  // var 1
            const int v[5] = {0, d, c, b, a};
            bool ok = true;
            for (int i = 1; i <= 4; ++i) {
              for (int j = i + 1; j <= 4; ++j) {
                if (j == i + 1 && v[i] == v[j]) ok = false;
                if ((j - i) % 2 == 0 &&
                    (v[i] == v[j] || std::abs(v[i] - v[j]) == (j - i) / 2)) {
                  ok = false;
                }
              }
            }
            if (ok) expected.push_back({{var(4), a}, {var(3), b}, {var(2), c}, {var(1), d}});
          }
    // Variable 2 must differ from 1 and 3, which are forced to {1, 3}.
    CHECK(expected.empty());
    CHECK(enumerate_all(paper_problem(4, 3)) == expected);
  }
}
