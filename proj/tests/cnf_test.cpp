// Copyright 2026 The payplay Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "payplay/cnf.hpp"

namespace payplay {
namespace {

TEST(DimacsTest, ParsesBasicFile) {
  const CnfFormula f = parse_dimacs(
      "c example\n"
      "p cnf 3 2\n"
      "1 -2 3 0\n"
      "-1\n 2 0\n");
  EXPECT_EQ(f.num_vars, 3);
  ASSERT_EQ(f.clauses.size(), 2u);
  EXPECT_EQ(f.clauses[0], (Clause{1, -2, 3}));
  EXPECT_EQ(f.clauses[1], (Clause{-1, 2, -1}));  // padded with first literal
}

TEST(DimacsTest, StopsAtPercentLine) {
  const CnfFormula f = parse_dimacs("p cnf 1 1\n1 0\n%\n0\n");
  EXPECT_EQ(f.clauses.size(), 1u);
}

TEST(DimacsTest, AcceptsFinalClauseWithoutTerminator) {
  const CnfFormula f = parse_dimacs("p cnf 2 1\r\n1 2");
  EXPECT_EQ(f.clauses[0], (Clause{1, 2, 1}));
}

TEST(DimacsTest, RejectsLongClause) {
  try {
    parse_dimacs("p cnf 4 1\n1 2 3 4 0\n");
    FAIL();
  } catch (const ClauseTooLarge& e) {
    EXPECT_EQ(e.line, 2);
    EXPECT_EQ(e.column, 1);
  }
}

TEST(DimacsTest, RejectsBadInput) {
  EXPECT_THROW(parse_dimacs("1 2 0\n"), SyntaxError);
  EXPECT_THROW(parse_dimacs("c only comments\n"), SyntaxError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 x 0\n"), SyntaxError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n0\n"), SyntaxError);
  EXPECT_THROW(parse_dimacs("p dnf 2 1\n1 0\n"), SyntaxError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 3 0\n"), HeaderMismatch);
  EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 2 0\n"), HeaderMismatch);
  try {
    parse_dimacs("p cnf 2 1\n1 -- 0\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line, 2);
    EXPECT_EQ(e.column, 3);
  }
}

TEST(DimacsTest, RoundTrip) {
  CnfFormula f;
  f.num_vars = 3;
  f.clauses = {{1, 2, 3}, {-1, -2, -3}, {2, 2, -1}};
  EXPECT_EQ(parse_dimacs(to_dimacs(f)), f);
}

TEST(SatTest, BruteForce) {
  CnfFormula f;
  f.num_vars = 1;
  f.clauses = {{1, 1, 1}, {-1, -1, -1}};
  EXPECT_FALSE(brute_force_satisfiable(f).has_value());
  f.clauses.pop_back();
  ASSERT_TRUE(brute_force_satisfiable(f).has_value());
  EXPECT_EQ(*brute_force_satisfiable(f), 1u);
}

}  // namespace
}  // namespace payplay
