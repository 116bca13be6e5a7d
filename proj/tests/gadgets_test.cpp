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

#include <cstdlib>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "payplay/gadgets.hpp"
#include "payplay/structure.hpp"

namespace payplay {
namespace {

// Independent satisfiability check over all assignments.
bool satisfiable(int vars, const std::vector<Clause>& clauses) {
  for (std::uint32_t a = 0; a < (1U << vars); ++a) {
    bool all = true;
    for (const Clause& c : clauses) {
      bool any = false;
      for (int lit : c) {
        const bool v = (a >> (std::abs(lit) - 1)) & 1U;
        any = any || (lit > 0 ? v : !v);
      }
      all = all && any;
    }
    if (all) return true;
  }
  return false;
}

TEST(TriangleTest, CostList) {
  const Game g = triangle_gadget();
  for (PlayerId i = 0; i < 3; ++i) {
    const PlayerId prev = (i + 2) % 3;
    const PlayerId next = (i + 1) % 3;
    EXPECT_EQ(g.pay_cost(i), 1.5);
    EXPECT_EQ(g.play_cost(i, Coalition::all(3)), 2.0);
    EXPECT_EQ(g.play_cost(i, Coalition::of({prev, i})), 2.0);
    EXPECT_EQ(g.play_cost(i, Coalition::of({i, next})), 1.0);
    EXPECT_EQ(g.play_cost(i, Coalition::single(i)), 1.0);
  }
  EXPECT_TRUE(check_monotone(g).monotone());
  EXPECT_TRUE(check_generic(g));
  EXPECT_TRUE(oracle::nash_set(g).empty());
}

TEST(IndifferenceTest, EquilibriaAreAllEfficient) {
  const Game g = indifference_gadget();
  EXPECT_EQ(g.play_cost(0, Coalition::of({0, 1})), 1.5);
  EXPECT_EQ(g.play_cost(3, Coalition::all(4)), 4.0);
  // Player 3 plays and exactly one of players 0, 1, 2 plays; the successor
  // of the player who plays is indifferent.
  const std::vector<std::uint32_t> expected = {0b0011, 0b0101, 0b0110};
  EXPECT_EQ(oracle::nash_set(g), expected);
  for (std::uint32_t m : expected) EXPECT_TRUE(oracle::pareto_efficient(g, m));
}

TEST(TwoPlayerTest, Costs) {
  const Game g = two_player_example(0.1);
  EXPECT_DOUBLE_EQ(g.pay_cost(1), 2.1);
  EXPECT_EQ(g.play_cost(1, Coalition::single(1)), 1.0);
  EXPECT_EQ(g.play_cost(1, Coalition::all(2)), 2.0);
  EXPECT_EQ(oracle::nash_set(g), (std::vector<std::uint32_t>{0}));
  EXPECT_THROW(two_player_example(0.0), BadEpsilon);
}

TEST(InefficiencyFamiliesTest, Parameters) {
  EXPECT_THROW(pos_player_specific(4, 1.0 / 16), BadEpsilon);
  EXPECT_THROW(pos_player_specific(4, 0.0), BadEpsilon);
  EXPECT_NO_THROW(pos_player_specific(4, 1.0 / 17));
  EXPECT_THROW(pos_player_specific(1, 0.01), BadParameters);
  EXPECT_THROW(pos_submodular(4, -1), BadEpsilon);
  const Game g = pos_player_specific(3, 0.01);
  EXPECT_DOUBLE_EQ(g.pay_cost(0), 3.01);
  EXPECT_DOUBLE_EQ(g.play_cost(0, Coalition::all(3)), 3.0);
  EXPECT_DOUBLE_EQ(g.pay_cost(1), 0.02);
  EXPECT_DOUBLE_EQ(g.play_cost(2, Coalition::all(3)), 0.01);
  const Game s = pos_submodular(3, 0.01);
  EXPECT_EQ(s.play_cost(1, Coalition::of({1, 2})), 0.0);
  EXPECT_EQ(s.play_cost(1, Coalition::of({0, 1})), 1.0);
  EXPECT_TRUE(check_submodular(s, 1));
}

TEST(SatReductionTest, SmallFormulas) {
  const std::vector<std::vector<Clause>> formulas = {
      {{1, -2, 3}},
      {{1, 1, 1}, {-1, -1, -1}},
      {{1, 2, 2}, {-1, 2, 2}, {-2, -2, -2}},
      {{1, 2, 3}, {-1, -2, -3}},
      {{-1, 2, 2}, {1, -2, -2}},
  };
  for (const auto& clauses : formulas) {
    CnfFormula f;
    f.num_vars = 3;
    f.clauses = clauses;
    const Game g = sat_to_game(f);
    EXPECT_EQ(g.num_players(), 6 + 3 * static_cast<int>(clauses.size()));
    EXPECT_TRUE(check_monotone(g).monotone());
    const auto ne = oracle::nash_set(g);
    EXPECT_EQ(!ne.empty(), satisfiable(3, clauses));
    for (std::uint32_t m : ne) {
      EXPECT_TRUE(f.satisfied_by(sat_assignment(f, PureProfile(g.num_players(), Coalition(m)))));
    }
  }
}

TEST(SatReductionTest, CapAndValidation) {
  CnfFormula f;
  f.num_vars = 4;
  f.clauses = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {-1, -2, -3}, {-4, 1, 2}};
  EXPECT_THROW(sat_to_game(f), CapExceeded);  // 8 + 18 = 26 players
  EXPECT_THROW(sat_to_game(f, 100), InvalidGame);
  f.clauses = {{1, 5, 2}};
  EXPECT_THROW(sat_to_game(f), InvalidGame);
}

TEST(DisjointnessTest, LexicographicSets) {
  const auto one = disjointness_sets(1);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0], Coalition::single(0));
  EXPECT_EQ(one[1], Coalition::single(1));
  const auto two = disjointness_sets(2);
  ASSERT_EQ(two.size(), binomial(4, 2));
  EXPECT_EQ(two[0], Coalition::of({0, 1}));
  EXPECT_EQ(two[1], Coalition::of({0, 2}));
  EXPECT_EQ(two[2], Coalition::of({0, 3}));
  EXPECT_EQ(two[3], Coalition::of({1, 2}));
  EXPECT_EQ(two[5], Coalition::of({2, 3}));
}

TEST(DisjointnessTest, EquilibriumIffIntersecting) {
  const std::vector<std::vector<int>> subsets = {{}, {1}, {2}, {1, 2}};
  for (const auto& a1 : subsets) {
    for (const auto& a2 : subsets) {
      const Game g = disjointness_to_game({1, a1, a2});
      ASSERT_EQ(g.num_players(), 10);
      bool meet = false;
      for (int x : a1) {
        for (int y : a2) meet = meet || x == y;
      }
      EXPECT_EQ(!oracle::nash_set(g).empty(), meet);
    }
  }
  EXPECT_THROW(disjointness_to_game({1, {3}, {}}), BadParameters);
}

TEST(PricingTest, LotteryCosts) {
  const Game g = pricing_game(4, 2, 10, 4);
  const auto& w = std::get<AnonymousCost>(g.player(0).play_cost).by_count;
  ASSERT_EQ(w.size(), 4u);
  EXPECT_DOUBLE_EQ(w[0], 4);
  EXPECT_DOUBLE_EQ(w[1], 4);
  EXPECT_DOUBLE_EQ(w[2], 2.0 / 3 * 4 + 1.0 / 3 * 10);
  EXPECT_DOUBLE_EQ(w[3], 7);
  EXPECT_TRUE(check_monotone(g).monotone());
  EXPECT_THROW(pricing_game(4, 2, 10, 12), BadParameters);
  EXPECT_THROW(pricing_game(4, 4, 10, 4), BadParameters);
  EXPECT_THROW(pricing_game(4, 0, 10, 4), BadParameters);
  EXPECT_THROW(pricing_game(4, 2, 10, -1), BadParameters);
  EXPECT_THROW(pricing_game(4, 2, 10, 4, 3), BadParameters);
}

}  // namespace
}  // namespace payplay
