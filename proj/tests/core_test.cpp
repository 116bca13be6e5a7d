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

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "payplay/gadgets.hpp"
#include "payplay/game.hpp"
#include "payplay/random_games.hpp"

namespace payplay {
namespace {

TEST(CoalitionTest, SetOperations) {
  const Coalition s = Coalition::of({0, 2});
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_TRUE(s.subset_of(Coalition::all(3)));
  EXPECT_EQ(s.complement(3), Coalition::single(1));
  EXPECT_EQ(s.with(1), Coalition::all(3));
  EXPECT_EQ(s.without(0), Coalition::single(2));
  EXPECT_EQ(s.to_string(), "{0,2}");
  EXPECT_EQ(s.members(), (std::vector<PlayerId>{0, 2}));
}

TEST(PureProfileTest, PayAndPlaySets) {
  const PureProfile x(4, Coalition::of({1, 3}));
  EXPECT_EQ(x.to_string(), "-P-P");
  EXPECT_EQ(x.play_set(), Coalition::of({0, 2}));
  EXPECT_EQ(play_set(x), Coalition::of({0, 2}));
  EXPECT_TRUE(x.pays(3));
  EXPECT_EQ(x.flipped(0).to_string(), "PP-P");
  EXPECT_EQ(PureProfile::from_play_set(4, Coalition::of({0, 2})), x);
  EXPECT_EQ(PureProfile::from_pay_flags({false, true, false, true}), x);
  EXPECT_THROW(PureProfile(2, Coalition::single(2)), InvalidGame);
}

TEST(MixedProfileTest, RejectsOutOfRange) {
  EXPECT_THROW(MixedProfile({0.5, 1.5}), InvalidGame);
  EXPECT_THROW(MixedProfile({-0.1}), InvalidGame);
  EXPECT_THROW(MixedProfile({std::nan("")}), InvalidGame);
  EXPECT_TRUE(MixedProfile(PureProfile::all_pay(3)).is_pure());
  EXPECT_FALSE(MixedProfile::uniform(2, 0.5).is_pure());
}

TEST(ToleranceTest, RejectsNonPositive) {
  EXPECT_THROW(Tolerance(0.0), BadParameters);
  EXPECT_THROW(Tolerance(-1.0), BadParameters);
  const Tolerance t(0.1);
  EXPECT_TRUE(t.equal(1.0, 1.05));
  EXPECT_FALSE(t.less(1.0, 1.05));
  EXPECT_TRUE(t.less(1.0, 1.2));
}

std::vector<CostEntry> full_table(PlayerId owner, int n, double value) {
  std::vector<CostEntry> out;
  for (Coalition::Mask m = 1; m < (Coalition::Mask{1} << n); ++m) {
    if (Coalition(m).contains(owner)) out.push_back({Coalition(m), value});
  }
  return out;
}

TEST(TabularCostTest, ValidatesEntries) {
  auto entries = full_table(0, 2, 1.0);
  EXPECT_NO_THROW(TabularCost::from_entries(0, 2, entries));

  auto missing_owner = entries;
  missing_owner.push_back({Coalition::single(1), 1.0});
  EXPECT_THROW(TabularCost::from_entries(0, 2, missing_owner), InvalidGame);

  auto negative = entries;
  negative[0].cost = -1.0;
  EXPECT_THROW(TabularCost::from_entries(0, 2, negative), InvalidGame);

  auto infinite = entries;
  infinite[0].cost = std::numeric_limits<double>::infinity();
  EXPECT_THROW(TabularCost::from_entries(0, 2, infinite), InvalidGame);

  auto duplicate = entries;
  duplicate.push_back(entries[0]);
  EXPECT_THROW(TabularCost::from_entries(0, 2, duplicate), InvalidGame);

  auto incomplete = entries;
  incomplete.pop_back();
  EXPECT_THROW(TabularCost::from_entries(0, 2, incomplete), MissingTableEntry);

  auto outside = entries;
  outside.push_back({Coalition::of({0, 5}), 1.0});
  EXPECT_THROW(TabularCost::from_entries(0, 2, outside), InvalidGame);
}

TEST(GameTest, ValidatesShapes) {
  EXPECT_THROW(Game({}, "empty"), InvalidGame);
  EXPECT_THROW(Game({{1.0, AnonymousCost{{1.0}}}, {1.0, AnonymousCost{{1.0}}}}, ""),
               InvalidGame);
  EXPECT_THROW(Game({{-1.0, AnonymousCost{{1.0}}}}, ""), InvalidGame);
  EXPECT_THROW(Game({{1.0, AnonymousCost{{-1.0}}}}, ""), InvalidGame);
  EXPECT_THROW(
      Game({{1.0, DerivedCost{"neg", [](Coalition) { return -1.0; }}}}, ""),
      InvalidGame);
  std::vector<PlayerSpec> big(25, PlayerSpec{1.0, AnonymousCost{std::vector<double>(25, 1.0)}});
  EXPECT_THROW(Game(big, ""), InvalidGame);
}

TEST(GameTest, PureCosts) {
  const Game g = triangle_gadget();
  // Player 0 plays with its successor 1 only: cost 1. Player 1 plays with
  // its predecessor 0: cost 2. Player 2 pays.
  const PureProfile x(3, Coalition::single(2));
  EXPECT_DOUBLE_EQ(pure_cost(g, x, 0), 1.0);
  EXPECT_DOUBLE_EQ(pure_cost(g, x, 1), 2.0);
  EXPECT_DOUBLE_EQ(pure_cost(g, x, 2), 1.5);
  EXPECT_DOUBLE_EQ(social_cost(g, x), 4.5);
  EXPECT_THROW(pure_cost(g, PureProfile::all_pay(4), 0), InvalidGame);
}

TEST(MixedCostTest, AgreesWithOutcomeEnumeration) {
  Rng rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const Game g = random_monotone_game(n, rng);
    std::vector<double> p(n);
    for (double& v : p) {
      const double r = u(rng);
      v = r < 0.2 ? 0.0 : (r < 0.4 ? 1.0 : u(rng));
    }
    const MixedProfile x(p);
    for (PlayerId i = 0; i < n; ++i) {
      EXPECT_NEAR(mixed_cost(g, x, i), oracle::expected_cost(g, p, i), 1e-12);
    }
  }
}

TEST(MixedCostTest, ConstantGameHasConstantCost) {
  // With h = g = 1 every outcome costs 1, so the weights must sum to one.
  const Game g({4, PlayerSpec{1.0, AnonymousCost{{1.0, 1.0, 1.0, 1.0}}}}, "ones");
  const MixedProfile x({0.1, 0.7, 0.35, 0.9});
  for (PlayerId i = 0; i < 4; ++i) EXPECT_NEAR(mixed_cost(g, x, i), 1.0, 1e-15);
}

TEST(MixedCostTest, UsesFullProductMeasure) {
  // Two players, g(S) = |S|, h = 0. Player 1 pays with probability 0.25.
  // The play branch costs 1 * 0.25 + 2 * 0.75 = 1.75; a weight that drops
  // the pay probabilities of the players outside S would give 1 + 2 * 0.75.
  const Game g({2, PlayerSpec{0.0, AnonymousCost{{1.0, 2.0}}}}, "linear");
  const MixedProfile x({0.0, 0.25});
  EXPECT_DOUBLE_EQ(mixed_cost(g, x, 0), 1.75);
  EXPECT_DOUBLE_EQ(play_branch_cost(g, x, 0), 1.75);
}

}  // namespace
}  // namespace payplay
