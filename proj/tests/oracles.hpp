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

// Straightforward reference implementations used to cross-check the
// library. They only read costs through Game::pay_cost / Game::play_cost and
// share no code with the algorithms under test.

#ifndef PAYPLAY_TESTS_ORACLES_HPP_
#define PAYPLAY_TESTS_ORACLES_HPP_

#include <cmath>
#include <cstdint>
#include <vector>

#include "payplay/game.hpp"

namespace oracle {

using payplay::Coalition;
using payplay::Game;

constexpr double kEps = 1e-9;

// Cost of player i when `payers` is the set of players who pay.
inline double cost(const Game& g, std::uint32_t payers, int i) {
  const int n = g.num_players();
  if ((payers >> i) & 1U) return g.pay_cost(i);
  const std::uint32_t all = n == 32 ? ~0U : ((1U << n) - 1);
  return g.play_cost(i, Coalition(all & ~payers));
}

inline double social(const Game& g, std::uint32_t payers) {
  double s = 0;
  for (int i = 0; i < g.num_players(); ++i) s += cost(g, payers, i);
  return s;
}

inline bool is_nash(const Game& g, std::uint32_t payers) {
  for (int i = 0; i < g.num_players(); ++i) {
    if (cost(g, payers ^ (1U << i), i) < cost(g, payers, i) - kEps) return false;
  }
  return true;
}

// Payer masks of all pure equilibria, ascending.
inline std::vector<std::uint32_t> nash_set(const Game& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1U << g.num_players()); ++m) {
    if (is_nash(g, m)) out.push_back(m);
  }
  return out;
}

// Pareto domination: someone strictly better, nobody strictly worse.
inline bool dominates(const Game& g, std::uint32_t y, std::uint32_t x) {
  bool strict = false;
  for (int i = 0; i < g.num_players(); ++i) {
    const double d = cost(g, y, i) - cost(g, x, i);
    if (d > kEps) return false;
    if (d < -kEps) strict = true;
  }
  return strict;
}

inline bool pareto_efficient(const Game& g, std::uint32_t x) {
  for (std::uint32_t y = 0; y < (1U << g.num_players()); ++y) {
    if (dominates(g, y, x)) return false;
  }
  return true;
}

inline double optimum_cost(const Game& g) {
  double best = INFINITY;
  for (std::uint32_t m = 0; m < (1U << g.num_players()); ++m) {
    best = std::fmin(best, social(g, m));
  }
  return best;
}

// Expected cost of player i when player j pays with probability p[j],
// summing over all 2^n pure outcomes.
inline double expected_cost(const Game& g, const std::vector<double>& p, int i) {
  const int n = g.num_players();
  double total = 0;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    double w = 1;
    for (int j = 0; j < n; ++j) w *= ((m >> j) & 1U) ? p[j] : 1 - p[j];
    if (w != 0) total += w * cost(g, m, i);
  }
  return total;
}

}  // namespace oracle

#endif  // PAYPLAY_TESTS_ORACLES_HPP_
