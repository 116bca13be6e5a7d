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

// Social optimum, Pareto efficiency with respect to pure deviations, and the
// pure price of anarchy / stability.

#ifndef PAYPLAY_EFFICIENCY_HPP_
#define PAYPLAY_EFFICIENCY_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "payplay/equilibrium.hpp"
#include "payplay/game.hpp"
#include "payplay/profile.hpp"

namespace payplay {

struct SocialOptimum {
  PureProfile profile;
  double cost = 0.0;
};

// Exhaustive minimizer of social cost; the smallest payer bitmask wins ties.
inline SocialOptimum optimum(const Game& game, Tolerance tol = {},
                             int max_n = kMaxPlayers) {
  const int n = game.num_players();
  require_cap(n, max_n);
  SocialOptimum best{PureProfile::all_play(n), social_cost(game, PureProfile::all_play(n))};
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 1; m < total; ++m) {
    const PureProfile y(n, Coalition(static_cast<Coalition::Mask>(m)));
    const double c = social_cost(game, y);
    if (tol.less(c, best.cost)) best = {y, c};
  }
  return best;
}

struct ParetoWitness {
  PureProfile profile;
  std::vector<double> cost_deltas;  // c_i(y) - c_i(x), per player
  int strictly_improved = 0;
  friend bool operator==(const ParetoWitness&, const ParetoWitness&) = default;
};

struct ParetoVerdict {
  bool efficient = true;
  std::optional<ParetoWitness> witness;
  friend bool operator==(const ParetoVerdict&, const ParetoVerdict&) = default;
};

// Looks for a pure y with c_i(y) <= c_i(x) for all i and a strict gain for
// someone. Among such y, reports the one improving the most players, then
// the smallest payer bitmask.
inline ParetoVerdict is_pareto_efficient_pure(const Game& game,
                                              const PureProfile& x,
                                              Tolerance tol = {},
                                              int max_n = kMaxPlayers) {
  const int n = game.num_players();
  require_cap(n, max_n);
  require_profile(game, x.size());
  std::vector<double> base(n);
  for (PlayerId i = 0; i < n; ++i) base[i] = pure_cost(game, x, i);
  ParetoVerdict verdict;
  std::vector<double> deltas(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m) {
    const PureProfile y(n, Coalition(static_cast<Coalition::Mask>(m)));
    if (y == x) continue;
    int improved = 0;
    bool dominated = true;
    for (PlayerId i = 0; i < n; ++i) {
      deltas[i] = pure_cost(game, y, i) - base[i];
      if (tol.greater(deltas[i], 0.0)) {
        dominated = false;
        break;
      }
      if (tol.less(deltas[i], 0.0)) ++improved;
    }
    if (!dominated || improved == 0) continue;
    if (!verdict.witness || improved > verdict.witness->strictly_improved) {
      verdict.efficient = false;
      verdict.witness = ParetoWitness{y, deltas, improved};
    }
  }
  return verdict;
}

struct EfficiencyRatios {
  PureProfile optimum_profile;
  double optimum_cost = 0.0;
  std::optional<double> worst_ne_cost;
  std::optional<double> best_ne_cost;
  std::optional<double> poa;
  std::optional<double> pos;
  // Optimum cost within eps of zero: ratios are left undefined.
  bool zero_optimum = false;
  friend bool operator==(const EfficiencyRatios&,
                         const EfficiencyRatios&) = default;
};

// Ratios over pure equilibria only; absent when there is none.
inline EfficiencyRatios efficiency_ratios(const Game& game,
                                          const EquilibriumSet& equilibria,
                                          Tolerance tol = {},
                                          int max_n = kMaxPlayers) {
  const SocialOptimum opt = optimum(game, tol, max_n);
  EfficiencyRatios r;
  r.optimum_profile = opt.profile;
  r.optimum_cost = opt.cost;
  r.zero_optimum = opt.cost <= tol.eps;
  for (const PureProfile& x : equilibria.pure_equilibria) {
    const double c = social_cost(game, x);
    if (!r.worst_ne_cost || c > *r.worst_ne_cost) r.worst_ne_cost = c;
    if (!r.best_ne_cost || c < *r.best_ne_cost) r.best_ne_cost = c;
  }
  if (r.worst_ne_cost && !r.zero_optimum) {
    r.poa = *r.worst_ne_cost / r.optimum_cost;
    r.pos = *r.best_ne_cost / r.optimum_cost;
  }
  return r;
}

inline EfficiencyRatios efficiency_ratios(const Game& game, Tolerance tol = {},
                                          int max_n = kMaxPlayers) {
  return efficiency_ratios(game, enumerate_pure_nash(game, tol, max_n), tol,
                           max_n);
}

}  // namespace payplay

#endif  // PAYPLAY_EFFICIENCY_HPP_
