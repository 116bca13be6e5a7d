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

// Random instance samplers used by the property suites.

#ifndef PAYPLAY_RANDOM_GAMES_HPP_
#define PAYPLAY_RANDOM_GAMES_HPP_

#include <algorithm>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "payplay/game.hpp"
#include "payplay/graph.hpp"
#include "payplay/profile.hpp"

namespace payplay {

using Rng = std::mt19937_64;

namespace internal {

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Fills values[mask] for every mask in `universe` containing `required`
// (in increasing mask order) so that values only grow along inclusion:
// each set takes the largest value among its one-smaller subsets plus a
// fresh nonnegative increment.
inline void fill_monotone(std::vector<double>& values, int n,
                          Coalition::Mask required, Rng& rng, double base_hi,
                          double step_hi) {
  const Coalition::Mask total = Coalition::Mask{1} << n;
  for (Coalition::Mask m = 1; m < total; ++m) {
    if ((m & required) != required) continue;
    double floor = -1.0;
    for (Coalition::Mask rest = m & ~required; rest != 0; rest &= rest - 1) {
      const Coalition::Mask smaller = m & ~(rest & -rest);
      if (smaller == 0) continue;
      floor = std::max(floor, values[smaller]);
    }
    values[m] = floor < 0.0 ? uniform(rng, 0.0, base_hi)
                            : floor + uniform(rng, 0.0, step_hi);
  }
}

}  // namespace internal

// Player-specific monotone tables; h_i is drawn across the range of g_i so
// both strategies matter.
inline Game random_monotone_game(int n, Rng& rng) {
  if (n > kMaxTabularPlayers) throw CapExceeded(n, kMaxTabularPlayers);
  std::vector<PlayerSpec> players;
  std::vector<double> values(std::size_t{1} << n);
  for (PlayerId i = 0; i < n; ++i) {
    std::fill(values.begin(), values.end(), 0.0);
    internal::fill_monotone(values, n, Coalition::single(i).mask(), rng, 1.0,
                            1.0);
    const double top = values[Coalition::all(n).mask()];
    TabularCost table = TabularCost::from_function(
        i, n, [&](Coalition s) { return values[s.mask()]; });
    players.push_back({internal::uniform(rng, 0.0, 1.1 * top), std::move(table)});
  }
  return Game(std::move(players), "random-monotone(n=" + std::to_string(n) + ")");
}

// Symmetric anonymous game with nondecreasing w; concave when requested
// (nonincreasing increments), which makes it submodular.
inline Game random_anonymous_symmetric_game(int n, Rng& rng, bool concave) {
  std::vector<double> inc(n - 1 > 0 ? n - 1 : 0);
  for (double& d : inc) d = internal::uniform(rng, 0.0, 1.0);
  if (concave) std::sort(inc.begin(), inc.end(), std::greater<>());
  AnonymousCost w;
  w.by_count.push_back(internal::uniform(rng, 0.0, 1.0));
  for (double d : inc) w.by_count.push_back(w.by_count.back() + d);
  const double h = internal::uniform(rng, 0.0, 1.1 * w.by_count.back());
  std::vector<PlayerSpec> players(n, PlayerSpec{h, w});
  return Game(std::move(players),
              std::string(concave ? "random-submodular" : "random-anonymous") +
                  "(n=" + std::to_string(n) + ")");
}

// Symmetric game over one shared monotone set function.
inline Game random_shared_symmetric_game(int n, Rng& rng) {
  if (n > kMaxTabularPlayers) throw CapExceeded(n, kMaxTabularPlayers);
  std::vector<double> values(std::size_t{1} << n, 0.0);
  internal::fill_monotone(values, n, 0, rng, 1.0, 1.0 / n);
  auto table = SharedTable::from_function(
      "g0", n, [&](Coalition s) { return values[s.mask()]; });
  const double h =
      internal::uniform(rng, 0.0, 1.1 * values[Coalition::all(n).mask()]);
  std::vector<PlayerSpec> players(n, PlayerSpec{h, SharedTabularCost{table}});
  return Game(std::move(players),
              "random-shared(n=" + std::to_string(n) + ")");
}

// Erdos-Renyi G(n, p).
inline UndirectedGraph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution edge(p);
  std::vector<UndirectedGraph::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) edges.emplace_back(u, v);
    }
  }
  return {n, std::move(edges)};
}

}  // namespace payplay

#endif  // PAYPLAY_RANDOM_GAMES_HPP_
