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

// Generators for the structured instances: the three-player cyclic game
// without pure equilibria, its indifferent variant, the two-player mixed
// coalition example, inefficiency families, the 3-SAT and set-disjointness
// reductions, and the laptop-lottery pricing game.

#ifndef PAYPLAY_GADGETS_HPP_
#define PAYPLAY_GADGETS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "payplay/cnf.hpp"
#include "payplay/game.hpp"
#include "payplay/profile.hpp"

namespace payplay {

namespace internal {

// Cost of cyclic position r (mod 3) given which of the three positions play.
// A playing predecessor costs 2; otherwise a playing successor costs
// `successor_cost`; alone costs 1.
inline double cyclic_cost(int r, Coalition positions, double successor_cost) {
  const int prev = (r + 2) % 3;
  const int next = (r + 1) % 3;
  if (positions.contains(prev)) return 2.0;
  if (positions.contains(next)) return successor_cost;
  return 1.0;
}

// Which of the three consecutive players starting at `base` are in s.
inline Coalition triple_pattern(Coalition s, PlayerId base) {
  return Coalition((s.mask() >> base) & 7U);
}

inline std::string format_number(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

}  // namespace internal

// Three players in a cycle; no pure Nash equilibrium exists.
inline Game triangle_gadget() {
  std::vector<PlayerSpec> players;
  for (PlayerId i = 0; i < 3; ++i) {
    players.push_back(
        {1.5, TabularCost::from_function(i, 3, [i](Coalition s) {
           return internal::cyclic_cost(i, s, 1.0);
         })});
  }
  return Game(std::move(players), "triangle");
}

// The cyclic game with the successor cost raised to the pay cost, plus a
// fourth player charged |S| who never pays. Players 0-2 ignore player 3.
inline Game indifference_gadget() {
  std::vector<PlayerSpec> players;
  for (PlayerId i = 0; i < 3; ++i) {
    players.push_back(
        {1.5, TabularCost::from_function(i, 4, [i](Coalition s) {
           return internal::cyclic_cost(i, internal::triple_pattern(s, 0), 1.5);
         })});
  }
  players.push_back({10.0, AnonymousCost{{1.0, 2.0, 3.0, 4.0}}});
  return Game(std::move(players), "indifference");
}

// Symmetric two-player game: pay 2 + epsilon, play 1 alone and 2 together.
inline Game two_player_example(double epsilon) {
  if (!(epsilon > 0.0)) throw BadEpsilon("epsilon must be positive");
  auto table = SharedTable::from_function(
      "g0", 2, [](Coalition s) { return s.size() == 2 ? 2.0 : 1.0; });
  std::vector<PlayerSpec> players(2, PlayerSpec{2.0 + epsilon,
                                                SharedTabularCost{table}});
  return Game(std::move(players),
              "two-player(epsilon=" + internal::format_number(epsilon) + ")");
}

// Player 0 pays n + epsilon or plays at |S|; everyone else pays 2 epsilon or
// plays at epsilon. The only equilibrium is all-play while the optimum lets
// player 0 play alone.
inline Game pos_player_specific(int n, double epsilon) {
  if (n < 2) throw BadParameters("need at least 2 players");
  if (!(epsilon > 0.0) || !(epsilon < 1.0 / (4.0 * n))) {
    throw BadEpsilon("epsilon must lie in (0, 1/(4n))");
  }
  std::vector<PlayerSpec> players;
  AnonymousCost linear;
  for (int m = 1; m <= n; ++m) linear.by_count.push_back(m);
  players.push_back({n + epsilon, linear});
  for (int j = 1; j < n; ++j) {
    players.push_back(
        {2.0 * epsilon, AnonymousCost{std::vector<double>(n, epsilon)}});
  }
  return Game(std::move(players),
              "pos-player-specific(n=" + std::to_string(n) +
                  ",epsilon=" + internal::format_number(epsilon) + ")");
}

// Symmetric game with pay cost 1 + epsilon and g(S) = 1 if player 0 plays,
// 0 otherwise.
inline Game pos_submodular(int n, double epsilon) {
  if (n < 2) throw BadParameters("need at least 2 players");
  if (n > kMaxTabularPlayers) throw CapExceeded(n, kMaxTabularPlayers);
  if (!(epsilon > 0.0)) throw BadEpsilon("epsilon must be positive");
  auto table = SharedTable::from_function(
      "g0", n, [](Coalition s) { return s.contains(0) ? 1.0 : 0.0; });
  std::vector<PlayerSpec> players(n, PlayerSpec{1.0 + epsilon,
                                                SharedTabularCost{table}});
  return Game(std::move(players),
              "pos-submodular(n=" + std::to_string(n) +
                  ",epsilon=" + internal::format_number(epsilon) + ")");
}

// Player layout of the 3-SAT reduction: variable v (1-based) owns players
// 2(v-1) ("true") and 2(v-1)+1 ("false"); clause c owns the three players
// starting at 2*num_vars + 3c.
struct SatLayout {
  int num_vars = 0;
  int num_clauses = 0;
  PlayerId true_player(int v) const { return 2 * (v - 1); }
  PlayerId false_player(int v) const { return 2 * (v - 1) + 1; }
  PlayerId clause_player(int c, int r) const {
    return 2 * num_vars + 3 * c + r;
  }
  // The player whose participation makes the literal false.
  PlayerId blocking_player(Literal lit) const {
    return lit > 0 ? true_player(lit) : false_player(-lit);
  }
  int num_players() const { return 2 * num_vars + 3 * num_clauses; }
};

// 3-SAT reduction. Each variable becomes a pair of mutually repelling
// players (2 when the partner plays, 1 otherwise). Each clause becomes three
// players who pay 1 unless all three literal players play, in which case they
// replay the cyclic three-player game among themselves. All pay costs are
// 1.5. A pure equilibrium exists iff the formula is satisfiable; the
// assignment sets v true iff its "true" player pays.
inline Game sat_to_game(const CnfFormula& cnf, int max_n = kMaxPlayers) {
  cnf.validate();
  const SatLayout layout{cnf.num_vars, static_cast<int>(cnf.clauses.size())};
  const int n = layout.num_players();
  if (n < 1) throw InvalidGame("formula has no variables");
  require_cap(n, max_n);
  std::vector<PlayerSpec> players(n);
  for (int v = 1; v <= cnf.num_vars; ++v) {
    const PlayerId t = layout.true_player(v);
    const PlayerId f = layout.false_player(v);
    players[t] = {1.5, DerivedCost{"variable-pair", [f](Coalition s) {
                                     return s.contains(f) ? 2.0 : 1.0;
                                   }}};
    players[f] = {1.5, DerivedCost{"variable-pair", [t](Coalition s) {
                                     return s.contains(t) ? 2.0 : 1.0;
                                   }}};
  }
  for (int c = 0; c < layout.num_clauses; ++c) {
    Coalition blockers;
    for (Literal lit : cnf.clauses[c]) {
      blockers = blockers.with(layout.blocking_player(lit));
    }
    const PlayerId base = layout.clause_player(c, 0);
    for (int r = 0; r < 3; ++r) {
      players[base + r] = {
          1.5, DerivedCost{"clause", [blockers, base, r](Coalition s) {
                             if (!blockers.subset_of(s)) return 1.0;
                             return internal::cyclic_cost(
                                 r, internal::triple_pattern(s, base), 1.0);
                           }}};
    }
  }
  return Game(std::move(players),
              "sat(vars=" + std::to_string(cnf.num_vars) +
                  ",clauses=" + std::to_string(layout.num_clauses) + ")");
}

// Reads an assignment back from a pure profile of sat_to_game's output.
inline std::uint64_t sat_assignment(const CnfFormula& cnf,
                                    const PureProfile& profile) {
  const SatLayout layout{cnf.num_vars, static_cast<int>(cnf.clauses.size())};
  std::uint64_t a = 0;
  for (int v = 1; v <= cnf.num_vars; ++v) {
    if (profile.pays(layout.true_player(v))) a |= std::uint64_t{1} << (v - 1);
  }
  return a;
}

struct DisjointnessInstance {
  int k = 1;               // n = 4k + 6 players
  std::vector<int> a1;     // subset of {1, ..., r}
  std::vector<int> a2;
};

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// The k-subsets of {1, ..., 2k} in lexicographic order; element e is bit
// e - 1. Entry j - 1 is the set identified with element j.
inline std::vector<Coalition> disjointness_sets(int k) {
  const int m = 2 * k;
  std::vector<Coalition> out;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    Coalition s;
    for (int e : pick) s = s.with(e);
    out.push_back(s);
    int r = k - 1;
    while (r >= 0 && pick[r] == m - k + r) --r;
    if (r < 0) break;
    ++pick[r];
    for (int t = r + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
  return out;
}

// Player layout of the disjointness reduction for n = 4k + 6: element
// e in 1..2k owns v_e at 2(e-1) and u_e at 2(e-1)+1; then t_0..t_2 and
// w_0..w_2.
struct DisjointnessLayout {
  int k = 1;
  int pairs() const { return 2 * k; }
  PlayerId v_player(int e) const { return 2 * (e - 1); }
  PlayerId u_player(int e) const { return 2 * (e - 1) + 1; }
  PlayerId t_player(int r) const { return 2 * pairs() + r; }
  PlayerId w_player(int r) const { return 2 * pairs() + 3 + r; }
  int num_players() const { return 4 * k + 6; }
};

// Pure equilibria exist iff a1 and a2 intersect. The t players escape the
// cyclic game (cost 2) when the playing v players cover some S_j, j in a1;
// the w players escape when the playing u players cover the complement of
// some S_j, j in a2.
inline Game disjointness_to_game(const DisjointnessInstance& inst,
                                 int max_n = kMaxPlayers) {
  if (inst.k < 1) throw BadParameters("k must be positive");
  const DisjointnessLayout layout{inst.k};
  const int n = layout.num_players();
  require_cap(n, max_n);
  const auto sets = disjointness_sets(inst.k);
  const int r = static_cast<int>(sets.size());
  auto check = [r](const std::vector<int>& a, const char* name) {
    for (int j : a) {
      if (j < 1 || j > r) {
        throw BadParameters(std::string(name) + " element " +
                            std::to_string(j) + " outside 1.." +
                            std::to_string(r));
      }
    }
  };
  check(inst.a1, "A1");
  check(inst.a2, "A2");

  const int m = layout.pairs();
  auto elements_playing = [layout, m](Coalition s, bool v_side) {
    Coalition out;
    for (int e = 1; e <= m; ++e) {
      if (s.contains(v_side ? layout.v_player(e) : layout.u_player(e))) {
        out = out.with(e - 1);
      }
    }
    return out;
  };
  std::vector<Coalition> t_targets, w_targets;
  for (int j : inst.a1) t_targets.push_back(sets[j - 1]);
  for (int j : inst.a2) w_targets.push_back(sets[j - 1].complement(m));

  std::vector<PlayerSpec> players(n);
  for (int e = 1; e <= m; ++e) {
    const PlayerId v = layout.v_player(e);
    const PlayerId u = layout.u_player(e);
    players[v] = {1.5, DerivedCost{"element-pair", [u](Coalition s) {
                                     return s.contains(u) ? 2.0 : 1.0;
                                   }}};
    players[u] = {1.5, DerivedCost{"element-pair", [v](Coalition s) {
                                     return s.contains(v) ? 2.0 : 1.0;
                                   }}};
  }
  auto family = [&](const std::vector<Coalition>& targets, bool v_side,
                    PlayerId base) {
    for (int q = 0; q < 3; ++q) {
      players[base + q] = {
          1.5, DerivedCost{v_side ? "t-player" : "w-player",
                           [targets, v_side, base, q,
                            elements_playing](Coalition s) {
                             const Coalition covered = elements_playing(s, v_side);
                             for (Coalition target : targets) {
                               if (target.subset_of(covered)) return 2.0;
                             }
                             return internal::cyclic_cost(
                                 q, internal::triple_pattern(s, base), 1.0);
                           }}};
    }
  };
  family(t_targets, true, layout.t_player(0));
  family(w_targets, false, layout.w_player(0));
  return Game(std::move(players),
              "disjointness(k=" + std::to_string(inst.k) + ")");
}

// Laptop lottery: pay the list price p, or enter a lottery of k laptops at
// price q < p. With m entrants, each wins with probability min(1, k/m);
// losers are charged no_win_loss.
inline Game pricing_game(int n, int k, double p, double q, double no_win_loss) {
  if (n < 2 || n > kMaxPlayers) throw BadParameters("n must be in [2, 24]");
  if (k < 1 || k >= n) throw BadParameters("k must satisfy 1 <= k < n");
  if (!(q >= 0.0) || !(q < p) || !std::isfinite(p)) {
    throw BadParameters("prices must satisfy 0 <= q < p");
  }
  if (!(no_win_loss >= q) || !std::isfinite(no_win_loss)) {
    throw BadParameters("no-win loss must be at least q");
  }
  AnonymousCost w;
  for (int m = 1; m <= n; ++m) {
    if (m <= k) {
      w.by_count.push_back(q);
    } else {
      const double win = static_cast<double>(k) / m;
      w.by_count.push_back(win * q + (1.0 - win) * no_win_loss);
    }
  }
  std::vector<PlayerSpec> players(n, PlayerSpec{p, w});
  return Game(std::move(players),
              "pricing(n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                  ",p=" + internal::format_number(p) +
                  ",q=" + internal::format_number(q) +
                  ",loss=" + internal::format_number(no_win_loss) + ")");
}

inline Game pricing_game(int n, int k, double p, double q) {
  return pricing_game(n, k, p, q, p);
}

}  // namespace payplay

#endif  // PAYPLAY_GADGETS_HPP_
