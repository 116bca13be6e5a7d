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

// Structural predicates on play costs: monotone, symmetric, anonymous,
// submodular and generic.
//
// Monotonicity and submodularity are checked through their local forms
// (one added player, resp. two added players) on the lattice of coalitions
// containing the owner; on a lattice both are equivalent to the global
// definitions.

#ifndef PAYPLAY_STRUCTURE_HPP_
#define PAYPLAY_STRUCTURE_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "payplay/game.hpp"
#include "payplay/profile.hpp"

namespace payplay {

struct MonotonicityViolation {
  PlayerId player = 0;
  Coalition smaller;  // S, contains player
  Coalition larger;   // T, strict superset of S
  double smaller_cost = 0.0;
  double larger_cost = 0.0;
};

struct MonotonicityReport {
  std::vector<MonotonicityViolation> violations;
  // False when a derived model was too large to scan and pairs were sampled.
  bool exhaustive = true;
  bool monotone() const { return violations.empty(); }
};

struct MonotoneCheckOptions {
  std::size_t sample_pairs = 10000;
  std::uint64_t seed = 42;
  std::size_t max_violations = 64;
};

namespace internal {

template <typename Fn>
void for_each_owner_coalition(int n, PlayerId owner, Fn&& fn) {
  const std::size_t count = std::size_t{1} << (n - 1);
  for (std::size_t k = 0; k < count; ++k) fn(owner_table_coalition(k, owner));
}

// First `count` players other than `owner`, in ascending order, plus owner.
inline Coalition owner_with_first_others(PlayerId owner, int count) {
  Coalition s = Coalition::single(owner);
  for (PlayerId j = 0; count > 0; ++j) {
    if (j == owner) continue;
    s = s.with(j);
    --count;
  }
  return s;
}

}  // namespace internal

inline MonotonicityReport check_monotone(const Game& game, Tolerance tol = {},
                                         const MonotoneCheckOptions& opts = {}) {
  MonotonicityReport report;
  const int n = game.num_players();
  auto record = [&](PlayerId i, Coalition s, Coalition t, double gs,
                    double gt) {
    if (report.violations.size() < opts.max_violations) {
      report.violations.push_back({i, s, t, gs, gt});
    }
  };
  std::mt19937_64 rng(opts.seed);
  for (PlayerId i = 0; i < n; ++i) {
    const CostModel& model = game.player(i).play_cost;
    if (const auto* a = std::get_if<AnonymousCost>(&model)) {
      for (int m = 1; m < n; ++m) {
        if (tol.greater(a->by_count[m - 1], a->by_count[m])) {
          const Coalition s = internal::owner_with_first_others(i, m - 1);
          const Coalition t = internal::owner_with_first_others(i, m);
          record(i, s, t, a->by_count[m - 1], a->by_count[m]);
        }
      }
      continue;
    }
    if (n <= kMaxTabularPlayers) {
      internal::for_each_owner_coalition(n, i, [&](Coalition s) {
        const double gs = game.play_cost(i, s);
        for (PlayerId j = 0; j < n; ++j) {
          if (s.contains(j)) continue;
          const double gt = game.play_cost(i, s.with(j));
          if (tol.greater(gs, gt)) record(i, s, s.with(j), gs, gt);
        }
      });
      continue;
    }
    // Large derived model: random S ⊂ T pairs.
    report.exhaustive = false;
    const Coalition::Mask others = Coalition::all(n).without(i).mask();
    for (std::size_t k = 0; k < opts.sample_pairs; ++k) {
      const Coalition s(static_cast<Coalition::Mask>(rng()) & others);
      Coalition t(s.mask() | (static_cast<Coalition::Mask>(rng()) & others));
      if (t == s) {
        const Coalition rest = Coalition(others & ~s.mask());
        if (rest.empty()) continue;
        t = t.with(rest.members().front());
      }
      const double gs = game.play_cost(i, s.with(i));
      const double gt = game.play_cost(i, t.with(i));
      if (tol.greater(gs, gt)) record(i, s.with(i), t.with(i), gs, gt);
    }
  }
  return report;
}

// True iff g_i depends only on the number of players who play.
inline bool check_anonymous(const Game& game, PlayerId i, Tolerance tol = {}) {
  const CostModel& model = game.player(i).play_cost;
  if (std::holds_alternative<AnonymousCost>(model)) return true;
  const int n = game.num_players();
  std::vector<std::optional<double>> by_size(n + 1);
  bool ok = true;
  internal::for_each_owner_coalition(n, i, [&](Coalition s) {
    if (!ok) return;
    const double g = game.play_cost(i, s);
    auto& seen = by_size[s.size()];
    if (!seen) {
      seen = g;
    } else if (!tol.equal(*seen, g)) {
      ok = false;
    }
  });
  return ok;
}

// True iff every player has the same pay cost and g_i(S) = g_j(S) whenever
// i, j ∈ S, i.e. one set function g serves everyone.
inline bool check_symmetric(const Game& game, Tolerance tol = {}) {
  const int n = game.num_players();
  for (PlayerId i = 1; i < n; ++i) {
    if (!tol.equal(game.pay_cost(i), game.pay_cost(0))) return false;
  }
  if (n == 1) return true;
  // Cheap exact paths.
  const auto& first = game.player(0).play_cost;
  if (const auto* sh = std::get_if<SharedTabularCost>(&first)) {
    bool same = true;
    for (PlayerId i = 1; i < n && same; ++i) {
      const auto* other = std::get_if<SharedTabularCost>(&game.player(i).play_cost);
      same = other != nullptr && other->table == sh->table;
    }
    if (same) return true;
  }
  if (game.all_anonymous()) {
    const auto& w0 = std::get<AnonymousCost>(first).by_count;
    for (PlayerId i = 1; i < n; ++i) {
      const auto& wi = std::get<AnonymousCost>(game.player(i).play_cost).by_count;
      for (int m = 0; m < n; ++m) {
        if (!tol.equal(w0[m], wi[m])) return false;
      }
    }
    return true;
  }
  for (Coalition::Mask m = 1; m < Coalition::all(n).mask() + 1ULL; ++m) {
    const Coalition s(m);
    if (s.size() < 2) continue;
    const auto members = s.members();
    const double g0 = game.play_cost(members[0], s);
    for (std::size_t k = 1; k < members.size(); ++k) {
      if (!tol.equal(game.play_cost(members[k], s), g0)) return false;
    }
  }
  return true;
}

// g_i(T ∪ {j}) - g_i(T) <= g_i(S ∪ {j}) - g_i(S) for all i ∈ S ⊆ T, j ∉ T.
inline bool check_submodular(const Game& game, PlayerId i, Tolerance tol = {}) {
  const int n = game.num_players();
  const CostModel& model = game.player(i).play_cost;
  if (const auto* a = std::get_if<AnonymousCost>(&model)) {
    // Increments w(m+1) - w(m) must be nonincreasing for m >= 1.
    for (int m = 1; m + 1 < n; ++m) {
      const double inc_small = a->by_count[m] - a->by_count[m - 1];
      const double inc_large = a->by_count[m + 1] - a->by_count[m];
      if (tol.greater(inc_large, inc_small)) return false;
    }
    return true;
  }
  require_cap(n, kMaxTabularPlayers);
  bool ok = true;
  internal::for_each_owner_coalition(n, i, [&](Coalition t) {
    if (!ok) return;
    const double gt = game.play_cost(i, t);
    for (PlayerId j = 0; j < n && ok; ++j) {
      if (t.contains(j)) continue;
      const double gtj = game.play_cost(i, t.with(j));
      for (PlayerId k = j + 1; k < n && ok; ++k) {
        if (t.contains(k)) continue;
        const double gtk = game.play_cost(i, t.with(k));
        const double gtjk = game.play_cost(i, t.with(j).with(k));
        // Adding j on top of T ∪ {k} versus on top of T.
        if (tol.greater(gtjk - gtk, gtj - gt)) ok = false;
      }
    }
  });
  return ok;
}

// No player is ever exactly indifferent: |h_i - g_i(S)| > eps for all S ∋ i.
inline bool check_generic(const Game& game, Tolerance tol = {}) {
  const int n = game.num_players();
  for (PlayerId i = 0; i < n; ++i) {
    const double h = game.pay_cost(i);
    if (const auto* a = std::get_if<AnonymousCost>(&game.player(i).play_cost)) {
      for (double w : a->by_count) {
        if (tol.equal(w, h)) return false;
      }
      continue;
    }
    bool ok = true;
    internal::for_each_owner_coalition(n, i, [&](Coalition s) {
      if (ok && tol.equal(game.play_cost(i, s), h)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

// Rewrites a symmetric game whose players are all anonymous as one where
// every player carries the same by-count array. Returns nullopt otherwise.
inline std::optional<Game> to_anonymous(const Game& game, Tolerance tol = {}) {
  const int n = game.num_players();
  if (!check_symmetric(game, tol)) return std::nullopt;
  for (PlayerId i = 0; i < n; ++i) {
    if (!check_anonymous(game, i, tol)) return std::nullopt;
  }
  AnonymousCost w;
  w.by_count.resize(n);
  for (int m = 1; m <= n; ++m) {
    w.by_count[m - 1] =
        game.play_cost(0, internal::owner_with_first_others(0, m - 1));
  }
  std::vector<PlayerSpec> players(n, PlayerSpec{game.pay_cost(0), w});
  return Game(std::move(players), game.label());
}

}  // namespace payplay

#endif  // PAYPLAY_STRUCTURE_HPP_
