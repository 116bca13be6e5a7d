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

// Pure and mixed Nash equilibria, the symmetric greedy construction, and
// certificates for strong and semi-strong stability.

#ifndef PAYPLAY_EQUILIBRIUM_HPP_
#define PAYPLAY_EQUILIBRIUM_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

#include "payplay/game.hpp"
#include "payplay/profile.hpp"
#include "payplay/structure.hpp"

namespace payplay {

struct BestResponseSet {
  bool pay = false;
  bool play = false;
  bool contains(Strategy s) const { return s == Strategy::kPay ? pay : play; }
  bool both() const { return pay && play; }
};

// Strategies minimizing player i's cost with x_{-i} fixed; both on a tie.
inline BestResponseSet best_responses(const Game& game,
                                      const PureProfile& profile, PlayerId i,
                                      Tolerance tol = {}) {
  const double pay = game.pay_cost(i);
  const double play = game.play_cost(i, profile.play_set().with(i));
  if (tol.equal(pay, play)) return {true, true};
  return pay < play ? BestResponseSet{true, false} : BestResponseSet{false, true};
}

inline bool is_pure_nash(const Game& game, const PureProfile& profile,
                         Tolerance tol = {}) {
  require_profile(game, profile.size());
  const Coalition playing = profile.play_set();
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    const double pay = game.pay_cost(i);
    const double play = game.play_cost(i, playing.with(i));
    if (profile.pays(i) ? tol.less(play, pay) : tol.less(pay, play)) {
      return false;
    }
  }
  return true;
}

struct EquilibriumSet {
  std::vector<PureProfile> pure_equilibria;  // ascending payer bitmask
  bool exhaustive = false;
  bool empty() const { return pure_equilibria.empty(); }
  friend bool operator==(const EquilibriumSet&, const EquilibriumSet&) = default;
};

// All pure equilibria by scanning the 2^n profiles.
inline EquilibriumSet enumerate_pure_nash(const Game& game, Tolerance tol = {},
                                          int max_n = kMaxPlayers) {
  const int n = game.num_players();
  require_cap(n, max_n);
  EquilibriumSet out;
  out.exhaustive = true;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m) {
    const PureProfile profile(n, Coalition(static_cast<Coalition::Mask>(m)));
    if (is_pure_nash(game, profile, tol)) out.pure_equilibria.push_back(profile);
  }
  return out;
}

// Greedy construction for symmetric games: start from all-pay and admit a
// payer i to play while g(A ∪ {i}) < h. Candidates are tried in `order`.
inline PureProfile greedy_symmetric_nash(const Game& game,
                                         std::span<const PlayerId> order,
                                         Tolerance tol = {}) {
  if (!check_symmetric(game, tol)) {
    throw NotSymmetric("greedy construction needs a symmetric game");
  }
  const int n = game.num_players();
  const double h = game.pay_cost(0);
  Coalition playing;
  bool changed = true;
  while (changed) {
    changed = false;
    for (PlayerId i : order) {
      if (playing.contains(i)) continue;
      if (tol.less(game.play_cost(i, playing.with(i)), h)) {
        playing = playing.with(i);
        changed = true;
        break;
      }
    }
  }
  return PureProfile::from_play_set(n, playing);
}

// Lowest index first.
inline PureProfile greedy_symmetric_nash(const Game& game, Tolerance tol = {}) {
  std::vector<PlayerId> order(game.num_players());
  std::iota(order.begin(), order.end(), 0);
  return greedy_symmetric_nash(game, order, tol);
}

// Per-player diagnostics of a mixed profile.
struct MixedPlayerCheck {
  double pay_cost = 0.0;   // h_i
  double play_cost = 0.0;  // expected cost of pure play against x_{-i}
  double cost = 0.0;       // c_i(x)
  // c_i(x) - min(pay_cost, play_cost); zero at a best response.
  double regret = 0.0;
};

inline std::vector<MixedPlayerCheck> mixed_player_checks(const Game& game,
                                                         const MixedProfile& x) {
  require_profile(game, x.size());
  std::vector<MixedPlayerCheck> out(game.num_players());
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    MixedPlayerCheck& c = out[i];
    c.pay_cost = game.pay_cost(i);
    c.play_cost = play_branch_cost(game, x, i);
    c.cost = x[i] * c.pay_cost + (1.0 - x[i]) * c.play_cost;
    c.regret = c.cost - std::min(c.pay_cost, c.play_cost);
  }
  return out;
}

// Cost is affine in a player's own probability, so comparing against the two
// pure alternatives suffices.
inline bool is_mixed_nash(const Game& game, const MixedProfile& x,
                          Tolerance tol = {}) {
  require_profile(game, x.size());
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    const double h = game.pay_cost(i);
    const double play = play_branch_cost(game, x, i);
    if (x[i] == 1.0) {
      if (!tol.less_equal(h, play)) return false;
    } else if (x[i] == 0.0) {
      if (!tol.less_equal(play, h)) return false;
    } else if (!tol.equal(h, play)) {
      return false;
    }
  }
  return true;
}

// Returned by symmetric_mixed_nash when no interior p balances the costs.
struct NoInteriorSolution {
  // The dominant pure profile: all-pay when h < w(1), all-play when h > w(n).
  PureProfile suggestion;
};

namespace internal {

// E[w(1 + Bin(n - 1, 1 - p))]: expected play cost when all others pay w.p. p.
inline double symmetric_play_cost(std::span<const double> w, double p) {
  const int others = static_cast<int>(w.size()) - 1;
  double total = 0.0;
  for (int k = 0; k <= others; ++k) {
    const double coeff = std::exp(std::lgamma(others + 1.0) -
                                  std::lgamma(k + 1.0) -
                                  std::lgamma(others - k + 1.0));
    total += coeff * std::pow(1.0 - p, k) * std::pow(p, others - k) * w[k];
  }
  return total;
}

}  // namespace internal

// Symmetric mixed equilibrium of a symmetric anonymous game: the p solving
// h = E[w(1 + Bin(n-1, 1-p))], found by bisection (the right side is
// nonincreasing in p when w is nondecreasing).
inline std::variant<MixedProfile, NoInteriorSolution> symmetric_mixed_nash(
    const Game& game, Tolerance tol = {}) {
  const int n = game.num_players();
  if (!check_symmetric(game, tol)) {
    throw NotSymmetricAnonymous("game is not symmetric");
  }
  for (PlayerId i = 0; i < n; ++i) {
    if (!check_anonymous(game, i, tol)) {
      throw NotSymmetricAnonymous("player " + std::to_string(i) +
                                  " is not anonymous");
    }
  }
  std::vector<double> w(n);
  for (int m = 1; m <= n; ++m) {
    w[m - 1] = game.play_cost(0, internal::owner_with_first_others(0, m - 1));
  }
  const double h = game.pay_cost(0);
  const double at_all_pay = w[0];       // p = 1
  const double at_all_play = w[n - 1];  // p = 0
  if (tol.less(h, at_all_pay)) {
    return NoInteriorSolution{PureProfile::all_pay(n)};
  }
  if (tol.greater(h, at_all_play)) {
    return NoInteriorSolution{PureProfile::all_play(n)};
  }
  double lo = 0.0;  // E(lo) >= h
  double hi = 1.0;  // E(hi) <= h
  for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (internal::symmetric_play_cost(w, mid) >= h) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double err_lo = std::fabs(internal::symmetric_play_cost(w, lo) - h);
  const double err_hi = std::fabs(internal::symmetric_play_cost(w, hi) - h);
  return MixedProfile::uniform(n, err_lo <= err_hi ? lo : hi);
}

// A joint deviation y from x in which every deviator strictly gains.
struct CoalitionDeviation {
  Coalition deviators;
  MixedProfile profile;  // the full deviation profile y
  // Per deviator in ascending id order: c_i(x) - c_i(y) > eps.
  std::vector<double> cost_improvements;

  double min_improvement() const {
    return cost_improvements.empty()
               ? 0.0
               : *std::min_element(cost_improvements.begin(),
                                   cost_improvements.end());
  }
};

struct StrongVerdict {
  bool strong = true;
  std::optional<CoalitionDeviation> deviation;  // set when strong == false
};

// Scans every pure y != x for a deviation improving all players whose
// strategy changed. On a monotone game a pure equilibrium is always strong
// with respect to pure deviations; a returned deviation flags a model
// violation.
inline StrongVerdict is_strong_pure(const Game& game, const PureProfile& x,
                                    Tolerance tol = {},
                                    int max_n = kMaxPlayers) {
  const int n = game.num_players();
  require_cap(n, max_n);
  if (!is_pure_nash(game, x, tol)) {
    throw NotAnEquilibrium("strong check needs a pure Nash equilibrium");
  }
  std::vector<double> base(n);
  for (PlayerId i = 0; i < n; ++i) base[i] = pure_cost(game, x, i);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m) {
    const PureProfile y(n, Coalition(static_cast<Coalition::Mask>(m)));
    if (y == x) continue;
    const Coalition changed(y.bitmask() ^ x.bitmask());
    std::vector<double> gains;
    bool all_gain = true;
    for (PlayerId i : changed.members()) {
      const double gain = base[i] - pure_cost(game, y, i);
      if (gain <= tol.eps) {
        all_gain = false;
        break;
      }
      gains.push_back(gain);
    }
    if (all_gain) {
      return {false, CoalitionDeviation{changed, MixedProfile(y), gains}};
    }
  }
  return {true, std::nullopt};
}

struct SemiStrongWitness {
  enum class Kind {
    kProperty1,  // some deviator is strictly worse off in y
    kProperty2,  // some deviator has a strictly better reply to y_{-i}
    kViolation,  // neither; contradicts semi-strong stability
  };
  Kind kind = Kind::kViolation;
  PlayerId player = -1;
  // For kProperty2: the improving pure reply (1 = pay, 0 = play).
  std::optional<double> improving_strategy;
  double cost_x = 0.0;
  double cost_y = 0.0;
  double cost_reply = 0.0;
};

// Certifies that the joint deviation y from the mixed equilibrium x is
// either harmful to a deviator or unstable. Property 1 is tried before
// Property 2, each reporting the lowest-index qualifying player.
inline SemiStrongWitness semi_strong_witness(const Game& game,
                                             const MixedProfile& x,
                                             const MixedProfile& y,
                                             Tolerance tol = {}) {
  require_profile(game, y.size());
  if (!is_mixed_nash(game, x, tol)) {
    throw NotAnEquilibrium("semi-strong check needs a mixed Nash equilibrium");
  }
  if (x == y) throw BadParameters("deviation must differ from the equilibrium");
  const int n = game.num_players();
  std::vector<PlayerId> deviators;
  for (PlayerId i = 0; i < n; ++i) {
    if (x[i] != y[i]) deviators.push_back(i);
  }
  std::vector<double> cy(n, 0.0);
  std::vector<double> play_y(n, 0.0);
  for (PlayerId i : deviators) {
    play_y[i] = play_branch_cost(game, y, i);
    cy[i] = y[i] * game.pay_cost(i) + (1.0 - y[i]) * play_y[i];
    const double cx = mixed_cost(game, x, i);
    if (tol.greater(cy[i], cx)) {
      SemiStrongWitness w;
      w.kind = SemiStrongWitness::Kind::kProperty1;
      w.player = i;
      w.cost_x = cx;
      w.cost_y = cy[i];
      return w;
    }
  }
  for (PlayerId i : deviators) {
    const double pay = game.pay_cost(i);
    const double best = std::min(pay, play_y[i]);
    if (tol.less(best, cy[i])) {
      SemiStrongWitness w;
      w.kind = SemiStrongWitness::Kind::kProperty2;
      w.player = i;
      w.improving_strategy = pay <= play_y[i] ? 1.0 : 0.0;
      w.cost_x = mixed_cost(game, x, i);
      w.cost_y = cy[i];
      w.cost_reply = best;
      return w;
    }
  }
  return {};
}

inline constexpr int kMaxCoalitionSearchPlayers = 6;

// Grid search for a joint mixed deviation from x that strictly improves
// every deviator. Each player either keeps x_i or moves to a grid value
// k / resolution. Returns the deviation with the largest minimum gain.
inline std::optional<CoalitionDeviation> search_coalition_mixed_deviation(
    const Game& game, const MixedProfile& x, int grid_resolution,
    Tolerance tol = {}) {
  const int n = game.num_players();
  require_cap(n, kMaxCoalitionSearchPlayers);
  require_profile(game, x.size());
  if (grid_resolution < 1) throw BadParameters("grid resolution must be >= 1");
  if (!is_mixed_nash(game, x, tol)) {
    throw NotAnEquilibrium("coalition search needs a mixed Nash equilibrium");
  }
  std::vector<std::vector<double>> options(n);
  for (PlayerId i = 0; i < n; ++i) {
    options[i].push_back(x[i]);
    for (int k = 0; k <= grid_resolution; ++k) {
      const double v = static_cast<double>(k) / grid_resolution;
      if (v != x[i]) options[i].push_back(v);
    }
  }
  std::vector<double> base(n);
  for (PlayerId i = 0; i < n; ++i) base[i] = mixed_cost(game, x, i);

  std::optional<CoalitionDeviation> best;
  std::vector<std::size_t> choice(n, 0);
  std::vector<double> probs(n);
  while (true) {
    // Advance an odometer; index 0 everywhere is x itself.
    int pos = 0;
    while (pos < n && ++choice[pos] == options[pos].size()) choice[pos++] = 0;
    if (pos == n) break;
    Coalition deviators;
    for (PlayerId i = 0; i < n; ++i) {
      probs[i] = options[i][choice[i]];
      if (choice[i] != 0) deviators = deviators.with(i);
    }
    const MixedProfile y(probs);
    std::vector<double> gains;
    bool all_gain = true;
    for (PlayerId i : deviators.members()) {
      const double gain = base[i] - mixed_cost(game, y, i);
      if (gain <= tol.eps) {
        all_gain = false;
        break;
      }
      gains.push_back(gain);
    }
    if (!all_gain) continue;
    CoalitionDeviation d{deviators, y, std::move(gains)};
    if (!best || d.min_improvement() > best->min_improvement() + tol.eps) {
      best = std::move(d);
    }
  }
  return best;
}

struct Converged {
  PureProfile profile;
  int iterations = 0;
};

struct NonConvergence {
  // Profiles on the detected cycle, in visiting order; empty when the
  // iteration budget ran out without a repeat (random order).
  std::vector<PureProfile> cycle;
  int iterations = 0;
};

using DynamicsOutcome = std::variant<Converged, NonConvergence>;

struct FixedOrder {};
struct RandomOrder {
  std::uint64_t seed = 42;
};
using DynamicsOrder = std::variant<FixedOrder, RandomOrder>;

// Repeatedly flips one player whose current strategy is not a best response.
// Fixed order picks the lowest such index and detects cycles; random order
// picks uniformly and relies on max_iters.
inline DynamicsOutcome best_response_dynamics(const Game& game,
                                              const PureProfile& start,
                                              int max_iters,
                                              DynamicsOrder order = FixedOrder{},
                                              Tolerance tol = {}) {
  require_profile(game, start.size());
  const int n = game.num_players();
  const bool fixed = std::holds_alternative<FixedOrder>(order);
  std::mt19937_64 rng(fixed ? 0 : std::get<RandomOrder>(order).seed);
  std::unordered_map<Coalition::Mask, int> seen;
  std::vector<PureProfile> trail;
  PureProfile x = start;
  std::vector<PlayerId> unhappy;
  for (int iter = 0;; ++iter) {
    unhappy.clear();
    for (PlayerId i = 0; i < n; ++i) {
      if (!best_responses(game, x, i, tol).contains(x.strategy(i))) {
        unhappy.push_back(i);
        if (fixed) break;
      }
    }
    if (unhappy.empty()) return Converged{x, iter};
    if (fixed) {
      const auto [it, inserted] = seen.emplace(x.bitmask(), iter);
      if (!inserted) {
        return NonConvergence{
            std::vector<PureProfile>(trail.begin() + it->second, trail.end()),
            iter};
      }
      trail.push_back(x);
    }
    if (iter >= max_iters) return NonConvergence{{}, iter};
    PlayerId mover = unhappy.front();
    if (!fixed) {
      std::uniform_int_distribution<std::size_t> pick(0, unhappy.size() - 1);
      mover = unhappy[pick(rng)];
    }
    x = x.flipped(mover);
  }
}

struct MixedSearchOptions {
  // Grid points per coordinate; 0 picks by player count.
  int resolution = 0;
  // Lowest-regret grid points kept per support size for refinement.
  std::size_t candidates_per_support = 16;
  std::uint64_t max_points = 4'000'000;
  int newton_iterations = 60;
  int max_n = kMaxTabularPlayers;
};

namespace internal {

inline int default_grid_resolution(int n) {
  if (n <= 3) return 100;
  if (n == 4) return 20;
  if (n == 5) return 10;
  if (n <= 7) return 4;
  return 2;
}

inline double max_regret(const Game& game, const MixedProfile& x) {
  double worst = 0.0;
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    const double h = game.pay_cost(i);
    const double play = play_branch_cost(game, x, i);
    const double cost = x[i] * h + (1.0 - x[i]) * play;
    worst = std::max(worst, cost - std::min(h, play));
    if (x[i] > 0.0 && x[i] < 1.0) worst = std::max(worst, std::fabs(h - play));
  }
  return worst;
}

// Solves a small dense system in place; false when singular.
inline bool solve_linear(std::vector<std::vector<double>>& a,
                         std::vector<double>& b) {
  const std::size_t k = b.size();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < k; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    }
    if (std::fabs(a[pivot][col]) < 1e-14) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < k; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t r = 0; r < k; ++r) b[r] /= a[r][r];
  return true;
}

// Newton iteration on the indifference conditions of the interior players.
// play_branch_cost is affine in each other player's probability, so the
// Jacobian entries are exact differences of two evaluations.
inline MixedProfile refine_indifference(const Game& game, MixedProfile x,
                                        const std::vector<PlayerId>& interior,
                                        int iterations, Tolerance tol) {
  const std::size_t k = interior.size();
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> residual(k);
    double worst = 0.0;
    for (std::size_t r = 0; r < k; ++r) {
      residual[r] = play_branch_cost(game, x, interior[r]) -
                    game.pay_cost(interior[r]);
      worst = std::max(worst, std::fabs(residual[r]));
    }
    if (worst <= 0.01 * tol.eps) break;
    std::vector<std::vector<double>> jac(k, std::vector<double>(k, 0.0));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) {
        if (r == c) continue;
        const PlayerId j = interior[c];
        jac[r][c] = play_branch_cost(game, x.with(j, 1.0), interior[r]) -
                    play_branch_cost(game, x.with(j, 0.0), interior[r]);
      }
    }
    if (!solve_linear(jac, residual)) break;
    for (std::size_t c = 0; c < k; ++c) {
      const double next = std::clamp(x[interior[c]] - residual[c], 0.0, 1.0);
      x = x.with(interior[c], next);
    }
  }
  return x;
}

}  // namespace internal

// Finds some mixed equilibrium: pure equilibria first, then the symmetric
// closed form when it applies, then a grid over supports of increasing size
// whose best points are polished by Newton steps on the indifference
// equations. Every returned profile passes is_mixed_nash.
inline std::optional<MixedProfile> find_mixed_nash(
    const Game& game, Tolerance tol = {}, const MixedSearchOptions& opts = {}) {
  const int n = game.num_players();
  require_cap(n, opts.max_n);
  const EquilibriumSet pure = enumerate_pure_nash(game, tol, opts.max_n);
  if (!pure.empty()) return MixedProfile(pure.pure_equilibria.front());

  bool symmetric_anonymous = check_symmetric(game, tol);
  for (PlayerId i = 0; i < n && symmetric_anonymous; ++i) {
    symmetric_anonymous = check_anonymous(game, i, tol);
  }
  if (symmetric_anonymous) {
    auto sym = symmetric_mixed_nash(game, tol);
    if (auto* x = std::get_if<MixedProfile>(&sym); x && is_mixed_nash(game, *x, tol)) {
      return *x;
    }
  }

  const int res = opts.resolution > 0 ? opts.resolution
                                      : internal::default_grid_resolution(n);
  std::uint64_t budget = opts.max_points;
  std::vector<double> probs(n);
  for (int k = 1; k <= n && budget > 0 && res >= 2; ++k) {
    // (regret, profile) candidates with the smallest regret for this k.
    std::vector<std::pair<double, MixedProfile>> pool;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (budget > 0) {
      Coalition interior;
      for (int p : pick) interior = interior.with(p);
      const std::vector<PlayerId> outside = interior.complement(n).members();
      const std::uint64_t pure_count = std::uint64_t{1} << outside.size();
      for (std::uint64_t pm = 0; pm < pure_count && budget > 0; ++pm) {
        for (std::size_t o = 0; o < outside.size(); ++o) {
          probs[outside[o]] = ((pm >> o) & 1U) ? 1.0 : 0.0;
        }
        std::vector<int> level(k, 1);
        while (budget > 0) {
          for (int r = 0; r < k; ++r) {
            probs[pick[r]] = static_cast<double>(level[r]) / res;
          }
          --budget;
          const MixedProfile x(probs);
          const double regret = internal::max_regret(game, x);
          if (regret <= tol.eps && is_mixed_nash(game, x, tol)) return x;
          if (pool.size() < opts.candidates_per_support ||
              regret < pool.back().first) {
            auto at = std::upper_bound(
                pool.begin(), pool.end(), regret,
                [](double v, const auto& e) { return v < e.first; });
            pool.insert(at, {regret, x});
            if (pool.size() > opts.candidates_per_support) pool.pop_back();
          }
          int r = 0;
          while (r < k && ++level[r] == res) level[r++] = 1;
          if (r == k) break;
        }
      }
      // Next k-combination of players.
      int r = k - 1;
      while (r >= 0 && pick[r] == n - k + r) --r;
      if (r < 0) break;
      ++pick[r];
      for (int s = r + 1; s < k; ++s) pick[s] = pick[s - 1] + 1;
    }
    for (const auto& [regret, seed] : pool) {
      std::vector<PlayerId> interior;
      for (PlayerId i = 0; i < n; ++i) {
        if (seed[i] > 0.0 && seed[i] < 1.0) interior.push_back(i);
      }
      const MixedProfile refined = internal::refine_indifference(
          game, seed, interior, opts.newton_iterations, tol);
      if (is_mixed_nash(game, refined, tol)) return refined;
    }
  }
  return std::nullopt;
}

}  // namespace payplay

#endif  // PAYPLAY_EQUILIBRIUM_HPP_
