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

// Pay-or-play games. Every player either pays a fixed cost h_i or plays and
// is charged g_i(A), where A is the set of players who play (i included).

#ifndef PAYPLAY_GAME_HPP_
#define PAYPLAY_GAME_HPP_

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "payplay/errors.hpp"
#include "payplay/profile.hpp"

namespace payplay {

// Index of coalition `s` (which contains `owner`) inside a dense table of the
// 2^(n-1) sets that contain the owner: the owner bit is squeezed out.
inline std::size_t owner_table_index(Coalition s, PlayerId owner) {
  const Coalition::Mask bits = s.mask();
  const Coalition::Mask low = bits & ((Coalition::Mask{1} << owner) - 1);
  const Coalition::Mask high = bits >> (owner + 1);
  return low | (high << owner);
}

// Inverse of owner_table_index.
inline Coalition owner_table_coalition(std::size_t index, PlayerId owner) {
  const auto idx = static_cast<Coalition::Mask>(index);
  const Coalition::Mask low = idx & ((Coalition::Mask{1} << owner) - 1);
  const Coalition::Mask high = (idx >> owner) << (owner + 1);
  return Coalition(low | high | (Coalition::Mask{1} << owner));
}

struct CostEntry {
  Coalition set;
  double cost = 0.0;
};

// g_i given by an explicit value for every coalition containing i.
class TabularCost {
 public:
  TabularCost() = default;

  // Rejects entries that omit the owner, duplicates, negative or non-finite
  // costs, and incomplete tables.
  static TabularCost from_entries(PlayerId owner, int n,
                                  std::span<const CostEntry> entries) {
    if (n > kMaxTabularPlayers) throw CapExceeded(n, kMaxTabularPlayers);
    const std::size_t size = std::size_t{1} << (n - 1);
    std::vector<double> values(size, std::numeric_limits<double>::quiet_NaN());
    for (const CostEntry& e : entries) {
      if (!e.set.contains(owner)) {
        throw InvalidGame("table entry " + e.set.to_string() +
                          " does not contain its owner " +
                          std::to_string(owner));
      }
      if (!e.set.subset_of(Coalition::all(n))) {
        throw InvalidGame("table entry " + e.set.to_string() +
                          " names a player outside the game");
      }
      if (!std::isfinite(e.cost) || e.cost < 0.0) {
        throw InvalidGame("table entry " + e.set.to_string() +
                          " has a negative or non-finite cost");
      }
      double& slot = values[owner_table_index(e.set, owner)];
      if (!std::isnan(slot)) {
        throw InvalidGame("duplicate table entry " + e.set.to_string());
      }
      slot = e.cost;
    }
    for (std::size_t k = 0; k < size; ++k) {
      if (std::isnan(values[k])) {
        throw MissingTableEntry("player " + std::to_string(owner) +
                                " has no cost for coalition " +
                                owner_table_coalition(k, owner).to_string());
      }
    }
    TabularCost t;
    t.values_ = std::move(values);
    return t;
  }

  // Builds the table by evaluating `fn` on every coalition containing owner.
  template <typename Fn>
  static TabularCost from_function(PlayerId owner, int n, Fn&& fn) {
    if (n > kMaxTabularPlayers) throw CapExceeded(n, kMaxTabularPlayers);
    std::vector<CostEntry> entries;
    entries.reserve(std::size_t{1} << (n - 1));
    for (std::size_t k = 0; k < (std::size_t{1} << (n - 1)); ++k) {
      const Coalition s = owner_table_coalition(k, owner);
      entries.push_back({s, fn(s)});
    }
    return from_entries(owner, n, entries);
  }

  double at(Coalition s, PlayerId owner) const {
    return values_[owner_table_index(s, owner)];
  }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> values_;
};

// g_i(S) = by_count[|S| - 1].
struct AnonymousCost {
  std::vector<double> by_count;
};

// One set function g(S) over all nonempty S, referenced by several players.
class SharedTable {
 public:
  SharedTable(std::string name, int n, std::span<const CostEntry> entries)
      : name_(std::move(name)), n_(n) {
    if (n > kMaxTabularPlayers) throw CapExceeded(n, kMaxTabularPlayers);
    values_.assign(std::size_t{1} << n,
                   std::numeric_limits<double>::quiet_NaN());
    for (const CostEntry& e : entries) {
      if (e.set.empty() || !e.set.subset_of(Coalition::all(n))) {
        throw InvalidGame("shared table '" + name_ + "' has invalid set " +
                          e.set.to_string());
      }
      if (!std::isfinite(e.cost) || e.cost < 0.0) {
        throw InvalidGame("shared table '" + name_ + "' entry " +
                          e.set.to_string() +
                          " has a negative or non-finite cost");
      }
      double& slot = values_[e.set.mask()];
      if (!std::isnan(slot)) {
        throw InvalidGame("shared table '" + name_ + "' duplicates " +
                          e.set.to_string());
      }
      slot = e.cost;
    }
  }

  template <typename Fn>
  static std::shared_ptr<const SharedTable> from_function(std::string name,
                                                          int n, Fn&& fn) {
    std::vector<CostEntry> entries;
    for (Coalition::Mask m = 1; m < (Coalition::Mask{1} << n); ++m) {
      entries.push_back({Coalition(m), fn(Coalition(m))});
    }
    return std::make_shared<const SharedTable>(std::move(name), n, entries);
  }

  const std::string& name() const { return name_; }
  int num_players() const { return n_; }
  bool has(Coalition s) const { return !std::isnan(values_[s.mask()]); }
  double at(Coalition s) const { return values_[s.mask()]; }

 private:
  std::string name_;
  int n_ = 0;
  std::vector<double> values_;
};

struct SharedTabularCost {
  std::shared_ptr<const SharedTable> table;
};

// Cost supplied by another component (vaccination, pricing, reductions).
struct DerivedCost {
  std::string name;
  std::function<double(Coalition)> fn;
};

using CostModel =
    std::variant<TabularCost, AnonymousCost, SharedTabularCost, DerivedCost>;

struct PlayerSpec {
  double pay_cost = 0.0;  // h_i
  CostModel play_cost;    // g_i
};

// Immutable after construction.
class Game {
 public:
  Game() = default;
  explicit Game(std::vector<PlayerSpec> players, std::string label = {})
      : players_(std::move(players)), label_(std::move(label)) {
    validate();
  }

  int num_players() const { return static_cast<int>(players_.size()); }
  const std::string& label() const { return label_; }
  const PlayerSpec& player(PlayerId i) const { return players_[i]; }
  std::span<const PlayerSpec> players() const { return players_; }

  double pay_cost(PlayerId i) const { return players_[i].pay_cost; }

  // g_i(s); `s` must contain i.
  double play_cost(PlayerId i, Coalition s) const {
    const CostModel& model = players_[i].play_cost;
    switch (model.index()) {
      case 0:
        return std::get<TabularCost>(model).at(s, i);
      case 1:
        return std::get<AnonymousCost>(model).by_count[s.size() - 1];
      case 2:
        return std::get<SharedTabularCost>(model).table->at(s);
      default:
        return std::get<DerivedCost>(model).fn(s);
    }
  }

  bool all_anonymous() const {
    for (const PlayerSpec& p : players_) {
      if (!std::holds_alternative<AnonymousCost>(p.play_cost)) return false;
    }
    return true;
  }

  // Default enumeration cap: anonymous games are cheap to evaluate, explicit
  // tables are bounded by their storage.
  int default_cap() const {
    return all_anonymous() ? kMaxPlayers : kMaxTabularPlayers;
  }

 private:
  void validate() const {
    const int n = num_players();
    if (n < 1 || n > kMaxPlayers) {
      throw InvalidGame("player count must be in [1, " +
                        std::to_string(kMaxPlayers) + "], got " +
                        std::to_string(n));
    }
    for (PlayerId i = 0; i < n; ++i) {
      const PlayerSpec& p = players_[i];
      const std::string who = "player " + std::to_string(i);
      if (!std::isfinite(p.pay_cost) || p.pay_cost < 0.0) {
        throw InvalidGame(who + " pay cost must be finite and nonnegative");
      }
      if (const auto* t = std::get_if<TabularCost>(&p.play_cost)) {
        if (n > kMaxTabularPlayers) throw CapExceeded(n, kMaxTabularPlayers);
        if (t->size() != (std::size_t{1} << (n - 1))) {
          throw MissingTableEntry(who + " table size does not match n");
        }
      } else if (const auto* a = std::get_if<AnonymousCost>(&p.play_cost)) {
        if (static_cast<int>(a->by_count.size()) != n) {
          throw InvalidGame(who + " anonymous cost needs exactly n entries");
        }
        for (double w : a->by_count) {
          if (!std::isfinite(w) || w < 0.0) {
            throw InvalidGame(who + " anonymous cost must be finite and "
                                    "nonnegative");
          }
        }
      } else if (const auto* sh = std::get_if<SharedTabularCost>(&p.play_cost)) {
        if (!sh->table || sh->table->num_players() != n) {
          throw InvalidGame(who + " shared table missing or sized for a "
                                  "different game");
        }
        for (std::size_t k = 0; k < (std::size_t{1} << (n - 1)); ++k) {
          const Coalition s = owner_table_coalition(k, i);
          if (!sh->table->has(s)) {
            throw MissingTableEntry(who + " shared table '" +
                                    sh->table->name() + "' lacks " +
                                    s.to_string());
          }
        }
      } else {
        const auto& d = std::get<DerivedCost>(p.play_cost);
        if (!d.fn) throw InvalidGame(who + " derived cost has no oracle");
        if (n <= kMaxTabularPlayers) {
          for (std::size_t k = 0; k < (std::size_t{1} << (n - 1)); ++k) {
            const double v = d.fn(owner_table_coalition(k, i));
            if (!std::isfinite(v) || v < 0.0) {
              throw InvalidGame(who + " derived cost '" + d.name +
                                "' yields a negative or non-finite value");
            }
          }
        }
      }
    }
  }

  std::vector<PlayerSpec> players_;
  std::string label_;
};

inline void require_profile(const Game& game, int size) {
  if (size != game.num_players()) {
    throw InvalidGame("profile length " + std::to_string(size) +
                      " does not match player count " +
                      std::to_string(game.num_players()));
  }
}

// c_i(x) for a pure profile.
inline double pure_cost(const Game& game, const PureProfile& profile,
                        PlayerId i) {
  require_profile(game, profile.size());
  if (profile.pays(i)) return game.pay_cost(i);
  return game.play_cost(i, profile.play_set());
}

inline double social_cost(const Game& game, const PureProfile& profile) {
  require_profile(game, profile.size());
  double total = 0.0;
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    total += pure_cost(game, profile, i);
  }
  return total;
}

// Expected g_i(A ∪ {i}) when every other player j independently pays with
// probability x_j. Branches of zero probability are skipped.
inline double play_branch_cost(const Game& game, const MixedProfile& x,
                               PlayerId i) {
  require_profile(game, x.size());
  const int n = game.num_players();
  double total = 0.0;
  // Depth-first over the other players in ascending order.
  auto walk = [&](auto&& self, PlayerId j, Coalition playing,
                  double weight) -> void {
    if (j == n) {
      total += weight * game.play_cost(i, playing);
      return;
    }
    if (j == i) {
      self(self, j + 1, playing, weight);
      return;
    }
    const double pay = x[j];
    if (pay < 1.0) self(self, j + 1, playing.with(j), weight * (1.0 - pay));
    if (pay > 0.0) self(self, j + 1, playing, weight * pay);
  };
  walk(walk, 0, Coalition::single(i), 1.0);
  return total;
}

// c_i(x) for a mixed profile: x_i h_i + (1 - x_i) E[g_i(A ∪ {i})] under the
// product distribution of the other players' choices.
inline double mixed_cost(const Game& game, const MixedProfile& x, PlayerId i) {
  const double p = x[i];
  const double play = p < 1.0 ? play_branch_cost(game, x, i) : 0.0;
  return p * game.pay_cost(i) + (1.0 - p) * play;
}

}  // namespace payplay

#endif  // PAYPLAY_GAME_HPP_
