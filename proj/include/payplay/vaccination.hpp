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

// Network vaccination games. Each node either buys a vaccine at cost c
// (pay) or stays exposed (play). A uniformly random node is then infected
// and the infection floods its component of the attack graph, the graph
// induced on unvaccinated nodes. An exposed node in a component of size k
// therefore expects a loss of (k / n) * l.

#ifndef PAYPLAY_VACCINATION_HPP_
#define PAYPLAY_VACCINATION_HPP_

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "payplay/equilibrium.hpp"
#include "payplay/game.hpp"
#include "payplay/graph.hpp"
#include "payplay/profile.hpp"

namespace payplay {

class VaccinationGame {
 public:
  VaccinationGame(UndirectedGraph graph, double vaccine_cost, double loss)
      : graph_(std::move(graph)), c_(vaccine_cost), l_(loss) {
    if (!(c_ > 0.0) || !std::isfinite(c_)) {
      throw InvalidGame("vaccine cost must be positive and finite");
    }
    if (!(l_ > 0.0) || !std::isfinite(l_)) {
      throw InvalidGame("infection loss must be positive and finite");
    }
  }

  const UndirectedGraph& graph() const { return graph_; }
  int num_players() const { return graph_.num_vertices(); }
  double vaccine_cost() const { return c_; }
  double loss() const { return l_; }
  // Component-size threshold c * n / l.
  double alpha() const { return c_ * num_players() / l_; }
  // With c >= l nobody ever strictly prefers the vaccine.
  bool vaccine_never_preferred() const { return c_ >= l_; }

 private:
  UndirectedGraph graph_;
  double c_;
  double l_;
};

struct AttackComponents {
  std::vector<Coalition> components;  // ordered by smallest member
  std::vector<int> sizes;

  // Size of the component holding v, or 0 when v is vaccinated.
  int size_of(int v) const {
    for (std::size_t k = 0; k < components.size(); ++k) {
      if (components[k].contains(v)) return sizes[k];
    }
    return 0;
  }
};

inline AttackComponents attack_components(const UndirectedGraph& graph,
                                          const PureProfile& profile) {
  const int n = graph.num_vertices();
  if (profile.size() != n) {
    throw InvalidGame("profile length does not match vertex count");
  }
  const Coalition exposed = profile.play_set();
  UnionFind uf(n);
  for (const auto& [u, v] : graph.edges()) {
    if (exposed.contains(u) && exposed.contains(v)) uf.unite(u, v);
  }
  std::vector<int> slot(n, -1);
  AttackComponents out;
  for (int v : exposed.members()) {
    const int root = uf.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.components.size());
      out.components.emplace_back();
      out.sizes.push_back(0);
    }
    out.components[slot[root]] = out.components[slot[root]].with(v);
    ++out.sizes[slot[root]];
  }
  return out;
}

// The vaccination game as a pay-or-play game: h_i = c and
// g_i(S) = |component of i in G[S]| * l / n.
inline Game as_game(const VaccinationGame& vg, int max_n = kMaxPlayers) {
  const int n = vg.num_players();
  require_cap(n, max_n);
  auto graph = std::make_shared<const UndirectedGraph>(vg.graph());
  const double unit = vg.loss() / n;
  std::vector<PlayerSpec> players;
  players.reserve(n);
  for (PlayerId i = 0; i < n; ++i) {
    DerivedCost cost{"attack-component",
                     [graph, unit, i](Coalition s) {
                       return graph->component_within(i, s).size() * unit;
                     }};
    players.push_back({vg.vaccine_cost(), std::move(cost)});
  }
  return Game(std::move(players),
              "vaccination(n=" + std::to_string(n) + ")");
}

struct CharacterizationResult {
  // Every attack component has size <= alpha.
  bool components_small = true;
  // Every vaccinated node would land in a component of size >= alpha if it
  // dropped its vaccine.
  bool vaccinated_justified = true;
  bool equilibrium() const { return components_small && vaccinated_justified; }
};

// Threshold description of the pure equilibria. Ties count as equilibria.
inline CharacterizationResult check_equilibrium_characterization(
    const VaccinationGame& vg, const PureProfile& profile, Tolerance tol = {}) {
  const double alpha = vg.alpha();
  const UndirectedGraph& g = vg.graph();
  CharacterizationResult r;
  for (int size : attack_components(g, profile).sizes) {
    if (tol.greater(size, alpha)) r.components_small = false;
  }
  const Coalition exposed = profile.play_set();
  for (int v : profile.pay_set().members()) {
    const int joined = g.component_within(v, exposed.with(v)).size();
    if (tol.less(joined, alpha)) r.vaccinated_justified = false;
  }
  return r;
}

// Best-response dynamics from the all-vaccinated profile, lowest index
// first; falls back to seeded random order if the fixed order cycles.
inline DynamicsOutcome find_equilibrium(const VaccinationGame& vg,
                                        int max_iters, std::uint64_t seed = 42,
                                        Tolerance tol = {}) {
  const Game game = as_game(vg);
  const PureProfile start = PureProfile::all_pay(vg.num_players());
  DynamicsOutcome out =
      best_response_dynamics(game, start, max_iters, FixedOrder{}, tol);
  if (std::holds_alternative<Converged>(out)) return out;
  return best_response_dynamics(game, start, max_iters, RandomOrder{seed}, tol);
}

struct RepairResult {
  PureProfile profile;
  int iterations = 0;
};

namespace internal {

inline std::vector<Coalition> tight_components(const VaccinationGame& vg,
                                               const PureProfile& x,
                                               Tolerance tol) {
  const AttackComponents comps = attack_components(vg.graph(), x);
  std::vector<Coalition> tight;
  for (std::size_t k = 0; k < comps.components.size(); ++k) {
    if (tol.equal(comps.sizes[k], vg.alpha())) tight.push_back(comps.components[k]);
  }
  return tight;
}

}  // namespace internal

// Turns an equilibrium into one where every exposed node is strictly better
// off than vaccinating, so no player is indifferent and the result is Pareto
// efficient with respect to pure deviations.
//
// Each round takes the first component whose size equals alpha and
// vaccinates one vertex v whose removal keeps it connected: the lowest
// non-cut vertex if the component has a cycle, otherwise its lowest leaf.
// Vaccinated neighbours of v that would now sit in a component smaller than
// alpha are then unvaccinated, in ascending order. Every round must keep the
// equilibrium and remove exactly one tight component.
inline RepairResult pareto_repair(const VaccinationGame& vg, PureProfile x,
                                  Tolerance tol = {}) {
  if (!check_equilibrium_characterization(vg, x, tol).equilibrium()) {
    throw NotAnEquilibrium("repair needs a vaccination equilibrium");
  }
  const UndirectedGraph& g = vg.graph();
  const double alpha = vg.alpha();
  std::vector<Coalition> tight = internal::tight_components(vg, x, tol);
  int rounds = 0;
  while (!tight.empty()) {
    const Coalition comp = tight.front();
    int pick = -1;
    if (g.edges_within(comp) >= comp.size()) {
      const Coalition safe(comp.mask() & ~articulation_points(g, comp).mask());
      pick = safe.members().front();
    } else {
      for (int v : comp.members()) {
        if ((g.neighbors(v) & comp).size() <= 1) {
          pick = v;
          break;
        }
      }
    }
    PureProfile next = x.with(pick, Strategy::kPay);
    for (int j : (g.neighbors(pick) & x.pay_set()).members()) {
      const Coalition joined =
          g.component_within(j, next.play_set().with(j));
      if (tol.less(joined.size(), alpha)) next = next.with(j, Strategy::kPlay);
    }
    ++rounds;
    std::vector<Coalition> next_tight = internal::tight_components(vg, next, tol);
    if (!check_equilibrium_characterization(vg, next, tol).equilibrium()) {
      throw RepairStalled("round " + std::to_string(rounds) + " left the "
                          "equilibrium set at profile " + next.to_string());
    }
    if (next_tight.size() >= tight.size()) {
      throw RepairStalled("round " + std::to_string(rounds) +
                          " did not reduce tight components at profile " +
                          next.to_string());
    }
    x = next;
    tight = std::move(next_tight);
  }
  return {x, rounds};
}

// One infection event: a uniformly random node is hit and the infection
// spreads round by round to unvaccinated neighbours.
template <typename Rng>
Coalition simulate_infection(const UndirectedGraph& graph,
                             const PureProfile& profile, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, graph.num_vertices() - 1);
  const int seed = pick(rng);
  if (profile.pays(seed)) return {};
  const Coalition exposed = profile.play_set();
  Coalition infected = Coalition::single(seed);
  Coalition frontier = infected;
  while (!frontier.empty()) {
    Coalition next;
    for (int v : frontier.members()) next = next | graph.neighbors(v);
    next = Coalition(next.mask() & exposed.mask() & ~infected.mask());
    infected = infected | next;
    frontier = next;
  }
  return infected;
}

}  // namespace payplay

#endif  // PAYPLAY_VACCINATION_HPP_
