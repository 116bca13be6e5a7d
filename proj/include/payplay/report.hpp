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

// Analysis report: structure flags, pure equilibria, efficiency ratios and
// Pareto verdicts for one game, with a lossless JSON form.

#ifndef PAYPLAY_REPORT_HPP_
#define PAYPLAY_REPORT_HPP_

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "payplay/efficiency.hpp"
#include "payplay/equilibrium.hpp"
#include "payplay/game.hpp"
#include "payplay/io.hpp"
#include "payplay/structure.hpp"

namespace payplay {

struct StructuralFlags {
  bool monotone = true;
  bool monotone_exhaustive = true;
  bool symmetric = false;
  bool anonymous = false;   // every player
  bool submodular = false;  // every player
  bool generic = false;
  friend bool operator==(const StructuralFlags&, const StructuralFlags&) = default;
};

struct AnalysisReport {
  std::string game_label;
  int num_players = 0;
  StructuralFlags structure;
  EquilibriumSet equilibria;
  EfficiencyRatios efficiency;
  std::vector<ParetoVerdict> pareto_verdicts;  // one per listed equilibrium
  std::vector<std::string> notes;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
  Tolerance tol;
  int max_n = kMaxTabularPlayers;
  std::uint64_t seed = 42;
};

namespace internal {

inline std::optional<double> rounded(std::optional<double> v) {
  if (v) return round_significant(*v);
  return v;
}

}  // namespace internal

// Rounds every real in the report the way the JSON writer does, so that
// reading a written report gives back an equal value.
inline void canonicalize(AnalysisReport& r) {
  EfficiencyRatios& e = r.efficiency;
  e.optimum_cost = round_significant(e.optimum_cost);
  e.worst_ne_cost = internal::rounded(e.worst_ne_cost);
  e.best_ne_cost = internal::rounded(e.best_ne_cost);
  e.poa = internal::rounded(e.poa);
  e.pos = internal::rounded(e.pos);
  for (ParetoVerdict& v : r.pareto_verdicts) {
    if (!v.witness) continue;
    for (double& d : v.witness->cost_deltas) d = round_significant(d);
  }
}

inline AnalysisReport analyze_game(const Game& game,
                                   const AnalyzeOptions& opts = {}) {
  const int n = game.num_players();
  require_cap(n, opts.max_n);
  AnalysisReport r;
  r.game_label = game.label();
  r.num_players = n;

  MonotoneCheckOptions mono_opts;
  mono_opts.seed = opts.seed;
  const MonotonicityReport mono = check_monotone(game, opts.tol, mono_opts);
  r.structure.monotone = mono.monotone();
  r.structure.monotone_exhaustive = mono.exhaustive;
  r.structure.symmetric = check_symmetric(game, opts.tol);
  r.structure.anonymous = true;
  r.structure.submodular = true;
  for (PlayerId i = 0; i < n; ++i) {
    r.structure.anonymous = r.structure.anonymous && check_anonymous(game, i, opts.tol);
    r.structure.submodular =
        r.structure.submodular && check_submodular(game, i, opts.tol);
  }
  r.structure.generic = check_generic(game, opts.tol);
  if (!mono.monotone()) {
    const MonotonicityViolation& v = mono.violations.front();
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "play cost of player %d decreases from %s to %s", v.player,
                  v.smaller.to_string().c_str(), v.larger.to_string().c_str());
    r.notes.push_back(buf);
  }
  if (!mono.exhaustive) {
    r.notes.push_back("monotonicity sampled, not proved");
  }

  r.equilibria = enumerate_pure_nash(game, opts.tol, opts.max_n);
  if (r.equilibria.empty()) r.notes.push_back("no pure Nash equilibrium");
  r.efficiency = efficiency_ratios(game, r.equilibria, opts.tol, opts.max_n);
  if (r.efficiency.zero_optimum) {
    r.notes.push_back("optimum cost is zero; ratios undefined");
  }
  for (const PureProfile& x : r.equilibria.pure_equilibria) {
    r.pareto_verdicts.push_back(
        is_pareto_efficient_pure(game, x, opts.tol, opts.max_n));
  }
  canonicalize(r);
  return r;
}

namespace internal {

inline Json optional_number(const std::optional<double>& v) {
  return v ? json_number(*v) : Json(nullptr);
}

inline std::optional<double> read_optional(const Json& v) {
  if (v.is_null()) return std::nullopt;
  return v.get<double>();
}

}  // namespace internal

inline Json report_to_json(const AnalysisReport& r) {
  Json eq = Json::array();
  for (const PureProfile& x : r.equilibria.pure_equilibria) eq.push_back(x.to_string());
  Json pareto = Json::array();
  for (std::size_t k = 0; k < r.pareto_verdicts.size(); ++k) {
    const ParetoVerdict& v = r.pareto_verdicts[k];
    Json entry = {{"profile", r.equilibria.pure_equilibria[k].to_string()},
                  {"efficient", v.efficient},
                  {"witness", nullptr}};
    if (v.witness) {
      entry["witness"] = {{"profile", v.witness->profile.to_string()},
                          {"cost_deltas", json_numbers(v.witness->cost_deltas)},
                          {"strictly_improved", v.witness->strictly_improved}};
    }
    pareto.push_back(std::move(entry));
  }
  const EfficiencyRatios& e = r.efficiency;
  return {
      {"game_label", r.game_label},
      {"n", r.num_players},
      {"structure",
       {{"monotone", r.structure.monotone},
        {"monotone_exhaustive", r.structure.monotone_exhaustive},
        {"symmetric", r.structure.symmetric},
        {"anonymous", r.structure.anonymous},
        {"submodular", r.structure.submodular},
        {"generic", r.structure.generic}}},
      {"equilibria", {{"exhaustive", r.equilibria.exhaustive}, {"pure", eq}}},
      {"efficiency",
       {{"optimum_profile", e.optimum_profile.to_string()},
        {"optimum_cost", json_number(e.optimum_cost)},
        {"worst_ne_cost", internal::optional_number(e.worst_ne_cost)},
        {"best_ne_cost", internal::optional_number(e.best_ne_cost)},
        {"poa", internal::optional_number(e.poa)},
        {"pos", internal::optional_number(e.pos)},
        {"zero_optimum", e.zero_optimum}}},
      {"pareto", pareto},
      {"notes", r.notes},
  };
}

inline AnalysisReport report_from_json(const Json& j) {
  AnalysisReport r;
  r.game_label = j.at("game_label").get<std::string>();
  r.num_players = j.at("n").get<int>();
  const Json& s = j.at("structure");
  r.structure.monotone = s.at("monotone").get<bool>();
  r.structure.monotone_exhaustive = s.at("monotone_exhaustive").get<bool>();
  r.structure.symmetric = s.at("symmetric").get<bool>();
  r.structure.anonymous = s.at("anonymous").get<bool>();
  r.structure.submodular = s.at("submodular").get<bool>();
  r.structure.generic = s.at("generic").get<bool>();
  r.equilibria.exhaustive = j.at("equilibria").at("exhaustive").get<bool>();
  for (const Json& x : j.at("equilibria").at("pure")) {
    r.equilibria.pure_equilibria.push_back(parse_profile(x.get<std::string>()));
  }
  const Json& e = j.at("efficiency");
  r.efficiency.optimum_profile =
      parse_profile(e.at("optimum_profile").get<std::string>());
  r.efficiency.optimum_cost = e.at("optimum_cost").get<double>();
  r.efficiency.worst_ne_cost = internal::read_optional(e.at("worst_ne_cost"));
  r.efficiency.best_ne_cost = internal::read_optional(e.at("best_ne_cost"));
  r.efficiency.poa = internal::read_optional(e.at("poa"));
  r.efficiency.pos = internal::read_optional(e.at("pos"));
  r.efficiency.zero_optimum = e.at("zero_optimum").get<bool>();
  for (const Json& p : j.at("pareto")) {
    ParetoVerdict v;
    v.efficient = p.at("efficient").get<bool>();
    if (!p.at("witness").is_null()) {
      const Json& w = p.at("witness");
      v.witness = ParetoWitness{parse_profile(w.at("profile").get<std::string>()),
                                w.at("cost_deltas").get<std::vector<double>>(),
                                w.at("strictly_improved").get<int>()};
    }
    r.pareto_verdicts.push_back(std::move(v));
  }
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

namespace internal {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

inline std::string fmt(const std::optional<double>& v) {
  return v ? fmt(*v) : std::string("-");
}

}  // namespace internal

// Human-readable summary ('P' = pay, '-' = play).
inline std::string report_table(const AnalysisReport& r) {
  std::ostringstream out;
  const auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "game        " << r.game_label << " (n=" << r.num_players << ")\n";
  out << "monotone    " << yes(r.structure.monotone)
      << (r.structure.monotone_exhaustive ? "" : " (sampled)") << "\n";
  out << "symmetric   " << yes(r.structure.symmetric) << "\n";
  out << "anonymous   " << yes(r.structure.anonymous) << "\n";
  out << "submodular  " << yes(r.structure.submodular) << "\n";
  out << "generic     " << yes(r.structure.generic) << "\n";
  out << "optimum     " << r.efficiency.optimum_profile.to_string() << "  cost "
      << internal::fmt(r.efficiency.optimum_cost) << "\n";
  out << "pure NE     " << r.equilibria.pure_equilibria.size() << "\n";
  for (std::size_t k = 0; k < r.equilibria.pure_equilibria.size(); ++k) {
    out << "  " << r.equilibria.pure_equilibria[k].to_string() << "  pareto "
        << (r.pareto_verdicts[k].efficient ? "efficient" : "dominated") << "\n";
  }
  out << "PoA         " << internal::fmt(r.efficiency.poa) << "\n";
  out << "PoS         " << internal::fmt(r.efficiency.pos) << "\n";
  for (const std::string& note : r.notes) out << "note        " << note << "\n";
  return out.str();
}

}  // namespace payplay

#endif  // PAYPLAY_REPORT_HPP_
