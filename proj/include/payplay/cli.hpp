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

// Command-line front end. run_cli is the whole program; tools/payplay.cpp
// only forwards argv and the standard streams.
//
// Exit codes: 0 success (including "no pure equilibrium"), 2 bad input or
// parameters, 3 player cap exceeded.

#ifndef PAYPLAY_CLI_HPP_
#define PAYPLAY_CLI_HPP_

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "payplay/cnf.hpp"
#include "payplay/efficiency.hpp"
#include "payplay/equilibrium.hpp"
#include "payplay/gadgets.hpp"
#include "payplay/io.hpp"
#include "payplay/report.hpp"
#include "payplay/vaccination.hpp"

namespace payplay {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitCapExceeded = 3;

struct GlobalFlags {
  std::string out_path;
  bool pretty = false;
  std::uint64_t seed = 42;
  int max_n = 0;  // 0: PAYPLAY_MAX_N, else the game's default cap
  double eps = 1e-9;
};

inline const std::vector<std::string>& gadget_names() {
  static const std::vector<std::string> names = {
      "triangle", "indifference", "two-player", "pos-player-specific",
      "pos-submodular", "pricing", "disjointness"};
  return names;
}

struct GadgetParams {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<double> loss;
  std::optional<double> epsilon;
  std::vector<int> a1;
  std::vector<int> a2;
};

// Unset parameters fall back to the standard instance of each family.
inline Game make_gadget(const std::string& name, const GadgetParams& g) {
  if (name == "triangle") return triangle_gadget();
  if (name == "indifference") return indifference_gadget();
  if (name == "two-player") return two_player_example(g.epsilon.value_or(0.1));
  if (name == "pos-player-specific") {
    return pos_player_specific(g.n.value_or(4), g.epsilon.value_or(0.01));
  }
  if (name == "pos-submodular") {
    return pos_submodular(g.n.value_or(4), g.epsilon.value_or(0.01));
  }
  if (name == "pricing") {
    const double p = g.p.value_or(10.0);
    return pricing_game(g.n.value_or(4), g.k.value_or(2), p, g.q.value_or(4.0),
                        g.loss.value_or(p));
  }
  if (name == "disjointness") {
    DisjointnessInstance inst;
    inst.k = g.k.value_or(1);
    inst.a1 = g.a1;
    inst.a2 = g.a2;
    return disjointness_to_game(inst);
  }
  std::string list;
  for (const std::string& s : gadget_names()) list += (list.empty() ? "" : ", ") + s;
  throw BadParameters("unknown gadget '" + name + "'; valid names: " + list);
}

namespace internal {

inline int env_max_n() {
  const char* v = std::getenv("PAYPLAY_MAX_N");
  if (v == nullptr || *v == '\0') return 0;
  char* end = nullptr;
  const long x = std::strtol(v, &end, 10);
  if (*end != '\0' || x < 1) {
    throw BadParameters(std::string("PAYPLAY_MAX_N must be a positive integer, got '") +
                        v + "'");
  }
  return static_cast<int>(x);
}

inline int resolve_cap(const GlobalFlags& flags, int fallback) {
  if (flags.max_n > 0) return flags.max_n;
  if (const int env = env_max_n(); env > 0) return env;
  return fallback;
}

// JSON goes to --out when given, else to `out`.
inline void emit(const GlobalFlags& flags, const std::string& text,
                 std::ostream& out) {
  if (flags.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(flags.out_path, std::ios::binary);
  if (!file) throw Error("cannot write '" + flags.out_path + "'");
  file << text;
}

inline std::vector<int> component_sizes(const UndirectedGraph& g,
                                        const PureProfile& x) {
  return attack_components(g, x).sizes;
}

}  // namespace internal

inline int cmd_analyze(const std::string& path, const GlobalFlags& flags,
                       std::ostream& out) {
  const Game game = load_game(path);
  AnalyzeOptions opts;
  opts.tol = Tolerance(flags.eps);
  opts.max_n = internal::resolve_cap(flags, game.default_cap());
  opts.seed = flags.seed;
  const AnalysisReport report = analyze_game(game, opts);
  if (flags.pretty) {
    out << report_table(report);
    if (!flags.out_path.empty()) {
      internal::emit(flags, dump_json(report_to_json(report)), out);
    }
    return kExitOk;
  }
  internal::emit(flags, dump_json(report_to_json(report)), out);
  return kExitOk;
}

inline int cmd_vaccinate(const std::string& path, double c, double l,
                         const GlobalFlags& flags, std::ostream& out) {
  const VaccinationGame vg(load_graph(path), c, l);
  const int n = vg.num_players();
  const Tolerance tol(flags.eps);
  require_cap(n, internal::resolve_cap(flags, kMaxTabularPlayers));
  const UndirectedGraph& g = vg.graph();

  Json report = {{"n", n},
                 {"c", json_number(c)},
                 {"l", json_number(l)},
                 {"alpha", json_number(vg.alpha())},
                 {"vaccine_never_preferred", vg.vaccine_never_preferred()},
                 {"equilibrium", nullptr},
                 {"repaired", nullptr}};
  Json notes = Json::array();
  if (vg.vaccine_never_preferred()) {
    notes.push_back("vaccine cost is at least the loss; nobody strictly prefers it");
  }
  const DynamicsOutcome dyn = find_equilibrium(vg, 100000, flags.seed, tol);
  std::string table;
  table += "alpha       " + internal::fmt(vg.alpha()) + "\n";
  if (const auto* conv = std::get_if<Converged>(&dyn)) {
    const PureProfile& x = conv->profile;
    const CharacterizationResult ch = check_equilibrium_characterization(vg, x, tol);
    report["equilibrium"] = {
        {"profile", x.to_string()},
        {"iterations", conv->iterations},
        {"component_sizes", internal::component_sizes(g, x)},
        {"components_small", ch.components_small},
        {"vaccinated_justified", ch.vaccinated_justified}};
    table += "equilibrium " + x.to_string() + "\n";
    try {
      const RepairResult rep = pareto_repair(vg, x, tol);
      const Game game = as_game(vg);
      const bool efficient =
          is_pareto_efficient_pure(game, rep.profile, tol, n).efficient;
      report["repaired"] = {
          {"profile", rep.profile.to_string()},
          {"iterations", rep.iterations},
          {"component_sizes", internal::component_sizes(g, rep.profile)},
          {"pareto_efficient", efficient}};
      table += "repaired    " + rep.profile.to_string() + "\n";
      table += "pareto      " + std::string(efficient ? "efficient" : "dominated") + "\n";
    } catch (const RepairStalled& e) {
      notes.push_back(std::string("repair stalled: ") + e.what());
    }
  } else {
    notes.push_back("best-response dynamics did not converge");
  }
  report["notes"] = notes;
  for (const Json& note : notes) table += "note        " + note.get<std::string>() + "\n";
  if (flags.pretty) {
    out << table;
    if (!flags.out_path.empty()) internal::emit(flags, dump_json(report), out);
    return kExitOk;
  }
  internal::emit(flags, dump_json(report), out);
  return kExitOk;
}

inline int cmd_from_cnf(const std::string& path, bool check,
                        const GlobalFlags& flags, std::ostream& out,
                        std::ostream& err) {
  const std::string text = path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                       : read_file(path);
  const CnfFormula cnf = parse_dimacs(text);
  const Game game = sat_to_game(cnf);
  internal::emit(flags, dump_json(game_to_json(game), flags.pretty), out);
  if (!check) return kExitOk;
  const int cap = internal::resolve_cap(flags, kMaxTabularPlayers);
  Json verdict = {{"players", game.num_players()}};
  if (game.num_players() > cap) {
    verdict["skipped"] = "player count exceeds cap " + std::to_string(cap);
  } else {
    const Tolerance tol(flags.eps);
    const bool pne = !enumerate_pure_nash(game, tol, cap).empty();
    const bool sat = brute_force_satisfiable(cnf).has_value();
    verdict["pne_exists"] = pne;
    verdict["satisfiable"] = sat;
    verdict["agree"] = pne == sat;
  }
  err << dump_json(verdict);
  return kExitOk;
}

inline int cmd_gadget(const std::string& name, const GadgetParams& params,
                      const GlobalFlags& flags, std::ostream& out) {
  const Game game = make_gadget(name, params);
  internal::emit(flags, dump_json(game_to_json(game), flags.pretty), out);
  return kExitOk;
}

inline int cmd_verify_mixed(const std::string& path,
                            const std::vector<double>& probs,
                            const GlobalFlags& flags, std::ostream& out) {
  const Game game = load_game(path);
  if (static_cast<int>(probs.size()) != game.num_players()) {
    throw BadParameters("--probs needs " + std::to_string(game.num_players()) +
                        " values, got " + std::to_string(probs.size()));
  }
  const MixedProfile x(probs);
  const Tolerance tol(flags.eps);
  const bool nash = is_mixed_nash(game, x, tol);
  Json players = Json::array();
  std::string table = std::string("mixed NE    ") + (nash ? "yes" : "no") + "\n";
  const auto checks = mixed_player_checks(game, x);
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    const MixedPlayerCheck& c = checks[i];
    players.push_back({{"player", i},
                       {"probability_pay", json_number(x[i])},
                       {"pay_cost", json_number(c.pay_cost)},
                       {"play_cost", json_number(c.play_cost)},
                       {"cost", json_number(c.cost)},
                       {"regret", json_number(c.regret)},
                       {"residual", json_number(c.play_cost - c.pay_cost)}});
    table += "  player " + std::to_string(i) + "  pay " + internal::fmt(c.pay_cost) +
             "  play " + internal::fmt(c.play_cost) + "  regret " +
             internal::fmt(c.regret) + "\n";
  }
  const Json report = {{"mixed_nash", nash}, {"players", players}};
  if (flags.pretty) {
    out << table;
    if (!flags.out_path.empty()) internal::emit(flags, dump_json(report), out);
    return kExitOk;
  }
  internal::emit(flags, dump_json(report), out);
  return kExitOk;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Analyze pay-or-play games", "payplay"};
  app.require_subcommand(1);
  GlobalFlags flags;
  app.add_option("--out", flags.out_path, "Write JSON output to this file");
  app.add_flag("--pretty", flags.pretty, "Human-readable output");
  app.add_option("--seed", flags.seed, "Seed for randomized steps")
      ->capture_default_str();
  app.add_option("--max-n", flags.max_n, "Player cap for exhaustive scans");
  app.add_option("--eps", flags.eps, "Comparison tolerance")->capture_default_str();

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "Analyze a game file");
  analyze->add_option("game", file, "Game JSON")->required();

  double c = 0.0;
  double l = 0.0;
  auto* vaccinate = app.add_subcommand("vaccinate", "Solve a vaccination game");
  vaccinate->add_option("graph", file, "Graph JSON")->required();
  vaccinate->add_option("--c", c, "Vaccine cost")->required();
  vaccinate->add_option("--l", l, "Infection loss")->required();

  bool check = false;
  auto* from_cnf = app.add_subcommand("from-cnf", "Build the 3-SAT game");
  from_cnf->add_option("cnf", file, "DIMACS file, or - for stdin")->required();
  from_cnf->add_flag("--check", check, "Compare PNE existence with satisfiability");

  std::string name;
  GadgetParams params;
  auto* gadget = app.add_subcommand("gadget", "Emit a generated game");
  gadget->add_option("name", name, "Gadget name")->required();
  gadget->add_option("--n", params.n, "Players");
  gadget->add_option("--k", params.k, "Laptops (pricing) or set size (disjointness)");
  gadget->add_option("--p", params.p, "List price");
  gadget->add_option("--q", params.q, "Lottery price");
  gadget->add_option("--loss", params.loss, "Lottery loser's cost");
  gadget->add_option("--epsilon", params.epsilon, "Epsilon");
  gadget->add_option("--a1", params.a1, "First set, e.g. 1,2")->delimiter(',');
  gadget->add_option("--a2", params.a2, "Second set, e.g. 2")->delimiter(',');

  std::vector<double> probs;
  auto* verify = app.add_subcommand("verify-mixed", "Check a mixed profile");
  verify->add_option("game", file, "Game JSON")->required();
  verify->add_option("--probs", probs, "Pay probabilities, comma separated")
      ->required()
      ->delimiter(',');

  for (CLI::App* sub : {analyze, vaccinate, from_cnf, gadget, verify}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    Tolerance validated(flags.eps);
    (void)validated;
    if (*analyze) return cmd_analyze(file, flags, out);
    if (*vaccinate) return cmd_vaccinate(file, c, l, flags, out);
    if (*from_cnf) return cmd_from_cnf(file, check, flags, out, err);
    if (*gadget) return cmd_gadget(name, params, flags, out);
    if (*verify) return cmd_verify_mixed(file, probs, flags, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace payplay

#endif  // PAYPLAY_CLI_HPP_
