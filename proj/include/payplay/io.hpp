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

// JSON reading and writing for games and graphs.
//
// Game file:
//   { "n": 3, "label": "...",
//     "players": [ { "h": 1.5, "g": <cost> }, ... ],
//     "shared_tables": { "g0": { "entries": [ {"set": [0], "cost": 1}, ... ] } } }
// where <cost> is one of
//   { "type": "tabular", "entries": [ {"set": [0, 2], "cost": 2}, ... ] }
//   { "type": "anonymous", "by_count": [w1, ..., wn] }
//   { "type": "shared", "ref": "g0" }
//
// Graph file: { "n": 4, "edges": [[0, 1], [1, 2]] }
//
// Numbers are written rounded to 12 significant digits and object keys are
// sorted, so output is byte-stable.

#ifndef PAYPLAY_IO_HPP_
#define PAYPLAY_IO_HPP_

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "payplay/errors.hpp"
#include "payplay/game.hpp"
#include "payplay/graph.hpp"
#include "payplay/profile.hpp"

namespace payplay {

using Json = nlohmann::json;

inline double round_significant(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v == 0.0 ? 0.0 : v;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

inline Json json_number(double v) { return Json(round_significant(v)); }

inline Json json_numbers(std::span<const double> values) {
  Json arr = Json::array();
  for (double v : values) arr.push_back(json_number(v));
  return arr;
}

inline Json json_coalition(Coalition s) {
  Json arr = Json::array();
  for (PlayerId p : s.members()) arr.push_back(p);
  return arr;
}

// Compact dump with a trailing newline; indented when `pretty`.
inline std::string dump_json(const Json& j, bool pretty = false) {
  return (pretty ? j.dump(2) : j.dump()) + "\n";
}

namespace internal {

inline std::pair<int, int> line_column(std::string_view text,
                                       std::size_t offset) {
  int line = 1;
  int col = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] inline void schema_error(const std::string& where,
                                      const std::string& what) {
  throw InvalidGame(where + ": " + what);
}

inline const Json& require_key(const Json& obj, const char* key,
                               const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing \"") + key + "\"");
  return *it;
}

inline double read_number(const Json& v, const std::string& where) {
  if (!v.is_number()) schema_error(where, "expected a number");
  return v.get<double>();
}

inline int read_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) schema_error(where, "expected an integer");
  const auto x = v.get<long long>();
  if (x < -(1LL << 30) || x > (1LL << 30)) schema_error(where, "out of range");
  return static_cast<int>(x);
}

inline Coalition read_set(const Json& v, int n, const std::string& where) {
  if (!v.is_array()) schema_error(where, "expected an array of player ids");
  Coalition s;
  int prev = -1;
  for (const Json& e : v) {
    const int p = read_int(e, where);
    if (p < 0 || p >= n) {
      schema_error(where, "player id " + std::to_string(p) + " out of range");
    }
    if (p <= prev) schema_error(where, "set must be sorted ascending without repeats");
    prev = p;
    s = s.with(p);
  }
  return s;
}

inline std::vector<CostEntry> read_entries(const Json& obj, int n,
                                           const std::string& where) {
  const Json& arr = require_key(obj, "entries", where);
  if (!arr.is_array()) schema_error(where, "\"entries\" must be an array");
  std::vector<CostEntry> entries;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string at = where + ".entries[" + std::to_string(k) + "]";
    entries.push_back({read_set(require_key(arr[k], "set", at), n, at + ".set"),
                       read_number(require_key(arr[k], "cost", at), at + ".cost")});
  }
  return entries;
}

inline Json tabular_json(PlayerId owner, int n,
                         const std::function<double(Coalition)>& cost) {
  Json entries = Json::array();
  for (std::size_t k = 0; k < (std::size_t{1} << (n - 1)); ++k) {
    const Coalition s = owner_table_coalition(k, owner);
    entries.push_back({{"set", json_coalition(s)}, {"cost", json_number(cost(s))}});
  }
  return {{"type", "tabular"}, {"entries", std::move(entries)}};
}

}  // namespace internal

inline Json game_to_json(const Game& game) {
  const int n = game.num_players();
  Json players = Json::array();
  Json shared = Json::object();
  std::map<const SharedTable*, std::string> names;
  for (PlayerId i = 0; i < n; ++i) {
    const PlayerSpec& p = game.player(i);
    Json g;
    if (const auto* a = std::get_if<AnonymousCost>(&p.play_cost)) {
      g = {{"type", "anonymous"}, {"by_count", json_numbers(a->by_count)}};
    } else if (const auto* s = std::get_if<SharedTabularCost>(&p.play_cost)) {
      const SharedTable* table = s->table.get();
      auto it = names.find(table);
      if (it == names.end()) {
        std::string name = table->name();
        while (shared.contains(name)) name += "_";
        Json entries = Json::array();
        for (Coalition::Mask m = 1; m < (Coalition::Mask{1} << n); ++m) {
          if (!table->has(Coalition(m))) continue;
          entries.push_back({{"set", json_coalition(Coalition(m))},
                             {"cost", json_number(table->at(Coalition(m)))}});
        }
        shared[name] = {{"entries", std::move(entries)}};
        it = names.emplace(table, name).first;
      }
      g = {{"type", "shared"}, {"ref", it->second}};
    } else {
      // Tabular and derived models are written out as explicit tables.
      require_cap(n, kMaxTabularPlayers);
      g = internal::tabular_json(
          i, n, [&](Coalition s) { return game.play_cost(i, s); });
    }
    players.push_back({{"h", json_number(p.pay_cost)}, {"g", std::move(g)}});
  }
  Json out = {{"n", n}, {"label", game.label()}, {"players", std::move(players)}};
  if (!shared.empty()) out["shared_tables"] = std::move(shared);
  return out;
}

inline Game game_from_json(const Json& j) {
  const int n = internal::read_int(internal::require_key(j, "n", "game"), "game.n");
  if (n < 1 || n > kMaxPlayers) {
    throw InvalidGame("game.n must be in [1, " + std::to_string(kMaxPlayers) +
                      "], got " + std::to_string(n));
  }
  std::string label;
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) internal::schema_error("game.label", "expected a string");
    label = it->get<std::string>();
  }
  std::map<std::string, std::shared_ptr<const SharedTable>> tables;
  if (auto it = j.find("shared_tables"); it != j.end()) {
    if (!it->is_object()) {
      internal::schema_error("game.shared_tables", "expected an object");
    }
    for (const auto& [name, body] : it->items()) {
      if (n > kMaxTabularPlayers) throw CapExceeded(n, kMaxTabularPlayers);
      const std::string where = "game.shared_tables." + name;
      tables[name] = std::make_shared<const SharedTable>(
          name, n, internal::read_entries(body, n, where));
    }
  }
  const Json& arr = internal::require_key(j, "players", "game");
  if (!arr.is_array() || static_cast<int>(arr.size()) != n) {
    internal::schema_error("game.players", "expected an array of n players");
  }
  std::vector<PlayerSpec> players;
  for (PlayerId i = 0; i < n; ++i) {
    const std::string where = "game.players[" + std::to_string(i) + "]";
    const double h =
        internal::read_number(internal::require_key(arr[i], "h", where), where + ".h");
    const Json& g = internal::require_key(arr[i], "g", where);
    const Json& type = internal::require_key(g, "type", where + ".g");
    if (!type.is_string()) internal::schema_error(where + ".g.type", "expected a string");
    const std::string kind = type.get<std::string>();
    if (kind == "tabular") {
      if (n > kMaxTabularPlayers) throw CapExceeded(n, kMaxTabularPlayers);
      players.push_back(
          {h, TabularCost::from_entries(i, n, internal::read_entries(g, n, where + ".g"))});
    } else if (kind == "anonymous") {
      const Json& w = internal::require_key(g, "by_count", where + ".g");
      if (!w.is_array()) internal::schema_error(where + ".g.by_count", "expected an array");
      AnonymousCost a;
      for (const Json& v : w) {
        a.by_count.push_back(internal::read_number(v, where + ".g.by_count"));
      }
      players.push_back({h, std::move(a)});
    } else if (kind == "shared") {
      const Json& ref = internal::require_key(g, "ref", where + ".g");
      if (!ref.is_string()) internal::schema_error(where + ".g.ref", "expected a string");
      auto it = tables.find(ref.get<std::string>());
      if (it == tables.end()) {
        internal::schema_error(where + ".g.ref",
                               "unknown shared table '" + ref.get<std::string>() + "'");
      }
      players.push_back({h, SharedTabularCost{it->second}});
    } else {
      internal::schema_error(where + ".g.type", "unknown cost type '" + kind + "'");
    }
  }
  return Game(std::move(players), label);
}

// Parses JSON text; syntax errors become ParseError with line and column.
inline Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, col] = internal::line_column(
        text, e.byte > 0 ? static_cast<std::size_t>(e.byte - 1) : 0);
    throw ParseError("malformed JSON: " + std::string(e.what()), line, col);
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Game load_game(const std::string& path) {
  return game_from_json(parse_json_text(read_file(path)));
}

inline Json graph_to_json(const UndirectedGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

inline UndirectedGraph graph_from_json(const Json& j) {
  const int n = internal::read_int(internal::require_key(j, "n", "graph"), "graph.n");
  const Json& arr = internal::require_key(j, "edges", "graph");
  if (!arr.is_array()) internal::schema_error("graph.edges", "expected an array");
  std::vector<UndirectedGraph::Edge> edges;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string where = "graph.edges[" + std::to_string(k) + "]";
    if (!arr[k].is_array() || arr[k].size() != 2) {
      internal::schema_error(where, "expected a pair [u, v]");
    }
    edges.emplace_back(internal::read_int(arr[k][0], where),
                       internal::read_int(arr[k][1], where));
  }
  return {n, std::move(edges)};
}

inline UndirectedGraph load_graph(const std::string& path) {
  return graph_from_json(parse_json_text(read_file(path)));
}

// Inverse of PureProfile::to_string ('P' = pay, '-' = play).
inline PureProfile parse_profile(std::string_view s) {
  Coalition payers;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'P') {
      payers = payers.with(static_cast<PlayerId>(i));
    } else if (s[i] != '-') {
      throw InvalidGame("profile string may only contain 'P' and '-'");
    }
  }
  return {static_cast<int>(s.size()), payers};
}

}  // namespace payplay

#endif  // PAYPLAY_IO_HPP_
