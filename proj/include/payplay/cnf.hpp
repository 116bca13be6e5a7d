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

// 3-CNF formulas and a DIMACS reader.

#ifndef PAYPLAY_CNF_HPP_
#define PAYPLAY_CNF_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "payplay/errors.hpp"

namespace payplay {

// Signed 1-based variable index; negative means the negated variable.
using Literal = int;
using Clause = std::array<Literal, 3>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  void validate() const {
    if (num_vars < 0) throw InvalidGame("negative variable count");
    for (const Clause& c : clauses) {
      for (Literal lit : c) {
        if (lit == 0 || std::abs(lit) > num_vars) {
          throw InvalidGame("literal " + std::to_string(lit) +
                            " outside variables 1.." + std::to_string(num_vars));
        }
      }
    }
  }

  // assignment bit (v - 1) set means variable v is true.
  bool satisfied_by(std::uint64_t assignment) const {
    for (const Clause& c : clauses) {
      bool sat = false;
      for (Literal lit : c) {
        const bool value = (assignment >> (std::abs(lit) - 1)) & 1U;
        if ((lit > 0) == value) {
          sat = true;
          break;
        }
      }
      if (!sat) return false;
    }
    return true;
  }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// Exhaustive search over all 2^num_vars assignments.
inline std::optional<std::uint64_t> brute_force_satisfiable(
    const CnfFormula& f) {
  if (f.num_vars > 30) throw CapExceeded(f.num_vars, 30);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << f.num_vars); ++a) {
    if (f.satisfied_by(a)) return a;
  }
  return std::nullopt;
}

// Reads DIMACS CNF. Comment lines start with 'c'; a '%' line ends the input.
// Clauses may span lines and end with 0. Clauses with fewer than three
// literals are padded by repeating their first literal; longer clauses are
// rejected.
inline CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool have_header = false;
  int declared_clauses = 0;
  std::vector<Literal> pending;
  int pending_line = 0;
  int pending_col = 0;

  auto finish_clause = [&](int line_no, int col) {
    if (pending.empty()) throw SyntaxError("empty clause", line_no, col);
    if (pending.size() > 3) {
      throw ClauseTooLarge("clause has " + std::to_string(pending.size()) +
                               " literals; only 3-CNF is supported",
                           pending_line, pending_col);
    }
    Clause c{pending[0], pending[0], pending[0]};
    for (std::size_t k = 0; k < pending.size(); ++k) c[k] = pending[k];
    f.clauses.push_back(c);
    pending.clear();
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    const char lead = line[first];
    if (lead == 'c') continue;
    if (lead == '%') break;
    if (lead == 'p') {
      if (have_header) {
        throw SyntaxError("duplicate problem line", line_no,
                          static_cast<int>(first) + 1);
      }
      std::istringstream in{std::string(line.substr(first + 1))};
      std::string kind;
      long long vars = -1;
      long long count = -1;
      std::string extra;
      if (!(in >> kind >> vars >> count) || kind != "cnf" || vars < 0 ||
          count < 0 || (in >> extra)) {
        throw SyntaxError("expected 'p cnf <vars> <clauses>'", line_no,
                          static_cast<int>(first) + 1);
      }
      f.num_vars = static_cast<int>(vars);
      declared_clauses = static_cast<int>(count);
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw SyntaxError("clause before problem line", line_no,
                        static_cast<int>(first) + 1);
    }
    std::size_t i = first;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i >= line.size()) break;
      const std::size_t start = i;
      if (line[i] == '-' || line[i] == '+') ++i;
      while (i < line.size() && line[i] >= '0' && line[i] <= '9') ++i;
      const int col = static_cast<int>(start) + 1;
      if (i == start || (i == start + 1 && (line[start] == '-' || line[start] == '+')) ||
          (i < line.size() && line[i] != ' ' && line[i] != '\t')) {
        throw SyntaxError("malformed literal", line_no, col);
      }
      const std::string token(line.substr(start, i - start));
      const long long value = std::stoll(token);
      if (value == 0) {
        finish_clause(line_no, col);
        continue;
      }
      if (std::llabs(value) > f.num_vars) {
        throw HeaderMismatch("literal " + token + " exceeds declared " +
                                 std::to_string(f.num_vars) + " variables",
                             line_no, col);
      }
      if (pending.empty()) {
        pending_line = line_no;
        pending_col = col;
      }
      pending.push_back(static_cast<Literal>(value));
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw SyntaxError("missing problem line");
  if (!pending.empty()) finish_clause(line_no, 1);  // final clause without 0
  if (static_cast<int>(f.clauses.size()) != declared_clauses) {
    throw HeaderMismatch("problem line declares " +
                         std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(f.clauses.size()));
  }
  return f;
}

inline std::string to_dimacs(const CnfFormula& f) {
  std::string out = "p cnf " + std::to_string(f.num_vars) + " " +
                    std::to_string(f.clauses.size()) + "\n";
  for (const Clause& c : f.clauses) {
    out += std::to_string(c[0]) + " " + std::to_string(c[1]) + " " +
           std::to_string(c[2]) + " 0\n";
  }
  return out;
}

}  // namespace payplay

#endif  // PAYPLAY_CNF_HPP_
