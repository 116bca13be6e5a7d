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

#ifndef PAYPLAY_ERRORS_HPP_
#define PAYPLAY_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace payplay {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A game, graph or profile violates a construction invariant.
class InvalidGame : public Error {
 public:
  using Error::Error;
};

// A tabular play-cost table lacks the entry for a coalition containing its
// owner.
class MissingTableEntry : public InvalidGame {
 public:
  using InvalidGame::InvalidGame;
};

// An exhaustive scan was requested on more players than the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(int n, int cap)
      : Error("player count " + std::to_string(n) + " exceeds cap " +
              std::to_string(cap)),
        players(n),
        limit(cap) {}
  int players;
  int limit;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NotSymmetricAnonymous : public Error {
 public:
  using Error::Error;
};

class NotAnEquilibrium : public Error {
 public:
  using Error::Error;
};

class BadParameters : public Error {
 public:
  using Error::Error;
};

class BadEpsilon : public BadParameters {
 public:
  using BadParameters::BadParameters;
};

// The vaccination repair loop failed to reduce the number of tight
// components, or left the equilibrium region.
class RepairStalled : public Error {
 public:
  using Error::Error;
};

// Malformed input text (DIMACS or JSON).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line_no = 0, int column_no = 0)
      : Error(line_no > 0 ? "line " + std::to_string(line_no) + ", column " +
                                std::to_string(column_no) + ": " + what
                          : what),
        line(line_no),
        column(column_no) {}
  int line;
  int column;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class ClauseTooLarge : public ParseError {
 public:
  using ParseError::ParseError;
};

class HeaderMismatch : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace payplay

#endif  // PAYPLAY_ERRORS_HPP_
