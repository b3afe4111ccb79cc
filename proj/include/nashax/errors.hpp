// Copyright 2026 The nashax Authors
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


#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nashax {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed game or subset input: shape mismatch, empty strategy list,
// duplicate label, index out of range.
class GameError : public Error {
 public:
  using Error::Error;
};

// A solution concept was evaluated on a game outside the class it is
// defined for. Carries the canonical id of the offending game.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, std::string game_id)
      : Error(what), game_id_(std::move(game_id)) {}
  const std::string& game_id() const { return game_id_; }

 private:
  std::string game_id_;
};

// An enumeration or closure outgrew its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A construction was asked to run on inputs its hypotheses exclude.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Text input could not be parsed. line() is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace nashax
