// Copyright 2026 The shaperec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

namespace shaperec {

/// Syntax error while parsing N-Triples or Turtle input. line/column are
/// 1-based; column is 0 when only the line is known.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column = 0)
      : std::runtime_error(std::to_string(line) +
                           (column > 0 ? ":" + std::to_string(column) : "") +
                           ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A shapes graph could not be interpreted as a document (missing path,
/// unsupported vocabulary, malformed collection, ...).
class ReadError : public std::runtime_error {
 public:
  explicit ReadError(const std::string& message) : std::runtime_error(message) {}
};

/// Standard validation was asked to process a recursive document.
class RecursionError : public std::runtime_error {
 public:
  explicit RecursionError(const std::string& message) : std::runtime_error(message) {}
};

class UnknownShapeError : public std::runtime_error {
 public:
  explicit UnknownShapeError(const std::string& message) : std::runtime_error(message) {}
};

class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::size_t pairs, std::size_t limit)
      : std::runtime_error(what + ": " + std::to_string(pairs) +
                           " assignment pairs exceed the limit of " +
                           std::to_string(limit)),
        pairs_(pairs),
        limit_(limit) {}

  std::size_t pairs() const { return pairs_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t pairs_;
  std::size_t limit_;
};

class SearchBudgetExceeded : public BudgetError {
 public:
  SearchBudgetExceeded(std::size_t pairs, std::size_t limit)
      : BudgetError("search budget exceeded", pairs, limit) {}
};

class OracleBudgetExceeded : public BudgetError {
 public:
  OracleBudgetExceeded(std::size_t pairs, std::size_t limit)
      : BudgetError("oracle budget exceeded", pairs, limit) {}
};

}  // namespace shaperec
