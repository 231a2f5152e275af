// Copyright 2026 The ACE Toolkit Authors
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

#include <stdexcept>
#include <string>

namespace ace {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed program or grid text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, std::string expected, std::string detail)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + detail +
              (expected.empty() ? std::string() : " (expected " + expected + ")")),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::string expected_;
};

/// A caller broke an operation's precondition (e.g. an avatar placed on a wall).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Document does not match the item-bank or report schema. `path` locates
/// the offending field, e.g. "items[3].choices[1].content".
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Enumeration request exceeds the combinatorial guard.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// An item has zero or several choices that the oracle accepts.
class ItemIntegrityError : public Error {
 public:
  ItemIntegrityError(const std::string& message, int accepted)
      : Error(message), accepted_(accepted) {}
  /// Number of choices the oracle accepted (0 or at least 2).
  int accepted() const { return accepted_; }

 private:
  int accepted_;
};

/// Item generation ran out of retries.
class GenerationExhausted : public Error {
 public:
  using Error::Error;
};

/// A statistic is undefined for the given data (zero variance, constant input).
class UndefinedStatistic : public Error {
 public:
  using Error::Error;
};

}  // namespace ace
