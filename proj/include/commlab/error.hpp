// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace commlab {

enum class ErrorKind {
  Parse,
  Validation,
  Budget,
  NotInCommutator,
  Internal,
};

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  /// `line` is 1-based; `column` is 1-based or 0 when unknown.
  ParseError(const std::string& message, std::size_t line, std::size_t column = 0)
      : Error(ErrorKind::Parse, format(message, line, column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorKind::Validation, what) {}
};

/// A configured size limit was hit. `partial` is the amount of work or the
/// number of elements produced before giving up.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t limit, std::size_t partial)
      : Error(ErrorKind::Budget, what + " (budget " + std::to_string(limit) +
                                     ", partial size " + std::to_string(partial) + ")"),
        limit_(limit),
        partial_(partial) {}

  std::size_t limit() const noexcept { return limit_; }
  std::size_t partial() const noexcept { return partial_; }

 private:
  std::size_t limit_;
  std::size_t partial_;
};

class NotInCommutator : public Error {
 public:
  explicit NotInCommutator(const std::string& what)
      : Error(ErrorKind::NotInCommutator, what) {}
};

/// A self-check failed. Always a bug in the library.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorKind::Internal, "internal error: " + what) {}
};

}  // namespace commlab
