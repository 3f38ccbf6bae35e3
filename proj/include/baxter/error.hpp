// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace baxter {

enum class ErrorKind {
  NotDivisible,
  DivisorZero,
  KindMismatch,
  NamespaceViolation,
  TruncMismatch,
  NotScalarBase,
  WeightNotZero,
  WeightMismatch,
  WeightZero,
  MissingGeneratorImage,
  NotInImage,
  DegreeTooLow,
  SyntaxError,
  UnknownVariable,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so
// callers (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax or resolution failure at a 1-based line/column of the input text.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& message, std::size_t line,
             std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace baxter
