// SPDX-License-Identifier: Apache-2.0
#include "baxter/error.hpp"

namespace baxter {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::DivisorZero: return "DivisorZero";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::NamespaceViolation: return "NamespaceViolation";
    case ErrorKind::TruncMismatch: return "TruncMismatch";
    case ErrorKind::NotScalarBase: return "NotScalarBase";
    case ErrorKind::WeightNotZero: return "WeightNotZero";
    case ErrorKind::WeightMismatch: return "WeightMismatch";
    case ErrorKind::WeightZero: return "WeightZero";
    case ErrorKind::MissingGeneratorImage: return "MissingGeneratorImage";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::DegreeTooLow: return "DegreeTooLow";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

ParseError::ParseError(ErrorKind kind, const std::string& message,
                       std::size_t line, std::size_t column)
    : Error(kind, message + " at line " + std::to_string(line) + ", column " +
                      std::to_string(column)),
      line_(line),
      column_(column) {}

}  // namespace baxter
