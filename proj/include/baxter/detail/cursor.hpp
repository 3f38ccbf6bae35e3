// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "baxter/error.hpp"
#include "baxter/polynomial.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

namespace baxter::detail {

// Character cursor with line/column bookkeeping shared by the text parsers.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'" + found());
    }
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool peek_alpha() { return std::isalpha(static_cast<unsigned char>(peek())) != 0; }

  Integer natural() {
    if (!peek_digit()) fail("expected an integer" + found());
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits.push_back(text_[pos_]);
      advance();
    }
    return Integer(digits);
  }

  std::string identifier() {
    if (!peek_alpha()) fail("expected an identifier" + found());
    std::string name;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      name.push_back(text_[pos_]);
      advance();
    }
    return name;
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ErrorKind::SyntaxError, message, line_, column_);
  }
  [[noreturn]] void fail_at(ErrorKind kind, const std::string& message, std::size_t line,
                            std::size_t column) const {
    throw ParseError(kind, message, line, column);
  }

  std::string found() {
    if (at_end()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

/// Parses a polynomial starting at the cursor and stops before the first
/// character that cannot continue it.
Polynomial parse_polynomial_at(Cursor& cursor, const SymbolTable& symbols);

}  // namespace baxter::detail
