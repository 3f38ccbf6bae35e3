// SPDX-License-Identifier: Apache-2.0
//
// Free-module elements over tensor words.
//
// ShuffleElement is a C-linear combination of words x0|x1|...|xn with
// generator monomials as factors, i.e. an element of the direct sum of the
// tensor powers A^{(k+1)}. AbarElement lives in the direct limit of the
// tensor power algebras, where a word and the same word padded with trailing
// units are identified; its product is factorwise.
#pragma once

#include "baxter/error.hpp"
#include "baxter/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace baxter {

/// Total order on words: shorter first, then factorwise graded-lex.
std::strong_ordering compare_factors(const std::vector<Monomial>& a,
                                     const std::vector<Monomial>& b);

class TensorWord {
 public:
  /// Throws InvalidArgument on an empty sequence and NamespaceViolation when
  /// a factor involves coefficient variables.
  explicit TensorWord(std::vector<Monomial> factors);
  /// The word 1|1|...|1 with `length` factors.
  static TensorWord units(std::size_t length);

  const std::vector<Monomial>& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  /// Tensor degree n for a word of length n+1.
  std::size_t degree() const noexcept { return factors_.size() - 1; }
  const Monomial& operator[](std::size_t i) const { return factors_[i]; }
  const Monomial& back() const { return factors_.back(); }

  bool operator==(const TensorWord&) const = default;
  std::strong_ordering operator<=>(const TensorWord& other) const {
    return compare_factors(factors_, other.factors_);
  }

  /// `[f0|f1|...|fn]`
  std::string to_string() const;

 private:
  std::vector<Monomial> factors_;
};

class AbarWord {
 public:
  /// The empty word, identity of the direct limit.
  AbarWord() = default;
  /// Trailing unit factors are dropped.
  explicit AbarWord(std::vector<Monomial> factors);

  const std::vector<Monomial>& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  bool is_identity() const noexcept { return factors_.empty(); }

  /// Representative of the class in the tensor power of the given length;
  /// requires length >= size().
  std::vector<Monomial> padded(std::size_t length) const;

  friend AbarWord operator*(const AbarWord& a, const AbarWord& b);
  bool operator==(const AbarWord&) const = default;
  std::strong_ordering operator<=>(const AbarWord& other) const {
    return compare_factors(factors_, other.factors_);
  }

  /// `(f0|f1|...)`, `()` for the identity.
  std::string to_string() const;

 private:
  std::vector<Monomial> factors_;
};

AbarWord abar_normalize(std::vector<Monomial> factors);

/// Finite C-linear combination of words; coefficients never involve
/// generator variables and are never zero. Terms iterate in descending word
/// order, which is the printing order.
template <class Word>
class LinearCombination {
 public:
  using TermMap = std::map<Word, Polynomial, std::greater<>>;

  LinearCombination() = default;
  explicit LinearCombination(const Word& w, const Polynomial& c = Polynomial(1)) {
    add_term(w, c);
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// The coefficient of w (zero when absent).
  Polynomial coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Polynomial() : it->second;
  }

  void add_term(const Word& w, const Polynomial& c) {
    check_scalar(c);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
    return a += b;
  }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
    return a -= b;
  }
  friend LinearCombination operator-(const LinearCombination& a) {
    return scale(Polynomial(-1), a);
  }
  friend LinearCombination scale(const Polynomial& c, const LinearCombination& a) {
    check_scalar(c);
    LinearCombination out;
    if (c.is_zero()) return out;
    for (const auto& [w, coeff] : a.terms_) {
      Polynomial p = c * coeff;
      if (!p.is_zero()) out.terms_.emplace_hint(out.terms_.end(), w, std::move(p));
    }
    return out;
  }
  bool operator==(const LinearCombination&) const = default;

 private:
  static void check_scalar(const Polynomial& c) {
    if (c.involves(Namespace::generator)) {
      throw Error(ErrorKind::NamespaceViolation,
                  "scalar '" + c.to_string() + "' involves generator variables");
    }
  }

  TermMap terms_;
};

using ShuffleElement = LinearCombination<TensorWord>;
using AbarElement = LinearCombination<AbarWord>;

/// Coefficientwise sum (element_add in the module vocabulary).
template <class Word>
LinearCombination<Word> element_add(const LinearCombination<Word>& u,
                                    const LinearCombination<Word>& v) {
  return u + v;
}

template <class Word>
LinearCombination<Word> scalar_mul(const Polynomial& c, const LinearCombination<Word>& u) {
  return scale(c, u);
}

/// Dynamically typed element, used where the kind is only known at run time
/// (for example when reading interchange files).
using AnyElement = std::variant<ShuffleElement, AbarElement>;

/// Throws KindMismatch when the alternatives differ.
AnyElement element_add(const AnyElement& u, const AnyElement& v);

/// Multilinear expansion of a tensor of A-elements (each factor may carry
/// coefficient variables, e.g. lam*x1 + 2).
ShuffleElement tensor_of(const std::vector<Polynomial>& factors);

AbarElement abar_mul(const AbarElement& u, const AbarElement& v);
AbarElement abar_identity();

/// `coeff*[..] + coeff*[..]`; `0` for the zero element.
std::string to_text(const ShuffleElement& u);
/// Compact form used inside standard-algebra entries: `lam*((x2|1|x1)+(1|x2|x1))`.
std::string to_text(const AbarElement& u);

nlohmann::json to_json(const ShuffleElement& u);
nlohmann::json to_json(const AbarElement& u);
/// Coefficient strings resolve in the coefficient namespace and word factor
/// strings in the generator namespace.
ShuffleElement shuffle_from_json(const nlohmann::json& j);
AbarElement abar_from_json(const nlohmann::json& j);

}  // namespace baxter
