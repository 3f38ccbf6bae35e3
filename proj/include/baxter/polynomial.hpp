// SPDX-License-Identifier: Apache-2.0
//
// Exact sparse multivariate polynomials over arbitrary-precision integers.
//
// One polynomial type serves two roles. Variables in the coefficient
// namespace build the scalar ring C (the weight lives there); variables in
// the generator namespace build the base algebra A = C[X]. A polynomial may
// mix both, e.g. lam*x1 is an element of A with coefficient lam.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace baxter {

using Integer = boost::multiprecision::cpp_int;

enum class Namespace : std::uint8_t { coefficient, generator };

struct Variable {
  Namespace ns = Namespace::generator;
  std::string name;

  static Variable coefficient(std::string name) {
    return {Namespace::coefficient, std::move(name)};
  }
  static Variable generator(std::string name) {
    return {Namespace::generator, std::move(name)};
  }

  bool operator==(const Variable&) const = default;
  // Ordered by name first; the namespace only breaks ties.
  std::strong_ordering operator<=>(const Variable& other) const {
    if (auto c = name <=> other.name; c != 0) return c;
    return ns <=> other.ns;
  }
};

bool is_identifier(std::string_view text);

/// Power product of variables; the empty product is the unit monomial.
class Monomial {
 public:
  using Factor = std::pair<Variable, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(const Variable& v, std::uint32_t exponent = 1);
  /// Factors may repeat and may carry zero exponents; they are merged.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::uint64_t degree() const noexcept;
  std::uint32_t exponent(const Variable& v) const;

  bool involves(Namespace ns) const;
  /// The part of the monomial living in namespace ns.
  Monomial restrict_to(Namespace ns) const;

  bool divides(const Monomial& other) const;
  /// Requires divides(other) to hold for (*this) | other; returns other / *this.
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial&) const = default;
  /// Graded lexicographic: total degree, then the first variable (by name)
  /// whose exponents differ decides, larger exponent being larger.
  std::strong_ordering operator<=>(const Monomial& other) const;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;  // sorted by variable, exponents > 0
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Integer, std::greater<>>;

  Polynomial() = default;
  Polynomial(const Integer& constant);  // NOLINT: implicit by design of ring literals
  Polynomial(int constant) : Polynomial(Integer(constant)) {}  // NOLINT
  static Polynomial variable(const Variable& v);
  static Polynomial term(const Monomial& m, const Integer& coefficient);

  /// Terms in descending graded-lex order.
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Integer value if the polynomial is constant.
  std::optional<Integer> constant_value() const;
  bool involves(Namespace ns) const;
  std::uint64_t degree() const;
  std::size_t size() const noexcept { return terms_.size(); }

  void add_term(const Monomial& m, const Integer& coefficient);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  bool operator==(const Polynomial&) const = default;

  Polynomial pow(std::uint64_t exponent) const;

  /// Integer value at a point; every variable of the polynomial must be bound.
  Integer evaluate(const std::map<Variable, Integer>& point) const;

  std::string to_string() const;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

enum class PolyOp { add, sub, mul, neg };

/// Ring arithmetic dispatch; neg ignores q.
Polynomial poly_arith(PolyOp op, const Polynomial& p, const Polynomial& q);

/// Exact quotient p / d. Throws DivisorZero for d = 0 and NotDivisible when
/// no polynomial q with q * d = p exists.
Polynomial poly_exact_div(const Polynomial& p, const Polynomial& d);

bool divides(const Polynomial& d, const Polynomial& p);

Integer binomial(std::uint64_t n, std::uint64_t k);

/// Splits an element of A = C[X] into generator monomials with coefficients
/// in C.
std::map<Monomial, Polynomial> split_by_generator(const Polynomial& p);

/// Resolves identifiers to namespaces while parsing.
class SymbolTable {
 public:
  SymbolTable() = default;
  SymbolTable(std::set<std::string> generators, std::set<std::string> coefficients);
  /// Every identifier resolves to the given namespace.
  static SymbolTable only(Namespace ns);

  std::optional<Namespace> lookup(std::string_view name) const;
  void add_generator(const std::string& name) { generators_.insert(name); }
  void add_coefficient(const std::string& name) { coefficients_.insert(name); }
  const std::set<std::string>& generators() const noexcept { return generators_; }
  const std::set<std::string>& coefficients() const noexcept { return coefficients_; }

 private:
  std::set<std::string> generators_;
  std::set<std::string> coefficients_;
  std::optional<Namespace> fallback_;
};

/// Parses `2*x1^2*x2 - lam*x1 + 3`. A leading minus is accepted.
Polynomial parse_polynomial(std::string_view text, const SymbolTable& symbols);

/// The weight lambda of the Baxter operator: a polynomial over C.
class Weight {
 public:
  /// Defaults to the symbolic weight `lam`.
  Weight();
  explicit Weight(Polynomial value);

  const Polynomial& value() const noexcept { return value_; }
  /// Non-zero-divisor certificate. Z[params] is an integral domain, so every
  /// nonzero value qualifies.
  bool nzd() const noexcept { return nzd_; }
  bool is_zero() const noexcept { return value_.is_zero(); }
  bool operator==(const Weight& other) const { return value_ == other.value_; }

  /// Powers lambda^0 .. lambda^max.
  std::vector<Polynomial> powers(std::size_t max) const;

 private:
  Polynomial value_;
  bool nzd_;
};

}  // namespace baxter
