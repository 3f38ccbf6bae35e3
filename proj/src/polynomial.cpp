// SPDX-License-Identifier: Apache-2.0
#include "baxter/polynomial.hpp"

#include "baxter/detail/cursor.hpp"
#include "baxter/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace baxter {

bool is_identifier(std::string_view text) {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text.front()))) return false;
  return std::all_of(text.begin(), text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(const Variable& v, std::uint32_t exponent) {
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (auto& [var, exp] : factors) {
    if (exp == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == var) {
      m.factors_.back().second += exp;
    } else {
      m.factors_.emplace_back(std::move(var), exp);
    }
  }
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::exponent(const Variable& v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const Variable& x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::involves(Namespace ns) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [ns](const Factor& f) { return f.first.ns == ns; });
}

Monomial Monomial::restrict_to(Namespace ns) const {
  Monomial m;
  for (const auto& f : factors_) {
    if (f.first.ns == ns) m.factors_.push_back(f);
  }
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return other.exponent(f.first) >= f.second; });
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q;
  for (const auto& f : other.factors_) {
    const std::uint32_t e = f.second - exponent(f.first);
    if (e > 0) q.factors_.emplace_back(f.first, e);
  }
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      m.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  m.factors_.insert(m.factors_.end(), i, a.factors_.end());
  m.factors_.insert(m.factors_.end(), j, b.factors_.end());
  return m;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() && j != other.factors_.end()) {
    if (i->first < j->first) return std::strong_ordering::greater;
    if (j->first < i->first) return std::strong_ordering::less;
    if (auto c = i->second <=> j->second; c != 0) return c;
    ++i;
    ++j;
  }
  if (i != factors_.end()) return std::strong_ordering::greater;
  if (j != other.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [var, exp] : factors_) {
    if (!out.empty()) out += '*';
    out += var.name;
    if (exp > 1) out += '^' + std::to_string(exp);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(const Variable& v) { return term(Monomial(v), 1); }

Polynomial Polynomial::term(const Monomial& m, const Integer& coefficient) {
  Polynomial p;
  p.add_term(m, coefficient);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Integer> Polynomial::constant_value() const {
  if (terms_.empty()) return Integer(0);
  if (!is_constant()) return std::nullopt;
  return terms_.begin()->second;
}

bool Polynomial::involves(Namespace ns) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [ns](const auto& t) { return t.first.involves(ns); });
}

std::uint64_t Polynomial::degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

void Polynomial::add_term(const Monomial& m, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out = a;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Polynomial Polynomial::pow(std::uint64_t exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Integer Polynomial::evaluate(const std::map<Variable, Integer>& point) const {
  Integer total = 0;
  for (const auto& [m, c] : terms_) {
    Integer value = c;
    for (const auto& [var, exp] : m.factors()) {
      auto it = point.find(var);
      if (it == point.end()) {
        throw Error(ErrorKind::InvalidArgument, "unbound variable '" + var.name + "'");
      }
      value *= boost::multiprecision::pow(it->second, exp);
    }
    total += value;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += m.to_string();
    } else {
      out += magnitude.str() + "*" + m.to_string();
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial poly_arith(PolyOp op, const Polynomial& p, const Polynomial& q) {
  switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
    case PolyOp::neg: return -p;
  }
  return p;
}

Polynomial poly_exact_div(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw Error(ErrorKind::DivisorZero, "division by the zero polynomial");
  const auto& [lead_m, lead_c] = *d.terms().begin();
  Polynomial remainder = p;
  Polynomial quotient;
  // Leading-term reduction: if d divides p, lt(d) divides lt(remainder) at
  // every step, and the leading monomial strictly decreases.
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = *remainder.terms().begin();
    if (!lead_m.divides(rm) || rc % lead_c != 0) {
      throw Error(ErrorKind::NotDivisible,
                  "'" + p.to_string() + "' is not divisible by '" + d.to_string() + "'");
    }
    const Polynomial step = Polynomial::term(lead_m.quotient_of(rm), rc / lead_c);
    quotient += step;
    remainder -= step * d;
  }
  return quotient;
}

bool divides(const Polynomial& d, const Polynomial& p) {
  try {
    poly_exact_div(p, d);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotDivisible) return false;
    throw;
  }
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::map<Monomial, Polynomial> split_by_generator(const Polynomial& p) {
  std::map<Monomial, Polynomial> out;
  for (const auto& [m, c] : p.terms()) {
    out[m.restrict_to(Namespace::generator)].add_term(m.restrict_to(Namespace::coefficient), c);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// ------------------------------------------------------------- SymbolTable

SymbolTable::SymbolTable(std::set<std::string> generators, std::set<std::string> coefficients)
    : generators_(std::move(generators)), coefficients_(std::move(coefficients)) {}

SymbolTable SymbolTable::only(Namespace ns) {
  SymbolTable t;
  t.fallback_ = ns;
  return t;
}

std::optional<Namespace> SymbolTable::lookup(std::string_view name) const {
  const std::string key(name);
  if (generators_.count(key) != 0) return Namespace::generator;
  if (coefficients_.count(key) != 0) return Namespace::coefficient;
  return fallback_;
}

namespace detail {

namespace {

Polynomial parse_term(Cursor& cursor, const SymbolTable& symbols) {
  Polynomial term(1);
  do {
    if (cursor.peek_digit()) {
      term *= Polynomial(cursor.natural());
    } else if (cursor.peek_alpha()) {
      cursor.skip_space();
      const std::size_t line = cursor.line();
      const std::size_t column = cursor.column();
      std::string name = cursor.identifier();
      auto ns = symbols.lookup(name);
      if (!ns) {
        cursor.fail_at(ErrorKind::UnknownVariable, "unknown variable '" + name + "'", line, column);
      }
      std::uint32_t exponent = 1;
      if (cursor.accept('^')) exponent = cursor.natural().convert_to<std::uint32_t>();
      term *= Polynomial::term(Monomial({*ns, std::move(name)}, exponent), 1);
    } else {
      cursor.fail("expected an integer or a variable" + cursor.found());
    }
  } while (cursor.accept('*'));
  return term;
}

}  // namespace

Polynomial parse_polynomial_at(Cursor& cursor, const SymbolTable& symbols) {
  Polynomial out;
  bool negative = cursor.accept('-');
  for (;;) {
    Polynomial t = parse_term(cursor, symbols);
    if (negative) {
      out -= t;
    } else {
      out += t;
    }
    if (cursor.accept('+')) {
      negative = false;
    } else if (cursor.accept('-')) {
      negative = true;
    } else {
      break;
    }
  }
  return out;
}

}  // namespace detail

Polynomial parse_polynomial(std::string_view text, const SymbolTable& symbols) {
  detail::Cursor cursor(text);
  Polynomial p = detail::parse_polynomial_at(cursor, symbols);
  if (!cursor.at_end()) cursor.fail("unexpected trailing input" + cursor.found());
  return p;
}

// ------------------------------------------------------------------ Weight

Weight::Weight() : Weight(Polynomial::variable(Variable::coefficient("lam"))) {}

Weight::Weight(Polynomial value) : value_(std::move(value)), nzd_(!value_.is_zero()) {
  if (value_.involves(Namespace::generator)) {
    throw Error(ErrorKind::NamespaceViolation,
                "weight '" + value_.to_string() + "' must not involve generators");
  }
}

std::vector<Polynomial> Weight::powers(std::size_t max) const {
  std::vector<Polynomial> out;
  out.reserve(max + 1);
  out.emplace_back(1);
  for (std::size_t i = 1; i <= max; ++i) out.push_back(out.back() * value_);
  return out;
}

}  // namespace baxter
