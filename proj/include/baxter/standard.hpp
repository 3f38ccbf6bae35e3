// SPDX-License-Identifier: Apache-2.0
//
// The standard Baxter algebra: sequences (a_1, a_2, ...) with entries in the
// direct limit algebra, multiplied entrywise, with the operator
//
//   P'(a)_j = lambda * (a_1 + ... + a_{j-1}).
//
// Sequences are truncated to N entries. Every operation here computes entry
// j from entries <= j, so the first N entries are exact.
#pragma once

#include "baxter/mixshuffle.hpp"
#include "baxter/polynomial.hpp"
#include "baxter/words.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace baxter {

class StandardElement {
 public:
  /// The zero sequence of length trunc (positive).
  explicit StandardElement(std::size_t trunc);
  explicit StandardElement(std::vector<AbarElement> entries);

  std::size_t trunc() const noexcept { return entries_.size(); }
  /// Entry k, 1-based as in gamma_k.
  const AbarElement& entry(std::size_t k) const { return entries_.at(k - 1); }
  AbarElement& entry(std::size_t k) { return entries_.at(k - 1); }
  const std::vector<AbarElement>& entries() const noexcept { return entries_; }
  bool is_zero() const;

  StandardElement& operator+=(const StandardElement& other);
  StandardElement& operator-=(const StandardElement& other);
  friend StandardElement operator+(StandardElement a, const StandardElement& b) { return a += b; }
  friend StandardElement operator-(StandardElement a, const StandardElement& b) { return a -= b; }
  bool operator==(const StandardElement&) const = default;

 private:
  std::vector<AbarElement> entries_;
};

StandardElement scale(const Polynomial& c, const StandardElement& s);

/// The all-identity sequence (1, 1, ...).
StandardElement standard_identity(std::size_t trunc);

/// gamma_k: identity in entry k, zero elsewhere; zero when k > trunc.
StandardElement gamma(std::size_t k, std::size_t trunc);

/// t^(a): entry k is the word 1|...|1|a with a in slot k, extended linearly
/// over the terms of a (which may carry coefficient variables).
StandardElement t_gen(const Polynomial& a, std::size_t trunc);

/// Entrywise product; throws TruncMismatch.
StandardElement standard_mul(const StandardElement& s, const StandardElement& t);

StandardElement p_prime(const StandardElement& s, const Weight& weight);

/// Image of u under the Baxter homomorphism sending each generator x to
/// t^(x), truncated to `trunc` entries. Terms of u run in parallel.
StandardElement phi(const ShuffleElement& u, std::size_t trunc, const Weight& weight);

/// Recovers the shuffle element of filtration degree < trunc mapping to s by
/// peeling leading entries and dividing by powers of lambda.
/// Errors: WeightZero, NotInImage, NotDivisible.
ShuffleElement psi_inverse(const StandardElement& s, const Weight& weight);

/// Largest k with entries 1..k zero (+infinity for the zero sequence).
Degree f_degree(const StandardElement& s);

/// Preimage under P' of s in lambda F^{k+1}: returns r with f_degree(r) >= k
/// and p_prime(r) = s. Errors: DegreeTooLow, NotDivisible.
StandardElement fil_vs_f_witness(const StandardElement& s, std::size_t k, const Weight& weight);

/// Image in the quotient by F^n: entries after n cleared.
StandardElement residue_mod_F(const StandardElement& s, std::size_t n);

/// True when every coefficient of the entry is divisible by d.
bool entry_divisible_by(const AbarElement& entry, const Polynomial& d);

/// `lam*(x2|x1) g2 + lam*((x2|1|x1)+(1|x2|x1)) g3`
std::string to_text(const StandardElement& s);
nlohmann::json to_json(const StandardElement& s);
StandardElement standard_from_json(const nlohmann::json& j);

/// The truncated sequence algebra as a target of the universal property.
class StandardTarget {
 public:
  using Element = StandardElement;

  StandardTarget(std::size_t trunc, Weight weight) : trunc_(trunc), weight_(std::move(weight)) {}

  std::size_t trunc() const { return trunc_; }
  const Weight& weight() const { return weight_; }
  Element zero() const { return StandardElement(trunc_); }
  Element one() const { return standard_identity(trunc_); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element mul(const Element& a, const Element& b) const { return standard_mul(a, b); }
  Element scale(const Polynomial& c, const Element& a) const { return baxter::scale(c, a); }
  Element apply_P(const Element& a) const { return p_prime(a, weight_); }
  Element generator_image(const Variable& x) const {
    return t_gen(Polynomial::variable(x), trunc_);
  }
  bool equal(const Element& a, const Element& b) const { return a == b; }

 private:
  std::size_t trunc_;
  Weight weight_;
};

}  // namespace baxter
