// SPDX-License-Identifier: Apache-2.0
//
// Truncated model of the completed shuffle algebra: the product of the
// homogeneous pieces of tensor degree k, kept exactly for k < N (a residue
// class modulo Fil^N), plus the Hurwitz series ring it becomes over A = C at
// weight zero.
#pragma once

#include "baxter/mixshuffle.hpp"
#include "baxter/polynomial.hpp"
#include "baxter/words.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace baxter {

class CompleteElement {
 public:
  /// The zero class modulo Fil^trunc; trunc must be positive.
  explicit CompleteElement(std::size_t trunc);
  /// Throws InvalidArgument if component k is not homogeneous of degree k.
  CompleteElement(std::size_t trunc, std::vector<ShuffleElement> components);

  std::size_t trunc() const noexcept { return components_.size(); }
  const ShuffleElement& component(std::size_t k) const { return components_.at(k); }
  const std::vector<ShuffleElement>& components() const noexcept { return components_; }
  bool is_zero() const;

  /// Sum of the kept components, a representative in the shuffle algebra.
  ShuffleElement representative() const;

  friend CompleteElement operator+(const CompleteElement& a, const CompleteElement& b);
  friend CompleteElement operator-(const CompleteElement& a, const CompleteElement& b);
  bool operator==(const CompleteElement&) const = default;

 private:
  std::vector<ShuffleElement> components_;
};

/// Components of u in degrees < N.
CompleteElement complete_from(const ShuffleElement& u, std::size_t trunc);

/// x^{[n]}: the part of u of tensor degree <= n.
ShuffleElement degree_truncate(const ShuffleElement& u, std::size_t n);

/// Component k of the product is component k of x^{[k]} * y^{[k]}.
/// Throws TruncMismatch. Component pairs run in parallel.
CompleteElement complete_mul(const CompleteElement& x, const CompleteElement& y,
                             const Weight& weight);

/// Shift: component k of the result is 1|(component k-1); the top component
/// leaves the truncation window.
CompleteElement complete_P(const CompleteElement& x);

/// The identity class [1].
CompleteElement complete_one(std::size_t trunc);

class HurwitzSeries {
 public:
  explicit HurwitzSeries(std::vector<Polynomial> entries);
  /// e_n truncated to `trunc` entries (zero when n >= trunc).
  static HurwitzSeries basis(std::size_t n, std::size_t trunc);

  std::size_t trunc() const noexcept { return entries_.size(); }
  const std::vector<Polynomial>& entries() const noexcept { return entries_; }
  const Polynomial& operator[](std::size_t i) const { return entries_.at(i); }

  bool operator==(const HurwitzSeries&) const = default;

  /// `(a0, a1, ..., a{N-1})`
  std::string to_string() const;

 private:
  std::vector<Polynomial> entries_;
};

/// c_n = sum_k C(n, k) a_k b_{n-k}; throws TruncMismatch.
HurwitzSeries hurwitz_mul(const HurwitzSeries& a, const HurwitzSeries& b);

/// Sends the class of 1^{(n+1)} to e_n. Requires the zero weight
/// (WeightNotZero) and all-unit words (NotScalarBase).
HurwitzSeries hurwitz_iso(const CompleteElement& x, const Weight& weight);

/// Inverse of hurwitz_iso.
CompleteElement hurwitz_to_complete(const HurwitzSeries& a);

/// Parses `(a0, a1, ...)` with entries in the coefficient namespace.
HurwitzSeries parse_hurwitz(std::string_view text, const SymbolTable& symbols);

}  // namespace baxter
