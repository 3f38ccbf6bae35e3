// SPDX-License-Identifier: Apache-2.0
//
// Mixable shuffles and the shuffle Baxter algebra.
//
// For words x = x0|x1..xm and y = y0|y1..yn the product of weight lambda is
//
//   x * y = sum over mixable (m,n)-shuffles (sigma, T) of
//           lambda^|T| x0*y0 | sigma(x1..xm, y1..yn; T)
//
// where sigma interleaves the two tails preserving their internal order and
// every pair in T glues an x-letter to the y-letter right after it.
#pragma once

#include "baxter/polynomial.hpp"
#include "baxter/words.hpp"

#include <compare>
#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace baxter {

/// A permutation of {1..m+n} (one-line notation, 1-based images) whose
/// values 1..m and m+1..m+n each appear in increasing order.
struct ShufflePermutation {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::size_t> images;

  bool operator==(const ShufflePermutation&) const = default;
};

/// All of S(m,n) in lexicographic order of the image sequence.
std::vector<ShufflePermutation> enumerate_shuffles(std::size_t m, std::size_t n);

/// The k (1-based) with sigma(k) <= m < sigma(k+1); each names the pair (k, k+1).
std::vector<std::size_t> admissible_pairs(const ShufflePermutation& sigma);

struct MixableShuffle {
  ShufflePermutation sigma;
  std::vector<std::size_t> merged;  // subset of admissible_pairs(sigma), ascending

  bool operator==(const MixableShuffle&) const = default;
};

/// Every (sigma, T); shuffles in lexicographic order, and for each shuffle
/// the subsets T in lexicographic order of their ascending index lists.
std::vector<MixableShuffle> enumerate_mixable(std::size_t m, std::size_t n);

/// Entry k counts the mixable (m,n)-shuffles with |T| = k.
std::vector<Integer> mixable_histogram(std::size_t m, std::size_t n);

/// One output slot of a mixable shuffle: a letter of the left tail, of the
/// right tail, or the product of both (indices are 1-based, 0 = absent).
struct MixSlot {
  std::size_t left = 0;
  std::size_t right = 0;
};

/// Precomputed layout of every mixable (m,n)-shuffle, in enumeration order.
struct MixPlan {
  struct Entry {
    std::vector<MixSlot> slots;
    std::size_t merges = 0;
  };
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<Entry> entries;
};

/// Shared, immutable plan for (m, n); built once and cached (thread-safe).
std::shared_ptr<const MixPlan> mix_plan(std::size_t m, std::size_t n);

/// Mixable-shuffle product of two words.
ShuffleElement word_product(const TensorWord& x, const TensorWord& y, const Weight& weight);

/// Same product with every output word longer than max_length discarded
/// (the product modulo Fil^max_length).
ShuffleElement word_product_truncated(const TensorWord& x, const TensorWord& y,
                                      const Weight& weight, std::size_t max_length);

/// Bilinear extension of word_product; runs the term pairs in parallel.
ShuffleElement shuffle_product(const ShuffleElement& u, const ShuffleElement& v,
                               const Weight& weight);

/// Identity [1] of the shuffle algebra.
ShuffleElement shuffle_one();

/// The one-factor word [a] for a generator monomial.
ShuffleElement shuffle_generator(const Monomial& a);

/// P(x0|..|xn) = 1|x0|..|xn, extended linearly.
ShuffleElement baxter_P(const ShuffleElement& u);

/// Closed form of 1^{(m+1)} * 1^{(n+1)}:
/// sum_k C(m+n-k, n) C(n, k) lambda^k 1^{(m+n+1-k)}.
ShuffleElement unit_power_product(std::size_t m, std::size_t n, const Weight& weight);

/// Filtration degree: a natural number or +infinity (for zero).
class Degree {
 public:
  constexpr Degree() = default;  // +infinity
  constexpr explicit Degree(std::size_t value) : value_(value) {}
  static constexpr Degree infinite() { return Degree(); }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  constexpr std::size_t value() const { return value_; }

  constexpr auto operator<=>(const Degree&) const = default;
  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

 private:
  static constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();
  std::size_t value_ = kInfinite;
};

/// Minimum of (word length - 1) over the support; +infinity for 0.
/// u lies in Fil^k exactly when fil_degree(u) >= k.
Degree fil_degree(const ShuffleElement& u);

/// Homogeneous component of tensor degree k (words of length k+1).
ShuffleElement homogeneous_component(const ShuffleElement& u, std::size_t k);

/// True when no support word ends in the unit monomial, i.e. u lies in the
/// non-unital shuffle algebra built on the augmentation ideal.
bool is_nonunital(const ShuffleElement& u);

/// Element (c, a) of the unitalization C + I of the augmentation ideal I of C[X].
class APlusElement {
 public:
  /// Throws NamespaceViolation if c involves generators or a has a term
  /// without generator variables.
  APlusElement(Polynomial c, Polynomial a);

  const Polynomial& c() const noexcept { return c_; }
  const Polynomial& a() const noexcept { return a_; }
  static APlusElement one() { return {Polynomial(1), Polynomial()}; }

  /// The corresponding element c + a of C[X].
  Polynomial embed() const { return c_ + a_; }

  bool operator==(const APlusElement&) const = default;

 private:
  Polynomial c_;
  Polynomial a_;
};

/// (c, a)(d, b) = (cd, cb + da + ab)
APlusElement aplus_mul(const APlusElement& p, const APlusElement& q);

}  // namespace baxter
