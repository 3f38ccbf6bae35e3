// SPDX-License-Identifier: Apache-2.0
//
// Universal property of the shuffle Baxter algebra: a map sending each
// generator x to an element phi(x) of a Baxter algebra (R, P) extends to a
// unique Baxter homomorphism. On a word it is forced to be
//
//   x0|x1|...|xn  ->  phi*(x0) * P(phi*(x1) * P( ... P(phi*(xn)) ... ))
//
// since x0|rest = x0 * P(rest) in the shuffle algebra.
#pragma once

#include "baxter/error.hpp"
#include "baxter/mixshuffle.hpp"
#include "baxter/polynomial.hpp"
#include "baxter/sampling.hpp"
#include "baxter/words.hpp"

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace baxter {

/// A commutative C-algebra with a Baxter operator and chosen images of the
/// generators.
template <class T>
concept BaxterTarget = requires(const T& t, const typename T::Element& a, const Polynomial& c,
                                const Variable& x) {
  typename T::Element;
  { t.weight() } -> std::convertible_to<const Weight&>;
  { t.zero() } -> std::same_as<typename T::Element>;
  { t.one() } -> std::same_as<typename T::Element>;
  { t.add(a, a) } -> std::same_as<typename T::Element>;
  { t.mul(a, a) } -> std::same_as<typename T::Element>;
  { t.scale(c, a) } -> std::same_as<typename T::Element>;
  { t.apply_P(a) } -> std::same_as<typename T::Element>;
  { t.generator_image(x) } -> std::same_as<typename T::Element>;
  { t.equal(a, a) } -> std::same_as<bool>;
};

/// Image of a generator monomial under the algebra map C[X] -> R.
template <BaxterTarget T>
typename T::Element monomial_image(const T& target, const Monomial& m) {
  auto out = target.one();
  for (const auto& [var, exp] : m.factors()) {
    const auto image = target.generator_image(var);
    for (std::uint32_t i = 0; i < exp; ++i) out = target.mul(out, image);
  }
  return out;
}

/// Image of one word, folded from the right.
template <BaxterTarget T>
typename T::Element word_image(const T& target, const TensorWord& w) {
  auto acc = monomial_image(target, w.back());
  for (std::size_t i = w.size() - 1; i-- > 0;) {
    acc = target.mul(monomial_image(target, w[i]), target.apply_P(acc));
  }
  return acc;
}

/// The unique Baxter homomorphism extending the generator images. `weight`
/// is the weight of the source shuffle algebra and must match the target's.
template <BaxterTarget T>
typename T::Element extend_hom(const T& target, const ShuffleElement& u, const Weight& weight) {
  if (!(target.weight() == weight)) {
    throw Error(ErrorKind::WeightMismatch, "target weight '" +
                                               target.weight().value().to_string() +
                                               "' differs from '" + weight.value().to_string() +
                                               "'");
  }
  auto out = target.zero();
  for (const auto& [w, c] : u.terms()) out = target.add(out, target.scale(c, word_image(target, w)));
  return out;
}

/// Checks P(a)P(b) = P(aP(b)) + P(bP(a)) + lambda P(ab) on `a`, `b`.
template <BaxterTarget T>
bool satisfies_baxter_identity(const T& target, const typename T::Element& a,
                               const typename T::Element& b) {
  const auto lhs = target.mul(target.apply_P(a), target.apply_P(b));
  auto rhs = target.apply_P(target.mul(a, target.apply_P(b)));
  rhs = target.add(rhs, target.apply_P(target.mul(b, target.apply_P(a))));
  rhs = target.add(rhs, target.scale(target.weight().value(), target.apply_P(target.mul(a, b))));
  return target.equal(lhs, rhs);
}

/// A target together with the outcome of its registration self-check: the
/// Baxter identity on random elements of the subalgebra generated by the
/// images of `generators`.
template <BaxterTarget T>
class RegisteredTarget {
 public:
  RegisteredTarget(T target, const std::vector<Variable>& generators, std::uint64_t seed,
                   std::size_t trials = 20)
      : target_(std::move(target)) {
    SamplerConfig config;
    config.generators = generators;
    config.max_length = 3;
    ElementSampler sampler(config, seed);
    for (std::size_t i = 0; i < trials; ++i) {
      const auto a = extend_hom(target_, sampler.element(), target_.weight());
      const auto b = extend_hom(target_, sampler.element(), target_.weight());
      if (!satisfies_baxter_identity(target_, a, b)) ++failures_;
    }
    trials_ = trials;
  }

  const T& target() const noexcept { return target_; }
  bool self_check_passed() const noexcept { return failures_ == 0; }
  std::size_t trials() const noexcept { return trials_; }
  std::size_t failures() const noexcept { return failures_; }

 private:
  T target_;
  std::size_t trials_ = 0;
  std::size_t failures_ = 0;
};

/// The shuffle algebra itself with generators included as one-factor words.
class ShuffleTarget {
 public:
  using Element = ShuffleElement;

  explicit ShuffleTarget(Weight weight) : weight_(std::move(weight)) {}

  const Weight& weight() const { return weight_; }
  Element zero() const { return {}; }
  Element one() const { return shuffle_one(); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element mul(const Element& a, const Element& b) const { return shuffle_product(a, b, weight_); }
  Element scale(const Polynomial& c, const Element& a) const { return scalar_mul(c, a); }
  Element apply_P(const Element& a) const { return baxter_P(a); }
  Element generator_image(const Variable& x) const { return shuffle_generator(Monomial(x)); }
  bool equal(const Element& a, const Element& b) const { return a == b; }

 private:
  Weight weight_;
};

/// (C[X], P) with P(a) = -lambda a, a Baxter algebra of weight lambda.
/// Generator images are explicit; unlisted generators raise
/// MissingGeneratorImage.
class ScalarTarget {
 public:
  using Element = Polynomial;

  ScalarTarget(Weight weight, std::map<Variable, Polynomial> images)
      : weight_(std::move(weight)), images_(std::move(images)) {}
  /// Every generator maps to itself.
  explicit ScalarTarget(Weight weight) : weight_(std::move(weight)), identity_images_(true) {}

  const Weight& weight() const { return weight_; }
  Element zero() const { return {}; }
  Element one() const { return Polynomial(1); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element scale(const Polynomial& c, const Element& a) const { return c * a; }
  Element apply_P(const Element& a) const { return -(weight_.value() * a); }
  Element generator_image(const Variable& x) const {
    if (identity_images_) return Polynomial::variable(x);
    auto it = images_.find(x);
    if (it == images_.end()) {
      throw Error(ErrorKind::MissingGeneratorImage, "no image for generator '" + x.name + "'");
    }
    return it->second;
  }
  bool equal(const Element& a, const Element& b) const { return a == b; }

 private:
  Weight weight_;
  std::map<Variable, Polynomial> images_;
  bool identity_images_ = false;
};

}  // namespace baxter
