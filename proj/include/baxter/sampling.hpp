// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "baxter/polynomial.hpp"
#include "baxter/words.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace baxter {

/// Distribution of random shuffle-algebra elements for the property suites:
/// 1-3 words per element, word length 1..max_length, monomials of degree
/// <= 2 over the generators, integer coefficients uniform in [-3, 3].
struct SamplerConfig {
  std::vector<Variable> generators{Variable::generator("x1"), Variable::generator("x2")};
  std::size_t max_length = 4;
  std::size_t min_terms = 1;
  std::size_t max_terms = 3;
  std::uint32_t max_monomial_degree = 2;
  int coefficient_bound = 3;
};

class ElementSampler {
 public:
  /// Identifier of the pseudo-random generator; reported by the CLI so runs
  /// can be reproduced from the seed.
  static constexpr std::string_view kAlgorithm = "mt19937_64";

  ElementSampler(SamplerConfig config, std::uint64_t seed);

  const SamplerConfig& config() const noexcept { return config_; }
  std::mt19937_64& engine() noexcept { return engine_; }

  std::size_t uniform(std::size_t lo, std::size_t hi);
  Integer coefficient();
  Monomial monomial();
  /// A monomial of degree >= 1 (needs at least one generator).
  Monomial nonunit_monomial();
  TensorWord word();
  TensorWord word_of_length(std::size_t length);
  ShuffleElement element();
  /// Every support word ends in a non-unit monomial.
  ShuffleElement nonunital_element();

 private:
  SamplerConfig config_;
  std::mt19937_64 engine_;
};

}  // namespace baxter
