// SPDX-License-Identifier: Apache-2.0
#include "baxter/sampling.hpp"

#include "baxter/error.hpp"

namespace baxter {

ElementSampler::ElementSampler(SamplerConfig config, std::uint64_t seed)
    : config_(std::move(config)), engine_(seed) {
  if (config_.max_length == 0 || config_.min_terms > config_.max_terms) {
    throw Error(ErrorKind::InvalidArgument, "invalid sampler configuration");
  }
}

std::size_t ElementSampler::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

Integer ElementSampler::coefficient() {
  const int b = config_.coefficient_bound;
  return std::uniform_int_distribution<int>(-b, b)(engine_);
}

Monomial ElementSampler::monomial() {
  if (config_.generators.empty()) return {};
  const auto degree = uniform(0, config_.max_monomial_degree);
  std::vector<Monomial::Factor> factors;
  for (std::size_t i = 0; i < degree; ++i) {
    factors.emplace_back(config_.generators[uniform(0, config_.generators.size() - 1)], 1);
  }
  return Monomial::from_factors(std::move(factors));
}

Monomial ElementSampler::nonunit_monomial() {
  if (config_.generators.empty() || config_.max_monomial_degree == 0) {
    throw Error(ErrorKind::InvalidArgument, "no non-unit monomials available");
  }
  for (;;) {
    Monomial m = monomial();
    if (!m.is_one()) return m;
  }
}

TensorWord ElementSampler::word_of_length(std::size_t length) {
  std::vector<Monomial> factors;
  factors.reserve(length);
  for (std::size_t i = 0; i < length; ++i) factors.push_back(monomial());
  return TensorWord(std::move(factors));
}

TensorWord ElementSampler::word() { return word_of_length(uniform(1, config_.max_length)); }

ShuffleElement ElementSampler::element() {
  ShuffleElement out;
  const auto count = uniform(config_.min_terms, config_.max_terms);
  for (std::size_t i = 0; i < count; ++i) out.add_term(word(), Polynomial(coefficient()));
  return out;
}

ShuffleElement ElementSampler::nonunital_element() {
  ShuffleElement out;
  const auto count = uniform(config_.min_terms, config_.max_terms);
  for (std::size_t i = 0; i < count; ++i) {
    auto factors = word().factors();
    factors.back() = nonunit_monomial();
    out.add_term(TensorWord(std::move(factors)), Polynomial(coefficient()));
  }
  return out;
}

}  // namespace baxter
