// SPDX-License-Identifier: Apache-2.0
#include "baxter/kernels.hpp"

#include "baxter/mixshuffle.hpp"
#include "baxter/universal.hpp"

#include <cstdint>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace baxter::kernels {

namespace {

template <class Word>
std::vector<std::pair<Word, Polynomial>> flatten(const LinearCombination<Word>& u) {
  return {u.terms().begin(), u.terms().end()};
}

// Sums f(i) over i in [0, count) with one accumulator per thread. Exceptions
// thrown by f are carried out of the parallel region and rethrown.
template <class Acc, class F>
Acc parallel_sum(std::int64_t count, Acc zero, F&& f) {
  Acc result = zero;
  std::exception_ptr error;
#pragma omp parallel if (count > 1)
  {
    Acc local = zero;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        local += f(i);
      } catch (...) {
#pragma omp critical(baxter_kernel_error)
        if (!error) error = std::current_exception();
      }
    }
#pragma omp critical(baxter_kernel_merge)
    result += local;
  }
  if (error) std::rethrow_exception(error);
  return result;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

ShuffleElement truncated_product(const ShuffleElement& u, const ShuffleElement& v,
                                 const Weight& weight, std::size_t max_length) {
  const auto a = flatten(u);
  const auto b = flatten(v);
  const auto nb = static_cast<std::int64_t>(b.size());
  return parallel_sum(static_cast<std::int64_t>(a.size()) * nb, ShuffleElement{},
                      [&](std::int64_t idx) {
                        const auto& [wu, cu] = a[static_cast<std::size_t>(idx / nb)];
                        const auto& [wv, cv] = b[static_cast<std::size_t>(idx % nb)];
                        return scale(cu * cv, word_product_truncated(wu, wv, weight, max_length));
                      });
}

ShuffleElement shuffle_product(const ShuffleElement& u, const ShuffleElement& v,
                               const Weight& weight) {
  std::size_t longest = 0;
  for (const auto& t : u.terms()) longest = std::max(longest, t.first.size());
  std::size_t longest_v = 0;
  for (const auto& t : v.terms()) longest_v = std::max(longest_v, t.first.size());
  return truncated_product(u, v, weight, longest + longest_v);
}

HurwitzSeries hurwitz_convolve(const HurwitzSeries& a, const HurwitzSeries& b) {
  const std::size_t trunc = a.trunc();
  std::vector<Polynomial> entries(trunc);
#pragma omp parallel for schedule(dynamic, 1) if (trunc > 1)
  for (std::int64_t n = 0; n < static_cast<std::int64_t>(trunc); ++n) {
    const auto nn = static_cast<std::size_t>(n);
    Polynomial c;
    for (std::size_t k = 0; k <= nn; ++k) c += Polynomial(binomial(nn, k)) * a[k] * b[nn - k];
    entries[nn] = std::move(c);
  }
  return HurwitzSeries(std::move(entries));
}

StandardElement phi(const ShuffleElement& u, std::size_t trunc, const Weight& weight) {
  const StandardTarget target(trunc, weight);
  const auto terms = flatten(u);
  return parallel_sum(static_cast<std::int64_t>(terms.size()), StandardElement(trunc),
                      [&](std::int64_t i) {
                        const auto& [w, c] = terms[static_cast<std::size_t>(i)];
                        return scale(c, word_image(target, w));
                      });
}

// ------------------------------------------------------------------ serial

namespace serial {

ShuffleElement shuffle_product(const ShuffleElement& u, const ShuffleElement& v,
                               const Weight& weight) {
  ShuffleElement out;
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) out += scale(cu * cv, word_product(wu, wv, weight));
  }
  return out;
}

CompleteElement complete_mul(const CompleteElement& x, const CompleteElement& y,
                             const Weight& weight) {
  if (x.trunc() != y.trunc()) {
    throw Error(ErrorKind::TruncMismatch, "truncation levels differ");
  }
  const std::size_t trunc = x.trunc();
  const ShuffleElement xs = x.representative();
  const ShuffleElement ys = y.representative();
  std::vector<ShuffleElement> components(trunc);
  for (std::size_t k = 0; k < trunc; ++k) {
    const auto z = serial::shuffle_product(degree_truncate(xs, k), degree_truncate(ys, k), weight);
    components[k] = homogeneous_component(z, k);
  }
  return CompleteElement(trunc, std::move(components));
}

HurwitzSeries hurwitz_convolve(const HurwitzSeries& a, const HurwitzSeries& b) {
  std::vector<Polynomial> entries(a.trunc());
  for (std::size_t n = 0; n < a.trunc(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      entries[n] += Polynomial(binomial(n, k)) * a[k] * b[n - k];
    }
  }
  return HurwitzSeries(std::move(entries));
}

StandardElement phi(const ShuffleElement& u, std::size_t trunc, const Weight& weight) {
  return extend_hom(StandardTarget(trunc, weight), u, weight);
}

}  // namespace serial

}  // namespace baxter::kernels

namespace baxter {

ShuffleElement shuffle_product(const ShuffleElement& u, const ShuffleElement& v,
                               const Weight& weight) {
  return kernels::shuffle_product(u, v, weight);
}

}  // namespace baxter
