// SPDX-License-Identifier: Apache-2.0
//
// OpenMP kernels behind the algebra operations, each paired with a serial
// reference kept for differential testing and benchmarking. The parallel
// versions accumulate into thread-local canonical maps, so the result does
// not depend on the schedule.
#pragma once

#include "baxter/completion.hpp"
#include "baxter/standard.hpp"
#include "baxter/words.hpp"

#include <cstddef>

namespace baxter::kernels {

/// Threads OpenMP would use for a parallel region (1 without OpenMP).
int max_threads();

ShuffleElement shuffle_product(const ShuffleElement& u, const ShuffleElement& v,
                               const Weight& weight);

/// Product with every output word longer than max_length dropped.
ShuffleElement truncated_product(const ShuffleElement& u, const ShuffleElement& v,
                                 const Weight& weight, std::size_t max_length);

HurwitzSeries hurwitz_convolve(const HurwitzSeries& a, const HurwitzSeries& b);

StandardElement phi(const ShuffleElement& u, std::size_t trunc, const Weight& weight);

namespace serial {

ShuffleElement shuffle_product(const ShuffleElement& u, const ShuffleElement& v,
                               const Weight& weight);

/// Literal stabilizing-limit product: component k is taken from the full
/// product of the degree-<=k truncations.
CompleteElement complete_mul(const CompleteElement& x, const CompleteElement& y,
                             const Weight& weight);

HurwitzSeries hurwitz_convolve(const HurwitzSeries& a, const HurwitzSeries& b);

/// Straight extend_hom into the truncated sequence algebra.
StandardElement phi(const ShuffleElement& u, std::size_t trunc, const Weight& weight);

}  // namespace serial

}  // namespace baxter::kernels
