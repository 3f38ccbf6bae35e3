// SPDX-License-Identifier: Apache-2.0
//
// Parallel kernels next to their serial references. The argument is the
// maximum word length of the sampled operands (or the truncation order).
#include "baxter/completion.hpp"
#include "baxter/kernels.hpp"
#include "baxter/sampling.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace baxter;

std::pair<ShuffleElement, ShuffleElement> operands(std::size_t max_length) {
  SamplerConfig config;
  config.max_length = max_length;
  config.min_terms = 3;
  config.max_terms = 3;
  ElementSampler sampler(config, 7);
  return {sampler.element(), sampler.element()};
}

HurwitzSeries symbolic_series(std::size_t n, const char* name) {
  std::vector<Polynomial> entries;
  for (std::size_t k = 0; k < n; ++k) {
    entries.push_back(Polynomial::variable(Variable::coefficient(name)).pow(k % 4) + Polynomial(k));
  }
  return HurwitzSeries(std::move(entries));
}

void BM_ShuffleProduct(benchmark::State& state) {
  const auto [u, v] = operands(state.range(0));
  const Weight w;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::shuffle_product(u, v, w));
}

void BM_ShuffleProductSerial(benchmark::State& state) {
  const auto [u, v] = operands(state.range(0));
  const Weight w;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::shuffle_product(u, v, w));
}

void BM_CompleteMul(benchmark::State& state) {
  const auto [u, v] = operands(state.range(0));
  const auto x = complete_from(u, state.range(0));
  const auto y = complete_from(v, state.range(0));
  const Weight w;
  for (auto _ : state) benchmark::DoNotOptimize(complete_mul(x, y, w));
}

void BM_CompleteMulSerial(benchmark::State& state) {
  const auto [u, v] = operands(state.range(0));
  const auto x = complete_from(u, state.range(0));
  const auto y = complete_from(v, state.range(0));
  const Weight w;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::complete_mul(x, y, w));
}

void BM_Hurwitz(benchmark::State& state) {
  const auto a = symbolic_series(state.range(0), "a");
  const auto b = symbolic_series(state.range(0), "b");
  for (auto _ : state) benchmark::DoNotOptimize(kernels::hurwitz_convolve(a, b));
}

void BM_HurwitzSerial(benchmark::State& state) {
  const auto a = symbolic_series(state.range(0), "a");
  const auto b = symbolic_series(state.range(0), "b");
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::hurwitz_convolve(a, b));
}

void BM_Phi(benchmark::State& state) {
  const auto u = operands(4).first;
  const Weight w;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::phi(u, state.range(0), w));
}

void BM_PhiSerial(benchmark::State& state) {
  const auto u = operands(4).first;
  const Weight w;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::phi(u, state.range(0), w));
}

BENCHMARK(BM_ShuffleProduct)->DenseRange(2, 5);
BENCHMARK(BM_ShuffleProductSerial)->DenseRange(2, 5);
BENCHMARK(BM_CompleteMul)->DenseRange(2, 5);
BENCHMARK(BM_CompleteMulSerial)->DenseRange(2, 5);
BENCHMARK(BM_Hurwitz)->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(BM_HurwitzSerial)->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(BM_Phi)->DenseRange(4, 8, 2);
BENCHMARK(BM_PhiSerial)->DenseRange(4, 8, 2);

}  // namespace

BENCHMARK_MAIN();
