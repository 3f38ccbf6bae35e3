// SPDX-License-Identifier: Apache-2.0
#include "baxter/check.hpp"

#include "baxter/mixshuffle.hpp"
#include "baxter/sampling.hpp"

#include <algorithm>

namespace baxter {

namespace {

constexpr std::size_t kMaxReportedFailures = 5;

}  // namespace

std::size_t CheckReport::cases() const {
  std::size_t n = 0;
  for (const auto& p : properties) n += p.passed + p.failed;
  return n;
}

bool CheckReport::ok() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyTally& p) { return p.failed == 0; });
}

CheckReport run_baxter_check(const CheckOptions& options) {
  SamplerConfig config;
  config.generators = options.generators;
  config.max_length = options.max_length;
  ElementSampler sampler(config, options.seed);
  const Weight& weight = options.weight;
  auto mul = [&](const ShuffleElement& a, const ShuffleElement& b) {
    return shuffle_product(a, b, weight);
  };

  CheckReport report;
  report.properties = {{"baxter-identity"}, {"commutativity"}, {"associativity"}, {"unit"}};
  auto record = [&](std::size_t property, bool ok, std::size_t trial,
                    const std::vector<const ShuffleElement*>& inputs) {
    auto& tally = report.properties[property];
    if (ok) {
      ++tally.passed;
      return;
    }
    ++tally.failed;
    if (report.failures.size() < kMaxReportedFailures) {
      std::string line = tally.name + " trial " + std::to_string(trial) + ":";
      for (const auto* u : inputs) line += " [" + to_text(*u) + "]";
      report.failures.push_back(std::move(line));
    }
  };

  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const ShuffleElement x = sampler.element();
    const ShuffleElement y = sampler.element();
    const ShuffleElement z = sampler.element();

    const ShuffleElement px = baxter_P(x);
    const ShuffleElement py = baxter_P(y);
    const ShuffleElement lhs = mul(px, py);
    const ShuffleElement rhs = baxter_P(mul(x, py)) + baxter_P(mul(y, px)) +
                               scale(options.check_weight.value(), baxter_P(mul(x, y)));
    record(0, lhs == rhs, trial, {&x, &y});
    record(1, mul(x, y) == mul(y, x), trial, {&x, &y});
    record(2, mul(mul(x, y), z) == mul(x, mul(y, z)), trial, {&x, &y, &z});
    record(3, mul(shuffle_one(), x) == x, trial, {&x});
  }
  return report;
}

}  // namespace baxter
