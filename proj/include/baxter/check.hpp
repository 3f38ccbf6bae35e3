// SPDX-License-Identifier: Apache-2.0
//
// Randomized verification of the shuffle algebra: the Baxter identity,
// commutativity, associativity and the unit, on sampled elements.
#pragma once

#include "baxter/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace baxter {

struct CheckOptions {
  std::size_t trials = 100;
  std::size_t max_length = 4;
  std::uint64_t seed = 1;
  std::vector<Variable> generators{Variable::generator("x1"), Variable::generator("x2")};
  /// Weight of the product.
  Weight weight;
  /// lambda on the right-hand side of the identity. Normally the product
  /// weight; anything else should make the identity fail.
  Weight check_weight;
};

struct PropertyTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct CheckReport {
  std::vector<PropertyTally> properties;
  /// First few counterexamples, human readable.
  std::vector<std::string> failures;

  std::size_t cases() const;
  bool ok() const;
};

CheckReport run_baxter_check(const CheckOptions& options);

}  // namespace baxter
