// SPDX-License-Identifier: Apache-2.0
#include "baxter/mixshuffle.hpp"

#include "baxter/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace baxter {

namespace {

void extend_shuffles(std::size_t m, std::size_t n, std::size_t used_left, std::size_t used_right,
                     std::vector<std::size_t>& prefix, std::vector<ShufflePermutation>& out) {
  if (used_left == m && used_right == n) {
    out.push_back({m, n, prefix});
    return;
  }
  // Left-block values are all <= m, so taking them first keeps lex order.
  if (used_left < m) {
    prefix.push_back(used_left + 1);
    extend_shuffles(m, n, used_left + 1, used_right, prefix, out);
    prefix.pop_back();
  }
  if (used_right < n) {
    prefix.push_back(m + used_right + 1);
    extend_shuffles(m, n, used_left, used_right + 1, prefix, out);
    prefix.pop_back();
  }
}

void extend_subsets(const ShufflePermutation& sigma, const std::vector<std::size_t>& pairs,
                    std::size_t from, std::vector<std::size_t>& chosen,
                    std::vector<MixableShuffle>& out) {
  out.push_back({sigma, chosen});
  for (std::size_t i = from; i < pairs.size(); ++i) {
    chosen.push_back(pairs[i]);
    extend_subsets(sigma, pairs, i + 1, chosen, out);
    chosen.pop_back();
  }
}

MixPlan build_plan(std::size_t m, std::size_t n) {
  MixPlan plan;
  plan.m = m;
  plan.n = n;
  for (const auto& mix : enumerate_mixable(m, n)) {
    MixPlan::Entry entry;
    entry.merges = mix.merged.size();
    const auto& img = mix.sigma.images;
    std::size_t next_merge = 0;
    for (std::size_t k = 1; k <= img.size(); ++k) {
      if (next_merge < mix.merged.size() && mix.merged[next_merge] == k) {
        entry.slots.push_back({img[k - 1], img[k] - m});
        ++next_merge;
        ++k;
      } else if (img[k - 1] <= m) {
        entry.slots.push_back({img[k - 1], 0});
      } else {
        entry.slots.push_back({0, img[k - 1] - m});
      }
    }
    plan.entries.push_back(std::move(entry));
  }
  return plan;
}

}  // namespace

std::vector<ShufflePermutation> enumerate_shuffles(std::size_t m, std::size_t n) {
  std::vector<ShufflePermutation> out;
  std::vector<std::size_t> prefix;
  prefix.reserve(m + n);
  extend_shuffles(m, n, 0, 0, prefix, out);
  return out;
}

std::vector<std::size_t> admissible_pairs(const ShufflePermutation& sigma) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k < sigma.images.size(); ++k) {
    if (sigma.images[k - 1] <= sigma.m && sigma.m < sigma.images[k]) out.push_back(k);
  }
  return out;
}

std::vector<MixableShuffle> enumerate_mixable(std::size_t m, std::size_t n) {
  std::vector<MixableShuffle> out;
  for (const auto& sigma : enumerate_shuffles(m, n)) {
    const auto pairs = admissible_pairs(sigma);
    std::vector<std::size_t> chosen;
    extend_subsets(sigma, pairs, 0, chosen, out);
  }
  return out;
}

std::vector<Integer> mixable_histogram(std::size_t m, std::size_t n) {
  std::vector<Integer> hist(std::min(m, n) + 1, 0);
  for (const auto& entry : mix_plan(m, n)->entries) hist[entry.merges] += 1;
  return hist;
}

std::shared_ptr<const MixPlan> mix_plan(std::size_t m, std::size_t n) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const MixPlan>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({m, n}); it != cache.end()) return it->second;
  }
  auto plan = std::make_shared<const MixPlan>(build_plan(m, n));
  std::lock_guard lock(mutex);
  return cache.try_emplace({m, n}, std::move(plan)).first->second;
}

ShuffleElement word_product_truncated(const TensorWord& x, const TensorWord& y,
                                      const Weight& weight, std::size_t max_length) {
  const std::size_t m = x.degree();
  const std::size_t n = y.degree();
  ShuffleElement out;
  // Output words have length m + n + 1 - |T| >= max(m, n) + 1.
  if (std::max(m, n) + 1 > max_length) return out;
  const auto plan = mix_plan(m, n);
  const auto lambda_pow = weight.powers(std::min(m, n));
  const Monomial head = x[0] * y[0];
  std::vector<Monomial> factors;
  for (const auto& entry : plan->entries) {
    if (entry.slots.size() + 1 > max_length) continue;
    if (lambda_pow[entry.merges].is_zero()) continue;
    factors.clear();
    factors.reserve(entry.slots.size() + 1);
    factors.push_back(head);
    for (const auto& slot : entry.slots) {
      if (slot.left != 0 && slot.right != 0) {
        factors.push_back(x[slot.left] * y[slot.right]);
      } else if (slot.left != 0) {
        factors.push_back(x[slot.left]);
      } else {
        factors.push_back(y[slot.right]);
      }
    }
    out.add_term(TensorWord(factors), lambda_pow[entry.merges]);
  }
  return out;
}

ShuffleElement word_product(const TensorWord& x, const TensorWord& y, const Weight& weight) {
  return word_product_truncated(x, y, weight, x.size() + y.size() - 1);
}

ShuffleElement shuffle_one() { return ShuffleElement(TensorWord::units(1)); }

ShuffleElement shuffle_generator(const Monomial& a) { return ShuffleElement(TensorWord({a})); }

ShuffleElement baxter_P(const ShuffleElement& u) {
  ShuffleElement out;
  for (const auto& [w, c] : u.terms()) {
    std::vector<Monomial> factors;
    factors.reserve(w.size() + 1);
    factors.emplace_back();
    factors.insert(factors.end(), w.factors().begin(), w.factors().end());
    out.add_term(TensorWord(std::move(factors)), c);
  }
  return out;
}

ShuffleElement unit_power_product(std::size_t m, std::size_t n, const Weight& weight) {
  const auto lambda_pow = weight.powers(m);
  ShuffleElement out;
  for (std::size_t k = 0; k <= m; ++k) {
    const Integer count = binomial(m + n - k, n) * binomial(n, k);
    if (count == 0) continue;
    out.add_term(TensorWord::units(m + n + 1 - k), Polynomial(count) * lambda_pow[k]);
  }
  return out;
}

Degree fil_degree(const ShuffleElement& u) {
  Degree d;
  for (const auto& [w, c] : u.terms()) d = std::min(d, Degree(w.degree()));
  return d;
}

ShuffleElement homogeneous_component(const ShuffleElement& u, std::size_t k) {
  ShuffleElement out;
  for (const auto& [w, c] : u.terms()) {
    if (w.degree() == k) out.add_term(w, c);
  }
  return out;
}

bool is_nonunital(const ShuffleElement& u) {
  return std::none_of(u.terms().begin(), u.terms().end(),
                      [](const auto& t) { return t.first.back().is_one(); });
}

APlusElement::APlusElement(Polynomial c, Polynomial a) : c_(std::move(c)), a_(std::move(a)) {
  if (c_.involves(Namespace::generator)) {
    throw Error(ErrorKind::NamespaceViolation, "scalar part must not involve generators");
  }
  for (const auto& [mono, coeff] : a_.terms()) {
    if (!mono.involves(Namespace::generator)) {
      throw Error(ErrorKind::NamespaceViolation,
                  "ideal part '" + a_.to_string() + "' has a nonzero constant term");
    }
  }
}

APlusElement aplus_mul(const APlusElement& p, const APlusElement& q) {
  return {p.c() * q.c(), p.c() * q.a() + q.c() * p.a() + p.a() * q.a()};
}

}  // namespace baxter
