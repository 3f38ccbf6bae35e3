// SPDX-License-Identifier: Apache-2.0
//
// Test-side oracles. Nothing here calls the library's product, shuffle
// enumeration or binomial code; the oracles rebuild those quantities from
// first principles so the suites can compare against them.
#pragma once

#include "baxter/expr.hpp"
#include "baxter/polynomial.hpp"
#include "baxter/words.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace baxter::oracle {

inline const SymbolTable& test_symbols() {
  static const SymbolTable table({"x0", "x1", "x2", "x3", "y0", "y1"}, {"lam", "mu", "a", "b"});
  return table;
}

/// Polynomial from text; generators x0..x3, y0, y1 and parameters lam, mu, a, b.
inline Polynomial poly(std::string_view text) { return parse_polynomial(text, test_symbols()); }

inline Monomial mono(std::string_view text) { return poly(text).terms().begin()->first; }

/// Word from factor texts, each a single monomial: word({"1", "x1^2"}).
inline TensorWord word(std::initializer_list<std::string_view> factors) {
  std::vector<Monomial> ms;
  for (auto f : factors) ms.push_back(f == "1" ? Monomial() : mono(f));
  return TensorWord(ms);
}

inline AbarWord abar(std::initializer_list<std::string_view> factors) {
  std::vector<Monomial> ms;
  for (auto f : factors) ms.push_back(f == "1" ? Monomial() : mono(f));
  return AbarWord(ms);
}

/// Shuffle element from expression text with the default configuration.
inline ShuffleElement shuffle(std::string_view text, const Weight& weight = Weight()) {
  RunConfig config;
  config.params = {"lam", "mu", "a", "b"};
  return eval_expr(parse_expr(text, config.symbols()), weight);
}

/// Rows 0..n of Pascal's triangle.
inline std::vector<std::vector<Integer>> pascal(std::size_t n) {
  std::vector<std::vector<Integer>> rows(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    rows[i].assign(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
  }
  return rows;
}

inline Integer pascal_binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  return pascal(n)[n][k];
}

// Words as plain monomial vectors, possibly empty.
using Letters = std::vector<Monomial>;
using LetterSum = std::map<Letters, Polynomial>;

inline void accumulate(LetterSum& out, const Letters& w, const Polynomial& c) {
  if (c.is_zero()) return;
  auto& slot = out[w];
  slot += c;
  if (slot.is_zero()) out.erase(w);
}

/// Quasi-shuffle of two letter sequences:
///   qsh(a u, b v) = a qsh(u, b v) + b qsh(a u, v) + lambda (ab) qsh(u, v).
inline LetterSum quasi_shuffle(const Letters& u, const Letters& v, const Polynomial& lambda) {
  LetterSum out;
  if (u.empty() || v.empty()) {
    accumulate(out, u.empty() ? v : u, Polynomial(1));
    return out;
  }
  const Letters u_tail(u.begin() + 1, u.end());
  const Letters v_tail(v.begin() + 1, v.end());
  auto prepend = [&](const Monomial& head, const LetterSum& tails, const Polynomial& c) {
    for (const auto& [w, coeff] : tails) {
      Letters word{head};
      word.insert(word.end(), w.begin(), w.end());
      accumulate(out, word, c * coeff);
    }
  };
  prepend(u.front(), quasi_shuffle(u_tail, v, lambda), Polynomial(1));
  prepend(v.front(), quasi_shuffle(u, v_tail, lambda), Polynomial(1));
  if (!lambda.is_zero()) prepend(u.front() * v.front(), quasi_shuffle(u_tail, v_tail, lambda), lambda);
  return out;
}

/// x0|x' times y0|y' is (x0 y0) | qsh(x', y').
inline ShuffleElement oracle_word_product(const TensorWord& x, const TensorWord& y,
                                          const Polynomial& lambda) {
  const Letters xs(x.factors().begin() + 1, x.factors().end());
  const Letters ys(y.factors().begin() + 1, y.factors().end());
  ShuffleElement out;
  for (const auto& [tail, c] : quasi_shuffle(xs, ys, lambda)) {
    Letters word{x[0] * y[0]};
    word.insert(word.end(), tail.begin(), tail.end());
    out.add_term(TensorWord(word), c);
  }
  return out;
}

inline ShuffleElement oracle_product(const ShuffleElement& u, const ShuffleElement& v,
                                     const Polynomial& lambda) {
  ShuffleElement out;
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      out += scale(cu * cv, oracle_word_product(wu, wv, lambda));
    }
  }
  return out;
}

struct ShuffleCounts {
  Integer shuffles = 0;
  std::vector<Integer> by_merges;  // index = |T|
};

/// Filters all of S_{m+n} down to the (m,n)-shuffles and counts, for each,
/// the subsets of positions k with sigma(k) <= m < sigma(k+1).
inline ShuffleCounts oracle_shuffle_counts(std::size_t m, std::size_t n) {
  std::vector<std::size_t> sigma(m + n);
  std::iota(sigma.begin(), sigma.end(), 1);
  ShuffleCounts counts;
  counts.by_merges.assign(std::min(m, n) + 1, 0);
  do {
    bool ok = std::is_sorted(sigma.begin(), sigma.begin() + static_cast<std::ptrdiff_t>(m));
    ok = ok && std::is_sorted(sigma.begin() + static_cast<std::ptrdiff_t>(m), sigma.end());
    if (!ok) continue;
    // sigma sends letter i to slot sigma(i); read the slots back in order.
    std::vector<std::size_t> letter_at(m + n + 1);
    for (std::size_t i = 0; i < m + n; ++i) letter_at[sigma[i]] = i + 1;
    std::size_t admissible = 0;
    for (std::size_t k = 1; k < m + n; ++k) {
      if (letter_at[k] <= m && letter_at[k + 1] > m) ++admissible;
    }
    ++counts.shuffles;
    for (std::size_t t = 0; t <= admissible && t < counts.by_merges.size(); ++t) {
      counts.by_merges[t] += pascal_binomial(admissible, t);
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return counts;
}

/// Random integer point for every variable of p.
inline std::map<Variable, Integer> random_point(const std::vector<Polynomial>& ps,
                                                std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  std::map<Variable, Integer> point;
  for (const auto& p : ps) {
    for (const auto& [mono, c] : p.terms()) {
      for (const auto& [var, e] : mono.factors()) {
        if (point.count(var) == 0) point[var] = dist(rng);
      }
    }
  }
  return point;
}

/// Random polynomial over the given variables.
inline Polynomial random_polynomial(std::mt19937_64& rng, const std::vector<Variable>& vars,
                                    std::size_t max_terms = 4, std::uint32_t max_exp = 3) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<std::size_t> terms(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
  Polynomial p;
  const std::size_t count = terms(rng);
  for (std::size_t t = 0; t < count; ++t) {
    std::vector<std::pair<Variable, std::uint32_t>> factors;
    for (const auto& v : vars) factors.emplace_back(v, exp(rng));
    p.add_term(Monomial::from_factors(factors), coeff(rng));
  }
  return p;
}

/// Random expression tree over the given names; depth-bounded.
class ExprGenerator {
 public:
  ExprGenerator(std::vector<std::string> gens, std::vector<std::string> coeffs,
                std::uint64_t seed)
      : gens_(std::move(gens)), coeffs_(std::move(coeffs)), rng_(seed) {}

  Expr operator()(int depth = 4) {
    const int leaf_kinds = 4;
    const int kinds = depth <= 0 ? leaf_kinds : leaf_kinds + 5;
    switch (pick(kinds)) {
      case 0: return Expr::int_lit(pick(20));
      case 1: return Expr::coeff_var(coeffs_[pick(coeffs_.size())]);
      case 2: return Expr::gen_var(gens_[pick(gens_.size())]);
      case 3: return Expr::word(word_factors());
      case 4: return Expr::add((*this)(depth - 1), (*this)(depth - 1));
      case 5: return Expr::sub((*this)(depth - 1), (*this)(depth - 1));
      case 6: return Expr::mul((*this)(depth - 1), (*this)(depth - 1));
      case 7: return Expr::pow((*this)(depth - 1), pick(4));
      default: return Expr::p_apply((*this)(depth - 1));
    }
  }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::vector<Polynomial> word_factors() {
    std::vector<Variable> vars;
    for (const auto& g : gens_) vars.push_back(Variable::generator(g));
    std::vector<Polynomial> out(1 + pick(3));
    for (auto& f : out) f = random_polynomial(rng_, vars, 2, 2);
    return out;
  }

  std::vector<std::string> gens_;
  std::vector<std::string> coeffs_;
  std::mt19937_64 rng_;
};

}  // namespace baxter::oracle
