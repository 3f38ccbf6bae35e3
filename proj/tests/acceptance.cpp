// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite. One line per criterion, exact equality throughout; the
// process exits nonzero if any criterion fails.

#include "baxter/cli.hpp"
#include "baxter/completion.hpp"
#include "baxter/error.hpp"
#include "baxter/expr.hpp"
#include "baxter/mixshuffle.hpp"
#include "baxter/sampling.hpp"
#include "baxter/standard.hpp"
#include "baxter/universal.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace baxter;
namespace bt = baxter::oracle;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records the first failure only; later checks still run.
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

const Weight kLam;  // symbolic lam

ShuffleElement mul(const ShuffleElement& a, const ShuffleElement& b, const Weight& w = kLam) {
  return shuffle_product(a, b, w);
}

SamplerConfig sampler_config(std::size_t max_length) {
  SamplerConfig c;
  c.max_length = max_length;
  return c;
}

std::string text(const ShuffleElement& u) { return to_text(u); }

// 1. P(x)P(y) = P(xP(y)) + P(yP(x)) + lam P(xy)
Outcome baxter_identity() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  ElementSampler sampler(sampler_config(4), 20240601);
  for (int i = 0; i < 200; ++i) {
    const auto x = sampler.element();
    const auto y = sampler.element();
    const auto lhs = mul(baxter_P(x), baxter_P(y));
    const auto rhs = baxter_P(mul(x, baxter_P(y))) + baxter_P(mul(y, baxter_P(x))) +
                     scale(kLam.value(), baxter_P(mul(x, y)));
    o.require(lhs == rhs, "pair " + std::to_string(i) + ": " + text(x) + " ; " + text(y));
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(seconds < 10.0, "took " + std::to_string(seconds) + " s");
  if (o.pass) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "200 pairs in %.2f s", seconds);
    o.detail = buf;
  }
  return o;
}

// 2. commutative, associative, unital; the library product also agrees with
// the quasi-shuffle oracle on the first factor pairs.
Outcome product_axioms() {
  Outcome o;
  ElementSampler sampler(sampler_config(4), 7);
  for (int i = 0; i < 100; ++i) {
    const auto x = sampler.element();
    const auto y = sampler.element();
    const auto z = sampler.element();
    const auto xy = mul(x, y);
    o.require(xy == mul(y, x), "commutativity, triple " + std::to_string(i));
    o.require(mul(xy, z) == mul(x, mul(y, z)), "associativity, triple " + std::to_string(i));
    o.require(mul(shuffle_one(), x) == x && mul(x, shuffle_one()) == x,
              "unit, triple " + std::to_string(i));
    o.require(xy == bt::oracle_product(x, y, kLam.value()), "oracle, triple " + std::to_string(i));
  }
  if (o.pass) o.detail = "100 triples";
  return o;
}

// Closed form for 1^(m+1) * 1^(n+1), built from Pascal's triangle.
ShuffleElement expected_unit_product(std::size_t m, std::size_t n) {
  ShuffleElement out;
  Polynomial lam_k(1);
  for (std::size_t k = 0; k <= std::min(m, n); ++k) {
    const Integer c = bt::pascal_binomial(m + n - k, n) * bt::pascal_binomial(n, k);
    out.add_term(TensorWord::units(m + n + 1 - k), Polynomial(c) * lam_k);
    lam_k *= kLam.value();
  }
  return out;
}

// 3. unit powers: brute force = closed form; histogram = coefficients; |S(m,n)|.
Outcome unit_power_products() {
  Outcome o;
  for (std::size_t m = 0; m <= 6; ++m) {
    for (std::size_t n = 0; n <= 6; ++n) {
      const std::string at = " at (" + std::to_string(m) + "," + std::to_string(n) + ")";
      const auto brute = word_product(TensorWord::units(m + 1), TensorWord::units(n + 1), kLam);
      const auto expected = expected_unit_product(m, n);
      o.require(brute == expected, "brute force" + at + ": " + text(brute));
      o.require(unit_power_product(m, n, kLam) == expected, "closed form" + at);

      const auto hist = mixable_histogram(m, n);
      const auto counted = enumerate_mixable(m, n);
      std::vector<Integer> from_list(std::min(m, n) + 1, 0);
      for (const auto& ms : counted) from_list.at(ms.merged.size()) += 1;
      for (std::size_t k = 0; k <= std::min(m, n); ++k) {
        const Integer c = bt::pascal_binomial(m + n - k, n) * bt::pascal_binomial(n, k);
        o.require(k < hist.size() && hist[k] == c, "histogram" + at);
        o.require(from_list[k] == c, "enumerated mixable shuffles" + at);
      }
      o.require(Integer(enumerate_shuffles(m, n).size()) == bt::pascal_binomial(m + n, n),
                "|S(m,n)|" + at);
    }
  }
  if (o.pass) o.detail = "0 <= m,n <= 6";
  return o;
}

bool degrees_within(const ShuffleElement& u, std::size_t lo, std::size_t hi) {
  for (const auto& [w, c] : u.terms()) {
    if (w.degree() < lo || w.degree() > hi) return false;
  }
  return true;
}

// 4. max(m,n) <= deg <= m+n on products of words; P shifts fil_degree by one.
Outcome grading() {
  Outcome o;
  for (std::size_t m = 0; m <= 6; ++m) {
    for (std::size_t n = 0; n <= 6; ++n) {
      const auto p = word_product(TensorWord::units(m + 1), TensorWord::units(n + 1), kLam);
      o.require(degrees_within(p, std::max(m, n), m + n),
                "unit product (" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
  }
  ElementSampler sampler(sampler_config(5), 11);
  for (int i = 0; i < 100; ++i) {
    const auto x = sampler.word();
    const auto y = sampler.word();
    o.require(degrees_within(word_product(x, y, kLam), std::max(x.degree(), y.degree()),
                             x.degree() + y.degree()),
              "word product " + x.to_string() + " * " + y.to_string());
    const auto u = sampler.element();
    if (u.is_zero()) {
      o.require(baxter_P(u).is_zero(), "P(0) != 0");
      continue;
    }
    o.require(fil_degree(baxter_P(u)) == Degree(fil_degree(u).value() + 1),
              "fil_degree of P(" + text(u) + ")");
  }
  if (o.pass) o.detail = "49 unit products, 100 random word products";
  return o;
}

// 5. component k of x^[n] y^[n] does not depend on n >= k.
Outcome series_stabilization() {
  Outcome o;
  constexpr std::size_t N = 6;
  ElementSampler sampler(sampler_config(N + 1), 5);
  for (int i = 0; i < 50; ++i) {
    const auto x = sampler.element() + sampler.element();
    const auto y = sampler.element() + sampler.element();
    std::vector<ShuffleElement> partial;
    for (std::size_t n = 0; n <= N + 1; ++n) {
      partial.push_back(mul(degree_truncate(x, n), degree_truncate(y, n)));
    }
    const auto product = complete_mul(complete_from(x, N), complete_from(y, N), kLam);
    for (std::size_t k = 0; k < N; ++k) {
      const auto expected = homogeneous_component(partial[k], k);
      for (std::size_t n = k; n <= N + 1; ++n) {
        o.require(homogeneous_component(partial[n], k) == expected,
                  "pair " + std::to_string(i) + ", k=" + std::to_string(k) + ", n=" + std::to_string(n));
      }
      o.require(product.component(k) == expected, "complete_mul component " + std::to_string(k));
    }
  }
  if (o.pass) o.detail = "50 pairs, k < 6, cutoffs k..7";
  return o;
}

// 6. the completed operator commutes with passing to the completion.
Outcome completed_operator_square() {
  Outcome o;
  ElementSampler sampler(sampler_config(6), 13);
  for (int i = 0; i < 100; ++i) {
    const auto u = sampler.element();
    for (std::size_t N = 1; N <= 6; ++N) {
      o.require(complete_P(complete_from(u, N)) == complete_from(baxter_P(u), N),
                "element " + text(u) + ", N=" + std::to_string(N));
    }
  }
  if (o.pass) o.detail = "100 elements, N = 1..6";
  return o;
}

// 7. Hurwitz series.
Outcome hurwitz_series() {
  Outcome o;
  constexpr std::size_t N = 8;
  const Weight zero(Polynomial(0));
  for (std::size_t m = 0; m < N; ++m) {
    for (std::size_t n = 0; m + n < N; ++n) {
      const auto lhs = hurwitz_mul(HurwitzSeries::basis(m, N), HurwitzSeries::basis(n, N));
      std::vector<Polynomial> rhs(N);
      rhs[m + n] = Polynomial(bt::pascal_binomial(m + n, n));
      o.require(lhs == HurwitzSeries(rhs), "e_" + std::to_string(m) + " e_" + std::to_string(n));
    }
  }
  std::mt19937_64 rng(17);
  const std::vector<Variable> params{Variable::coefficient("a"), Variable::coefficient("b")};
  auto random_class = [&] {
    std::vector<ShuffleElement> components(N);
    for (std::size_t k = 0; k < N; ++k) {
      components[k] = ShuffleElement(TensorWord::units(k + 1), bt::random_polynomial(rng, params, 3, 2));
    }
    return CompleteElement(N, components);
  };
  for (int i = 0; i < 50; ++i) {
    const auto x = random_class();
    const auto y = random_class();
    const auto lhs = hurwitz_iso(complete_mul(x, y, zero), zero);
    const auto rhs = hurwitz_mul(hurwitz_iso(x, zero), hurwitz_iso(y, zero));
    o.require(lhs == rhs, "pair " + std::to_string(i));
    // additivity and the identity, entrywise
    const auto sx = hurwitz_iso(x, zero);
    const auto sy = hurwitz_iso(y, zero);
    const auto ssum = hurwitz_iso(x + y, zero);
    for (std::size_t k = 0; k < N; ++k) o.require(ssum[k] == sx[k] + sy[k], "additivity");
    o.require(hurwitz_iso(complete_one(N), zero) == HurwitzSeries::basis(0, N), "identity");
  }
  if (o.pass) o.detail = "basis products m+n < 8, 50 random pairs at N = 8";
  return o;
}

// 8. leading term of the image of a word.
Outcome leading_term() {
  Outcome o;
  constexpr std::size_t N = 6;
  ElementSampler sampler(sampler_config(5), 19);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int i = 0; i < 20; ++i) {
      const auto w = sampler.word_of_length(n);
      const auto image = phi(ShuffleElement(w), N, kLam);
      for (std::size_t k = 1; k < n; ++k) {
        o.require(image.entry(k).is_zero(), w.to_string() + ": entry " + std::to_string(k));
      }
      auto reversed = w.factors();
      std::reverse(reversed.begin(), reversed.end());
      const AbarElement expected(AbarWord(reversed), kLam.value().pow(n - 1));
      o.require(image.entry(n) == expected, w.to_string() + ": leading entry " + to_text(image.entry(n)));
    }
  }
  if (o.pass) o.detail = "100 words, lengths 1..5";
  return o;
}

// 9. reconstruction round trip and the gamma_2 counterexample.
Outcome reconstruction() {
  Outcome o;
  constexpr std::size_t N = 6;
  for (const Weight& w : {kLam, Weight(Polynomial(2))}) {
    ElementSampler sampler(sampler_config(5), 23);
    for (int i = 0; i < 50; ++i) {
      const auto u = sampler.element();
      o.require(psi_inverse(phi(u, N, w), w) == u,
                "weight " + w.value().to_string() + ": " + text(u));
    }
  }
  bool raised = false;
  try {
    psi_inverse(gamma(2, N), kLam);
  } catch (const Error& e) {
    raised = e.kind() == ErrorKind::NotDivisible;
  }
  o.require(raised, "gamma_2 did not raise NotDivisible");
  if (o.pass) o.detail = "50 elements each at lam and 2; gamma_2 -> NotDivisible";
  return o;
}

// 10. filtrations and the P' preimage witness.
Outcome filtration_comparison() {
  Outcome o;
  constexpr std::size_t N = 6;
  ElementSampler sampler(sampler_config(6), 29);
  for (int i = 0; i < 100; ++i) {
    const auto u = sampler.element();
    o.require(f_degree(phi(u, N, kLam)) >= std::min(fil_degree(u), Degree(N)),
              "f_degree below fil_degree for " + text(u));
  }
  ElementSampler entries(SamplerConfig{}, 31);
  auto random_abar = [&] {
    AbarElement a;
    const auto e = entries.element();
    for (const auto& [w, c] : e.terms()) a.add_term(AbarWord(w.factors()), c);
    return a;
  };
  for (std::size_t k = 0; k <= 4; ++k) {
    for (int i = 0; i < 20; ++i) {
      StandardElement s(N);
      for (std::size_t j = k + 2; j <= N; ++j) s.entry(j) = scale(kLam.value(), random_abar());
      const auto r = fil_vs_f_witness(s, k, kLam);
      o.require(p_prime(r, kLam) == s, "k=" + std::to_string(k) + ": P'(r) != s");
      o.require(f_degree(r) >= Degree(k), "k=" + std::to_string(k) + ": r outside F^k");
    }
  }
  if (o.pass) o.detail = "100 elements; 20 witnesses for each k <= 4";
  return o;
}

// 11. universal property into (C[X], -lam) and non-unital closure.
Outcome universal_property() {
  Outcome o;
  const ScalarTarget scalar(kLam);
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto image = extend_hom(scalar, ShuffleElement(TensorWord::units(n + 1)), kLam);
    o.require(image == (-kLam.value()).pow(n), "1^(" + std::to_string(n + 1) + ")");
  }
  ElementSampler sampler(sampler_config(4), 37);
  for (int i = 0; i < 100; ++i) {
    const auto u = sampler.element();
    const auto v = sampler.element();
    const auto fu = extend_hom(scalar, u, kLam);
    const auto fv = extend_hom(scalar, v, kLam);
    o.require(extend_hom(scalar, mul(u, v), kLam) == fu * fv, "multiplicative, pair " + std::to_string(i));
    o.require(extend_hom(scalar, baxter_P(u), kLam) == scalar.apply_P(fu),
              "commutes with P, pair " + std::to_string(i));
    o.require(extend_hom(scalar, u + v, kLam) == fu + fv, "additive, pair " + std::to_string(i));
  }
  for (int i = 0; i < 100; ++i) {
    const auto u = sampler.nonunital_element();
    const auto v = sampler.nonunital_element();
    o.require(is_nonunital(u) && is_nonunital(v), "sampler produced a unital element");
    o.require(is_nonunital(mul(u, v)), "product left the non-unital part: " + text(u) + " ; " + text(v));
    o.require(is_nonunital(baxter_P(u)), "P left the non-unital part: " + text(u));
  }
  if (o.pass) o.detail = "unit powers n <= 6, 100 hom pairs, 100 non-unital pairs";
  return o;
}

int run(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream o;
  std::ostringstream e;
  std::istringstream in;
  const int rc = run_cli(args, o, e, in);
  out = o.str();
  return rc;
}

// 12. command line: golden output, parser round trip, mutation test.
Outcome command_line() {
  Outcome o;
  std::string out;
  o.require(run({"unit-product", "1", "1"}, out) == 0, "unit-product exit status");
  o.require(out == "2*[1|1|1] + lam*[1|1]\nagree: true\n", "unit-product printed: " + out);

  const RunConfig config;
  const auto symbols = config.symbols();
  bt::ExprGenerator gen({"x1", "x2", "x3"}, {"lam", "mu"}, 41);
  SymbolTable with_mu = symbols;
  with_mu.add_coefficient("mu");
  for (int i = 0; i < 500; ++i) {
    const auto e = gen(4);
    const auto printed = print_expr(e);
    bool same = false;
    try {
      same = parse_expr(printed, with_mu) == e;
    } catch (const Error& err) {
      same = false;
    }
    o.require(same, "round trip failed on " + printed);
  }

  const std::vector<std::string> base{"baxter-check", "--trials", "20", "--seed", "3"};
  o.require(run(base, out) == 0, "baxter-check failed with the true weight");
  auto mutated = base;
  mutated.insert(mutated.end(), {"--check-weight", "lam + 1"});
  o.require(run(mutated, out) == kExitVerificationFailed,
            "baxter-check accepted a corrupted weight");
  o.require(out.find("result: FAIL") != std::string::npos, "no FAIL line for corrupted weight");
  if (o.pass) o.detail = "golden unit-product, 500 ASTs, corrupted weight rejected";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"baxter-identity", baxter_identity},
      {"product-axioms", product_axioms},
      {"unit-power-products", unit_power_products},
      {"grading-and-filtration", grading},
      {"series-stabilization", series_stabilization},
      {"completed-operator", completed_operator_square},
      {"hurwitz-series", hurwitz_series},
      {"leading-term", leading_term},
      {"reconstruction", reconstruction},
      {"filtration-comparison", filtration_comparison},
      {"universal-property", universal_property},
      {"command-line", command_line},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::printf("%s %02d %s: %s\n", outcome.pass ? "PASS" : "FAIL", index, name.c_str(),
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
