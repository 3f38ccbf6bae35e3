// SPDX-License-Identifier: Apache-2.0
#include "baxter/words.hpp"

#include <algorithm>

namespace baxter {

std::strong_ordering compare_factors(const std::vector<Monomial>& a,
                                     const std::vector<Monomial>& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

std::string join_factors(const std::vector<Monomial>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += '|';
    out += factors[i].to_string();
  }
  return out;
}

// `c*` prefix for a coefficient, or "" / "-" for the units.
std::string coefficient_prefix(const Polynomial& c) {
  if (c == Polynomial(1)) return "";
  if (c == Polynomial(-1)) return "-";
  if (c.size() == 1) return c.to_string() + "*";
  return "(" + c.to_string() + ")*";
}

std::string join_terms(const std::vector<std::string>& terms, const char* plus,
                       const char* minus) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string& t = terms[i];
    if (i == 0) {
      out += t;
    } else if (!t.empty() && t.front() == '-') {
      out += minus;
      out += t.substr(1);
    } else {
      out += plus;
      out += t;
    }
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------------- words

TensorWord::TensorWord(std::vector<Monomial> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "a tensor word needs at least one factor");
  }
  for (const auto& f : factors_) {
    if (f.involves(Namespace::coefficient)) {
      throw Error(ErrorKind::NamespaceViolation,
                  "word factor '" + f.to_string() + "' involves coefficient variables");
    }
  }
}

TensorWord TensorWord::units(std::size_t length) {
  return TensorWord(std::vector<Monomial>(length));
}

std::string TensorWord::to_string() const { return "[" + join_factors(factors_) + "]"; }

AbarWord::AbarWord(std::vector<Monomial> factors) : factors_(std::move(factors)) {
  while (!factors_.empty() && factors_.back().is_one()) factors_.pop_back();
  for (const auto& f : factors_) {
    if (f.involves(Namespace::coefficient)) {
      throw Error(ErrorKind::NamespaceViolation,
                  "word factor '" + f.to_string() + "' involves coefficient variables");
    }
  }
}

std::vector<Monomial> AbarWord::padded(std::size_t length) const {
  std::vector<Monomial> out = factors_;
  out.resize(std::max(length, factors_.size()));
  return out;
}

AbarWord operator*(const AbarWord& a, const AbarWord& b) {
  const std::size_t n = std::max(a.size(), b.size());
  std::vector<Monomial> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < a.size() && i < b.size()) {
      out[i] = a.factors_[i] * b.factors_[i];
    } else if (i < a.size()) {
      out[i] = a.factors_[i];
    } else {
      out[i] = b.factors_[i];
    }
  }
  // A product of non-unit monomials is never the unit, so only the padded
  // tail could be trailing units and the result is already normalized.
  return AbarWord(std::move(out));
}

std::string AbarWord::to_string() const { return "(" + join_factors(factors_) + ")"; }

AbarWord abar_normalize(std::vector<Monomial> factors) { return AbarWord(std::move(factors)); }

// ---------------------------------------------------------------- elements

AnyElement element_add(const AnyElement& u, const AnyElement& v) {
  if (u.index() != v.index()) {
    throw Error(ErrorKind::KindMismatch, "cannot add elements of different kinds");
  }
  return std::visit(
      [&](const auto& a) -> AnyElement {
        using T = std::decay_t<decltype(a)>;
        return a + std::get<T>(v);
      },
      u);
}

ShuffleElement tensor_of(const std::vector<Polynomial>& factors) {
  if (factors.empty()) {
    throw Error(ErrorKind::InvalidArgument, "a tensor word needs at least one factor");
  }
  // Partial words with their accumulated coefficients.
  std::vector<std::pair<std::vector<Monomial>, Polynomial>> partial{{{}, Polynomial(1)}};
  for (const auto& f : factors) {
    std::vector<std::pair<std::vector<Monomial>, Polynomial>> next;
    for (const auto& [mono, coeff] : split_by_generator(f)) {
      for (const auto& [word, c] : partial) {
        auto w = word;
        w.push_back(mono);
        next.emplace_back(std::move(w), c * coeff);
      }
    }
    partial = std::move(next);
  }
  ShuffleElement out;
  for (auto& [word, c] : partial) out.add_term(TensorWord(std::move(word)), c);
  return out;
}

AbarElement abar_mul(const AbarElement& u, const AbarElement& v) {
  AbarElement out;
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) out.add_term(wu * wv, cu * cv);
  }
  return out;
}

AbarElement abar_identity() { return AbarElement(AbarWord{}); }

// ------------------------------------------------------------------- text

std::string to_text(const ShuffleElement& u) {
  if (u.is_zero()) return "0";
  std::vector<std::string> terms;
  for (const auto& [w, c] : u.terms()) terms.push_back(coefficient_prefix(c) + w.to_string());
  return join_terms(terms, " + ", " - ");
}

std::string to_text(const AbarElement& u) {
  if (u.is_zero()) return "0";
  const Polynomial& first = u.terms().begin()->second;
  const bool common = std::all_of(u.terms().begin(), u.terms().end(),
                                  [&](const auto& t) { return t.second == first; });
  if (common) {
    std::string words;
    for (const auto& [w, c] : u.terms()) {
      if (!words.empty()) words += '+';
      words += w.to_string();
    }
    if (u.size() > 1) words = "(" + words + ")";
    return coefficient_prefix(first) + words;
  }
  std::vector<std::string> terms;
  for (const auto& [w, c] : u.terms()) terms.push_back(coefficient_prefix(c) + w.to_string());
  return "(" + join_terms(terms, "+", "-") + ")";
}

// ------------------------------------------------------------------- json

namespace {

template <class Word>
nlohmann::json terms_to_json(const LinearCombination<Word>& u) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : u.terms()) {
    nlohmann::json word = nlohmann::json::array();
    for (const auto& f : w.factors()) word.push_back(f.to_string());
    terms.push_back({{"coeff", c.to_string()}, {"word", word}});
  }
  return {{"terms", terms}};
}

template <class Factory>
void terms_from_json(const nlohmann::json& j, Factory&& add) {
  static const SymbolTable coefficients = SymbolTable::only(Namespace::coefficient);
  static const SymbolTable generators = SymbolTable::only(Namespace::generator);
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
    throw Error(ErrorKind::InvalidArgument, "expected an object with a \"terms\" array");
  }
  for (const auto& term : j.at("terms")) {
    if (!term.contains("coeff") || !term.contains("word") || !term.at("word").is_array()) {
      throw Error(ErrorKind::InvalidArgument, "each term needs \"coeff\" and \"word\"");
    }
    Polynomial coeff = parse_polynomial(term.at("coeff").get<std::string>(), coefficients);
    std::vector<Polynomial> factors;
    for (const auto& f : term.at("word")) {
      factors.push_back(parse_polynomial(f.get<std::string>(), generators));
    }
    add(coeff, factors);
  }
}

}  // namespace

nlohmann::json to_json(const ShuffleElement& u) { return terms_to_json(u); }
nlohmann::json to_json(const AbarElement& u) { return terms_to_json(u); }

ShuffleElement shuffle_from_json(const nlohmann::json& j) {
  ShuffleElement out;
  terms_from_json(j, [&](const Polynomial& c, const std::vector<Polynomial>& factors) {
    out += scale(c, tensor_of(factors));
  });
  return out;
}

AbarElement abar_from_json(const nlohmann::json& j) {
  AbarElement out;
  terms_from_json(j, [&](const Polynomial& c, const std::vector<Polynomial>& factors) {
    if (factors.empty()) {
      out.add_term(AbarWord{}, c);
      return;
    }
    // Reuse the multilinear expansion, then reinterpret each word in the limit.
    const ShuffleElement expanded = tensor_of(factors);
    for (const auto& [w, coeff] : expanded.terms()) {
      out.add_term(AbarWord(w.factors()), c * coeff);
    }
  });
  return out;
}

}  // namespace baxter
