// SPDX-License-Identifier: Apache-2.0
#include "baxter/completion.hpp"

#include "baxter/detail/cursor.hpp"
#include "baxter/error.hpp"
#include "baxter/kernels.hpp"

namespace baxter {

CompleteElement::CompleteElement(std::size_t trunc) : components_(trunc) {
  if (trunc == 0) throw Error(ErrorKind::InvalidArgument, "truncation level must be positive");
}

CompleteElement::CompleteElement(std::size_t trunc, std::vector<ShuffleElement> components)
    : components_(std::move(components)) {
  if (trunc == 0) throw Error(ErrorKind::InvalidArgument, "truncation level must be positive");
  if (components_.size() != trunc) {
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(trunc) + " components");
  }
  for (std::size_t k = 0; k < trunc; ++k) {
    for (const auto& [w, c] : components_[k].terms()) {
      if (w.degree() != k) {
        throw Error(ErrorKind::InvalidArgument,
                    "component " + std::to_string(k) + " contains " + w.to_string());
      }
    }
  }
}

bool CompleteElement::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

ShuffleElement CompleteElement::representative() const {
  ShuffleElement out;
  for (const auto& c : components_) out += c;
  return out;
}

namespace {

void require_same_trunc(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorKind::TruncMismatch, "truncation levels " + std::to_string(a) + " and " +
                                              std::to_string(b) + " differ");
  }
}

}  // namespace

CompleteElement operator+(const CompleteElement& a, const CompleteElement& b) {
  require_same_trunc(a.trunc(), b.trunc());
  CompleteElement out = a;
  for (std::size_t k = 0; k < a.trunc(); ++k) out.components_[k] += b.components_[k];
  return out;
}

CompleteElement operator-(const CompleteElement& a, const CompleteElement& b) {
  require_same_trunc(a.trunc(), b.trunc());
  CompleteElement out = a;
  for (std::size_t k = 0; k < a.trunc(); ++k) out.components_[k] -= b.components_[k];
  return out;
}

CompleteElement complete_from(const ShuffleElement& u, std::size_t trunc) {
  std::vector<ShuffleElement> components(trunc);
  for (const auto& [w, c] : u.terms()) {
    if (w.degree() < trunc) components[w.degree()].add_term(w, c);
  }
  return CompleteElement(trunc, std::move(components));
}

ShuffleElement degree_truncate(const ShuffleElement& u, std::size_t n) {
  ShuffleElement out;
  for (const auto& [w, c] : u.terms()) {
    if (w.degree() <= n) out.add_term(w, c);
  }
  return out;
}

CompleteElement complete_mul(const CompleteElement& x, const CompleteElement& y,
                             const Weight& weight) {
  require_same_trunc(x.trunc(), y.trunc());
  // Degrees i and j multiply into degrees [max(i, j), i + j], so the kept
  // components only see pairs with max(i, j) < N and nothing above N - 1.
  return complete_from(
      kernels::truncated_product(x.representative(), y.representative(), weight, x.trunc()),
      x.trunc());
}

CompleteElement complete_P(const CompleteElement& x) {
  std::vector<ShuffleElement> components(x.trunc());
  for (std::size_t k = 1; k < x.trunc(); ++k) components[k] = baxter_P(x.component(k - 1));
  return CompleteElement(x.trunc(), std::move(components));
}

CompleteElement complete_one(std::size_t trunc) { return complete_from(shuffle_one(), trunc); }

// ----------------------------------------------------------------- Hurwitz

HurwitzSeries::HurwitzSeries(std::vector<Polynomial> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorKind::InvalidArgument, "empty Hurwitz series");
  for (const auto& e : entries_) {
    if (e.involves(Namespace::generator)) {
      throw Error(ErrorKind::NamespaceViolation, "Hurwitz entries must lie in C");
    }
  }
}

HurwitzSeries HurwitzSeries::basis(std::size_t n, std::size_t trunc) {
  std::vector<Polynomial> entries(trunc);
  if (n < trunc) entries[n] = Polynomial(1);
  return HurwitzSeries(std::move(entries));
}

std::string HurwitzSeries::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ", ";
    out += entries_[i].to_string();
  }
  return out + ")";
}

HurwitzSeries hurwitz_mul(const HurwitzSeries& a, const HurwitzSeries& b) {
  require_same_trunc(a.trunc(), b.trunc());
  return kernels::hurwitz_convolve(a, b);
}

HurwitzSeries hurwitz_iso(const CompleteElement& x, const Weight& weight) {
  if (!weight.is_zero()) {
    throw Error(ErrorKind::WeightNotZero,
                "Hurwitz isomorphism needs weight 0, got '" + weight.value().to_string() + "'");
  }
  std::vector<Polynomial> entries(x.trunc());
  for (std::size_t k = 0; k < x.trunc(); ++k) {
    for (const auto& [w, c] : x.component(k).terms()) {
      if (w != TensorWord::units(k + 1)) {
        throw Error(ErrorKind::NotScalarBase, "word " + w.to_string() + " is not all units");
      }
      entries[k] = c;
    }
  }
  return HurwitzSeries(std::move(entries));
}

CompleteElement hurwitz_to_complete(const HurwitzSeries& a) {
  std::vector<ShuffleElement> components(a.trunc());
  for (std::size_t k = 0; k < a.trunc(); ++k) {
    components[k] = ShuffleElement(TensorWord::units(k + 1), a[k]);
  }
  return CompleteElement(a.trunc(), std::move(components));
}

HurwitzSeries parse_hurwitz(std::string_view text, const SymbolTable& symbols) {
  detail::Cursor cursor(text);
  cursor.expect('(');
  std::vector<Polynomial> entries;
  do {
    entries.push_back(detail::parse_polynomial_at(cursor, symbols));
  } while (cursor.accept(','));
  cursor.expect(')');
  if (!cursor.at_end()) cursor.fail("unexpected trailing input" + cursor.found());
  return HurwitzSeries(std::move(entries));
}

}  // namespace baxter
