// SPDX-License-Identifier: Apache-2.0
#include "baxter/standard.hpp"

#include "baxter/error.hpp"
#include "baxter/kernels.hpp"

#include <algorithm>

namespace baxter {

namespace {

void require_same_trunc(const StandardElement& a, const StandardElement& b) {
  if (a.trunc() != b.trunc()) {
    throw Error(ErrorKind::TruncMismatch, "sequences of length " + std::to_string(a.trunc()) +
                                              " and " + std::to_string(b.trunc()));
  }
}

}  // namespace

StandardElement::StandardElement(std::size_t trunc) : entries_(trunc) {
  if (trunc == 0) throw Error(ErrorKind::InvalidArgument, "truncation level must be positive");
}

StandardElement::StandardElement(std::vector<AbarElement> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorKind::InvalidArgument, "truncation level must be positive");
}

bool StandardElement::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_zero(); });
}

StandardElement& StandardElement::operator+=(const StandardElement& other) {
  require_same_trunc(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

StandardElement& StandardElement::operator-=(const StandardElement& other) {
  require_same_trunc(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

StandardElement scale(const Polynomial& c, const StandardElement& s) {
  std::vector<AbarElement> entries;
  entries.reserve(s.trunc());
  for (const auto& e : s.entries()) entries.push_back(scale(c, e));
  return StandardElement(std::move(entries));
}

StandardElement standard_identity(std::size_t trunc) {
  return StandardElement(std::vector<AbarElement>(trunc, abar_identity()));
}

StandardElement gamma(std::size_t k, std::size_t trunc) {
  StandardElement out(trunc);
  if (k >= 1 && k <= trunc) out.entry(k) = abar_identity();
  return out;
}

StandardElement t_gen(const Polynomial& a, std::size_t trunc) {
  StandardElement out(trunc);
  for (const auto& [mono, coeff] : split_by_generator(a)) {
    for (std::size_t k = 1; k <= trunc; ++k) {
      std::vector<Monomial> factors(k);
      factors.back() = mono;
      out.entry(k).add_term(AbarWord(std::move(factors)), coeff);
    }
  }
  return out;
}

StandardElement standard_mul(const StandardElement& s, const StandardElement& t) {
  require_same_trunc(s, t);
  std::vector<AbarElement> entries;
  entries.reserve(s.trunc());
  for (std::size_t k = 1; k <= s.trunc(); ++k) entries.push_back(abar_mul(s.entry(k), t.entry(k)));
  return StandardElement(std::move(entries));
}

StandardElement p_prime(const StandardElement& s, const Weight& weight) {
  StandardElement out(s.trunc());
  AbarElement prefix;
  for (std::size_t j = 1; j <= s.trunc(); ++j) {
    out.entry(j) = scale(weight.value(), prefix);
    prefix += s.entry(j);
  }
  return out;
}

StandardElement phi(const ShuffleElement& u, std::size_t trunc, const Weight& weight) {
  return kernels::phi(u, trunc, weight);
}

Degree f_degree(const StandardElement& s) {
  for (std::size_t k = 1; k <= s.trunc(); ++k) {
    if (!s.entry(k).is_zero()) return Degree(k - 1);
  }
  return Degree::infinite();
}

ShuffleElement psi_inverse(const StandardElement& s, const Weight& weight) {
  if (weight.is_zero()) {
    throw Error(ErrorKind::WeightZero, "reconstruction needs a nonzero weight");
  }
  const std::size_t trunc = s.trunc();
  const auto lambda_pow = weight.powers(trunc - 1);
  StandardElement remainder = s;
  ShuffleElement result;
  for (std::size_t n = 0; n < trunc; ++n) {
    // Entry n+1 now only receives the leading term of the degree-n part,
    // lambda^n times the reversed word.
    ShuffleElement layer;
    for (const auto& [w, c] : remainder.entry(n + 1).terms()) {
      if (w.size() > n + 1) {
        throw Error(ErrorKind::NotInImage, "entry " + std::to_string(n + 1) + " contains " +
                                               w.to_string() + ", longer than " +
                                               std::to_string(n + 1) + " factors");
      }
      Polynomial q;
      try {
        q = poly_exact_div(c, lambda_pow[n]);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotDivisible) throw;
        throw Error(ErrorKind::NotDivisible,
                    "entry " + std::to_string(n + 1) + ": coefficient '" + c.to_string() +
                        "' of " + w.to_string() + " is not divisible by '" +
                        lambda_pow[n].to_string() +
                        "' (weight is a zero divisor or the input is not in the image)");
      }
      auto factors = w.padded(n + 1);
      std::reverse(factors.begin(), factors.end());
      layer.add_term(TensorWord(std::move(factors)), q);
    }
    if (!layer.is_zero()) {
      remainder -= phi(layer, trunc, weight);
      result += layer;
    }
    for (std::size_t k = 1; k <= n + 1; ++k) {
      if (!remainder.entry(k).is_zero()) {
        throw Error(ErrorKind::NotInImage,
                    "residual entry " + std::to_string(k) + " is nonzero after peeling");
      }
    }
  }
  return result;
}

StandardElement fil_vs_f_witness(const StandardElement& s, std::size_t k, const Weight& weight) {
  const std::size_t trunc = s.trunc();
  const Degree degree = f_degree(s);
  if (degree < Degree(k + 1)) {
    throw Error(ErrorKind::DegreeTooLow, "expected entries 1.." + std::to_string(k + 1) +
                                             " to vanish, f-degree is " + degree.to_string());
  }
  // s = lambda * sum_{i >= k+2} a_i g_i; the preimage is
  // sum_{i >= k+1} (a_{i+1} - a_i) g_i with a_{k+1} = 0 and a_{N+1} = 0.
  std::vector<AbarElement> a(trunc + 2);
  for (std::size_t i = k + 2; i <= trunc; ++i) {
    for (const auto& [w, c] : s.entry(i).terms()) {
      try {
        a[i].add_term(w, poly_exact_div(c, weight.value()));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::DivisorZero) {
          throw Error(ErrorKind::NotDivisible, "cannot divide by the zero weight");
        }
        throw;
      }
    }
  }
  StandardElement r(trunc);
  for (std::size_t i = k + 1; i <= trunc; ++i) r.entry(i) = a[i + 1] - a[i];
  return r;
}

StandardElement residue_mod_F(const StandardElement& s, std::size_t n) {
  StandardElement out = s;
  for (std::size_t k = n + 1; k <= s.trunc(); ++k) out.entry(k) = AbarElement();
  return out;
}

bool entry_divisible_by(const AbarElement& entry, const Polynomial& d) {
  return std::all_of(entry.terms().begin(), entry.terms().end(),
                     [&](const auto& t) { return divides(d, t.second); });
}

std::string to_text(const StandardElement& s) {
  std::string out;
  for (std::size_t k = 1; k <= s.trunc(); ++k) {
    if (s.entry(k).is_zero()) continue;
    std::string term = to_text(s.entry(k)) + " g" + std::to_string(k);
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

nlohmann::json to_json(const StandardElement& s) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : s.entries()) entries.push_back(to_json(e));
  return {{"trunc", s.trunc()}, {"entries", entries}};
}

StandardElement standard_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("trunc") || !j.contains("entries") ||
      !j.at("entries").is_array()) {
    throw Error(ErrorKind::InvalidArgument, "expected {\"trunc\": N, \"entries\": [...]}");
  }
  const auto trunc = j.at("trunc").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (trunc == 0 || entries.size() != trunc) {
    throw Error(ErrorKind::InvalidArgument, "\"entries\" must hold exactly trunc > 0 elements");
  }
  std::vector<AbarElement> out;
  out.reserve(trunc);
  for (const auto& e : entries) out.push_back(abar_from_json(e));
  return StandardElement(std::move(out));
}

}  // namespace baxter
