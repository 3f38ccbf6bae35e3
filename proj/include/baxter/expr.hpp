// SPDX-License-Identifier: Apache-2.0
//
// Baxter expressions over the shuffle algebra:
//
//   expr := prod (('+' | '-') prod)*
//   prod := pow ('*' pow)*
//   pow  := atom ('^' nat)?
//   atom := nat | ident | 'P' '(' expr ')' | '(' expr ')' | '[' poly ('|' poly)* ']'
//
// `-` is binary only. `P` is reserved for the Baxter operator.
#pragma once

#include "baxter/polynomial.hpp"
#include "baxter/words.hpp"

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace baxter {

enum class ExprKind { IntLit, CoeffVar, GenVar, Word, Add, Sub, Mul, Pow, PApply };

class Expr {
 public:
  static Expr int_lit(Integer value);
  static Expr coeff_var(std::string name);
  static Expr gen_var(std::string name);
  static Expr word(std::vector<Polynomial> factors);
  static Expr add(Expr lhs, Expr rhs);
  static Expr sub(Expr lhs, Expr rhs);
  static Expr mul(Expr lhs, Expr rhs);
  static Expr pow(Expr base, std::uint64_t exponent);
  static Expr p_apply(Expr child);

  ExprKind kind() const { return node_->kind; }
  const Integer& value() const { return node_->value; }
  std::uint64_t exponent() const { return node_->exponent; }
  const std::string& name() const { return node_->name; }
  const std::vector<Polynomial>& factors() const { return node_->factors; }
  const Expr& lhs() const { return node_->children.at(0); }
  const Expr& rhs() const { return node_->children.at(1); }
  /// Operand of Pow and PApply.
  const Expr& child() const { return node_->children.at(0); }

  /// Structural equality.
  bool operator==(const Expr& other) const;

 private:
  struct Node {
    ExprKind kind;
    Integer value;
    std::uint64_t exponent = 0;
    std::string name;
    std::vector<Polynomial> factors;
    std::vector<Expr> children;
  };
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(Node node);

  std::shared_ptr<const Node> node_;
};

/// Run settings shared by the evaluator and the CLI.
struct RunConfig {
  std::string weight = "lam";
  std::size_t trunc = 6;
  std::vector<std::string> gens{"x1", "x2", "x3"};
  /// Coefficient variables besides those occurring in the weight.
  std::vector<std::string> params{"lam"};
  std::uint64_t seed = 1;
  enum class Output { text, json } output = Output::text;

  /// Parses the weight in the coefficient namespace.
  Weight parsed_weight() const;
  /// Generators, parameters and weight variables; throws InvalidArgument on
  /// overlaps or the reserved name P.
  SymbolTable symbols() const;
  std::vector<Variable> generator_variables() const;
};

Expr parse_expr(std::string_view text, const SymbolTable& symbols);

/// Canonical text; parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e);

ShuffleElement eval_expr(const Expr& e, const Weight& weight);
ShuffleElement eval_expr(const Expr& e, const RunConfig& config);

}  // namespace baxter
