// SPDX-License-Identifier: Apache-2.0
#include "baxter/expr.hpp"

#include "baxter/detail/cursor.hpp"
#include "baxter/error.hpp"
#include "baxter/mixshuffle.hpp"

namespace baxter {

// -------------------------------------------------------------------- Expr

Expr Expr::make(Node node) { return Expr(std::make_shared<const Node>(std::move(node))); }

Expr Expr::int_lit(Integer value) {
  if (value < 0) throw Error(ErrorKind::InvalidArgument, "integer literals are natural numbers");
  return make({ExprKind::IntLit, std::move(value), 0, {}, {}, {}});
}
Expr Expr::coeff_var(std::string name) {
  return make({ExprKind::CoeffVar, 0, 0, std::move(name), {}, {}});
}
Expr Expr::gen_var(std::string name) {
  return make({ExprKind::GenVar, 0, 0, std::move(name), {}, {}});
}
Expr Expr::word(std::vector<Polynomial> factors) {
  if (factors.empty()) throw Error(ErrorKind::InvalidArgument, "a word needs a factor");
  return make({ExprKind::Word, 0, 0, {}, std::move(factors), {}});
}
Expr Expr::add(Expr lhs, Expr rhs) {
  return make({ExprKind::Add, 0, 0, {}, {}, {std::move(lhs), std::move(rhs)}});
}
Expr Expr::sub(Expr lhs, Expr rhs) {
  return make({ExprKind::Sub, 0, 0, {}, {}, {std::move(lhs), std::move(rhs)}});
}
Expr Expr::mul(Expr lhs, Expr rhs) {
  return make({ExprKind::Mul, 0, 0, {}, {}, {std::move(lhs), std::move(rhs)}});
}
Expr Expr::pow(Expr base, std::uint64_t exponent) {
  return make({ExprKind::Pow, 0, exponent, {}, {}, {std::move(base)}});
}
Expr Expr::p_apply(Expr child) {
  return make({ExprKind::PApply, 0, 0, {}, {}, {std::move(child)}});
}

bool Expr::operator==(const Expr& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  return a.kind == b.kind && a.value == b.value && a.exponent == b.exponent &&
         a.name == b.name && a.factors == b.factors && a.children == b.children;
}

// --------------------------------------------------------------- RunConfig

Weight RunConfig::parsed_weight() const {
  return Weight(parse_polynomial(weight, SymbolTable::only(Namespace::coefficient)));
}

SymbolTable RunConfig::symbols() const {
  SymbolTable table;
  for (const auto& g : gens) {
    if (!is_identifier(g) || g == "P") {
      throw Error(ErrorKind::InvalidArgument, "invalid generator name '" + g + "'");
    }
    table.add_generator(g);
  }
  auto add_coefficient = [&](const std::string& name) {
    if (!is_identifier(name) || name == "P") {
      throw Error(ErrorKind::InvalidArgument, "invalid parameter name '" + name + "'");
    }
    if (table.generators().count(name) != 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "'" + name + "' is both a generator and a coefficient variable");
    }
    table.add_coefficient(name);
  };
  for (const auto& p : params) add_coefficient(p);
  const Weight w = parsed_weight();
  for (const auto& [mono, c] : w.value().terms()) {
    for (const auto& [var, e] : mono.factors()) add_coefficient(var.name);
  }
  return table;
}

std::vector<Variable> RunConfig::generator_variables() const {
  std::vector<Variable> out;
  for (const auto& g : gens) out.push_back(Variable::generator(g));
  return out;
}

// ------------------------------------------------------------------ parser

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const SymbolTable& symbols)
      : cursor_(text), symbols_(symbols) {}

  Expr parse() {
    Expr e = expr();
    if (!cursor_.at_end()) cursor_.fail("unexpected input" + cursor_.found());
    return e;
  }

 private:
  Expr expr() {
    Expr e = prod();
    for (;;) {
      if (cursor_.accept('+')) {
        e = Expr::add(e, prod());
      } else if (cursor_.accept('-')) {
        e = Expr::sub(e, prod());
      } else {
        return e;
      }
    }
  }

  Expr prod() {
    Expr e = power();
    while (cursor_.accept('*')) e = Expr::mul(e, power());
    return e;
  }

  Expr power() {
    Expr e = atom();
    if (cursor_.accept('^')) {
      e = Expr::pow(e, cursor_.natural().convert_to<std::uint64_t>());
    }
    return e;
  }

  Expr atom() {
    if (cursor_.peek_digit()) return Expr::int_lit(cursor_.natural());
    if (cursor_.accept('(')) {
      Expr e = expr();
      cursor_.expect(')');
      return e;
    }
    if (cursor_.accept('[')) {
      std::vector<Polynomial> factors;
      do {
        factors.push_back(detail::parse_polynomial_at(cursor_, symbols_));
      } while (cursor_.accept('|'));
      cursor_.expect(']');
      return Expr::word(std::move(factors));
    }
    if (cursor_.peek_alpha()) {
      const std::size_t line = cursor_.line();
      const std::size_t column = cursor_.column();
      std::string name = cursor_.identifier();
      if (name == "P") {
        cursor_.expect('(');
        Expr e = expr();
        cursor_.expect(')');
        return Expr::p_apply(e);
      }
      const auto ns = symbols_.lookup(name);
      if (!ns) {
        cursor_.fail_at(ErrorKind::UnknownVariable, "unknown variable '" + name + "'", line,
                        column);
      }
      return *ns == Namespace::generator ? Expr::gen_var(std::move(name))
                                         : Expr::coeff_var(std::move(name));
    }
    cursor_.fail("expected an expression" + cursor_.found());
  }

  detail::Cursor cursor_;
  const SymbolTable& symbols_;
};

int precedence(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul: return 2;
    case ExprKind::Pow: return 3;
    default: return 4;
  }
}

void print(const Expr& e, int min_prec, std::string& out) {
  const bool parens = precedence(e) < min_prec;
  if (parens) out += '(';
  switch (e.kind()) {
    case ExprKind::IntLit: out += e.value().str(); break;
    case ExprKind::CoeffVar:
    case ExprKind::GenVar: out += e.name(); break;
    case ExprKind::Word:
      out += '[';
      for (std::size_t i = 0; i < e.factors().size(); ++i) {
        if (i > 0) out += '|';
        out += e.factors()[i].to_string();
      }
      out += ']';
      break;
    case ExprKind::Add:
    case ExprKind::Sub:
      print(e.lhs(), 1, out);
      out += e.kind() == ExprKind::Add ? " + " : " - ";
      print(e.rhs(), 2, out);
      break;
    case ExprKind::Mul:
      print(e.lhs(), 2, out);
      out += '*';
      print(e.rhs(), 3, out);
      break;
    case ExprKind::Pow:
      print(e.child(), 4, out);
      out += '^' + std::to_string(e.exponent());
      break;
    case ExprKind::PApply:
      out += "P(";
      print(e.child(), 0, out);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

Expr parse_expr(std::string_view text, const SymbolTable& symbols) {
  return ExprParser(text, symbols).parse();
}

std::string print_expr(const Expr& e) {
  std::string out;
  print(e, 0, out);
  return out;
}

// --------------------------------------------------------------- evaluator

ShuffleElement eval_expr(const Expr& e, const Weight& weight) {
  switch (e.kind()) {
    case ExprKind::IntLit: return ShuffleElement(TensorWord::units(1), Polynomial(e.value()));
    case ExprKind::CoeffVar:
      return ShuffleElement(TensorWord::units(1),
                            Polynomial::variable(Variable::coefficient(e.name())));
    case ExprKind::GenVar: return shuffle_generator(Monomial(Variable::generator(e.name())));
    case ExprKind::Word: return tensor_of(e.factors());
    case ExprKind::Add: return eval_expr(e.lhs(), weight) + eval_expr(e.rhs(), weight);
    case ExprKind::Sub: return eval_expr(e.lhs(), weight) - eval_expr(e.rhs(), weight);
    case ExprKind::Mul:
      return shuffle_product(eval_expr(e.lhs(), weight), eval_expr(e.rhs(), weight), weight);
    case ExprKind::Pow: {
      ShuffleElement base = eval_expr(e.child(), weight);
      ShuffleElement result = shuffle_one();
      for (std::uint64_t k = e.exponent(); k > 0; k >>= 1U) {
        if (k & 1U) result = shuffle_product(result, base, weight);
        if (k > 1) base = shuffle_product(base, base, weight);
      }
      return result;
    }
    case ExprKind::PApply: return baxter_P(eval_expr(e.child(), weight));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown expression node");
}

ShuffleElement eval_expr(const Expr& e, const RunConfig& config) {
  return eval_expr(e, config.parsed_weight());
}

}  // namespace baxter
