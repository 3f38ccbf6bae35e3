// SPDX-License-Identifier: Apache-2.0
#include "baxter/cli.hpp"
#include "baxter/error.hpp"
#include "baxter/expr.hpp"
#include "baxter/standard.hpp"
#include "support.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sstream>

using namespace baxter;
using baxter::oracle::shuffle;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in(input);
  const int code = run_cli(args, out, err, in);
  return {code, out.str(), err.str()};
}

const SymbolTable& symbols() {
  static const SymbolTable table = RunConfig{}.symbols();
  return table;
}

TEST(ParseExpr, Examples) {
  const auto px1 = Expr::p_apply(Expr::gen_var("x1"));
  EXPECT_EQ(parse_expr("P(x1)*P(x1)", symbols()), Expr::mul(px1, px1));
  const auto e = parse_expr("[1|x1] + lam*[x1]", symbols());
  ASSERT_EQ(e.kind(), ExprKind::Add);
  EXPECT_EQ(e.lhs().kind(), ExprKind::Word);
  EXPECT_EQ(e.rhs().kind(), ExprKind::Mul);
  EXPECT_EQ(e.rhs().lhs().kind(), ExprKind::CoeffVar);
  EXPECT_EQ(e.rhs().rhs().kind(), ExprKind::Word);
}

TEST(ParseExpr, Errors) {
  try {
    parse_expr("P(", symbols());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
    EXPECT_EQ(e.column(), 3U);
  }
  try {
    parse_expr("x1 +\n  zz", symbols());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownVariable);
    EXPECT_EQ(e.line(), 2U);
    EXPECT_EQ(e.column(), 3U);
  }
  EXPECT_THROW(parse_expr("-x1", symbols()), ParseError);
  EXPECT_THROW(parse_expr("P", symbols()), ParseError);
  // factors are expanded C-multilinearly
  EXPECT_EQ(eval_expr(parse_expr("[lam*x1|2]", symbols()), Weight()), shuffle("2*lam*[x1|1]"));
}

TEST(ParseExpr, LeftAssociativeAndPrecedence) {
  const auto e = parse_expr("x1 - x2 - x3*x1^2", symbols());
  const auto x1 = Expr::gen_var("x1");
  const auto x2 = Expr::gen_var("x2");
  const auto x3 = Expr::gen_var("x3");
  EXPECT_EQ(e, Expr::sub(Expr::sub(x1, x2), Expr::mul(x3, Expr::pow(x1, 2))));
  EXPECT_EQ(print_expr(Expr::sub(x1, Expr::sub(x2, x3))), "x1 - (x2 - x3)");
  EXPECT_EQ(print_expr(Expr::pow(Expr::pow(x1, 2), 3)), "(x1^2)^3");
}

TEST(ParseExpr, PrintRoundTrip) {
  oracle::ExprGenerator gen({"x1", "x2", "x3"}, {"lam"}, 2024);
  for (int i = 0; i < 500; ++i) {
    const auto e = gen(5);
    EXPECT_EQ(parse_expr(print_expr(e), symbols()), e) << print_expr(e);
  }
}

TEST(EvalExpr, Examples) {
  EXPECT_EQ(to_text(shuffle("P(x1)*P(x1)")), "2*[1|x1|x1] + lam*[1|x1^2]");
  EXPECT_EQ(shuffle("[1]^5"), shuffle("[1]"));
  EXPECT_EQ(shuffle("x1^0"), shuffle("[1]"));
  EXPECT_EQ(shuffle("P(x1*P(x2)) + P(x2*P(x1)) + lam*P(x1*x2)"), shuffle("P(x1)*P(x2)"));
  EXPECT_EQ(shuffle("0 - [x1]"), scale(-1, shuffle("[x1]")));
  EXPECT_EQ(shuffle("(P(x1) + 2)^3"),
            shuffle("(P(x1) + 2)*(P(x1) + 2)*(P(x1) + 2)"));
}

TEST(RunConfig, Validation) {
  RunConfig c;
  c.gens = {"x1", "lam"};
  EXPECT_THROW(c.symbols(), Error);
  c.gens = {"P"};
  EXPECT_THROW(c.symbols(), Error);
  c.gens = {"x1"};
  c.weight = "x1";
  EXPECT_NO_THROW(c.parsed_weight());
  EXPECT_THROW(c.symbols(), Error);
  c.weight = "2*mu + 1";
  EXPECT_TRUE(c.symbols().lookup("mu").has_value());
}

TEST(Cli, UnitProductGolden) {
  const auto r = run({"unit-product", "1", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2*[1|1|1] + lam*[1|1]\nagree: true\n");
}

TEST(Cli, CountShuffles) {
  auto r = run({"count-shuffles", "1", "1", "--mixable"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "total: 3\nhistogram: {0: 2, 1: 1}\n");
  r = run({"count-shuffles", "2", "3"});
  EXPECT_EQ(r.out, "total: 10\n");
  r = run({"--output", "json", "count-shuffles", "2", "2", "--mixable"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["histogram"]["2"], "1");
}

TEST(Cli, EvalAndPhi) {
  auto r = run({"eval", "P(x1)*P(x1)"});
  EXPECT_EQ(r.out, "2*[1|x1|x1] + lam*[1|x1^2]\n");
  r = run({"phi", "--trunc", "3", "[x1|x2]"});
  EXPECT_EQ(r.out, "lam*(x2|x1) g2 + lam*((x2|1|x1)+(1|x2|x1)) g3\n");
  r = run({"--weight", "2", "eval", "[1|1]*[1|1]"});
  EXPECT_EQ(r.out, "2*[1|1|1] + 2*[1|1]\n");
  r = run({"eval", "mu*[x1]", "--params", "mu"});
  EXPECT_EQ(r.out, "mu*[x1]\n");
}

TEST(Cli, PsiThroughStdin) {
  const auto image = run({"--output", "json", "phi", "--trunc", "4", "[x1|x2] + 3*[x3]"});
  ASSERT_EQ(image.code, 0);
  auto r = run({"psi", "--trunc", "4", "-"}, image.out);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[x1|x2] + 3*[x3]\n");

  const auto g2 = to_json(gamma(2, 3)).dump();
  r = run({"psi", "-"}, g2);
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_EQ(nlohmann::json::parse(r.out)["error"]["kind"], "NotDivisible");

  r = run({"psi", "--trunc", "5", "-"}, g2);
  EXPECT_EQ(r.code, kExitUsage);
  r = run({"psi", "-"}, "{not json");
  EXPECT_EQ(r.code, kExitUsage);
}

TEST(Cli, HurwitzAndComplete) {
  auto r = run({"hurwitz-mul", "(1, 1, 1, 1)", "(1, 1, 1, 1)"});
  EXPECT_EQ(r.out, "(1, 2, 4, 8)\n");
  r = run({"hurwitz-mul", "--trunc", "3", "(0, 1)", "(0, 0, 1, 5)"});
  EXPECT_EQ(r.out, "(0, 0, 0)\n");
  r = run({"complete-mul", "--trunc", "2", "[1] + [1|1]", "[1] + [1|1]"});
  EXPECT_EQ(r.out, "(lam + 2)*[1|1] + [1] (mod Fil^2)\n");
}

TEST(Cli, BaxterCheck) {
  auto r = run({"baxter-check", "--trials", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("trials: 0, cases: 0"), std::string::npos);
  EXPECT_NE(r.out.find("mt19937_64"), std::string::npos);

  r = run({"baxter-check", "--trials", "10", "--seed", "5", "--max-len", "3"});
  EXPECT_EQ(r.code, 0);
  const auto again = run({"baxter-check", "--trials", "10", "--seed", "5", "--max-len", "3"});
  EXPECT_EQ(r.out, again.out);

  r = run({"baxter-check", "--trials", "10", "--check-weight", "2*lam"});
  EXPECT_EQ(r.code, kExitVerificationFailed);
  r = run({"--weight", "3", "baxter-check", "--trials", "10", "--check-weight", "3"});
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"eval", "P("}).code, kExitUsage);
  EXPECT_EQ(run({"eval", "y7"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"--weight", "x1", "eval", "[1]"}).code, kExitUsage);
  EXPECT_EQ(run({"--output", "yaml", "eval", "[1]"}).code, kExitUsage);
  EXPECT_EQ(run({"--weight", "2", "hurwitz-mul", "(1)", "(1)"}).code, 0);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
