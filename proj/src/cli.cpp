// SPDX-License-Identifier: Apache-2.0
#include "baxter/cli.hpp"

#include "baxter/check.hpp"
#include "baxter/completion.hpp"
#include "baxter/error.hpp"
#include "baxter/expr.hpp"
#include "baxter/mixshuffle.hpp"
#include "baxter/sampling.hpp"
#include "baxter/standard.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>

namespace baxter {

namespace {

using json = nlohmann::json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownVariable:
    case ErrorKind::InvalidArgument:
    case ErrorKind::NamespaceViolation: return kExitUsage;
    default: return kExitDomain;
  }
}

json error_json(const Error& e) {
  json j{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    j["line"] = pe->line();
    j["column"] = pe->column();
  }
  return {{"error", j}};
}

// Options shared by every subcommand.
struct Session {
  RunConfig config;
  std::string output = "text";
  bool json() const { return output == "json"; }
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

ShuffleElement evaluate(const Session& s, const std::string& text) {
  return eval_expr(parse_expr(text, s.config.symbols()), s.config.parsed_weight());
}

json complete_json(const CompleteElement& x) {
  json components = json::array();
  for (const auto& c : x.components()) components.push_back(to_json(c));
  return {{"trunc", x.trunc()}, {"components", components}};
}

HurwitzSeries fit(const HurwitzSeries& a, std::size_t trunc) {
  std::vector<Polynomial> entries = a.entries();
  entries.resize(trunc);
  return HurwitzSeries(std::move(entries));
}

int cmd_eval(const Session& s, const std::string& text, std::ostream& out) {
  const auto u = evaluate(s, text);
  out << (s.json() ? to_json(u).dump() : to_text(u)) << '\n';
  return kExitOk;
}

int cmd_phi(const Session& s, const std::string& text, std::ostream& out) {
  const auto image = phi(evaluate(s, text), s.config.trunc, s.config.parsed_weight());
  out << (s.json() ? to_json(image).dump() : to_text(image)) << '\n';
  return kExitOk;
}

int cmd_psi(const Session& s, std::optional<std::size_t> trunc, const std::string& path,
            std::istream& in, std::ostream& out) {
  json j;
  try {
    j = json::parse(read_input(path, in));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("invalid JSON: ") + e.what());
  }
  StandardElement st(1);
  try {
    st = standard_from_json(j);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed sequence: ") + e.what());
  }
  if (trunc && *trunc != st.trunc()) {
    throw Error(ErrorKind::InvalidArgument, "--trunc " + std::to_string(*trunc) +
                                                " does not match the input length " +
                                                std::to_string(st.trunc()));
  }
  try {
    const auto u = psi_inverse(st, s.config.parsed_weight());
    out << (s.json() ? to_json(u).dump() : to_text(u)) << '\n';
  } catch (const Error& e) {
    out << error_json(e).dump() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitOk;
}

int cmd_count_shuffles(const Session& s, std::size_t m, std::size_t n, bool mixable,
                       std::ostream& out) {
  if (!mixable) {
    const auto total = enumerate_shuffles(m, n).size();
    if (s.json()) {
      out << json{{"total", total}}.dump() << '\n';
    } else {
      out << "total: " << total << '\n';
    }
    return kExitOk;
  }
  const auto histogram = mixable_histogram(m, n);
  Integer total = 0;
  for (const auto& h : histogram) total += h;
  if (s.json()) {
    json hist = json::object();
    for (std::size_t k = 0; k < histogram.size(); ++k) hist[std::to_string(k)] = histogram[k].str();
    out << json{{"total", total.str()}, {"histogram", hist}}.dump() << '\n';
    return kExitOk;
  }
  out << "total: " << total << '\n' << "histogram: {";
  for (std::size_t k = 0; k < histogram.size(); ++k) {
    out << (k > 0 ? ", " : "") << k << ": " << histogram[k];
  }
  out << "}\n";
  return kExitOk;
}

int cmd_unit_product(const Session& s, std::size_t m, std::size_t n, std::ostream& out) {
  const Weight weight = s.config.parsed_weight();
  const auto closed = unit_power_product(m, n, weight);
  const auto brute = word_product(TensorWord::units(m + 1), TensorWord::units(n + 1), weight);
  const bool agree = closed == brute;
  if (s.json()) {
    out << json{{"closed_form", to_json(closed)}, {"brute_force", to_json(brute)}, {"agree", agree}}
               .dump()
        << '\n';
  } else {
    out << to_text(closed) << '\n';
    if (!agree) out << "brute force: " << to_text(brute) << '\n';
    out << "agree: " << (agree ? "true" : "false") << '\n';
  }
  return agree ? kExitOk : kExitVerificationFailed;
}

int cmd_hurwitz_mul(const Session& s, std::optional<std::size_t> trunc, const std::string& a_text,
                    const std::string& b_text, std::ostream& out) {
  const auto symbols = s.config.symbols();
  auto a = parse_hurwitz(a_text, symbols);
  auto b = parse_hurwitz(b_text, symbols);
  const std::size_t n = trunc ? *trunc : std::max(a.trunc(), b.trunc());
  const auto c = hurwitz_mul(fit(a, n), fit(b, n));
  if (s.json()) {
    json entries = json::array();
    for (const auto& e : c.entries()) entries.push_back(e.to_string());
    out << json{{"trunc", n}, {"entries", entries}}.dump() << '\n';
  } else {
    out << c.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_complete_mul(const Session& s, const std::string& x_text, const std::string& y_text,
                     std::ostream& out) {
  const std::size_t n = s.config.trunc;
  const auto x = complete_from(evaluate(s, x_text), n);
  const auto y = complete_from(evaluate(s, y_text), n);
  const auto z = complete_mul(x, y, s.config.parsed_weight());
  if (s.json()) {
    out << complete_json(z).dump() << '\n';
  } else {
    out << to_text(z.representative()) << " (mod Fil^" << n << ")\n";
  }
  return kExitOk;
}

int cmd_baxter_check(const Session& s, std::size_t trials, std::size_t max_length,
                     const std::optional<std::string>& check_weight, std::ostream& out) {
  CheckOptions options;
  options.trials = trials;
  options.max_length = max_length;
  options.seed = s.config.seed;
  options.generators = s.config.generator_variables();
  options.weight = s.config.parsed_weight();
  options.check_weight =
      check_weight ? Weight(parse_polynomial(*check_weight, s.config.symbols())) : options.weight;
  const auto report = run_baxter_check(options);

  if (s.json()) {
    json props = json::object();
    for (const auto& p : report.properties) props[p.name] = {{"passed", p.passed}, {"failed", p.failed}};
    out << json{{"prng", ElementSampler::kAlgorithm},
                {"seed", options.seed},
                {"weight", options.weight.value().to_string()},
                {"check_weight", options.check_weight.value().to_string()},
                {"trials", trials},
                {"cases", report.cases()},
                {"properties", props},
                {"failures", report.failures},
                {"ok", report.ok()}}
               .dump()
        << '\n';
  } else {
    out << "prng: " << ElementSampler::kAlgorithm << " seed=" << options.seed << '\n'
        << "weight: " << options.weight.value().to_string() << '\n';
    if (check_weight) out << "check weight: " << options.check_weight.value().to_string() << '\n';
    out << "trials: " << trials << ", cases: " << report.cases() << '\n';
    for (const auto& p : report.properties) {
      out << p.name << ": " << p.passed << "/" << (p.passed + p.failed) << " passed\n";
    }
    for (const auto& f : report.failures) out << "counterexample: " << f << '\n';
    out << "result: " << (report.ok() ? "PASS" : "FAIL") << '\n';
  }
  return report.ok() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
  CLI::App app{"Exact arithmetic in free Baxter algebras", "baxter"};
  app.require_subcommand(1);
  app.fallthrough();

  Session s;
  app.add_option("--weight", s.config.weight, "Weight lambda, a polynomial in the parameters")
      ->capture_default_str();
  app.add_option("--gens", s.config.gens, "Generator names")->delimiter(',')->capture_default_str();
  app.add_option("--params", s.config.params, "Coefficient variable names")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--output", s.output, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string expr_a;
  std::string expr_b;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t trunc_value = s.config.trunc;

  auto* eval = app.add_subcommand("eval", "Evaluate an expression in the shuffle algebra");
  eval->add_option("EXPR", expr_a)->required();

  auto* phi_cmd = app.add_subcommand("phi", "Image in the sequence algebra");
  phi_cmd->add_option("--trunc", trunc_value, "Sequence length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  phi_cmd->add_option("EXPR", expr_a)->required();

  auto* psi_cmd = app.add_subcommand("psi", "Recover a shuffle element from its sequence");
  auto* psi_trunc = psi_cmd->add_option("--trunc", trunc_value, "Expected sequence length")
                        ->check(CLI::PositiveNumber);
  psi_cmd->add_option("FILE", expr_a, "Sequence JSON, or - for stdin")->required();

  bool mixable = false;
  auto* count_cmd = app.add_subcommand("count-shuffles", "Count (mixable) shuffles");
  count_cmd->add_option("M", m)->required();
  count_cmd->add_option("N", n)->required();
  count_cmd->add_flag("--mixable", mixable, "Count mixable shuffles by number of merges");

  auto* unit_cmd = app.add_subcommand("unit-product", "Product of two unit powers");
  unit_cmd->add_option("M", m)->required();
  unit_cmd->add_option("N", n)->required();

  auto* hurwitz_cmd = app.add_subcommand("hurwitz-mul", "Hurwitz series product");
  auto* hurwitz_trunc =
      hurwitz_cmd->add_option("--trunc", trunc_value, "Series length")->check(CLI::PositiveNumber);
  hurwitz_cmd->add_option("SEQ1", expr_a)->required();
  hurwitz_cmd->add_option("SEQ2", expr_b)->required();

  auto* complete_cmd = app.add_subcommand("complete-mul", "Product in the completion");
  complete_cmd->add_option("--trunc", trunc_value, "Truncation level")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  complete_cmd->add_option("EXPR1", expr_a)->required();
  complete_cmd->add_option("EXPR2", expr_b)->required();

  std::size_t trials = 100;
  std::size_t max_length = 4;
  std::string check_weight_text;
  auto* check_cmd = app.add_subcommand("baxter-check", "Randomized identity suite");
  check_cmd->add_option("--trials", trials)->capture_default_str();
  check_cmd->add_option("--max-len", max_length)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  check_cmd->add_option("--seed", s.config.seed)->capture_default_str();
  auto* check_weight_opt = check_cmd->add_option(
      "--check-weight", check_weight_text,
      "Weight used on the right-hand side of the identity (default: --weight)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto given = [](const CLI::Option* opt) { return opt->count() > 0; };
  try {
    if (eval->parsed()) return cmd_eval(s, expr_a, out);
    if (phi_cmd->parsed()) {
      s.config.trunc = trunc_value;
      return cmd_phi(s, expr_a, out);
    }
    if (psi_cmd->parsed()) {
      return cmd_psi(s, given(psi_trunc) ? std::optional(trunc_value) : std::nullopt, expr_a, in,
                     out);
    }
    if (count_cmd->parsed()) return cmd_count_shuffles(s, m, n, mixable, out);
    if (unit_cmd->parsed()) return cmd_unit_product(s, m, n, out);
    if (hurwitz_cmd->parsed()) {
      return cmd_hurwitz_mul(s, given(hurwitz_trunc) ? std::optional(trunc_value) : std::nullopt,
                             expr_a, expr_b, out);
    }
    if (complete_cmd->parsed()) {
      s.config.trunc = trunc_value;
      return cmd_complete_mul(s, expr_a, expr_b, out);
    }
    return cmd_baxter_check(s, trials, max_length,
                            given(check_weight_opt) ? std::optional(check_weight_text)
                                                    : std::nullopt,
                            out);
  } catch (const ParseError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace baxter
