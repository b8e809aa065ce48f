#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gca/gca.hpp"

namespace gca::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

AlgebraContext make_context(const CliConfig& cfg) {
  if (cfg.N < 2) throw UsageError("--N must be at least 2");
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  int zeta_exp = canonical_zeta_exp(cfg.N);
  if (cfg.zeta_sign) {
    if (cfg.N % 2 == 1) {
      // Odd N admits only zeta = -exp(i pi / N).
      if (*cfg.zeta_sign == "+")
        throw UsageError("--zeta-sign + is not admissible for odd N; zeta is fixed to -exp(i*pi/N)");
    } else {
      zeta_exp = *cfg.zeta_sign == "+" ? 1 : cfg.N + 1;
    }
  }
  return AlgebraContext::make(cfg.N, cfg.n, zeta_exp);
}

std::string resolve_format(const CliConfig& cfg, const std::string& fallback,
                           const std::vector<std::string>& allowed, const std::string& command) {
  const std::string f = cfg.format.value_or(fallback);
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end())
    throw UsageError("--format " + f + " is not supported by " + command);
  return f;
}

nlohmann::json element_to_json(const AlgebraElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [exps, coeff] : x.terms())
    terms.push_back({{"exps", exps}, {"coeff", to_json(coeff)}});
  return {{"N", x.context().N}, {"n", x.context().n}, {"terms", std::move(terms)}};
}

std::string approx(const CycloScalar& s) {
  const auto z = s.to_complex();
  return "(" + format_float(z.real()) + ", " + format_float(z.imag()) + ")";
}

std::string matrix_text(const Matrix& m, const AlgebraContext& ctx) {
  std::string out;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? "\t" : "") + print_canonical(row[j], ctx);
    out += '\n';
  }
  return out;
}

std::string render_matrix(const Matrix& m, const AlgebraContext& ctx, const std::string& format) {
  if (format == "csv") return matrix_to_csv(m);
  if (format == "text") return matrix_text(m, ctx);
  return matrix_to_json(m).dump(2) + "\n";
}

struct Commands {
  CliConfig cfg;
  std::optional<std::vector<std::string>> checks;
  int trials = 200;
  int max_len = 12;
  std::string expression;
  bool show_approx = false;
};

int cmd_verify(const Commands& c, std::ostream& out) {
  const AlgebraContext ctx = make_context(c.cfg);
  const std::string format = resolve_format(c.cfg, "json", {"json", "text"}, "verify");
  if (c.checks)
    for (const auto& name : *c.checks)
      if (!is_check_name(name)) throw UsageError("unknown check name: " + name);
  if (c.trials < 1) throw UsageError("--trials must be at least 1");
  if (c.max_len < 0) throw UsageError("--max-len must be non-negative");

  SuiteOptions options;
  options.trials = c.trials;
  options.max_len = c.max_len;
  if (c.cfg.seed) options.seed = *c.cfg.seed;
  const auto reports = run_suite(ctx, c.checks, options);

  if (format == "text") {
    for (const auto& r : reports) {
      out << (r.passed ? "PASS " : "FAIL ") << r.check_name;
      if (r.counterexample) out << ": " << *r.counterexample;
      out << '\n';
    }
  } else {
    out << report_to_json(ctx, reports).dump(2) << '\n';
  }
  return all_passed(reports) ? kSuccess : kFailure;
}

int cmd_eval(const Commands& c, std::ostream& out) {
  const AlgebraContext ctx = make_context(c.cfg);
  const std::string format = resolve_format(c.cfg, "text", {"text", "json"}, "eval");
  const ExprAst ast = parse(c.expression);
  ExprValue value = eval_any(ast, ctx);

  std::string kind;
  std::string canonical;
  nlohmann::json structured;
  std::vector<std::string> approx_lines;
  if (const auto* s = std::get_if<CycloScalar>(&value)) {
    kind = "scalar";
    canonical = print_canonical(*s, ctx);
    structured = to_json(*s);
    approx_lines.push_back(approx(*s));
  } else if (const auto* v = std::get_if<QuditState>(&value)) {
    kind = "state";
    canonical = print_canonical(*v);
    structured = to_json(*v);
    for (const auto& [flat, amp] : v->amplitudes())
      approx_lines.push_back(ket_label(v->digits(flat)) + " " + approx(amp));
  } else {
    const AlgebraElement x = std::get<Operator>(value).as_element(ast.span);
    kind = "element";
    canonical = print_canonical(x);
    structured = element_to_json(x);
    for (const auto& [exps, coeff] : x.terms()) {
      std::string label;
      for (std::size_t i = 0; i < exps.size(); ++i) label += (i ? "," : "") + std::to_string(exps[i]);
      approx_lines.push_back("[" + label + "] " + approx(coeff));
    }
  }

  if (format == "json") {
    out << nlohmann::json{{"kind", kind}, {"canonical", canonical}, {"value", structured}}.dump(2)
        << '\n';
  } else {
    out << canonical << '\n';
    if (c.show_approx)
      for (const auto& line : approx_lines) out << "~ " << line << '\n';
  }
  return kSuccess;
}

int cmd_matrix(const Commands& c, std::ostream& out) {
  const AlgebraContext ctx = make_context(c.cfg);
  const std::string format = resolve_format(c.cfg, "json", {"json", "csv", "text"}, "matrix");
  const ExprAst ast = parse(c.expression);
  ExprValue value = eval_any(ast, ctx);
  if (std::holds_alternative<QuditState>(value))
    throw EvalError("matrix expects an operator expression, got a ket", ast.span);
  const Operator op = std::holds_alternative<CycloScalar>(value)
                          ? Operator(AlgebraElement::scalar(ctx, std::get<CycloScalar>(value)))
                          : std::get<Operator>(value);
  const Representation rep(ctx);
  const Matrix m = dense_matrix(
      ctx, [&](const QuditState& s) { return op.apply(s, rep); }, c.cfg.dense_cap);
  out << render_matrix(m, ctx, format);
  return kSuccess;
}

int cmd_gram(const Commands& c, std::ostream& out) {
  const AlgebraContext ctx = make_context(c.cfg);
  const std::string format = resolve_format(c.cfg, "json", {"json", "csv", "text"}, "gram");
  const Matrix g = gram_matrix(Representation(ctx), c.cfg.dense_cap);
  out << render_matrix(g, ctx, format);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Commands c;
  CLI::App app{"Exact arithmetic and verification for generalized Clifford algebras", "gca"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--N", c.cfg.N, "Order N of the generators (N >= 2)")->required();
  app.add_option("--n", c.cfg.n, "Number of qudits n (n >= 1)")->required();
  app.add_option("--zeta-sign", c.cfg.zeta_sign, "Square root of q for even N: + or -")
      ->check(CLI::IsMember({"+", "-"}));
  app.add_option("--format", c.cfg.format, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", c.cfg.seed, "Seed for randomized checks");
  app.add_option("--dense-cap", c.cfg.dense_cap, "Largest N^n allowed for dense output")
      ->capture_default_str();
  app.add_option("--output", c.cfg.output, "Write structured output to this file");

  auto* verify = app.add_subcommand("verify", "Run the axiom verification suite");
  verify->add_option("--checks", c.checks, "Comma-separated check names")->delimiter(',');
  verify->add_option("--trials", c.trials, "Random words for the homomorphism check")
      ->capture_default_str();
  verify->add_option("--max-len", c.max_len, "Maximum random word length")->capture_default_str();
  auto* eval = app.add_subcommand("eval", "Evaluate an expression exactly");
  eval->add_option("expression", c.expression, "Expression text")->required();
  eval->add_flag("--approx", c.show_approx, "Also print float approximations");
  auto* matrix = app.add_subcommand("matrix", "Export the dense matrix of an operator");
  matrix->add_option("expression", c.expression, "Operator expression")->required();
  app.add_subcommand("gram", "Export the Gram matrix of the ordered basis");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "gca: " << e.what() << '\n';
    return kUsage;
  }

  std::ostringstream buffer;
  int status = kSuccess;
  try {
    if (verify->parsed())
      status = cmd_verify(c, buffer);
    else if (eval->parsed())
      status = cmd_eval(c, buffer);
    else if (matrix->parsed())
      status = cmd_matrix(c, buffer);
    else
      status = cmd_gram(c, buffer);
  } catch (const UsageError& e) {
    err << "gca: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    err << "gca: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "gca: " << e.what() << '\n';
    return kFailure;
  }

  if (c.cfg.output) {
    std::ofstream file(*c.cfg.output, std::ios::binary);
    if (!file) {
      err << "gca: cannot open " << *c.cfg.output << " for writing\n";
      return kFailure;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return status;
}

}  // namespace gca::cli
