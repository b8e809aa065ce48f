#pragma once

/**
 * @file expr.hpp
 * @brief Text expressions over the algebra and the qudit model.
 *
 * Grammar (ASCII):
 *
 *   expr   := ["-"] prod { ("+" | "-") prod }
 *   prod   := post { ["*"] post }
 *   post   := atom { "^" int | "'" }
 *   atom   := "c[" uint "]" | "E[" uint "]" | "zeta" | "q" | rational
 *           | "(" expr ")" | ket | bra
 *   ket    := "|" uint { "," uint } ">" | "Omega"
 *   bra    := "<" uint { "," uint } "|"
 *   rational := uint [ "/" uint ] ;  int := ["-"] uint
 *
 * Juxtaposition binds tighter than "+", "^" tighter than juxtaposition and
 * postfix "'" (dagger) binds tightest. A product ending in a ket is a state;
 * a product starting with a bra and ending in a ket is a scalar. A negative
 * power is the adjoint of the positive power.
 */

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "gca/cyclo.hpp"
#include "gca/error.hpp"
#include "gca/rep.hpp"
#include "gca/symbolic.hpp"

namespace gca {

struct SourceSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
  int line = 1;
  int column = 1;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, SourceSpan span, std::vector<std::string> expected);

  const SourceSpan& span() const noexcept { return span_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  SourceSpan span_;
  std::vector<std::string> expected_;
  std::string detail_;
};

// Well-formed syntax that does not evaluate to the requested kind, or with
// indices/digits outside the context.
class EvalError : public Error {
 public:
  EvalError(const std::string& message, SourceSpan span);
  const SourceSpan& span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

enum class NodeKind {
  Rational,   // value
  Zeta,
  Q,
  Generator,  // index
  Projector,  // index
  Power,      // children[0] ^ exponent
  Dagger,     // children[0]'
  Product,    // children in order
  Sum,        // children added
  Negate,     // -children[0]
  Ket,        // digits; omega = true for "Omega"
  Bra,        // digits
  Sandwich,   // children: bra, product of operators (possibly empty), ket
};

struct ExprAst {
  NodeKind kind = NodeKind::Rational;
  SourceSpan span;
  std::vector<ExprAst> children;
  Rational value;
  long long index = 0;
  long long exponent = 0;
  std::vector<long long> digits;
  bool omega = false;
};

ExprAst parse(const std::string& text);

// Linear combination of operator chains; a chain may contain projectors E_k,
// which are not algebra elements.
class Operator {
 public:
  using Factor = std::variant<AlgebraElement, int>;  // int = projector qudit index
  using Chain = std::vector<Factor>;

  explicit Operator(const AlgebraElement& x);
  static Operator projector(const AlgebraContext& ctx, int k);

  const AlgebraContext& context() const noexcept { return ctx_; }
  const std::vector<Chain>& chains() const noexcept { return chains_; }
  bool has_projector() const;
  // Throws EvalError when a projector is present.
  AlgebraElement as_element(const SourceSpan& span = {}) const;

  QuditState apply(const QuditState& s, const Representation& rep) const;
  QuditState apply(const QuditState& s) const;

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(const CycloScalar& s, const Operator& a);
  friend Operator adjoint(const Operator& a);

 private:
  Operator(const AlgebraContext& ctx, std::vector<Chain> chains);
  void normalize();

  AlgebraContext ctx_;
  std::vector<Chain> chains_;
};

using ExprValue = std::variant<CycloScalar, Operator, QuditState>;

ExprValue eval_any(const ExprAst& ast, const AlgebraContext& ctx);
AlgebraElement eval_element(const ExprAst& ast, const AlgebraContext& ctx);
QuditState eval_state(const ExprAst& ast, const AlgebraContext& ctx);
CycloScalar eval_scalar(const ExprAst& ast, const AlgebraContext& ctx);

inline AlgebraElement eval_element(const std::string& text, const AlgebraContext& ctx) {
  return eval_element(parse(text), ctx);
}
inline QuditState eval_state(const std::string& text, const AlgebraContext& ctx) {
  return eval_state(parse(text), ctx);
}
inline CycloScalar eval_scalar(const std::string& text, const AlgebraContext& ctx) {
  return eval_scalar(parse(text), ctx);
}

}  // namespace gca
