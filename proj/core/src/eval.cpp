#include <type_traits>

#include "gca/expr.hpp"

namespace gca {

// ---------------------------------------------------------------------------
// Operator

Operator::Operator(const AlgebraElement& x) : ctx_(x.context()), chains_{Chain{x}} {}

Operator::Operator(const AlgebraContext& ctx, std::vector<Chain> chains)
    : ctx_(ctx), chains_(std::move(chains)) {
  normalize();
}

Operator Operator::projector(const AlgebraContext& ctx, int k) {
  if (k < 1 || k > ctx.n)
    throw ValidationError("projector index " + std::to_string(k) + " outside [1, " +
                          std::to_string(ctx.n) + "]");
  return Operator(ctx, {Chain{Factor{k}}});
}

bool Operator::has_projector() const {
  for (const auto& chain : chains_)
    for (const auto& f : chain)
      if (std::holds_alternative<int>(f)) return true;
  return false;
}

void Operator::normalize() {
  std::vector<Chain> merged;
  for (auto& chain : chains_) {
    Chain out;
    bool zero = false;
    for (auto& f : chain) {
      if (auto* x = std::get_if<AlgebraElement>(&f)) {
        if (x->is_zero()) zero = true;
        if (!out.empty() && std::holds_alternative<AlgebraElement>(out.back()))
          out.back() = std::get<AlgebraElement>(out.back()) * *x;
        else
          out.push_back(std::move(f));
      } else if (out.empty() || out.back().index() != f.index() ||
                 std::get<int>(out.back()) != std::get<int>(f)) {
        out.push_back(f);  // E_k E_k = E_k
      }
    }
    if (!zero) merged.push_back(std::move(out));
  }
  chains_ = std::move(merged);
  if (!has_projector()) {
    AlgebraElement total(ctx_);
    for (const auto& chain : chains_) total += std::get<AlgebraElement>(chain.front());
    chains_ = {Chain{total}};
  }
}

AlgebraElement Operator::as_element(const SourceSpan& span) const {
  if (has_projector())
    throw EvalError("projector E[k] is not an algebra element; apply it to a ket", span);
  return std::get<AlgebraElement>(chains_.front().front());
}

QuditState Operator::apply(const QuditState& s, const Representation& rep) const {
  QuditState out(ctx_);
  for (const auto& chain : chains_) {
    QuditState v = s;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      if (const auto* x = std::get_if<AlgebraElement>(&*it))
        v = rep.apply_element(*x, v);
      else
        v = rep.apply_projector(std::get<int>(*it), v);
    }
    out += v;
  }
  return out;
}

QuditState Operator::apply(const QuditState& s) const { return apply(s, Representation(ctx_)); }

Operator operator+(const Operator& a, const Operator& b) {
  require_same_context(a.ctx_, b.ctx_);
  std::vector<Operator::Chain> chains = a.chains_;
  chains.insert(chains.end(), b.chains_.begin(), b.chains_.end());
  return Operator(a.ctx_, std::move(chains));
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_context(a.ctx_, b.ctx_);
  std::vector<Operator::Chain> chains;
  for (const auto& ca : a.chains_)
    for (const auto& cb : b.chains_) {
      Operator::Chain c = ca;
      c.insert(c.end(), cb.begin(), cb.end());
      chains.push_back(std::move(c));
    }
  return Operator(a.ctx_, std::move(chains));
}

Operator operator*(const CycloScalar& s, const Operator& a) {
  return Operator(AlgebraElement::scalar(a.ctx_, s)) * a;
}

Operator adjoint(const Operator& a) {
  std::vector<Operator::Chain> chains;
  for (const auto& chain : a.chains_) {
    Operator::Chain c;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      if (const auto* x = std::get_if<AlgebraElement>(&*it))
        c.emplace_back(adjoint(*x));
      else
        c.push_back(*it);
    }
    chains.push_back(std::move(c));
  }
  return Operator(a.ctx_, std::move(chains));
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Dual of a ket; <b| X = <X^dagger b|.
struct Bra {
  QuditState ket;
};

using Value = std::variant<CycloScalar, Operator, QuditState, Bra>;

std::string kind_name(const Value& v) {
  switch (v.index()) {
    case 0: return "scalar";
    case 1: return "operator";
    case 2: return "ket";
    default: return "bra";
  }
}

Operator operator_power(const Operator& op, long long e) {
  if (!op.has_projector()) return Operator(gca::power(op.as_element(), e));
  Operator result(AlgebraElement::identity(op.context()));
  Operator base = op;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

class Evaluator {
 public:
  explicit Evaluator(const AlgebraContext& ctx) : ctx_(ctx), rep_(ctx) {}

  Value eval(const ExprAst& node) {
    switch (node.kind) {
      case NodeKind::Rational: return scalar(ctx_, node.value);
      case NodeKind::Zeta: return zeta(ctx_);
      case NodeKind::Q: return q(ctx_);
      case NodeKind::Generator:
        if (node.index < 1 || node.index > ctx_.generator_count())
          throw EvalError("generator index " + std::to_string(node.index) + " outside [1, " +
                              std::to_string(ctx_.generator_count()) + "]",
                          node.span);
        return Operator(AlgebraElement::generator(ctx_, static_cast<int>(node.index)));
      case NodeKind::Projector:
        if (node.index < 1 || node.index > ctx_.n)
          throw EvalError("projector index " + std::to_string(node.index) + " outside [1, " +
                              std::to_string(ctx_.n) + "]",
                          node.span);
        return Operator::projector(ctx_, static_cast<int>(node.index));
      case NodeKind::Ket: return ket(node);
      case NodeKind::Bra: return Bra{ket(node)};
      case NodeKind::Power: return power(eval(node.children.front()), node.exponent, node.span);
      case NodeKind::Dagger: return dagger(eval(node.children.front()));
      case NodeKind::Negate: return negate(eval(node.children.front()));
      case NodeKind::Sum: {
        Value acc = eval(node.children.front());
        for (std::size_t i = 1; i < node.children.size(); ++i)
          acc = add(acc, eval(node.children[i]), node.children[i].span);
        return acc;
      }
      case NodeKind::Product: {
        if (node.children.empty()) return scalar(ctx_, 1);
        Value acc = eval(node.children.front());
        for (std::size_t i = 1; i < node.children.size(); ++i)
          acc = multiply(acc, eval(node.children[i]), node.children[i].span);
        return acc;
      }
      case NodeKind::Sandwich: {
        Value acc = eval(node.children[0]);
        for (const auto& f : node.children[1].children) acc = multiply(acc, eval(f), f.span);
        return multiply(acc, eval(node.children[2]), node.children[2].span);
      }
    }
    throw EvalError("unknown node", node.span);
  }

 private:
  QuditState ket(const ExprAst& node) {
    if (node.omega) return QuditState::ground(ctx_);
    if (node.digits.size() != static_cast<std::size_t>(ctx_.n))
      throw EvalError("ket has " + std::to_string(node.digits.size()) + " digits, expected " +
                          std::to_string(ctx_.n),
                      node.span);
    Digits digits;
    for (long long d : node.digits) {
      if (d < 0 || d >= ctx_.N)
        throw EvalError("digit " + std::to_string(d) + " outside [0, " + std::to_string(ctx_.N) + ")",
                        node.span);
      digits.push_back(static_cast<int>(d));
    }
    return QuditState::basis(ctx_, digits);
  }

  Value power(const Value& v, long long e, const SourceSpan& span) {
    const long long m = e < 0 ? -e : e;
    if (const auto* s = std::get_if<CycloScalar>(&v)) {
      CycloScalar p = s->pow(m);
      return e < 0 ? p.conj() : p;
    }
    if (const auto* op = std::get_if<Operator>(&v)) {
      Operator p = operator_power(*op, m);
      return e < 0 ? adjoint(p) : p;
    }
    throw EvalError("cannot raise a " + kind_name(v) + " to a power", span);
  }

  static Value dagger(const Value& v) {
    return std::visit(
        [](const auto& x) -> Value {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, CycloScalar>)
            return x.conj();
          else if constexpr (std::is_same_v<T, Operator>)
            return adjoint(x);
          else if constexpr (std::is_same_v<T, QuditState>)
            return Bra{x};
          else
            return x.ket;
        },
        v);
  }

  Value negate(const Value& v) {
    const CycloScalar minus_one = scalar(ctx_, -1);
    return multiply(minus_one, v, {});
  }

  Value add(const Value& a, const Value& b, const SourceSpan& span) {
    if (const auto* sa = std::get_if<CycloScalar>(&a)) {
      if (const auto* sb = std::get_if<CycloScalar>(&b)) return *sa + *sb;
      if (const auto* ob = std::get_if<Operator>(&b))
        return Operator(AlgebraElement::scalar(ctx_, *sa)) + *ob;
    }
    if (const auto* oa = std::get_if<Operator>(&a)) {
      if (const auto* sb = std::get_if<CycloScalar>(&b))
        return *oa + Operator(AlgebraElement::scalar(ctx_, *sb));
      if (const auto* ob = std::get_if<Operator>(&b)) return *oa + *ob;
    }
    if (const auto* ka = std::get_if<QuditState>(&a))
      if (const auto* kb = std::get_if<QuditState>(&b)) return *ka + *kb;
    if (const auto* ba = std::get_if<Bra>(&a))
      if (const auto* bb = std::get_if<Bra>(&b)) return Bra{ba->ket + bb->ket};
    throw EvalError("cannot add a " + kind_name(b) + " to a " + kind_name(a), span);
  }

  Value multiply(const Value& a, const Value& b, const SourceSpan& span) {
    // Scalars commute with everything.
    if (const auto* sa = std::get_if<CycloScalar>(&a)) return scale(*sa, b);
    if (const auto* sb = std::get_if<CycloScalar>(&b)) return scale(*sb, a);

    if (const auto* oa = std::get_if<Operator>(&a)) {
      if (const auto* ob = std::get_if<Operator>(&b)) return *oa * *ob;
      if (const auto* kb = std::get_if<QuditState>(&b)) return oa->apply(*kb, rep_);
    }
    if (const auto* ba = std::get_if<Bra>(&a)) {
      if (const auto* ob = std::get_if<Operator>(&b)) return Bra{adjoint(*ob).apply(ba->ket, rep_)};
      if (const auto* kb = std::get_if<QuditState>(&b)) return scalar_product(ba->ket, *kb);
    }
    throw EvalError("cannot multiply a " + kind_name(a) + " by a " + kind_name(b), span);
  }

  Value scale(const CycloScalar& s, const Value& v) {
    return std::visit(
        [&](const auto& x) -> Value {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, CycloScalar>)
            return s * x;
          else if constexpr (std::is_same_v<T, Operator>)
            return s * x;
          else if constexpr (std::is_same_v<T, QuditState>)
            return s * x;
          else
            return Bra{s.conj() * x.ket};
        },
        v);
  }

  AlgebraContext ctx_;
  Representation rep_;
};

}  // namespace

ExprValue eval_any(const ExprAst& ast, const AlgebraContext& ctx) {
  Value v = Evaluator(ctx).eval(ast);
  if (auto* s = std::get_if<CycloScalar>(&v)) return std::move(*s);
  if (auto* op = std::get_if<Operator>(&v)) return std::move(*op);
  if (auto* k = std::get_if<QuditState>(&v)) return std::move(*k);
  throw EvalError("expression evaluates to a bra; close it with a ket", ast.span);
}

AlgebraElement eval_element(const ExprAst& ast, const AlgebraContext& ctx) {
  ExprValue v = eval_any(ast, ctx);
  if (auto* s = std::get_if<CycloScalar>(&v)) return AlgebraElement::scalar(ctx, *s);
  if (auto* op = std::get_if<Operator>(&v)) return op->as_element(ast.span);
  throw EvalError("expected an algebra element, got a ket", ast.span);
}

QuditState eval_state(const ExprAst& ast, const AlgebraContext& ctx) {
  ExprValue v = eval_any(ast, ctx);
  if (auto* k = std::get_if<QuditState>(&v)) return std::move(*k);
  throw EvalError(std::string("expected a ket expression, got ") +
                      (std::holds_alternative<CycloScalar>(v) ? "a scalar" : "an operator"),
                  ast.span);
}

CycloScalar eval_scalar(const ExprAst& ast, const AlgebraContext& ctx) {
  ExprValue v = eval_any(ast, ctx);
  if (auto* s = std::get_if<CycloScalar>(&v)) return std::move(*s);
  throw EvalError(std::string("expected a scalar, got ") +
                      (std::holds_alternative<Operator>(v) ? "an operator" : "a ket"),
                  ast.span);
}

}  // namespace gca
