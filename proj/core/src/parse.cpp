#include <cctype>
#include <limits>

#include "gca/expr.hpp"

namespace gca {

namespace {

enum class Tok {
  Ident,
  Int,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Caret,
  Apostrophe,
  Star,
  Plus,
  Minus,
  Slash,
  Pipe,
  Lt,
  Gt,
  Comma,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier '" + t.text + "'";
    case Tok::Int: return "integer " + t.text;
    default: return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      SourceSpan span{pos_, 0, line_, column_};
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", span});
        return out;
      }
      const char ch = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(ch))) {
        std::string word;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
          word += advance();
        span.length = word.size();
        if (word != "c" && word != "E" && word != "zeta" && word != "q" && word != "Omega")
          throw SyntaxError("unknown identifier '" + word + "'", span,
                            {"c[", "E[", "zeta", "q", "Omega"});
        out.push_back({Tok::Ident, word, span});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          digits += advance();
        span.length = digits.size();
        out.push_back({Tok::Int, digits, span});
        continue;
      }
      Tok kind;
      switch (ch) {
        case '[': kind = Tok::LBracket; break;
        case ']': kind = Tok::RBracket; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '^': kind = Tok::Caret; break;
        case '\'': kind = Tok::Apostrophe; break;
        case '*': kind = Tok::Star; break;
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '/': kind = Tok::Slash; break;
        case '|': kind = Tok::Pipe; break;
        case '<': kind = Tok::Lt; break;
        case '>': kind = Tok::Gt; break;
        case ',': kind = Tok::Comma; break;
        default:
          span.length = 1;
          throw SyntaxError(std::string("unexpected character '") + ch + "'", span, {});
      }
      span.length = 1;
      out.push_back({kind, std::string(1, advance()), span});
    }
  }

 private:
  char advance() {
    const char ch = text_[pos_++];
    if (ch == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return ch;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

SourceSpan cover(const SourceSpan& a, const SourceSpan& b) {
  SourceSpan s = a;
  s.length = b.offset + b.length - a.offset;
  return s;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprAst parse_top() {
    ExprAst e = parse_expr();
    if (peek().kind != Tok::End)
      throw SyntaxError("unexpected " + describe(peek()), peek().span,
                        {"+", "-", "*", "^", "'", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) throw SyntaxError("expected " + what + ", found " + describe(peek()),
                                               peek().span, {what});
    return next();
  }

  long long parse_uint(const std::string& what) {
    const Token& t = expect(Tok::Int, what);
    long long value = 0;
    for (char ch : t.text) {
      const int d = ch - '0';
      if (value > (std::numeric_limits<long long>::max() - d) / 10)
        throw SyntaxError("integer literal overflow", t.span, {});
      value = value * 10 + d;
    }
    return value;
  }

  static bool starts_post(Tok kind) {
    return kind == Tok::Ident || kind == Tok::Int || kind == Tok::LParen || kind == Tok::Pipe ||
           kind == Tok::Lt;
  }

  ExprAst parse_expr() {
    const SourceSpan start = peek().span;
    ExprAst first;
    if (peek().kind == Tok::Minus) {
      const SourceSpan minus = next().span;
      ExprAst operand = parse_prod();
      first.kind = NodeKind::Negate;
      first.span = cover(minus, operand.span);
      first.children.push_back(std::move(operand));
    } else {
      first = parse_prod();
    }
    if (peek().kind != Tok::Plus && peek().kind != Tok::Minus) return first;

    ExprAst sum;
    sum.kind = NodeKind::Sum;
    sum.children.push_back(std::move(first));
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token op = next();
      ExprAst term = parse_prod();
      if (op.kind == Tok::Minus) {
        ExprAst neg;
        neg.kind = NodeKind::Negate;
        neg.span = cover(op.span, term.span);
        neg.children.push_back(std::move(term));
        term = std::move(neg);
      }
      sum.children.push_back(std::move(term));
    }
    sum.span = cover(start, sum.children.back().span);
    return sum;
  }

  ExprAst parse_prod() {
    std::vector<ExprAst> factors;
    factors.push_back(parse_post());
    for (;;) {
      if (accept(Tok::Star)) {
        factors.push_back(parse_post());
      } else if (starts_post(peek().kind)) {
        factors.push_back(parse_post());
      } else {
        break;
      }
    }
    if (factors.size() == 1) return std::move(factors.front());

    const SourceSpan span = cover(factors.front().span, factors.back().span);
    ExprAst node;
    node.span = span;
    if (factors.front().kind == NodeKind::Bra && factors.back().kind == NodeKind::Ket) {
      node.kind = NodeKind::Sandwich;
      ExprAst middle;
      middle.kind = NodeKind::Product;
      middle.span = factors.size() > 2 ? cover(factors[1].span, factors[factors.size() - 2].span)
                                       : SourceSpan{factors.back().span.offset, 0,
                                                    factors.back().span.line,
                                                    factors.back().span.column};
      for (std::size_t i = 1; i + 1 < factors.size(); ++i)
        middle.children.push_back(std::move(factors[i]));
      node.children.push_back(std::move(factors.front()));
      node.children.push_back(std::move(middle));
      node.children.push_back(std::move(factors.back()));
    } else {
      node.kind = NodeKind::Product;
      node.children = std::move(factors);
    }
    return node;
  }

  ExprAst parse_post() {
    ExprAst node = parse_atom();
    for (;;) {
      if (peek().kind == Tok::Caret) {
        next();
        const SourceSpan exp_start = peek().span;
        const bool negative = accept(Tok::Minus);
        if (peek().kind != Tok::Int)
          throw SyntaxError("expected integer exponent, found " + describe(peek()), peek().span,
                            {"integer", "-"});
        const SourceSpan exp_end = peek().span;
        const long long magnitude = parse_uint("integer exponent");
        ExprAst pow;
        pow.kind = NodeKind::Power;
        pow.exponent = negative ? -magnitude : magnitude;
        pow.span = cover(node.span, cover(exp_start, exp_end));
        pow.children.push_back(std::move(node));
        node = std::move(pow);
      } else if (peek().kind == Tok::Apostrophe) {
        const SourceSpan tick = next().span;
        ExprAst dag;
        dag.kind = NodeKind::Dagger;
        dag.span = cover(node.span, tick);
        dag.children.push_back(std::move(node));
        node = std::move(dag);
      } else {
        return node;
      }
    }
  }

  std::vector<long long> parse_digit_list(Tok close, const std::string& close_text) {
    std::vector<long long> digits{parse_uint("digit")};
    while (accept(Tok::Comma)) digits.push_back(parse_uint("digit"));
    if (peek().kind != close)
      throw SyntaxError("expected ',' or '" + close_text + "', found " + describe(peek()),
                        peek().span, {",", close_text});
    next();
    return digits;
  }

  ExprAst parse_atom() {
    const Token& t = peek();
    ExprAst node;
    node.span = t.span;
    switch (t.kind) {
      case Tok::Ident: {
        const std::string word = next().text;
        if (word == "zeta") {
          node.kind = NodeKind::Zeta;
        } else if (word == "q") {
          node.kind = NodeKind::Q;
        } else if (word == "Omega") {
          node.kind = NodeKind::Ket;
          node.omega = true;
        } else {
          node.kind = word == "c" ? NodeKind::Generator : NodeKind::Projector;
          expect(Tok::LBracket, "[");
          node.index = parse_uint("index");
          node.span = cover(node.span, expect(Tok::RBracket, "]").span);
        }
        return node;
      }
      case Tok::Int: {
        node.kind = NodeKind::Rational;
        const long long num = parse_uint("integer");
        Rational value(mpz_class(std::to_string(num)));
        if (peek().kind == Tok::Slash) {
          next();
          const SourceSpan den_span = peek().span;
          const long long den = parse_uint("denominator");
          if (den == 0) throw SyntaxError("zero denominator", den_span, {"nonzero integer"});
          value = Rational(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
          value.canonicalize();
          node.span = cover(node.span, den_span);
        }
        node.value = value;
        return node;
      }
      case Tok::LParen: {
        next();
        ExprAst inner = parse_expr();
        const SourceSpan close = expect(Tok::RParen, ")").span;
        inner.span = cover(t.span, close);
        return inner;
      }
      case Tok::Pipe: {
        const SourceSpan open = next().span;
        node.kind = NodeKind::Ket;
        node.digits = parse_digit_list(Tok::Gt, ">");
        node.span = cover(open, tokens_[pos_ - 1].span);
        return node;
      }
      case Tok::Lt: {
        const SourceSpan open = next().span;
        node.kind = NodeKind::Bra;
        node.digits = parse_digit_list(Tok::Pipe, "|");
        node.span = cover(open, tokens_[pos_ - 1].span);
        return node;
      }
      default:
        throw SyntaxError("expected an operand, found " + describe(t), t.span,
                          {"c[", "E[", "zeta", "q", "Omega", "integer", "(", "|", "<"});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string format_syntax_message(const std::string& message, const SourceSpan& span,
                                  const std::vector<std::string>& expected) {
  std::string out = std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message;
  if (!expected.empty()) {
    out += " (expected one of:";
    for (const auto& e : expected) out += " " + e;
    out += ")";
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(const std::string& message, SourceSpan span,
                         std::vector<std::string> expected)
    : Error(format_syntax_message(message, span, expected)),
      span_(span),
      expected_(std::move(expected)),
      detail_(message) {}

EvalError::EvalError(const std::string& message, SourceSpan span)
    : Error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message),
      span_(span) {}

ExprAst parse(const std::string& text) {
  Parser parser(Lexer(text).run());
  return parser.parse_top();
}

}  // namespace gca
