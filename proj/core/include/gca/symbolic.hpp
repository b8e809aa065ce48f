#pragma once

/**
 * @file symbolic.hpp
 * @brief Normal forms in the generalized Clifford algebra C_{2n}^{(N)}.
 *
 * Generators c_1..c_{2n} satisfy c_i c_j = q c_j c_i for i < j and c_i^N = 1.
 * Every word therefore equals a unique phase times c_1^{e_1} ... c_{2n}^{e_{2n}}
 * with 0 <= e_i < N.
 */

#include <map>
#include <vector>

#include "gca/cyclo.hpp"

namespace gca {

// Exponent vector (e_1, ..., e_{2n}); index 0 holds the power of c_1.
using Exponents = std::vector<int>;

class GeneratorWord {
 public:
  // Letters are 1-based generator indices; throws ValidationError if out of [1, 2n].
  GeneratorWord(const AlgebraContext& ctx, std::vector<int> letters);

  const AlgebraContext& context() const noexcept { return ctx_; }
  const std::vector<int>& letters() const noexcept { return letters_; }

 private:
  AlgebraContext ctx_;
  std::vector<int> letters_;
};

struct NormalMonomial {
  AlgebraContext ctx;
  CycloScalar phase;
  Exponents exps;

  static NormalMonomial identity(const AlgebraContext& ctx);
  // c_i^power with power reduced mod N.
  static NormalMonomial generator(const AlgebraContext& ctx, int index, long long power = 1);
};

// Same phase (exact) and same exponents.
bool operator==(const NormalMonomial& a, const NormalMonomial& b);

/// Finite linear combination of normal monomials. Terms are keyed by
/// exponent vector (lexicographic order); coefficients are never zero.
class AlgebraElement {
 public:
  using TermMap = std::map<Exponents, CycloScalar>;

  explicit AlgebraElement(const AlgebraContext& ctx);
  explicit AlgebraElement(const NormalMonomial& m);

  static AlgebraElement zero(const AlgebraContext& ctx) { return AlgebraElement(ctx); }
  static AlgebraElement identity(const AlgebraContext& ctx);
  static AlgebraElement scalar(const AlgebraContext& ctx, const CycloScalar& s);
  static AlgebraElement generator(const AlgebraContext& ctx, int index, long long power = 1);

  const AlgebraContext& context() const noexcept { return ctx_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Adds coeff * c^exps, dropping the entry if it cancels.
  void add_term(const Exponents& exps, const CycloScalar& coeff);

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const CycloScalar& s, const AlgebraElement& a);
  friend AlgebraElement operator-(const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  AlgebraContext ctx_;
  TermMap terms_;
};

// Stable bubble reduction: adjacent swaps of out-of-order letters, each
// contributing q^{-1}, then powers folded with c_i^N = 1.
NormalMonomial normal_order(const GeneratorWord& w);

// Closed form: phase(a) phase(b) q^{-sum_{i>j} e_i(a) f_j(b)}, exponents added mod N.
NormalMonomial mul_monomial(const NormalMonomial& a, const NormalMonomial& b);

// Antihomomorphism: reverses products, c_i -> c_i^{N-1}, conjugates scalars.
AlgebraElement adjoint(const AlgebraElement& x);
NormalMonomial adjoint(const NormalMonomial& m);

AlgebraElement add_elements(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement mul_elements(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const CycloScalar& s, const AlgebraElement& a);
// Non-negative powers by repeated squaring.
AlgebraElement power(const AlgebraElement& x, long long e);

void require_same_context(const AlgebraContext& a, const AlgebraContext& b);

}  // namespace gca
