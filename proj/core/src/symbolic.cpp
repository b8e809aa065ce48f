#include "gca/symbolic.hpp"

#include <algorithm>
#include <string>

#include "gca/error.hpp"

namespace gca {

namespace {

int mod_n(long long v, int N) {
  v %= N;
  return static_cast<int>(v < 0 ? v + N : v);
}

// q^{-sum_{i>j} a_i b_j}: the phase picked up moving every generator of b
// left past the larger-indexed generators of a.
long long cross_exponent(const Exponents& a, const Exponents& b) {
  long long total = 0;
  long long suffix = 0;  // sum of a_i for i > j
  for (std::size_t j = a.size(); j-- > 0;) {
    total += suffix * b[j];
    suffix += a[j];
  }
  return total;
}

}  // namespace

void require_same_context(const AlgebraContext& a, const AlgebraContext& b) {
  if (!(a == b)) throw ContextMismatch("context mismatch: " + a.describe() + " vs " + b.describe());
}

GeneratorWord::GeneratorWord(const AlgebraContext& ctx, std::vector<int> letters)
    : ctx_(ctx), letters_(std::move(letters)) {
  for (int l : letters_)
    if (l < 1 || l > ctx_.generator_count())
      throw ValidationError("generator index " + std::to_string(l) + " outside [1, " +
                            std::to_string(ctx_.generator_count()) + "]");
}

NormalMonomial NormalMonomial::identity(const AlgebraContext& ctx) {
  return {ctx, scalar(ctx, 1), Exponents(static_cast<std::size_t>(ctx.generator_count()), 0)};
}

NormalMonomial NormalMonomial::generator(const AlgebraContext& ctx, int index, long long power) {
  if (index < 1 || index > ctx.generator_count())
    throw ValidationError("generator index " + std::to_string(index) + " outside [1, " +
                          std::to_string(ctx.generator_count()) + "]");
  NormalMonomial m = identity(ctx);
  m.exps[index - 1] = mod_n(power, ctx.N);
  return m;
}

bool operator==(const NormalMonomial& a, const NormalMonomial& b) {
  return a.ctx == b.ctx && a.exps == b.exps && a.phase == b.phase;
}

NormalMonomial normal_order(const GeneratorWord& w) {
  const AlgebraContext& ctx = w.context();
  std::vector<int> letters = w.letters();
  long long swaps = 0;
  for (bool sorted = false; !sorted;) {
    sorted = true;
    for (std::size_t p = 0; p + 1 < letters.size(); ++p) {
      if (letters[p] > letters[p + 1]) {
        // c_j c_i = q^{-1} c_i c_j for i < j
        std::swap(letters[p], letters[p + 1]);
        ++swaps;
        sorted = false;
      }
    }
  }
  NormalMonomial m = NormalMonomial::identity(ctx);
  for (int l : letters) m.exps[l - 1] = (m.exps[l - 1] + 1) % ctx.N;
  m.phase = omega_pow(ctx, -2 * (swaps % ctx.N));
  return m;
}

NormalMonomial mul_monomial(const NormalMonomial& a, const NormalMonomial& b) {
  require_same_context(a.ctx, b.ctx);
  const AlgebraContext& ctx = a.ctx;
  NormalMonomial out{ctx, a.phase * b.phase, a.exps};
  for (std::size_t i = 0; i < out.exps.size(); ++i) out.exps[i] = (out.exps[i] + b.exps[i]) % ctx.N;
  const long long cross = cross_exponent(a.exps, b.exps) % ctx.N;
  if (cross != 0) out.phase *= omega_pow(ctx, -2 * cross);
  return out;
}

NormalMonomial adjoint(const NormalMonomial& m) {
  const AlgebraContext& ctx = m.ctx;
  NormalMonomial out = NormalMonomial::identity(ctx);
  out.phase = m.phase.conj();
  // (c_1^{e_1} ... c_{2n}^{e_{2n}})^dagger = c_{2n}^{-e_{2n}} ... c_1^{-e_1}
  for (int i = ctx.generator_count(); i >= 1; --i) {
    const int e = m.exps[i - 1];
    if (e != 0) out = mul_monomial(out, NormalMonomial::generator(ctx, i, ctx.N - e));
  }
  return out;
}

// ---------------------------------------------------------------------------

AlgebraElement::AlgebraElement(const AlgebraContext& ctx) : ctx_(ctx) {}

AlgebraElement::AlgebraElement(const NormalMonomial& m) : ctx_(m.ctx) {
  if (!m.phase.is_zero()) terms_.emplace(m.exps, m.phase);
}

AlgebraElement AlgebraElement::identity(const AlgebraContext& ctx) {
  return AlgebraElement(NormalMonomial::identity(ctx));
}

AlgebraElement AlgebraElement::scalar(const AlgebraContext& ctx, const CycloScalar& s) {
  NormalMonomial m = NormalMonomial::identity(ctx);
  m.phase = s;
  return AlgebraElement(m);
}

AlgebraElement AlgebraElement::generator(const AlgebraContext& ctx, int index, long long power) {
  return AlgebraElement(NormalMonomial::generator(ctx, index, power));
}

void AlgebraElement::add_term(const Exponents& exps, const CycloScalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  require_same_context(ctx_, rhs.ctx_);
  for (const auto& [exps, c] : rhs.terms_) add_term(exps, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) { return *this += -rhs; }

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_context(a.ctx_, b.ctx_);
  const AlgebraContext& ctx = a.ctx_;
  AlgebraElement out(ctx);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      NormalMonomial prod = mul_monomial({ctx, ca, ea}, {ctx, cb, eb});
      out.add_term(prod.exps, prod.phase);
    }
  }
  return out;
}

AlgebraElement operator*(const CycloScalar& s, const AlgebraElement& a) {
  if (s.order() != a.ctx_.order())
    throw ContextMismatch("scalar order does not match " + a.ctx_.describe());
  AlgebraElement out(a.ctx_);
  if (s.is_zero()) return out;
  for (const auto& [exps, c] : a.terms_) out.add_term(exps, s * c);
  return out;
}

AlgebraElement operator-(const AlgebraElement& a) {
  AlgebraElement out = a;
  for (auto& [exps, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.ctx_ == b.ctx_) || a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

AlgebraElement adjoint(const AlgebraElement& x) {
  AlgebraElement out(x.context());
  for (const auto& [exps, c] : x.terms()) {
    NormalMonomial m = adjoint(NormalMonomial{x.context(), c, exps});
    out.add_term(m.exps, m.phase);
  }
  return out;
}

AlgebraElement add_elements(const AlgebraElement& a, const AlgebraElement& b) { return a + b; }
AlgebraElement mul_elements(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }
AlgebraElement scale(const CycloScalar& s, const AlgebraElement& a) { return s * a; }

AlgebraElement power(const AlgebraElement& x, long long e) {
  if (e < 0) throw ValidationError("power: negative exponent");
  AlgebraElement result = AlgebraElement::identity(x.context());
  AlgebraElement base = x;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace gca
