#include "gca/rep.hpp"

#include <string>

#include "gca/error.hpp"

namespace gca {

namespace {

void require_digits(const AlgebraContext& ctx, const Digits& digits) {
  if (digits.size() != static_cast<std::size_t>(ctx.n))
    throw ValidationError("expected " + std::to_string(ctx.n) + " digits, got " +
                          std::to_string(digits.size()));
  for (int d : digits)
    if (d < 0 || d >= ctx.N)
      throw ValidationError("digit " + std::to_string(d) + " outside [0, " + std::to_string(ctx.N) +
                            ")");
}

void require_cap(std::uint64_t dim, std::uint64_t cap) {
  if (dim > cap)
    throw CapExceeded("dimension " + std::to_string(dim) + " exceeds dense cap " +
                      std::to_string(cap));
}

}  // namespace

QuditState::QuditState(const AlgebraContext& ctx) : ctx_(ctx), dim_(ctx.dimension()) {}

QuditState QuditState::ground(const AlgebraContext& ctx) {
  QuditState s(ctx);
  s.amps_.emplace(0, scalar(ctx, 1));
  return s;
}

QuditState QuditState::basis(const AlgebraContext& ctx, const Digits& digits) {
  require_digits(ctx, digits);
  QuditState s(ctx);
  s.amps_.emplace(s.flat_index(digits), scalar(ctx, 1));
  return s;
}

std::uint64_t QuditState::flat_index(const Digits& digits) const {
  require_digits(ctx_, digits);
  std::uint64_t flat = 0;
  for (int d : digits) flat = flat * static_cast<std::uint64_t>(ctx_.N) + static_cast<std::uint64_t>(d);
  return flat;
}

Digits QuditState::digits(std::uint64_t flat) const {
  Digits out(static_cast<std::size_t>(ctx_.n));
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<int>(flat % static_cast<std::uint64_t>(ctx_.N));
    flat /= static_cast<std::uint64_t>(ctx_.N);
  }
  return out;
}

CycloScalar QuditState::amplitude(const Digits& digits) const {
  auto it = amps_.find(flat_index(digits));
  return it == amps_.end() ? CycloScalar(ctx_.order()) : it->second;
}

void QuditState::add_amplitude(std::uint64_t flat, const CycloScalar& amp) {
  if (flat >= dim_) throw ValidationError("basis index out of range");
  if (amp.order() != ctx_.order()) throw ContextMismatch("amplitude order does not match state");
  if (amp.is_zero()) return;
  auto [it, inserted] = amps_.try_emplace(flat, amp);
  if (inserted) return;
  it->second += amp;
  if (it->second.is_zero()) amps_.erase(it);
}

void QuditState::add_amplitude(const Digits& digits, const CycloScalar& amp) {
  add_amplitude(flat_index(digits), amp);
}

QuditState& QuditState::operator+=(const QuditState& rhs) {
  require_same_context(ctx_, rhs.ctx_);
  for (const auto& [flat, amp] : rhs.amps_) add_amplitude(flat, amp);
  return *this;
}

QuditState& QuditState::operator-=(const QuditState& rhs) {
  require_same_context(ctx_, rhs.ctx_);
  for (const auto& [flat, amp] : rhs.amps_) add_amplitude(flat, -amp);
  return *this;
}

QuditState operator*(const CycloScalar& s, const QuditState& v) {
  if (s.order() != v.ctx_.order()) throw ContextMismatch("scalar order does not match state");
  QuditState out(v.ctx_);
  if (s.is_zero()) return out;
  for (const auto& [flat, amp] : v.amps_) {
    CycloScalar a = s * amp;
    if (!a.is_zero()) out.amps_.emplace_hint(out.amps_.end(), flat, std::move(a));
  }
  return out;
}

bool operator==(const QuditState& a, const QuditState& b) {
  if (!(a.ctx_ == b.ctx_) || a.amps_.size() != b.amps_.size()) return false;
  for (auto ia = a.amps_.begin(), ib = b.amps_.begin(); ia != a.amps_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

// ---------------------------------------------------------------------------

Representation::Representation(const AlgebraContext& ctx) : ctx_(ctx) {}

long long Representation::even_phase(int k, std::span<const int> digits) const {
  long long below = 0;
  for (int i = 0; i < k - 1; ++i) below += digits[i];
  return -2 * below;
}

long long Representation::odd_phase(int k, std::span<const int> digits) const {
  long long below = 0;
  for (int i = 0; i < k - 1; ++i) below += digits[i];
  return ctx_.zeta_exp + 2LL * digits[k - 1] - 2 * below;
}

void Representation::require_qudit(int k) const {
  if (k < 1 || k > ctx_.n)
    throw ValidationError("qudit index " + std::to_string(k) + " outside [1, " +
                          std::to_string(ctx_.n) + "]");
}

QuditState Representation::shift(int k, const QuditState& s, bool odd) const {
  require_qudit(k);
  require_same_context(ctx_, s.context());
  const auto N = static_cast<std::uint64_t>(ctx_.N);
  std::uint64_t stride = 1;
  for (int i = k; i < ctx_.n; ++i) stride *= N;

  QuditState out(ctx_);
  Digits digits(static_cast<std::size_t>(ctx_.n));
  for (const auto& [flat, amp] : s.amps_) {
    std::uint64_t rest = flat;
    for (std::size_t i = digits.size(); i-- > 0;) {
      digits[i] = static_cast<int>(rest % N);
      rest /= N;
    }
    const long long phase = odd ? odd_phase(k, digits) : even_phase(k, digits);
    const int a_k = digits[k - 1];
    const std::uint64_t target = a_k + 1 == ctx_.N ? flat - a_k * stride : flat + stride;
    out.amps_.emplace(target, amp.rotated(phase));
  }
  return out;
}

QuditState Representation::apply_even(int k, const QuditState& s) const { return shift(k, s, false); }

QuditState Representation::apply_odd(int k, const QuditState& s) const { return shift(k, s, true); }

QuditState Representation::apply_generator(int i, const QuditState& s) const {
  if (i < 1 || i > ctx_.generator_count())
    throw ValidationError("generator index " + std::to_string(i) + " outside [1, " +
                          std::to_string(ctx_.generator_count()) + "]");
  return i % 2 == 0 ? apply_even(i / 2, s) : apply_odd((i + 1) / 2, s);
}

QuditState Representation::apply_generator_adjoint(int i, const QuditState& s) const {
  if (i < 1 || i > ctx_.generator_count())
    throw ValidationError("generator index " + std::to_string(i) + " outside [1, " +
                          std::to_string(ctx_.generator_count()) + "]");
  require_same_context(ctx_, s.context());
  const bool odd = i % 2 == 1;
  const int k = odd ? (i + 1) / 2 : i / 2;
  const auto N = static_cast<std::uint64_t>(ctx_.N);
  std::uint64_t stride = 1;
  for (int j = k; j < ctx_.n; ++j) stride *= N;

  // c|b> = phase(b)|b + e_k>  ==>  c^dagger|b + e_k> = conj(phase(b))|b>
  QuditState out(ctx_);
  Digits digits(static_cast<std::size_t>(ctx_.n));
  for (const auto& [flat, amp] : s.amps_) {
    const int a_k = static_cast<int>((flat / stride) % N);
    const std::uint64_t source = a_k == 0 ? flat + (N - 1) * stride : flat - stride;
    std::uint64_t rest = source;
    for (std::size_t j = digits.size(); j-- > 0;) {
      digits[j] = static_cast<int>(rest % N);
      rest /= N;
    }
    const long long phase = odd ? odd_phase(k, digits) : even_phase(k, digits);
    out.amps_.emplace(source, amp.rotated(-phase));
  }
  return out;
}

QuditState Representation::apply_projector(int k, const QuditState& s) const {
  require_qudit(k);
  require_same_context(ctx_, s.context());
  const auto N = static_cast<std::uint64_t>(ctx_.N);
  std::uint64_t stride = 1;
  for (int i = k; i < ctx_.n; ++i) stride *= N;
  QuditState out(ctx_);
  for (const auto& [flat, amp] : s.amps_)
    if ((flat / stride) % N == 0) out.amps_.emplace_hint(out.amps_.end(), flat, amp);
  return out;
}

QuditState Representation::apply_word(const GeneratorWord& w, const QuditState& s) const {
  require_same_context(ctx_, w.context());
  QuditState out = s;
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = apply_generator(*it, out);
  return out;
}

QuditState Representation::apply_element(const AlgebraElement& x, const QuditState& s) const {
  require_same_context(ctx_, x.context());
  require_same_context(ctx_, s.context());
  QuditState out(ctx_);
  for (const auto& [exps, coeff] : x.terms()) {
    QuditState v = s;
    for (int i = ctx_.generator_count(); i >= 1; --i)
      for (int e = 0; e < exps[i - 1]; ++e) v = apply_generator(i, v);
    out += coeff * v;
  }
  return out;
}

QuditState Representation::ordered_basis_vector(const Digits& digits) const {
  require_digits(ctx_, digits);
  QuditState v = QuditState::ground(ctx_);
  for (int k = ctx_.n; k >= 1; --k)
    for (int e = 0; e < digits[k - 1]; ++e) v = apply_even(k, v);
  return v;
}

// ---------------------------------------------------------------------------

QuditState ground_state(const AlgebraContext& ctx) { return QuditState::ground(ctx); }

QuditState basis_state(const AlgebraContext& ctx, const Digits& digits) {
  return QuditState::basis(ctx, digits);
}

QuditState apply_even(int k, const QuditState& s) { return Representation(s.context()).apply_even(k, s); }

QuditState apply_odd(int k, const QuditState& s) { return Representation(s.context()).apply_odd(k, s); }

QuditState apply_projector(int k, const QuditState& s) {
  return Representation(s.context()).apply_projector(k, s);
}

QuditState apply_word(const GeneratorWord& w, const QuditState& s) {
  return Representation(s.context()).apply_word(w, s);
}

QuditState apply_element(const AlgebraElement& x, const QuditState& s) {
  return Representation(s.context()).apply_element(x, s);
}

QuditState ordered_basis_vector(const AlgebraContext& ctx, const Digits& digits) {
  return Representation(ctx).ordered_basis_vector(digits);
}

CycloScalar scalar_product(const QuditState& a, const QuditState& b) {
  require_same_context(a.context(), b.context());
  CycloScalar sum(a.context().order());
  auto ia = a.amplitudes().begin();
  auto ib = b.amplitudes().begin();
  while (ia != a.amplitudes().end() && ib != b.amplitudes().end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      sum += ia->second.conj() * ib->second;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

Matrix dense_matrix(const AlgebraContext& ctx,
                    const std::function<QuditState(const QuditState&)>& op, std::uint64_t cap) {
  const std::uint64_t dim = ctx.dimension();
  require_cap(dim, cap);
  Matrix m(dim, std::vector<CycloScalar>(dim, CycloScalar(ctx.order())));
  QuditState probe(ctx);
  for (std::uint64_t col = 0; col < dim; ++col) {
    QuditState column = op(QuditState::basis(ctx, probe.digits(col)));
    require_same_context(ctx, column.context());
    for (const auto& [row, amp] : column.amplitudes()) m[row][col] = amp;
  }
  return m;
}

Matrix dense_matrix(const Representation& rep, const AlgebraElement& x, std::uint64_t cap) {
  return dense_matrix(
      rep.context(), [&](const QuditState& s) { return rep.apply_element(x, s); }, cap);
}

Matrix dense_matrix(const AlgebraElement& x, std::uint64_t cap) {
  return dense_matrix(Representation(x.context()), x, cap);
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty() || a.front().size() != b.size())
    throw ValidationError("matmul: shape mismatch");
  const int order = b.front().front().order();
  Matrix out(a.size(), std::vector<CycloScalar>(b.front().size(), CycloScalar(order)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Matrix gram_matrix(const Representation& rep, std::uint64_t cap) {
  const AlgebraContext& ctx = rep.context();
  const std::uint64_t dim = ctx.dimension();
  require_cap(dim, cap);
  QuditState probe(ctx);
  std::vector<QuditState> vectors;
  vectors.reserve(dim);
  for (std::uint64_t i = 0; i < dim; ++i) vectors.push_back(rep.ordered_basis_vector(probe.digits(i)));
  Matrix g(dim, std::vector<CycloScalar>(dim, CycloScalar(ctx.order())));
  for (std::uint64_t i = 0; i < dim; ++i)
    for (std::uint64_t j = 0; j < dim; ++j) g[i][j] = scalar_product(vectors[i], vectors[j]);
  return g;
}

}  // namespace gca
