#include "gca/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "gca/error.hpp"

namespace gca {

namespace {

long long mod(long long k, long long m) {
  k %= m;
  return k < 0 ? k + m : k;
}

// Exact division of a by the monic polynomial b; the remainder must vanish.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  IntPoly rem = a;
  const std::size_t db = b.size() - 1;
  IntPoly quot(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const mpz_class c = rem[i];
    if (c == 0) continue;
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  return quot;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

IntPoly compute_cyclotomic(int m) {
  IntPoly divisor{1};
  for (int d = 1; d < m; ++d)
    if (m % d == 0) divisor = multiply(divisor, cyclotomic_polynomial(d));
  IntPoly xm(static_cast<std::size_t>(m) + 1, 0);
  xm[0] = -1;
  xm[m] = 1;
  return divide_exact(xm, divisor);
}

}  // namespace

IntPoly cyclotomic_polynomial(int m) {
  if (m < 1) throw ValidationError("cyclotomic_polynomial: order must be positive");
  static std::mutex lock;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard guard(lock);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  IntPoly phi = compute_cyclotomic(m);
  std::lock_guard guard(lock);
  return cache.emplace(m, std::move(phi)).first->second;
}

std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// ---------------------------------------------------------------------------

CycloScalar::CycloScalar(int order) : order_(order) {
  if (order < 1) throw ValidationError("CycloScalar: order must be positive");
}

CycloScalar CycloScalar::from_rational(int order, const Rational& value) {
  return root_power(order, 0, value);
}

CycloScalar CycloScalar::root_power(int order, long long k, const Rational& coeff) {
  CycloScalar s(order);
  if (coeff != 0) s.terms_.emplace_back(static_cast<int>(mod(k, order)), coeff);
  return s;
}

Rational CycloScalar::coeff(int k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, int key) { return t.first < key; });
  return it != terms_.end() && it->first == k ? it->second : Rational(0);
}

void CycloScalar::require_same_order(const CycloScalar& other) const {
  if (order_ != other.order_)
    throw ContextMismatch("CycloScalar: order " + std::to_string(order_) + " vs " +
                          std::to_string(other.order_));
}

bool CycloScalar::is_zero() const {
  if (terms_.size() < 2) return terms_.empty();
  const IntPoly& phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  std::vector<Rational> p(static_cast<std::size_t>(order_), 0);
  for (const auto& [k, c] : terms_) p[k] = c;
  for (std::size_t i = p.size(); i-- > deg;) {
    if (p[i] == 0) continue;
    const Rational c = p[i];
    for (std::size_t j = 0; j <= deg; ++j) p[i - deg + j] -= c * phi[j];
  }
  return std::all_of(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(deg),
                     [](const Rational& c) { return c == 0; });
}

CycloScalar CycloScalar::conj() const {
  CycloScalar out(order_);
  out.terms_.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.terms_.emplace_back(k == 0 ? 0 : order_ - k, c);
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  return out;
}

CycloScalar CycloScalar::rotated(long long k) const {
  const int shift = static_cast<int>(mod(k, order_));
  if (shift == 0) return *this;
  CycloScalar out(order_);
  out.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.terms_.emplace_back((e + shift) % order_, c);
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  return out;
}

CycloScalar CycloScalar::pow(long long e) const {
  if (e < 0) {
    if (!is_monomial()) throw ValidationError("CycloScalar::pow: negative power of a non-monomial");
    const auto& [k, c] = terms_.front();
    return root_power(order_, -k, 1 / c).pow(-e);
  }
  if (is_monomial()) {
    const auto& [k, c] = terms_.front();
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), c.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    const long long k_e = (k * (e % order_)) % order_;
    return root_power(order_, k_e, r);
  }
  CycloScalar result = from_rational(order_, 1);
  CycloScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::complex<double> CycloScalar::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  for (const auto& [k, c] : terms_) {
    const double angle = 2.0 * std::numbers::pi * k / order_;
    z += c.get_d() * std::complex<double>{std::cos(angle), std::sin(angle)};
  }
  return z;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& rhs) {
  require_same_order(rhs);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  if (terms_.size() > 1 && is_zero()) terms_.clear();
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& rhs) { return *this += -rhs; }

CycloScalar& CycloScalar::operator*=(const CycloScalar& rhs) { return *this = *this * rhs; }

CycloScalar& CycloScalar::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= rhs;
  return *this;
}

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
  a.require_same_order(b);
  CycloScalar out(a.order_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.is_monomial() && b.is_monomial()) {
    const auto& [ka, ca] = a.terms_.front();
    const auto& [kb, cb] = b.terms_.front();
    out.terms_.emplace_back((ka + kb) % a.order_, ca * cb);
    return out;
  }
  std::vector<Rational> dense(static_cast<std::size_t>(a.order_), 0);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) dense[(ka + kb) % a.order_] += ca * cb;
  for (int k = 0; k < a.order_; ++k)
    if (dense[k] != 0) out.terms_.emplace_back(k, std::move(dense[k]));
  if (out.terms_.size() > 1 && out.is_zero()) out.terms_.clear();
  return out;
}

CycloScalar operator-(const CycloScalar& a) {
  CycloScalar out = a;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) { return (a - b).is_zero(); }

bool CycloScalar::same_representation(const CycloScalar& other) const {
  return order_ == other.order_ && terms_ == other.terms_;
}

// ---------------------------------------------------------------------------

int canonical_zeta_exp(int N) { return N % 2 == 1 ? N + 1 : 1; }

bool admissible_zeta_exp(int N, int zeta_exp) {
  if (N % 2 == 1) return zeta_exp == N + 1;
  return zeta_exp == 1 || zeta_exp == N + 1;
}

AlgebraContext AlgebraContext::make(int N, int n) {
  return make(N, n, N >= 2 ? canonical_zeta_exp(N) : 1);
}

AlgebraContext AlgebraContext::make(int N, int n, int zeta_exp) {
  if (N < 2) throw ValidationError("N must be at least 2, got " + std::to_string(N));
  if (n < 1) throw ValidationError("n must be at least 1, got " + std::to_string(n));
  if (N > std::numeric_limits<int>::max() / 4)
    throw ValidationError("N too large: " + std::to_string(N));
  if (!admissible_zeta_exp(N, zeta_exp))
    throw ValidationError("zeta exponent " + std::to_string(zeta_exp) +
                          " is not admissible for N=" + std::to_string(N));
  return AlgebraContext{N, n, zeta_exp};
}

std::uint64_t AlgebraContext::dimension() const {
  constexpr std::uint64_t limit = std::uint64_t{1} << 62;
  std::uint64_t dim = 1;
  for (int i = 0; i < n; ++i) {
    if (dim > limit / static_cast<std::uint64_t>(N))
      throw ValidationError("state space dimension N^n overflows for " + describe());
    dim *= static_cast<std::uint64_t>(N);
  }
  return dim;
}

std::string AlgebraContext::describe() const {
  std::ostringstream os;
  os << "(N=" << N << ", n=" << n << ", zeta=omega^" << zeta_exp << ")";
  return os.str();
}

CycloScalar omega_pow(const AlgebraContext& ctx, long long k) {
  return CycloScalar::root_power(ctx.order(), k);
}

CycloScalar q(const AlgebraContext& ctx) { return omega_pow(ctx, 2); }

CycloScalar zeta(const AlgebraContext& ctx) { return omega_pow(ctx, ctx.zeta_exp); }

CycloScalar scalar(const AlgebraContext& ctx, const Rational& value) {
  return CycloScalar::from_rational(ctx.order(), value);
}

}  // namespace gca
