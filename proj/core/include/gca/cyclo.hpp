#pragma once

/**
 * @file cyclo.hpp
 * @brief Exact arithmetic in Q(omega), omega = exp(i*pi/N).
 *
 * Every phase used by the library (q = omega^2, zeta, amplitudes) lives in
 * the ring of rational combinations of powers of a primitive m-th root of
 * unity, m = 2N. Scalars are stored sparsely with exponents in [0, m) and
 * are NOT reduced modulo the cyclotomic polynomial, so printed exponents
 * stay readable. Equality is decided exactly by reduction modulo Phi_m.
 */

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gca {

using Rational = mpq_class;

// Dense integer polynomial, index i holds the coefficient of x^i.
using IntPoly = std::vector<mpz_class>;

// Phi_m, computed as (x^m - 1) / prod_{d | m, d < m} Phi_d. Results are cached.
IntPoly cyclotomic_polynomial(int m);

class CycloScalar {
 public:
  using Term = std::pair<int, Rational>;

  // The zero scalar of the given order.
  explicit CycloScalar(int order = 2);

  static CycloScalar from_rational(int order, const Rational& value);
  // coeff * omega^k, k reduced mod order.
  static CycloScalar root_power(int order, long long k, const Rational& coeff = 1);

  int order() const noexcept { return order_; }
  // Sorted by exponent; every coefficient nonzero.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  Rational coeff(int k) const;

  // Exact: reduces modulo Phi_m.
  bool is_zero() const;
  // Single term r * omega^k with nonzero r; such a scalar is never zero.
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  CycloScalar conj() const;
  // this * omega^k, computed by rotating exponents.
  CycloScalar rotated(long long k) const;
  // Negative exponents are only defined for monomial scalars.
  CycloScalar pow(long long e) const;
  std::complex<double> to_complex() const;

  CycloScalar& operator+=(const CycloScalar& rhs);
  CycloScalar& operator-=(const CycloScalar& rhs);
  CycloScalar& operator*=(const CycloScalar& rhs);
  CycloScalar& operator*=(const Rational& rhs);

  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator-(const CycloScalar& a);

  // Mathematical equality (is_zero of the difference), never storage equality.
  friend bool operator==(const CycloScalar& a, const CycloScalar& b);

  // Storage-level comparison, useful only for deterministic containers.
  bool same_representation(const CycloScalar& other) const;

 private:
  void require_same_order(const CycloScalar& other) const;

  int order_;
  std::vector<Term> terms_;
};

// Free-function spellings of the ring operations.
inline CycloScalar add(const CycloScalar& a, const CycloScalar& b) { return a + b; }
inline CycloScalar mul(const CycloScalar& a, const CycloScalar& b) { return a * b; }
inline CycloScalar neg(const CycloScalar& a) { return -a; }
inline CycloScalar conj(const CycloScalar& a) { return a.conj(); }
inline bool is_zero(const CycloScalar& a) { return a.is_zero(); }
inline bool equals(const CycloScalar& a, const CycloScalar& b) { return a == b; }
inline std::complex<double> to_complex(const CycloScalar& a) { return a.to_complex(); }

// Rational as "p/q" (denominator always written).
std::string rational_to_string(const Rational& r);

/// The algebra parameters (N, n) and the chosen square root of q.
///
/// zeta = omega^zeta_exp. For odd N the only admissible exponent is N + 1
/// (zeta = -exp(i*pi/N)); for even N both 1 and N + 1 are admissible.
struct AlgebraContext {
  int N = 2;
  int n = 1;
  int zeta_exp = 1;

  // Canonical zeta: N + 1 for odd N, 1 for even N.
  static AlgebraContext make(int N, int n);
  static AlgebraContext make(int N, int n, int zeta_exp);

  int order() const noexcept { return 2 * N; }
  int generator_count() const noexcept { return 2 * n; }
  // N^n; throws ValidationError if it does not fit in 63 bits.
  std::uint64_t dimension() const;
  // +1 when zeta = omega, -1 when zeta = -omega.
  int zeta_sign() const noexcept { return zeta_exp == 1 ? 1 : -1; }

  std::string describe() const;

  friend bool operator==(const AlgebraContext&, const AlgebraContext&) = default;
};

int canonical_zeta_exp(int N);
bool admissible_zeta_exp(int N, int zeta_exp);

CycloScalar omega_pow(const AlgebraContext& ctx, long long k);
CycloScalar q(const AlgebraContext& ctx);
CycloScalar zeta(const AlgebraContext& ctx);
CycloScalar scalar(const AlgebraContext& ctx, const Rational& value);

}  // namespace gca
