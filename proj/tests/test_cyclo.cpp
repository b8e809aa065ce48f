#include <gtest/gtest.h>

#include "support.hpp"

namespace gca {
namespace {

using testing::float_value;
using testing::random_scalar;
using testing::Rng;

IntPoly poly(std::initializer_list<long> c) {
  IntPoly p;
  for (long x : c) p.emplace_back(x);
  return p;
}

TEST(Cyclotomic, SmallOrders) {
  EXPECT_EQ(cyclotomic_polynomial(1), poly({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), poly({1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), poly({1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), poly({1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), poly({1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, DegreeIsTotient) {
  const int phi[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12, 6, 8, 8, 16, 6};
  for (int m = 1; m <= 18; ++m) EXPECT_EQ(cyclotomic_polynomial(m).size() - 1, std::size_t(phi[m])) << m;
}

TEST(Context, ZetaSelection) {
  EXPECT_EQ(AlgebraContext::make(3, 1).zeta_exp, 4);
  EXPECT_EQ(AlgebraContext::make(2, 1).zeta_exp, 1);
  EXPECT_NO_THROW(AlgebraContext::make(4, 1, 5));
  EXPECT_THROW(AlgebraContext::make(3, 1, 1), ValidationError);
  EXPECT_THROW(AlgebraContext::make(1, 1), ValidationError);
  EXPECT_THROW(AlgebraContext::make(2, 0), ValidationError);
  EXPECT_THROW(AlgebraContext::make(2, 70).dimension(), ValidationError);
  EXPECT_EQ(AlgebraContext::make(3, 8).dimension(), 6561u);
}

TEST(Context, Generators) {
  const auto c3 = AlgebraContext::make(3, 1);
  EXPECT_EQ(zeta(c3), omega_pow(c3, 4));
  const auto c2 = AlgebraContext::make(2, 1);
  const auto i = zeta(c2).to_complex();
  EXPECT_NEAR(i.real(), 0.0, 1e-15);
  EXPECT_NEAR(i.imag(), 1.0, 1e-15);
  for (int N = 2; N <= 9; ++N) {
    const auto ctx = AlgebraContext::make(N, 1);
    EXPECT_EQ(q(ctx), omega_pow(ctx, 2));
    EXPECT_EQ(omega_pow(ctx, -1), omega_pow(ctx, 2 * N - 1));
  }
}

TEST(Cyclo, RingExamples) {
  const auto ctx = AlgebraContext::make(3, 1);
  EXPECT_EQ(mul(q(ctx), q(ctx).pow(2)), scalar(ctx, 1));
  for (int N = 2; N <= 9; ++N) {
    const auto c = AlgebraContext::make(N, 1);
    EXPECT_TRUE(is_zero(add(scalar(c, 1), omega_pow(c, N))));
  }
  EXPECT_EQ(conj(zeta(ctx)) * zeta(ctx), scalar(ctx, 1));
  EXPECT_THROW(add(CycloScalar(4), CycloScalar(6)), ContextMismatch);
}

TEST(Cyclo, ZeroTest) {
  const auto ctx = AlgebraContext::make(3, 1);
  const CycloScalar s = scalar(ctx, 1) + omega_pow(ctx, 2) + omega_pow(ctx, 4);
  EXPECT_TRUE(s.is_zero());
  // 1 + q keeps both terms in storage yet equals -q^2.
  const CycloScalar t = scalar(ctx, 1) + omega_pow(ctx, 2);
  EXPECT_EQ(t.terms().size(), 2u);
  EXPECT_EQ(t, -omega_pow(ctx, 4));
  EXPECT_FALSE(t.same_representation(-omega_pow(ctx, 4)));
  EXPECT_LT(std::abs(float_value(s)), 1e-12);
  for (int N = 2; N <= 9; ++N)
    for (int z : {1, N + 1}) {
      if (!admissible_zeta_exp(N, z)) continue;
      const auto c = AlgebraContext::make(N, 1, z);
      EXPECT_TRUE(is_zero(zeta(c) * zeta(c) - q(c))) << N << " " << z;
    }
}

TEST(Cyclo, ToComplex) {
  const auto c3 = AlgebraContext::make(3, 1);
  const auto z = zeta(c3).to_complex();
  EXPECT_NEAR(z.real(), -std::cos(M_PI / 3), 1e-12);
  EXPECT_NEAR(z.imag(), -std::sin(M_PI / 3), 1e-12);
  const auto one = scalar(c3, 1).to_complex();
  EXPECT_EQ(one, std::complex<double>(1.0, 0.0));
}

TEST(Cyclo, PowAndConj) {
  const auto ctx = AlgebraContext::make(5, 1);
  const CycloScalar w = omega_pow(ctx, 3);
  EXPECT_EQ(w.pow(-1) * w, scalar(ctx, 1));
  EXPECT_EQ(w.pow(10), scalar(ctx, 1));
  const CycloScalar s = scalar(ctx, Rational(1, 2)) + omega_pow(ctx, 1);
  EXPECT_EQ(s.pow(3), s * s * s);
  EXPECT_THROW(s.pow(-1), Error);
  EXPECT_EQ(s.conj().conj(), s);
}

// Zero-test agrees with an independent float evaluation.
TEST(CycloProperty, ZeroTestMatchesFloat) {
  Rng rng(11);
  int zeros = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int N = 2 + trial % 8;
    const int m = 2 * N;
    CycloScalar s = random_scalar(rng, m, 5);
    // Mix in genuine cancellations: multiples of Phi_m-type relations.
    if (trial % 3 == 0) {
      CycloScalar rel(m);
      for (int k = 0; k < m; k += m / (N % 2 == 1 ? N : 2)) rel += CycloScalar::root_power(m, k);
      s = s * rel;
    }
    const bool zero = s.is_zero();
    zeros += zero;
    EXPECT_EQ(zero, std::abs(float_value(s)) < 1e-9) << "N=" << N << " trial " << trial;
  }
  EXPECT_GT(zeros, 100);
}

TEST(CycloProperty, RingLaws) {
  Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 * (2 + trial % 8);
    const CycloScalar a = random_scalar(rng, m), b = random_scalar(rng, m), c = random_scalar(rng, m);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(conj(a * b), conj(a) * conj(b));
    const auto fa = float_value(a), fb = float_value(b);
    EXPECT_LT(std::abs(float_value(a * b) - fa * fb), 1e-9);
    EXPECT_LT(std::abs(float_value(conj(a)) - std::conj(fa)), 1e-9);
  }
}

TEST(Cyclo, RationalFormat) {
  EXPECT_EQ(rational_to_string(Rational(3)), "3/1");
  EXPECT_EQ(rational_to_string(Rational(-1, 3)), "-1/3");
}

}  // namespace
}  // namespace gca
