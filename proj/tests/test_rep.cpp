#include <gtest/gtest.h>

#include "support.hpp"

namespace gca {
namespace {

using namespace gca::testing;

QuditState ket(const AlgebraContext& ctx, const Digits& d, const CycloScalar& amp) {
  QuditState s(ctx);
  s.add_amplitude(d, amp);
  return s;
}

TEST(States, Construction) {
  const auto ctx = AlgebraContext::make(3, 2);
  EXPECT_EQ(ground_state(ctx), ket(ctx, {0, 0}, scalar(ctx, 1)));
  EXPECT_EQ(basis_state(ctx, {1, 2}).amplitude({1, 2}), scalar(ctx, 1));
  EXPECT_EQ(basis_state(ctx, {1, 2}).size(), 1u);
  EXPECT_THROW(basis_state(ctx, {3, 0}), ValidationError);
  EXPECT_THROW(basis_state(ctx, {0}), ValidationError);
  const QuditState s = basis_state(ctx, {2, 1});
  EXPECT_EQ(s.amplitudes().begin()->first, 7u);  // a_1 slowest
  EXPECT_EQ(s.digits(7), (Digits{2, 1}));
}

TEST(Generators, EvenExamples) {
  const auto ctx = AlgebraContext::make(3, 2);
  EXPECT_EQ(apply_even(1, basis_state(ctx, {0, 0})), basis_state(ctx, {1, 0}));
  EXPECT_EQ(apply_even(2, basis_state(ctx, {1, 0})), ket(ctx, {1, 1}, q(ctx).pow(-1)));
  EXPECT_EQ(apply_even(2, basis_state(ctx, {2, 2})), ket(ctx, {2, 0}, q(ctx).pow(-2)));
  EXPECT_THROW(apply_even(3, ground_state(ctx)), ValidationError);
}

TEST(Generators, OddExamples) {
  const auto ctx = AlgebraContext::make(3, 2);
  const auto z = zeta(ctx), qq = q(ctx);
  EXPECT_EQ(apply_odd(1, basis_state(ctx, {0, 0})), ket(ctx, {1, 0}, z));
  EXPECT_EQ(apply_odd(2, basis_state(ctx, {1, 2})), ket(ctx, {1, 0}, z * qq));
  const auto c2 = AlgebraContext::make(2, 1);
  EXPECT_EQ(apply_odd(1, basis_state(c2, {1})), ket(c2, {0}, zeta(c2) * q(c2)));
  EXPECT_THROW(apply_odd(0, ground_state(ctx)), ValidationError);
}

TEST(Generators, Projector) {
  const auto ctx = AlgebraContext::make(3, 2);
  EXPECT_EQ(apply_projector(1, basis_state(ctx, {0, 2})), basis_state(ctx, {0, 2}));
  EXPECT_TRUE(apply_projector(1, basis_state(ctx, {1, 2})).is_zero());
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_state(rng, ctx, 6);
    for (int k = 1; k <= 2; ++k) EXPECT_EQ(apply_projector(k, apply_projector(k, s)), apply_projector(k, s));
  }
}

TEST(Words, Examples) {
  const auto ctx = AlgebraContext::make(3, 2);
  Rng rng(32);
  const auto s = random_state(rng, ctx);
  EXPECT_EQ(apply_word(GeneratorWord(ctx, {}), s), s);
  EXPECT_EQ(apply_word(GeneratorWord(ctx, {1}), ground_state(ctx)), ket(ctx, {1, 0}, zeta(ctx)));
  const GeneratorWord w(ctx, {3, 2, 3});
  EXPECT_EQ(apply_element(AlgebraElement(normal_order(w)), ground_state(ctx)), apply_word(w, ground_state(ctx)));
  // Rightmost letter first: c_1 c_2 |0,0> = c_1 |1,0>.
  EXPECT_EQ(apply_word(GeneratorWord(ctx, {1, 2}), ground_state(ctx)),
            apply_odd(1, apply_even(1, ground_state(ctx))));
}

TEST(ScalarProduct, Examples) {
  const auto ctx = AlgebraContext::make(3, 2);
  const auto omega = ground_state(ctx);
  EXPECT_TRUE(scalar_product(basis_state(ctx, {1, 0}), basis_state(ctx, {0, 1})).is_zero());
  EXPECT_EQ(scalar_product(omega, apply_element(adjoint(AlgebraElement::generator(ctx, 2)),
                                                apply_even(1, omega))),
            scalar(ctx, 1));
  // <Omega| c_1^dagger c_2 |Omega> = <c_1 Omega | c_2 Omega> = conj(zeta).
  EXPECT_EQ(scalar_product(apply_odd(1, omega), apply_even(1, omega)), zeta(ctx).pow(-1));
  const auto v = ket(ctx, {0, 0}, zeta(ctx));
  EXPECT_EQ(scalar_product(v, omega), conj(zeta(ctx)));
}

TEST(Dense, Examples) {
  const auto ctx = AlgebraContext::make(2, 1);
  const auto zero = CycloScalar(ctx.order());
  const auto one = scalar(ctx, 1);
  EXPECT_EQ(dense_matrix(AlgebraElement::identity(ctx)), (Matrix{{one, zero}, {zero, one}}));
  EXPECT_EQ(dense_matrix(AlgebraElement::generator(ctx, 2)), (Matrix{{zero, one}, {one, zero}}));
  EXPECT_EQ(dense_matrix(AlgebraElement::generator(ctx, 1)),
            (Matrix{{zero, zeta(ctx) * q(ctx)}, {zeta(ctx), zero}}));
  EXPECT_THROW(dense_matrix(AlgebraElement::identity(AlgebraContext::make(2, 13))), CapExceeded);
  EXPECT_NO_THROW(dense_matrix(AlgebraElement::identity(AlgebraContext::make(2, 3)), 8));
  EXPECT_THROW(dense_matrix(AlgebraElement::identity(AlgebraContext::make(2, 3)), 7), CapExceeded);
}

TEST(OrderedBasis, Examples) {
  const auto ctx = AlgebraContext::make(3, 2);
  EXPECT_EQ(ordered_basis_vector(ctx, {0, 0}), ground_state(ctx));
  EXPECT_EQ(ordered_basis_vector(ctx, {1, 0}), basis_state(ctx, {1, 0}));
  // Direct evaluation: c_4 first, then c_2 on |0,1> with an empty phase sum.
  const auto v = ordered_basis_vector(ctx, {1, 1});
  EXPECT_EQ(v, apply_even(1, apply_even(2, ground_state(ctx))));
  ASSERT_EQ(v.size(), 1u);
  const auto amp = v.amplitude({1, 1});
  EXPECT_EQ(amp * conj(amp), scalar(ctx, 1));
}

class ModelProperty : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(ModelProperty, NormLinearityAndMatrices) {
  const auto [N, n] = GetParam();
  const auto ctx = AlgebraContext::make(N, n);
  const Representation rep(ctx);
  Rng rng(33 + N * 10 + n);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = random_state(rng, ctx), t = random_state(rng, ctx);
    const auto a = random_scalar(rng, ctx.order(), 2);
    for (int i = 1; i <= ctx.generator_count(); ++i) {
      const auto cs = rep.apply_generator(i, s);
      EXPECT_EQ(scalar_product(cs, cs), scalar_product(s, s));
      EXPECT_EQ(rep.apply_generator(i, a * s + t), a * cs + rep.apply_generator(i, t));
      EXPECT_EQ(rep.apply_generator_adjoint(i, cs), s);
    }
    const auto x = random_element(rng, ctx, 2), y = random_element(rng, ctx, 2);
    EXPECT_EQ(rep.apply_element(x * y, s), rep.apply_element(x, rep.apply_element(y, s)));
    EXPECT_EQ(scalar_product(s, rep.apply_element(x, t)), scalar_product(rep.apply_element(adjoint(x), s), t));
  }
  const auto x = random_element(rng, ctx, 2), y = random_element(rng, ctx, 2);
  EXPECT_EQ(dense_matrix(x * y), matmul(dense_matrix(x), dense_matrix(y)));
}

INSTANTIATE_TEST_SUITE_P(Contexts, ModelProperty,
                         ::testing::Values(std::pair{2, 1}, std::pair{2, 3}, std::pair{3, 2},
                                           std::pair{3, 3}, std::pair{4, 2}, std::pair{5, 1}));

TEST(Dense, GeneratorAgainstFormula) {
  // Independent formula for the matrix entries of c_1 with N=3, n=1.
  const auto ctx = AlgebraContext::make(3, 1);
  const Matrix m = dense_matrix(AlgebraElement::generator(ctx, 1));
  for (int a = 0; a < 3; ++a)
    for (int r = 0; r < 3; ++r) {
      const CycloScalar expected = r == (a + 1) % 3 ? zeta(ctx) * q(ctx).pow(a) : CycloScalar(6);
      EXPECT_EQ(m[r][a], expected) << r << "," << a;
    }
}

}  // namespace
}  // namespace gca
