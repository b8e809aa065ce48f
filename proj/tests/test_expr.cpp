#include <gtest/gtest.h>

#include "support.hpp"

namespace gca {
namespace {

using namespace gca::testing;

TEST(Parse, Shapes) {
  const auto a = parse("c[1] c[2]");
  EXPECT_EQ(a.kind, NodeKind::Product);
  ASSERT_EQ(a.children.size(), 2u);
  EXPECT_EQ(a.children[0].kind, NodeKind::Generator);
  EXPECT_EQ(a.children[1].index, 2);

  const auto b = parse("zeta^2 * c[3]^-1 |0,0>");
  EXPECT_EQ(b.kind, NodeKind::Product);
  EXPECT_EQ(b.children.back().kind, NodeKind::Ket);
  EXPECT_EQ(b.children[1].kind, NodeKind::Power);
  EXPECT_EQ(b.children[1].exponent, -1);

  const auto c = parse("<0,0| c[2]' c[2] |0,0>");
  EXPECT_EQ(c.kind, NodeKind::Sandwich);
  ASSERT_EQ(c.children.size(), 3u);
  EXPECT_EQ(c.children[0].kind, NodeKind::Bra);
  EXPECT_EQ(c.children[2].kind, NodeKind::Ket);
}

TEST(Eval, Examples) {
  const auto ctx = AlgebraContext::make(3, 2);
  EXPECT_EQ(eval_scalar("<0,0|c[2]' c[2]|0,0>", ctx), scalar(ctx, 1));
  QuditState expected(ctx);
  expected.add_amplitude({1, 0}, zeta(ctx));
  EXPECT_EQ(eval_state("c[1]|0,0>", ctx), expected);
  EXPECT_EQ(eval_state("c[1] Omega", ctx), expected);
  EXPECT_EQ(eval_element("c[2] c[1]", ctx),
            scale(q(ctx).pow(-1), AlgebraElement::generator(ctx, 1) * AlgebraElement::generator(ctx, 2)));
  EXPECT_EQ(eval_element("c[1]^-1", ctx), AlgebraElement::generator(ctx, 1, 2));
  EXPECT_EQ(eval_element("(c[1] + 1/2)'", ctx), AlgebraElement::generator(ctx, 1, 2) + AlgebraElement::scalar(ctx, scalar(ctx, Rational(1, 2))));
  EXPECT_EQ(eval_state("E[1] (|0,1> + |1,1>)", ctx), basis_state(ctx, {0, 1}));
  EXPECT_EQ(eval_state("c[1] E[1] |0,2>", ctx), zeta(ctx) * eval_state("c[2] E[1] |0,2>", ctx));
  EXPECT_EQ(eval_scalar("<1,0| c[1] |0,0>", ctx), zeta(ctx));
  EXPECT_EQ(eval_scalar("q^3", ctx), scalar(ctx, 1));
}

TEST(Eval, Errors) {
  const auto ctx = AlgebraContext::make(3, 2);
  EXPECT_THROW(eval_element("c[5]", ctx), EvalError);
  EXPECT_THROW(eval_state("|3,0>", ctx), EvalError);
  EXPECT_THROW(eval_state("|0>", ctx), EvalError);
  EXPECT_THROW(eval_element("E[1]", ctx), EvalError);
  EXPECT_THROW(eval_element("|0,0>", ctx), EvalError);
  EXPECT_THROW(eval_state("c[1]", ctx), EvalError);
  EXPECT_THROW(eval_scalar("c[1]", ctx), EvalError);
}

TEST(Print, Examples) {
  const auto ctx = AlgebraContext::make(3, 2);
  EXPECT_EQ(print_canonical(AlgebraElement::identity(ctx)), "1");
  EXPECT_EQ(print_canonical(eval_element("c[2] c[1]", ctx)), "q^2 * c[1] c[2]");
  EXPECT_EQ(print_canonical(ground_state(ctx)), "|0,0>");
  EXPECT_EQ(print_canonical(eval_state("c[1] Omega", ctx)), "zeta * |1,0>");
  EXPECT_EQ(print_canonical(AlgebraElement::zero(ctx)), "0");
  EXPECT_EQ(print_canonical(scalar(ctx, Rational(-3, 2)), ctx), "-3/2");
  EXPECT_EQ(print_canonical(QuditState(ctx)), "0 * |0,0>");
}

// The ordered-basis vector (1,1) equals |1,1> exactly.
TEST(Print, OrderedBasisVector) {
  const auto ctx = AlgebraContext::make(3, 2);
  EXPECT_EQ(print_canonical(ordered_basis_vector(ctx, {1, 1})), "|1,1>");
}

class RoundTrip : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(RoundTrip, ElementsStatesScalars) {
  const auto [N, n] = GetParam();
  for (int z : {1, N + 1}) {
    if (!admissible_zeta_exp(N, z)) continue;
    const auto ctx = AlgebraContext::make(N, n, z);
    Rng rng(41 + N + 7 * n + z);
    for (int trial = 0; trial < 60; ++trial) {
      const auto x = random_element(rng, ctx);
      const auto text = print_canonical(x);
      EXPECT_EQ(eval_element(text, ctx), x) << text;
      const auto s = random_state(rng, ctx);
      const auto stext = print_canonical(s);
      EXPECT_EQ(eval_state(stext, ctx), s) << stext;
      const auto a = random_scalar(rng, ctx.order());
      const auto atext = print_canonical(a, ctx);
      EXPECT_EQ(eval_scalar(atext, ctx), a) << atext;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Contexts, RoundTrip,
                         ::testing::Values(std::pair{2, 1}, std::pair{3, 2}, std::pair{4, 2},
                                           std::pair{5, 1}, std::pair{6, 2}, std::pair{7, 1}));

TEST(ParseErrors, PositionedWithinInput) {
  ASSERT_EQ(invalid_inputs().size(), 20u);
  for (const auto& text : invalid_inputs()) {
    try {
      parse(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const SyntaxError& e) {
      EXPECT_LE(e.span().offset, text.size()) << text;
      EXPECT_LE(e.span().offset + e.span().length, text.size() + 1) << text;
      EXPECT_EQ(e.span().line, 1);
      EXPECT_EQ(static_cast<std::size_t>(e.span().column), e.span().offset + 1) << text;
      EXPECT_FALSE(e.detail().empty());
    }
  }
}

TEST(ParseErrors, LineAndColumn) {
  try {
    parse("c[1]\n  + ]");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.span().line, 2);
    EXPECT_EQ(e.span().column, 5);
    EXPECT_NE(std::string(e.what()).find("2:5"), std::string::npos);
  }
}

}  // namespace
}  // namespace gca
