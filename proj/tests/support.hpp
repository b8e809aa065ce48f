#pragma once
// Random generators, independent oracles and faulty models shared by the tests.

#include <cmath>
#include <complex>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "gca/gca.hpp"

namespace gca::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rational random_nonzero_rational(Rng& rng, int span = 5) {
  Rational r;
  do r = random_rational(rng, span);
  while (r == 0);
  return r;
}

// Up to max_terms random powers of omega, possibly repeating exponents.
inline CycloScalar random_scalar(Rng& rng, int order, int max_terms = 4) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, order - 1);
  CycloScalar s(order);
  for (int t = terms(rng); t > 0; --t) s += CycloScalar::root_power(order, exp(rng), random_rational(rng));
  return s;
}

inline Exponents random_exponents(Rng& rng, const AlgebraContext& ctx) {
  std::uniform_int_distribution<int> e(0, ctx.N - 1);
  Exponents out(static_cast<std::size_t>(ctx.generator_count()));
  for (int& x : out) x = e(rng);
  return out;
}

inline NormalMonomial random_monomial(Rng& rng, const AlgebraContext& ctx) {
  std::uniform_int_distribution<int> k(0, ctx.order() - 1);
  return {ctx, omega_pow(ctx, k(rng)), random_exponents(rng, ctx)};
}

inline AlgebraElement random_element(Rng& rng, const AlgebraContext& ctx, int max_terms = 4) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  AlgebraElement x(ctx);
  for (int t = terms(rng); t > 0; --t)
    x.add_term(random_exponents(rng, ctx), random_scalar(rng, ctx.order(), 2));
  return x;
}

inline Digits random_digits(Rng& rng, const AlgebraContext& ctx) {
  std::uniform_int_distribution<int> d(0, ctx.N - 1);
  Digits out(static_cast<std::size_t>(ctx.n));
  for (int& x : out) x = d(rng);
  return out;
}

inline QuditState random_state(Rng& rng, const AlgebraContext& ctx, int max_terms = 4) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  QuditState s(ctx);
  for (int t = terms(rng); t > 0; --t) s.add_amplitude(random_digits(rng, ctx), random_scalar(rng, ctx.order(), 2));
  return s;
}

inline std::vector<int> random_letters(Rng& rng, const AlgebraContext& ctx, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> letter(1, ctx.generator_count());
  std::vector<int> out(static_cast<std::size_t>(len(rng)));
  for (int& x : out) x = letter(rng);
  return out;
}

// Float evaluation straight from the definition, omega = exp(i pi / N).
inline std::complex<double> float_value(const CycloScalar& s) {
  std::complex<double> out{0, 0};
  for (const auto& [k, c] : s.terms())
    out += c.get_d() * std::polar(1.0, M_PI * k * 2.0 / s.order());
  return out;
}

// Reduces a word by swapping a randomly chosen out-of-order adjacent pair
// until sorted, then folds c^N = 1. Returns the omega exponent of the phase.
inline NormalMonomial random_order_reduction(const AlgebraContext& ctx, std::vector<int> w, Rng& rng) {
  long long phase = 0;
  while (true) {
    std::vector<std::size_t> inversions;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) inversions.push_back(i);
    if (inversions.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, inversions.size() - 1);
    const std::size_t i = inversions[pick(rng)];
    std::swap(w[i], w[i + 1]);
    phase -= 2;  // c_j c_i = q^{-1} c_i c_j for i < j
  }
  Exponents exps(static_cast<std::size_t>(ctx.generator_count()), 0);
  for (int letter : w) exps[letter - 1] = (exps[letter - 1] + 1) % ctx.N;
  return {ctx, omega_pow(ctx, phase), exps};
}

// Exponent vector as a letter word c_1^{e_1} ... c_{2n}^{e_{2n}}.
inline std::vector<int> word_of(const Exponents& e) {
  std::vector<int> out;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int r = 0; r < e[i]; ++r) out.push_back(static_cast<int>(i) + 1);
  return out;
}

// Model variants with a single wrong phase.
class SignFlipOdd : public Representation {
 public:
  using Representation::Representation;
  long long odd_phase(int k, std::span<const int> d) const override {
    return Representation::odd_phase(k, d) + context().N;
  }
};

class DroppedQak : public Representation {
 public:
  using Representation::Representation;
  long long odd_phase(int k, std::span<const int> d) const override {
    return Representation::odd_phase(k, d) - 2LL * d[static_cast<std::size_t>(k - 1)];
  }
};

// Sum over i <= k instead of i < k in the even generators.
class SumOffByOne : public Representation {
 public:
  using Representation::Representation;
  long long even_phase(int k, std::span<const int> d) const override {
    return Representation::even_phase(k, d) - 2LL * d[static_cast<std::size_t>(k - 1)];
  }
};

// zeta^{-1} in place of zeta.
class WrongZeta : public Representation {
 public:
  using Representation::Representation;
  long long odd_phase(int k, std::span<const int> d) const override {
    return Representation::odd_phase(k, d) - 2LL * context().zeta_exp;
  }
};

struct Fault {
  std::string name;
  std::unique_ptr<Representation> rep;
};

inline std::vector<Fault> faults(const AlgebraContext& ctx) {
  std::vector<Fault> out;
  out.push_back({"sign flip in odd generators", std::make_unique<SignFlipOdd>(ctx)});
  out.push_back({"dropped q^a_k factor", std::make_unique<DroppedQak>(ctx)});
  out.push_back({"off-by-one phase sum", std::make_unique<SumOffByOne>(ctx)});
  out.push_back({"wrong zeta exponent", std::make_unique<WrongZeta>(ctx)});
  return out;
}

// Malformed expressions; each must raise a positioned syntax error.
inline const std::vector<std::string>& invalid_inputs() {
  static const std::vector<std::string> inputs = {
      "c[1",      "c[]",         "c1",       "|0,0",    "<0,0",     "c[1] +",   "(c[1]",
      "c[1])",    "zeta^",       "1/0",      "x",       "c[1] ^ q", "|0,>",     "< |",
      "E[",       "c[1] * * c[2]", "",       "3/",      "c[99999999999999999999]", "q^-",
  };
  return inputs;
}

}  // namespace gca::testing
