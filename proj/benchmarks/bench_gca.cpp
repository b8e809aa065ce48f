#include <benchmark/benchmark.h>

#include <random>

#include "gca/gca.hpp"

namespace {

using namespace gca;

QuditState dense_state(const AlgebraContext& ctx) {
  std::mt19937_64 rng(1);
  QuditState s(ctx);
  for (std::uint64_t j = 0; j < ctx.dimension(); ++j)
    s.add_amplitude(j, CycloScalar::root_power(ctx.order(), static_cast<long long>(rng() % ctx.order()),
                                               Rational(static_cast<long>(rng() % 7) + 1, 3)));
  return s;
}

std::vector<int> random_word(const AlgebraContext& ctx, int len) {
  std::mt19937_64 rng(2);
  std::vector<int> w(static_cast<std::size_t>(len));
  for (int& x : w) x = 1 + static_cast<int>(rng() % static_cast<unsigned>(ctx.generator_count()));
  return w;
}

void BM_DenseGenerator(benchmark::State& state) {
  const auto ctx = AlgebraContext::make(3, static_cast<int>(state.range(0)));
  const Representation rep(ctx);
  const QuditState s = dense_state(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(rep.apply_generator(2 * ctx.n - 1, s));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size()));
}
BENCHMARK(BM_DenseGenerator)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_NormalOrder(benchmark::State& state) {
  const auto ctx = AlgebraContext::make(5, 3);
  const GeneratorWord w(ctx, random_word(ctx, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(normal_order(w));
}
BENCHMARK(BM_NormalOrder)->Arg(12)->Arg(48)->Arg(192);

void BM_MulElements(benchmark::State& state) {
  const auto ctx = AlgebraContext::make(3, 2);
  AlgebraElement x(ctx);
  for (int i = 1; i <= ctx.generator_count(); ++i)
    x += AlgebraElement::generator(ctx, i) + AlgebraElement::scalar(ctx, omega_pow(ctx, i));
  const AlgebraElement y = power(x, 2);
  for (auto _ : state) benchmark::DoNotOptimize(mul_elements(y, y));
}
BENCHMARK(BM_MulElements);

void BM_IsZero(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto ctx = AlgebraContext::make(N, 1);
  CycloScalar s(ctx.order());
  // 1 + q + ... + q^{N-2}: nonzero, needs the full reduction.
  for (int k = 0; k < ctx.order() - 2; k += 2) s += omega_pow(ctx, k);
  for (auto _ : state) benchmark::DoNotOptimize(s.is_zero());
}
BENCHMARK(BM_IsZero)->Arg(3)->Arg(9)->Arg(15);

void BM_Suite(benchmark::State& state) {
  const auto ctx = AlgebraContext::make(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(ctx));
}
BENCHMARK(BM_Suite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
