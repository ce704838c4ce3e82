#include <benchmark/benchmark.h>

#include "apolar/apolarity.hpp"
#include "apolar/artin.hpp"
#include "apolar/classify.hpp"
#include "apolar/hessian.hpp"
#include "apolar/resolution.hpp"

namespace {

using namespace apolar;

DualGenerator dense_quintic() {
  const RingSpec ring(4);
  Poly F(Alphabet::Dual, 4);
  long c = 1;
  for (const auto& m : monomial_basis(ring, 5)) {
    F.add_term(m, Rational(c % 7 - 3));
    c = c * 5 + 1;
  }
  return DualGenerator(F);
}

DualGenerator ci_form() {
  return DualGenerator(parse("X1*X2*X3*X4^2", RingSpec(4), Alphabet::Dual));
}

void BM_Catalecticant(benchmark::State& state) {
  const DualGenerator F = dense_quintic();
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_function(F));
}
BENCHMARK(BM_Catalecticant);

void BM_BuildAlgebra(benchmark::State& state) {
  const DualGenerator F = dense_quintic();
  for (auto _ : state) benchmark::DoNotOptimize(ArtinAlgebra(F).dimension());
}
BENCHMARK(BM_BuildAlgebra);

void BM_BettiTable(benchmark::State& state) {
  const ArtinAlgebra A(state.range(0) == 0 ? ci_form() : dense_quintic());
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(A));
}
BENCHMARK(BM_BettiTable)->Arg(0)->Arg(1);

void BM_JordanType(benchmark::State& state) {
  const ArtinAlgebra A(dense_quintic());
  const LinearForm l = LinearForm::all_ones(4);
  for (auto _ : state) benchmark::DoNotOptimize(jordan_type(A, l));
}
BENCHMARK(BM_JordanType);

void BM_HessianGrid(benchmark::State& state) {
  const ArtinAlgebra A(ci_form());
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hessian_is_identically_zero(A, order));
}
BENCHMARK(BM_HessianGrid)->Arg(1)->Arg(2);

void BM_ClassifyK4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_k4(state.range(0)).survivors);
}
BENCHMARK(BM_ClassifyK4)->Arg(10)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
