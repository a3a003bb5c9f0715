#include <benchmark/benchmark.h>

#include <random>

#include "frobkit/kernel.hpp"
#include "frobkit/linalg.hpp"

using namespace frobkit;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Algebra dual() { return univariate_quotient(Polynomial(Q, {0, 0, 1})); }

Matrix random_matrix(const FieldSpec& f, std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-5, 5);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.from_integer(d(rng));
  return m;
}

void BM_RrefRational(benchmark::State& st) {
  Matrix m = random_matrix(Q, st.range(0), 1);
  for (auto _ : st) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRational)->Arg(8)->Arg(16)->Arg(32);

void BM_RrefModular(benchmark::State& st) {
  Matrix m = random_matrix(FieldSpec::prime(101), st.range(0), 1);
  for (auto _ : st) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefModular)->Arg(8)->Arg(16)->Arg(32);

void BM_DiagonalResolution(benchmark::State& st) {
  Module d = diagonal_module(dual());
  for (auto _ : st) benchmark::DoNotOptimize(free_resolution(d, st.range(0)));
}
BENCHMARK(BM_DiagonalResolution)->DenseRange(2, 6, 2);

void BM_VerifyFrobenius(benchmark::State& st) {
  Algebra a = st.range(0) == 0 ? dual() : split_product(Q, 2);
  for (auto _ : st) benchmark::DoNotOptimize(verify_frobenius(a, 3));
}
BENCHMARK(BM_VerifyFrobenius)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ClosedSurface(benchmark::State& st) {
  Algebra a = dual();
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_closed_surface(a, st.range(0), 4));
}
BENCHMARK(BM_ClosedSurface)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
