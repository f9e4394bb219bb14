// Serial reference kernels against their OpenMP versions, plus one
// end-to-end cohomology computation.

#include <benchmark/benchmark.h>

#include <random>

#include "hgs/homology.hpp"
#include "hgs/kernels.hpp"

using namespace hgs;

namespace {

Matrix random_matrix(Field f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(f, n, n);
  std::uniform_int_distribution<long> d(-9, 9);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.from_int(d(rng));
  return m;
}

Field field_arg(int64_t k) { return k == 0 ? Field::rationals() : Field::parse("F101"); }

template <std::vector<std::size_t> (*Rref)(Matrix&)>
void BM_Rref(benchmark::State& state) {
  Field f = field_arg(state.range(1));
  Matrix src = random_matrix(f, state.range(0), 11);
  for (auto _ : state) {
    Matrix m = src;
    benchmark::DoNotOptimize(Rref(m));
  }
}

template <Matrix (*Mul)(const Matrix&, const Matrix&)>
void BM_Matmul(benchmark::State& state) {
  Field f = field_arg(state.range(1));
  Matrix a = random_matrix(f, state.range(0), 3), b = random_matrix(f, state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(Mul(a, b));
}

void BM_GsCohomologyS3F3(benchmark::State& state) {
  auto a = make_group_algebra(Group::symmetric(3), Field::parse("F3"));
  for (auto _ : state) benchmark::DoNotOptimize(gs_cohomology(a, trivial_yd(a), state.range(0)));
}

// {size, field}: field 0 is Q, 1 is F101
void sizes(benchmark::internal::Benchmark* b) {
  for (int f : {0, 1})
    for (int n : {32, 64, 128}) b->Args({n, f});
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_Rref<kernels::rref_serial>)->Name("rref/serial")->Apply(sizes);
BENCHMARK(BM_Rref<kernels::rref_parallel>)->Name("rref/parallel")->Apply(sizes);
BENCHMARK(BM_Matmul<kernels::matmul_serial>)->Name("matmul/serial")->Apply(sizes);
BENCHMARK(BM_Matmul<kernels::matmul_parallel>)->Name("matmul/parallel")->Apply(sizes);
BENCHMARK(BM_GsCohomologyS3F3)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
