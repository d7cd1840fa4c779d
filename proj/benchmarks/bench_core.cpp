// Microbenchmarks for the hot paths: exact elimination, tensor squares of
// bimodules, intertwiner spaces, and the Picard order probe.
#include <benchmark/benchmark.h>

#include "fdalg/extension.hpp"

namespace {

using namespace fdalg;

Mat random_matrix(const Field& f, int n, std::uint64_t seed) {
  Rng rng(seed, 1000);  // small entries keep rational growth realistic
  Mat m(f, n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = rng.sample(f);
  return m;
}

void BM_echelon_rational(benchmark::State& state) {
  const Field f = Field::rationals();
  const int n = static_cast<int>(state.range(0));
  const Mat m = random_matrix(f, n, 7);
  for (auto _ : state) {
    EchelonBasis eb(f, n);
    for (int r = 0; r < n; ++r) eb.insert(m.row(r));
    benchmark::DoNotOptimize(eb.rank());
  }
}
BENCHMARK(BM_echelon_rational)->Arg(9)->Arg(18)->Arg(36);

void BM_det_prime_field(benchmark::State& state) {
  const Field f = Field::prime(9973);
  const int n = static_cast<int>(state.range(0));
  const Mat m = random_matrix(f, n, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.det());
  }
}
BENCHMARK(BM_det_prime_field)->Arg(9)->Arg(18)->Arg(36);

void BM_dual_tensor_square(benchmark::State& state) {
  const FDAlgebra A = nakayama_R(Field::rationals());
  const Bimodule D = dual(regular(A));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tensor_over(D, D).mod.dim);
  }
}
BENCHMARK(BM_dual_tensor_square);

void BM_bimodule_hom_space(benchmark::State& state) {
  const FDAlgebra A = nakayama_R(Field::rationals());
  const Bimodule D = dual(regular(A));
  const Bimodule R = regular(A);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hom_space(D, R, HomKind::bimodule).dim());
  }
}
BENCHMARK(BM_bimodule_hom_space);

void BM_pic_order_probe(benchmark::State& state) {
  const FDAlgebra A = nakayama_R(Field::rationals());
  for (auto _ : state) {
    Rng rng(0);
    benchmark::DoNotOptimize(pic_order_probe(A, 2, rng, 2).order.has_value());
  }
}
BENCHMARK(BM_pic_order_probe);

void BM_frobenius_search_exhaustive(benchmark::State& state) {
  const FDAlgebra A = nakayama_R(Field::prime(3));
  for (auto _ : state) {
    Rng rng(0);
    benchmark::DoNotOptimize(find_frobenius_form(A, rng, 2).frobenius());
  }
}
BENCHMARK(BM_frobenius_search_exhaustive);

}  // namespace

BENCHMARK_MAIN();
