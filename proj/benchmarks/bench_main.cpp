// Microbenchmarks for the hot kernels: the Lee-weight distance scan, image
// materialization, standard-form reduction, and factorization.
//
// Run: ./ru4_bench [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include <random>

#include "ru4/cyclic.hpp"
#include "ru4/factor.hpp"
#include "ru4/image.hpp"

namespace {

using namespace ru4;

CyclicCode make_code(int n, const char* gens) {
  return CyclicCode::from_generators(n, parse_generator_list(gens));
}

void BM_MinLeeWeightScan(benchmark::State& state) {
  // <2, u> at n=7: 2^21 codewords
  const CyclicCode code = make_code(7, "2:0 ; 0:1");
  for (auto _ : state) {
    auto d = code.min_lee_weight(24, int(state.range(0)));
    benchmark::DoNotOptimize(d);
  }
  state.SetItemsProcessed(state.iterations() *
                          (int64_t(1) << code.log2_size()));
}
BENCHMARK(BM_MinLeeWeightScan)->Arg(1)->Arg(2)->Arg(4);

void BM_GrayImageMaterialize(benchmark::State& state) {
  const CyclicCode code = make_code(7, "0:1");  // 2^14 words
  for (auto _ : state) {
    BinaryCodeSet set = gray_image(code);
    benchmark::DoNotOptimize(set.packed_words().data());
  }
  state.SetItemsProcessed(state.iterations() * (int64_t(1) << 14));
}
BENCHMARK(BM_GrayImageMaterialize);

void BM_StandardForm(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const size_t rows = size_t(state.range(0));
  MatZ4 m(0, 2 * rows);
  for (size_t r = 0; r < rows; ++r) {
    VecZ4 row(2 * rows);
    for (auto& x : row) x = uint8_t(rng() & 3);
    m.append_row(row);
  }
  for (auto _ : state) {
    StandardForm sf = standard_form(m);
    benchmark::DoNotOptimize(sf.k1);
  }
}
BENCHMARK(BM_StandardForm)->Arg(8)->Arg(16)->Arg(32);

void BM_FactorLift(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) {
    FactorizationResult fact = factor_xn_minus_1(n);
    benchmark::DoNotOptimize(fact.idempotents.data());
  }
}
BENCHMARK(BM_FactorLift)->Arg(7)->Arg(15)->Arg(31);

void BM_EnumerateFamily(benchmark::State& state) {
  const FactorizationResult fact = factor_xn_minus_1(3);
  for (auto _ : state) {
    int count = 0;
    for_each_cyclic_code(fact,
                         [&](const CRTProfile&, const CyclicCode&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * 49);
}
BENCHMARK(BM_EnumerateFamily);

}  // namespace

BENCHMARK_MAIN();
