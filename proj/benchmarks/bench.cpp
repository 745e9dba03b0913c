// Microbenchmarks for the hot paths: finite-field rank computation, the
// Hilbert-function scan behind deg_X, and the focal-value recursion.
#include <benchmark/benchmark.h>

#include <vector>

#include "darboux/field.hpp"
#include "darboux/focal.hpp"
#include "darboux/inverse.hpp"
#include "darboux/linalg.hpp"
#include "darboux/parse.hpp"

namespace {

using namespace darboux;

const FieldPtr& Fp() {
  static FieldPtr ctx = FieldContext::prime(10007);
  return ctx;
}

void BM_RankFp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::vector<FieldElement>> rows(n);
  unsigned long long lcg = 0x2545F4914F6CDD1Dull;
  for (int i = 0; i < n; ++i) {
    rows[i].reserve(n);
    for (int j = 0; j < n; ++j) {
      lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
      rows[i].push_back(Fp()->from_int(static_cast<long long>(lcg % 10007)));
    }
  }
  for (auto _ : state) {
    ExactMatrix m = ExactMatrix::from_rows(Fp(), rows);
    benchmark::DoNotOptimize(rank(m));
  }
}
BENCHMARK(BM_RankFp)->Arg(20)->Arg(40)->Arg(80);

void BM_DegXQuintic(benchmark::State& state) {
  Curve c = Curve::from_affine(parse_polynomial(
      "(y+2)*(4*x+y+4)*(4*x+1)*(2*x+1)*(2*x^2+2*x*y+x+2*y+2)", Fp(), 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(deg_X(c).deg_X);
  }
}
BENCHMARK(BM_DegXQuintic);

void BM_KernelSpace(benchmark::State& state) {
  Curve c = Curve::from_affine(parse_polynomial("2*x^2+2*x*y+x+2*y+2", Fp(), 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_space(c, 3).dim);
  }
}
BENCHMARK(BM_KernelSpace);

void BM_FocalValues(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  Polynomial x2 = parse_polynomial("x^2", Fp(), 2);
  NormalForm nf(Fp()->one(), x2, x2, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(focal_values(nf, order).s.size());
  }
}
BENCHMARK(BM_FocalValues)->Arg(4)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
