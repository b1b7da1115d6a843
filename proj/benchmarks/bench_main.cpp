#include <benchmark/benchmark.h>

#include "hilbeq/corpus.hpp"
#include "hilbeq/equations.hpp"
#include "hilbeq/membership.hpp"
#include "hilbeq/rng.hpp"

using namespace hilbeq;

namespace {

const HilbertSpec& line_plus_point() {
  static const HilbertSpec s = HilbertSpec::parse("t+2");
  return s;
}

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(f, rng);
  return m;
}

void BM_RankPrime(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(Field::prime(kDefaultTestPrime), n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankPrime)->Arg(16)->Arg(64)->Arg(128);

void BM_RankRational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(Field::rationals(), n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRational)->Arg(8)->Arg(16)->Arg(32);

void BM_GenE(benchmark::State& state) {
  const int R = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen_E(line_plus_point(), 2, R).forms.size());
}
BENCHMARK(BM_GenE)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_GenF(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gen_F_symbols(line_plus_point(), 2, 2).entries.size());
}
BENCHMARK(BM_GenF)->Unit(benchmark::kMillisecond);

void BM_FMatrixResidual(benchmark::State& state) {
  const Field f = Field::prime(kDefaultTestPrime);
  const FTable t = gen_F_symbols(line_plus_point(), 2, 2);
  const PluckerVector v = plucker_from_subspace(lex_segment_point(line_plus_point(), 2, 2, f).second);
  for (auto _ : state) benchmark::DoNotOptimize(cross_quadric_residual(f_matrix(t, v)).rank_at_most_one);
}
BENCHMARK(BM_FMatrixResidual)->Unit(benchmark::kMicrosecond);

void BM_GenericColon(benchmark::State& state) {
  const Field f = Field::prime(kDefaultTestPrime);
  const GradedSubspace w = GradedSubspace::from_rows(2, 3, random_matrix(f, 5, 10, 3));
  for (auto _ : state) benchmark::DoNotOptimize(generic_colon(w).codim);
}
BENCHMARK(BM_GenericColon)->Unit(benchmark::kMillisecond);

void BM_CrossCheck(benchmark::State& state) {
  const Field f = Field::prime(kDefaultTestPrime);
  const EquationSet eqs = make_equation_set(line_plus_point(), 2, 2);
  const GradedSubspace w = gl_translate(lex_segment_point(line_plus_point(), 2, 2, f), f, 4).second;
  for (auto _ : state) benchmark::DoNotOptimize(cross_check(w, eqs).consistent);
}
BENCHMARK(BM_CrossCheck)->Unit(benchmark::kMillisecond);

void BM_PluckerFromSubspace(benchmark::State& state) {
  const Field f = Field::prime(kDefaultTestPrime);
  const GradedSubspace w = GradedSubspace::from_rows(2, 4, random_matrix(f, 9, 15, 5));
  for (auto _ : state) benchmark::DoNotOptimize(plucker_from_subspace(w).coords().size());
}
BENCHMARK(BM_PluckerFromSubspace)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
