#include <benchmark/benchmark.h>

#include "dmod/bfunction.hpp"
#include "dmod/commutative.hpp"
#include "dmod/generalized.hpp"
#include "dmod/local_bfunction.hpp"
#include "dmod/multiplier.hpp"
#include "dmod/weyl.hpp"
#include "dmod_cli/parse.hpp"

using namespace dmod;

namespace {

std::vector<Polynomial> ideal(const std::string& text, const std::vector<std::string>& vars) {
  return cli::parse(text, vars).polynomials;
}

void BM_CommutativeGB_Cyclic4(benchmark::State& state) {
  auto gens = ideal("a+b+c+d, a*b+b*c+c*d+d*a, a*b*c+b*c*d+c*d*a+d*a*b, a*b*c*d-1", {"a", "b", "c", "d"});
  for (auto _ : state) benchmark::DoNotOptimize(gb(gens));
}
BENCHMARK(BM_CommutativeGB_Cyclic4)->Unit(benchmark::kMillisecond);

void BM_InitialIdeal(benchmark::State& state) {
  auto f = ideal("x^2+y^3", {"x", "y"});
  WeylAlgebra D(f.front().ring(), 1);
  auto If = buildIf(D, f);
  for (auto _ : state) benchmark::DoNotOptimize(initialIdeal(If, D.tWeight()));
}
BENCHMARK(BM_InitialIdeal)->Unit(benchmark::kMillisecond);

void BM_GlobalB(benchmark::State& state) {
  const char* inputs[] = {"x^2+y^3", "x*y*(x+y)", "x^3+y^4", "x^2+y^2+z^2"};
  auto f = cli::parse(inputs[state.range(0)], {"x", "y", "z"}).polynomials.front();
  state.SetLabel(inputs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(globalBFunction(f));
}
BENCHMARK(BM_GlobalB)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Stratify(benchmark::State& state) {
  auto f = ideal("x^2+y^3", {"x", "y"}).front();
  for (auto _ : state) benchmark::DoNotOptimize(stratifyByLocalB(f));
}
BENCHMARK(BM_Stratify)->Unit(benchmark::kMillisecond);

void BM_GeneralB(benchmark::State& state) {
  auto f = ideal("x^2,y^3", {"x", "y"});
  auto one = Polynomial::constant(f.front().ring(), 1);
  auto method = state.range(0) == 0 ? GeneralBMethod::StarIdeal : GeneralBMethod::InitialIdeal;
  state.SetLabel(state.range(0) == 0 ? "star" : "initial");
  for (auto _ : state) benchmark::DoNotOptimize(generalB(f, one, method));
}
BENCHMARK(BM_GeneralB)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_MultiplierIdeal(benchmark::State& state) {
  auto f = ideal("x^2+y^3", {"x", "y"});
  const bool la = state.range(0) == 1;
  state.SetLabel(la ? "linalg" : "syzygy");
  for (auto _ : state) {
    MultiplierSession session(f);
    benchmark::DoNotOptimize(la ? session.idealLA(Rational(11, 12)) : session.ideal(Rational(11, 12)));
  }
}
BENCHMARK(BM_MultiplierIdeal)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_Jumping(benchmark::State& state) {
  auto f = ideal("x^2+y^3", {"x", "y"});
  for (auto _ : state) benchmark::DoNotOptimize(jumpingCoefficients(f, Rational(0), Rational(1)));
}
BENCHMARK(BM_Jumping)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
