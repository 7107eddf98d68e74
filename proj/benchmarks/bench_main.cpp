#include <benchmark/benchmark.h>

#include "hybridres/blowup.hpp"
#include "hybridres/hybrid.hpp"
#include "hybridres/invariants.hpp"
#include "hybridres/parser.hpp"
#include "hybridres/standard_basis.hpp"

using namespace hybridres;

namespace {

Ideal makeIdeal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parsePolynomial(g, r));
  return Ideal(r, std::move(ps));
}

RingPtr five() {
  static RingPtr r = makeRing({"x", "y", "z", "w", "v"});
  return r;
}
RingPtr three() {
  static RingPtr r = makeRing({"x", "y", "z"});
  return r;
}

Ideal ex61() { return makeIdeal(five(), {"z^2+x^3*y^3", "w^5+x^5+v^3*y^2"}); }
Ideal ex62() { return makeIdeal(three(), {"x^5+y^11", "z^9+x^9"}); }
MonomialOrder order62() { return MonomialOrder(OrderKind::LocalNegDegRevLex, {2, 1, 0}); }

void BM_LocalStandardBasis(benchmark::State& state) {
  auto I = makeIdeal(three(), {"x^3+y^4+x*y*z", "z^3+x^2*y", "y^3+x*z^2"});
  auto ord = MonomialOrder::localDefault(3);
  for (auto _ : state) benchmark::DoNotOptimize(standardBasis(I, ord));
}
BENCHMARK(BM_LocalStandardBasis);

void BM_GlobalStandardBasis(benchmark::State& state) {
  auto I = makeIdeal(three(), {"x^3+y^4+x*y*z", "z^3+x^2*y", "y^3+x*z^2"});
  auto ord = MonomialOrder::degrevlex(3);
  for (auto _ : state) benchmark::DoNotOptimize(standardBasis(I, ord));
}
BENCHMARK(BM_GlobalStandardBasis);

void BM_HilbertSamuel(benchmark::State& state) {
  auto I = ex61();
  const auto D = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hsSequence(I, D));
}
BENCHMARK(BM_HilbertSamuel)->Arg(3)->Arg(10)->Arg(30);

void BM_StrictTransform(benchmark::State& state) {
  auto I = ex61();
  auto chart = chartFor(five(), Center::origin(*five()), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(strictTransform(I, chart));
}
BENCHMARK(BM_StrictTransform)->DenseRange(0, 4);

void BM_StagedBuild61(benchmark::State& state) {
  auto I = ex61();
  for (auto _ : state) benchmark::DoNotOptimize(stagedBuild(I));
}
BENCHMARK(BM_StagedBuild61);

void BM_StagedBuild62(benchmark::State& state) {
  auto I = ex62();
  auto ord = order62();
  for (auto _ : state) benchmark::DoNotOptimize(stagedBuild(I, ord));
}
BENCHMARK(BM_StagedBuild62);

void BM_LemmaCheck61(benchmark::State& state) {
  auto I = ex61();
  for (auto _ : state) benchmark::DoNotOptimize(lemmaEquivalenceCheck(I, {0, 1, 2, 3, 4}));
}
BENCHMARK(BM_LemmaCheck61)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
