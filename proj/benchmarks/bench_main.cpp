#include <benchmark/benchmark.h>

#include "dissecta/incidence.hpp"
#include "dissecta/lattice.hpp"
#include "dissecta/mobius_algebra.hpp"
#include "dissecta/valuation.hpp"
#include "dissecta/zlinalg.hpp"
#include "generators.hpp"

using namespace dissecta;

namespace {

void BM_Mobius(benchmark::State& state) {
  dtest::Rng rng(1);
  const PosetRef p = share(dtest::random_poset(rng, static_cast<std::size_t>(state.range(0)), 0.1));
  for (auto _ : state) benchmark::DoNotOptimize(mobius(p));
  state.counters["relation"] = static_cast<double>(p->relation_size());
}
BENCHMARK(BM_Mobius)->Arg(64)->Arg(256)->Arg(1024);

void BM_MobiusBoolean(benchmark::State& state) {
  const PosetRef p = share(dtest::boolean_poset(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(mobius(p));
}
BENCHMARK(BM_MobiusBoolean)->DenseRange(6, 10, 2);

void BM_MobiusProduct(benchmark::State& state) {
  dtest::Rng rng(2);
  const PosetRef p = share(dtest::random_poset_with_bottom(rng, static_cast<std::size_t>(state.range(0)), 0.2));
  const MobiusAlgebra alg(p);
  std::vector<std::int64_t> cx(p->size()), cy(p->size());
  for (auto& x : cx) x = dtest::uniform(rng, -3, 3);
  for (auto& y : cy) y = dtest::uniform(rng, -3, 3);
  const GroupVector x(p, cx), y(p, cy);
  for (auto _ : state) benchmark::DoNotOptimize(alg.product(x, y));
}
BENCHMARK(BM_MobiusProduct)->Arg(20)->Arg(200);

void BM_HermiteForm(benchmark::State& state) {
  dtest::Rng rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntegerMatrix a = dtest::random_matrix(rng, n, n, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(a, NormalFormKind::hermite));
}
BENCHMARK(BM_HermiteForm)->Arg(4)->Arg(8)->Arg(16);

void BM_SmithForm(benchmark::State& state) {
  dtest::Rng rng(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntegerMatrix a = dtest::random_matrix(rng, n, n, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(a, NormalFormKind::smith));
}
BENCHMARK(BM_SmithForm)->Arg(4)->Arg(8)->Arg(16);

void BM_NLPresentation(benchmark::State& state) {
  const Lattice l = dtest::lattice_of(dtest::boolean_poset(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) {
    const NLPresentation nl(l);
    benchmark::DoNotOptimize(val_invariants(nl));
  }
}
BENCHMARK(BM_NLPresentation)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Zaslavsky(benchmark::State& state) {
  const Lattice l = dtest::lattice_of(dtest::boolean_poset(static_cast<unsigned>(state.range(0))));
  const NLPresentation nl(l);
  std::vector<Index> m;
  for (Index a = 0; a < l.size(); ++a) m.push_back(a);
  for (auto _ : state) benchmark::DoNotOptimize(zaslavsky_check(nl, m));
}
BENCHMARK(BM_Zaslavsky)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
