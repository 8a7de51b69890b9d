#include "nilgrade/bch.hpp"
#include "nilgrade/catalog.hpp"
#include "nilgrade/derivability.hpp"
#include "nilgrade/goodman.hpp"

#include <benchmark/benchmark.h>

using namespace nilgrade;

namespace {

const char *const kNames[] = {"g5_5", "g6_11", "g6_20", "g7_0_8", "counterexample11"};

void BM_EInvariant(benchmark::State &state)
{
	auto g = catalog_get(kNames[state.range(0)]).algebra();
	AdaptedAlgebra a(g);
	for (auto _ : state)
		benchmark::DoNotOptimize(e_invariant(a));
	state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_EInvariant)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Adapt(benchmark::State &state)
{
	auto g = catalog_get("counterexample11").algebra();
	for (auto _ : state)
		benchmark::DoNotOptimize(AdaptedAlgebra(g));
}
BENCHMARK(BM_Adapt)->Unit(benchmark::kMicrosecond);

// Expanding one word in the right-nested basis; the full table is cached after first use.
void BM_RightNestedExpansion(benchmark::State &state)
{
	Word w;
	for (std::int64_t k = 0; k < state.range(0); ++k)
		w.push_back(k % 3 == 0 ? Side::left : Side::right);
	for (auto _ : state)
		benchmark::DoNotOptimize(right_nested_expansion(w));
}
BENCHMARK(BM_RightNestedExpansion)->DenseRange(2, 8)->Unit(benchmark::kMicrosecond);

void BM_BchProduct(benchmark::State &state)
{
	auto g = catalog_get(state.range(0) ? "counterexample11" : "g6_19").algebra();
	auto f = lower_central_series(g);
	GridSampler s(1);
	Vector x = s.next_vector(g.dim()), y = s.next_vector(g.dim());
	for (auto _ : state)
		benchmark::DoNotOptimize(bch_product(g, f, x, y));
}
BENCHMARK(BM_BchProduct)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_GoodmanCheck(benchmark::State &state)
{
	auto g = catalog_get("g6_19").algebra();
	auto d = e_invariant(g).witness;
	auto ladder = geometric_ladder(Rational(2), 20);
	for (auto _ : state)
		benchmark::DoNotOptimize(goodman_check(g, d, static_cast<std::size_t>(state.range(0)), ladder, 1));
}
BENCHMARK(BM_GoodmanCheck)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
