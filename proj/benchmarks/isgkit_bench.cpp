#include <benchmark/benchmark.h>

#include "isgkit/constructors.hpp"
#include "isgkit/order.hpp"
#include "isgkit/subsets.hpp"
#include "isgkit/verify.hpp"

namespace {

using namespace isgkit;

void BM_SymmetricInverseMonoid(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(symmetric_inverse_monoid(n));
}
BENCHMARK(BM_SymmetricInverseMonoid)->DenseRange(2, 4);

void BM_NaturalOrder(benchmark::State& state)
{
    const auto s = symmetric_inverse_monoid(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(NaturalOrder(s));
    state.counters["elements"] = static_cast<double>(s.size());
}
BENCHMARK(BM_NaturalOrder)->DenseRange(2, 4);

void BM_JoinOfIdempotents(benchmark::State& state)
{
    const auto s = symmetric_inverse_monoid(4);
    const NaturalOrder order(s);
    const ElementSet e = idempotents(s);
    for (auto _ : state)
        benchmark::DoNotOptimize(join(order, e));
}
BENCHMARK(BM_JoinOfIdempotents);

void BM_AllMeets(benchmark::State& state)
{
    const auto s = symmetric_inverse_monoid(3);
    const NaturalOrder order(s);
    for (auto _ : state)
        for (ElementId x : s.elements())
            for (ElementId y : s.elements())
                benchmark::DoNotOptimize(meet(order, x, y));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size() * s.size()));
}
BENCHMARK(BM_AllMeets);

void BM_SubsetStream(benchmark::State& state)
{
    const auto k = static_cast<std::size_t>(state.range(0));
    std::vector<ElementId> domain;
    for (std::size_t i = 0; i < 34; ++i)
        domain.push_back(element(i));
    std::int64_t visited = 0;
    for (auto _ : state) {
        SubsetStream stream(34, domain, SubsetBudget::bounded(k, 1000, 7));
        ElementSet xs;
        while (stream.next(xs))
            ++visited;
    }
    state.SetItemsProcessed(visited);
}
BENCHMARK(BM_SubsetStream)->DenseRange(1, 3);

void BM_DistributivityExhaustiveI2(benchmark::State& state)
{
    const auto s = symmetric_inverse_monoid(2);
    const NaturalOrder order(s);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_infinitely_distributive(s, order, SubsetBudget::exhaustive()));
}
BENCHMARK(BM_DistributivityExhaustiveI2);

void BM_Lemma1I3(benchmark::State& state)
{
    const auto s = symmetric_inverse_monoid(3);
    const NaturalOrder order(s);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_lemma1(s, order));
}
BENCHMARK(BM_Lemma1I3)->Unit(benchmark::kMillisecond);

void BM_TheoremBoundedI3(benchmark::State& state)
{
    const auto s = symmetric_inverse_monoid(3);
    const NaturalOrder order(s);
    const auto budget = SubsetBudget::bounded(3, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_theorem(s, order, budget));
}
BENCHMARK(BM_TheoremBoundedI3)->Arg(0)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
