#include <benchmark/benchmark.h>

#include "unipoly/canonical.hpp"
#include "unipoly/families.hpp"
#include "unipoly/oracle.hpp"
#include "unipoly/rewrites.hpp"

using namespace unipoly;

namespace {

void BM_EnumerateExceptional(benchmark::State& state)
{
    const auto s = DegreeSequence::parse("14,5^9,3^5");
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_realizations(s).class_count);
}
BENCHMARK(BM_EnumerateExceptional)->Unit(benchmark::kMillisecond);

void BM_EnumerateManyClasses(benchmark::State& state)
{
    const auto s = DegreeSequence::parse("11,6,5,5,5,5,4,4,4,3,3,3");
    EnumerateOptions opt;
    opt.jobs = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_realizations(s, opt).class_count);
}
BENCHMARK(BM_EnumerateManyClasses)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state)
{
    const auto f = to_polytope(construct(make_family_spec(FamilyTag::B1, static_cast<int>(state.range(0)), 3)));
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_form(f));
}
BENCHMARK(BM_CanonicalForm)->Arg(12)->Arg(20)->Arg(30);

void BM_Layout(benchmark::State& state)
{
    const auto cd = construct(make_family_spec(FamilyTag::C, static_cast<int>(state.range(0)), 5, 5));
    const auto g = chord_graph(cd);
    for (auto _ : state)
        benchmark::DoNotOptimize(layout(g, cd.rim()));
}
BENCHMARK(BM_Layout)->Arg(15)->Arg(25);

void BM_VerifyRange(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_theorem(9, static_cast<int>(state.range(0))).examined);
}
BENCHMARK(BM_VerifyRange)->Arg(11)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
