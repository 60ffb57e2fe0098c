#include "chamberlab/adjacency.hpp"
#include "chamberlab/antidesigns.hpp"
#include "chamberlab/counting.hpp"
#include "chamberlab/search.hpp"
#include "chamberlab/spectral.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace chamberlab;

UniversePtr universe(unsigned q, int d) { return ChamberUniverse::build(Field::of_order(q), d); }

void BM_Universe(benchmark::State& st)
{
    const auto q = static_cast<unsigned>(st.range(0));
    const auto d = static_cast<int>(st.range(1));
    for (auto _ : st) benchmark::DoNotOptimize(universe(q, d));
}
BENCHMARK(BM_Universe)->Args({2, 4})->Args({3, 4})->Args({4, 4})->Args({2, 6})->Unit(benchmark::kMillisecond);

void BM_Adjacency(benchmark::State& st)
{
    const auto u = universe(static_cast<unsigned>(st.range(0)), 4);
    for (auto _ : st) benchmark::DoNotOptimize(Adjacency(u));
}
BENCHMARK(BM_Adjacency)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ChiEigenvectors(benchmark::State& st)
{
    const Adjacency adj(universe(static_cast<unsigned>(st.range(0)), 4));
    for (auto _ : st) benchmark::DoNotOptimize(verify_chi_eigenvectors(adj));
}
BENCHMARK(BM_ChiEigenvectors)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EigenspaceRank(benchmark::State& st)
{
    const auto u = universe(static_cast<unsigned>(st.range(0)), 4);
    for (auto _ : st) benchmark::DoNotOptimize(eigenspace_dimension(ChiFamily(u)));
}
BENCHMARK(BM_EigenspaceRank)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Orthogonality(benchmark::State& st)
{
    const auto u = universe(static_cast<unsigned>(st.range(0)), 4);
    const auto insts = standard_antidesigns(u, {});
    for (auto _ : st)
        for (const auto& in : insts) benchmark::DoNotOptimize(orthogonality_report(in.vector));
}
BENCHMARK(BM_Orthogonality)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& st)
{
    const Adjacency adj(universe(2, 4));
    SearchOptions o;
    o.mode = st.range(0) ? SearchMode::enumerate_maximum : SearchMode::prove_alpha;
    o.target = static_cast<std::size_t>(max_ekr_size(2, 2));
    for (auto _ : st) benchmark::DoNotOptimize(max_coclique_search(adj, o));
}
BENCHMARK(BM_Search)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
