#include <benchmark/benchmark.h>

#include "cover_ramsey/berge.hpp"
#include "cover_ramsey/bounds.hpp"
#include "cover_ramsey/designs.hpp"
#include "cover_ramsey/search.hpp"

using namespace cover_ramsey;

namespace {

void BM_FindBergeK5InD27(benchmark::State& state) {
  const auto h = design_to_hypergraph(construct_resolvable_bibd(27, 3));
  const BergeFinder finder(h);
  const auto g = TargetGraph::complete(5);
  for (auto _ : state) benchmark::DoNotOptimize(finder.find(g));
}
BENCHMARK(BM_FindBergeK5InD27);

void BM_UnavoidableK6Triangles(benchmark::State& state) {
  const auto h = Hypergraph::complete_graph(6);
  const auto k3 = TargetGraph::complete(3);
  UnavoidableOptions opt;
  opt.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(unavoidable(h, k3, k3, opt));
}
BENCHMARK(BM_UnavoidableK6Triangles)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BadEventScanD15(benchmark::State& state) {
  const auto h = design_to_hypergraph(construct_resolvable_bibd(15, 3));
  const LinearHostIndex idx(h);
  const auto c = *moser_tardos_coloring(h, 5, 0).coloring;
  for (auto _ : state) benchmark::DoNotOptimize(scan_bad_events(idx, c, 5));
}
BENCHMARK(BM_BadEventScanD15);

void BM_LllThreshold(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lll_threshold_n(t, 3));
}
BENCHMARK(BM_LllThreshold)->Arg(20)->Arg(60);

void BM_Kirkman(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(construct_resolvable_bibd(n, 3));
}
BENCHMARK(BM_Kirkman)->Arg(15)->Arg(33)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
