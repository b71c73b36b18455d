#include <benchmark/benchmark.h>

#include "vcr/generators.hpp"
#include "vcr/homogenize.hpp"
#include "vcr/pipeline.hpp"
#include "vcr/switch_extract.hpp"
#include "vcr/vcdim.hpp"

namespace {

void BM_DedupColumns(benchmark::State& state) {
    const auto a = vcr::random_bipartite(64, static_cast<std::size_t>(state.range(0)), 0.5, 7);
    for (auto _ : state) benchmark::DoNotOptimize(vcr::dedup_columns(a));
}
BENCHMARK(BM_DedupColumns)->Arg(64)->Arg(256)->Arg(1024);

void BM_ExtractSwitch(benchmark::State& state) {
    const auto a = vcr::dedup_columns(
                       vcr::interval_matrix(static_cast<std::size_t>(state.range(0)),
                                            static_cast<std::size_t>(state.range(0)), 11))
                       .matrix;
    for (auto _ : state) benchmark::DoNotOptimize(vcr::extract_switch(a));
}
BENCHMARK(BM_ExtractSwitch)->Arg(64)->Arg(256)->Arg(512);

void BM_MatrixVcDimension(benchmark::State& state) {
    const auto a = vcr::half_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(vcr::matrix_vc_dimension(a));
}
BENCHMARK(BM_MatrixVcDimension)->Arg(32)->Arg(128)->Arg(256);

void BM_MaxCliqueExact(benchmark::State& state) {
    const auto g = vcr::random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 3);
    for (auto _ : state) benchmark::DoNotOptimize(vcr::max_clique_size(g));
}
BENCHMARK(BM_MaxCliqueExact)->Arg(24)->Arg(40)->Arg(56);

void BM_PipelineInterval(benchmark::State& state) {
    const auto a = vcr::interval_matrix(static_cast<std::size_t>(state.range(0)),
                                        static_cast<std::size_t>(state.range(0)), 5);
    vcr::PipelineConfig cfg;
    cfg.compute_vc = false;
    for (auto _ : state) benchmark::DoNotOptimize(vcr::extract_structure(a, cfg));
}
BENCHMARK(BM_PipelineInterval)->Arg(64)->Arg(256)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
