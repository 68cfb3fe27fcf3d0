#include <benchmark/benchmark.h>

#include "plurigreen/lempert.hpp"
#include "plurigreen/monge_ampere.hpp"
#include "plurigreen/parallel.hpp"

using namespace plurigreen;

namespace {

const std::vector<Complex> kPoles = {0.5, -0.5};
const std::vector<double> kWeights = {2.0, 1.0};
const std::vector<std::size_t> kBoth = {0, 1};

SolverConfig grid_config() {
    SolverConfig sc;
    sc.radii = 48;
    sc.angles = 48;
    return sc;
}

GridRegion scan_region() {
    GridRegion r;
    r.center = ComplexPoint{0.0, 0.0};
    r.half_widths = {0.6, 0.6, 0.6, 0.6};
    r.step = 0.1;
    return r;
}

void BM_LempertGridSerial(benchmark::State& state) {
    const auto cfg = PoleConfiguration::bidisc_axis(kPoles, kWeights);
    const auto sc = grid_config();
    for (auto _ : state) {
        benchmark::DoNotOptimize(lempert_grid_values_serial(ComplexPoint{0.0, 0.3}, cfg, WeightVector{2, 1}, kBoth, sc));
    }
}

void BM_LempertGridParallel(benchmark::State& state) {
    const auto cfg = PoleConfiguration::bidisc_axis(kPoles, kWeights);
    const auto sc = grid_config();
    parallel::set_num_threads(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lempert_grid_values(ComplexPoint{0.0, 0.3}, cfg, WeightVector{2, 1}, kBoth, sc));
    }
    parallel::set_num_threads(0);
}

void BM_ScanSerial(benchmark::State& state) {
    const auto f = green_field(PoleConfiguration::bidisc_axis(kPoles, kWeights));
    const auto region = scan_region();
    for (auto _ : state) benchmark::DoNotOptimize(scan_points_serial(f, region, ScanOptions{}));
}

void BM_ScanParallel(benchmark::State& state) {
    const auto f = green_field(PoleConfiguration::bidisc_axis(kPoles, kWeights));
    const auto region = scan_region();
    parallel::set_num_threads(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(scan_points(f, region, ScanOptions{}));
    parallel::set_num_threads(0);
}

}  // namespace

BENCHMARK(BM_LempertGridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LempertGridParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
