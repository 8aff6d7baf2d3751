// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "cmrep/dynamics/scan.hpp"
#include "cmrep/network/sweep.hpp"

using namespace cmrep;

namespace {

network::SweepRequest length_sweep(std::size_t points) {
    network::SweepRequest req;
    req.base = network::find_scenario("metro-c");
    req.axis = network::SweepAxis::length;
    req.hops = 16;
    for (std::size_t i = 0; i < points; ++i) req.values.push_back(1.0 + double(i));
    return req;
}

std::vector<dynamics::LindbladParams> coupling_scan(std::size_t points) {
    std::vector<dynamics::LindbladParams> nodes(points);
    for (std::size_t i = 0; i < points; ++i) nodes[i].g_mc = dynamics::angular(50e6 + 10e6 * double(i));
    return nodes;
}

void BM_SweepSerial(benchmark::State& state) {
    const auto req = length_sweep(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(network::sweep_serial(req));
}

void BM_SweepParallel(benchmark::State& state) {
    const auto req = length_sweep(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(network::sweep_parallel(req));
}

void BM_PairScanSerial(benchmark::State& state) {
    const auto nodes = coupling_scan(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dynamics::pair_scan_serial(nodes, 100));
}

void BM_PairScanParallel(benchmark::State& state) {
    const auto nodes = coupling_scan(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dynamics::pair_scan_parallel(nodes, 100));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(256)->Arg(4096);
BENCHMARK(BM_SweepParallel)->Arg(256)->Arg(4096);
BENCHMARK(BM_PairScanSerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairScanParallel)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
