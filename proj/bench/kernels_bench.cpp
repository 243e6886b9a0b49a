// Parallel kernels vs. their single-threaded reference implementations.
// Each pair runs on the same input so the speedup is read directly from the
// report; the DoNotOptimize calls keep the results live.
#include <benchmark/benchmark.h>

#include "fq/graph.hpp"
#include "fq/oracle.hpp"
#include "fq/serial.hpp"
#include "fq/witness.hpp"

using fq::CayleyGraph;

namespace {

void BM_brute_force_parallel(benchmark::State& state) {
    CayleyGraph g(static_cast<int>(state.range(0)), true);
    for (auto _ : state) {
        auto auts = fq::brute_force_automorphisms(g);
        benchmark::DoNotOptimize(auts);
    }
    state.counters["automorphisms"] =
        static_cast<double>(fq::brute_force_automorphisms(g).size());
}
BENCHMARK(BM_brute_force_parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_brute_force_serial(benchmark::State& state) {
    CayleyGraph g(static_cast<int>(state.range(0)), true);
    for (auto _ : state) {
        auto auts = fq::serial::brute_force_automorphisms(g);
        benchmark::DoNotOptimize(auts);
    }
}
BENCHMARK(BM_brute_force_serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_census_parallel(benchmark::State& state) {
    CayleyGraph g(static_cast<int>(state.range(0)), true);
    for (auto _ : state) {
        auto census = fq::four_cycle_census(g);
        benchmark::DoNotOptimize(census);
    }
}
BENCHMARK(BM_census_parallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_census_serial(benchmark::State& state) {
    CayleyGraph g(static_cast<int>(state.range(0)), true);
    for (auto _ : state) {
        auto census = fq::serial::four_cycle_census(g);
        benchmark::DoNotOptimize(census);
    }
}
BENCHMARK(BM_census_serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_connectivity_parallel(benchmark::State& state) {
    CayleyGraph g(static_cast<int>(state.range(0)), true);
    for (auto _ : state) {
        int kappa = fq::vertex_connectivity(g);
        benchmark::DoNotOptimize(kappa);
    }
}
BENCHMARK(BM_connectivity_parallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_connectivity_serial(benchmark::State& state) {
    CayleyGraph g(static_cast<int>(state.range(0)), true);
    for (auto _ : state) {
        int kappa = fq::serial::vertex_connectivity(g);
        benchmark::DoNotOptimize(kappa);
    }
}
BENCHMARK(BM_connectivity_serial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_arc_sweep_parallel(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        fq::SweepResult r = fq::verify_all_arc_pairs(n);
        benchmark::DoNotOptimize(r);
    }
    state.counters["pairs"] = static_cast<double>(fq::verify_all_arc_pairs(n).pairs);
}
BENCHMARK(BM_arc_sweep_parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_arc_sweep_serial(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        fq::SweepResult r = fq::serial::verify_all_arc_pairs(n);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_arc_sweep_serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
