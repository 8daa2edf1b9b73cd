// Parallel sign-pattern census against the serial per-degree reference.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "toric/cohomology.hpp"
#include "toric/fan_io.hpp"

using namespace toric;

namespace {

struct Case {
    const char* fan;
    std::vector<long> divisor;
};

const std::vector<Case>& cases() {
    static const std::vector<Case> c{
        {"P2", {0, 0, -12}},
        {"P1xP1", {0, 0, -8, 6}},
        {"F2", {1, 2, -6, 3}},
        {"P3", {0, 0, 0, -7}},
    };
    return c;
}

TDivisor divisor_of(const Case& c) {
    IntVector a;
    for (long x : c.divisor) a.push_back(x);
    return TDivisor{a};
}

void BM_parallel(benchmark::State& state) {
    const Case& c = cases()[state.range(0)];
    const Fan fan = named_fan(c.fan);
    const TDivisor d = divisor_of(c);
    omp_set_num_threads(static_cast<int>(state.range(1)));
    CohomologyOptions options;
    options.want_graded = true;
    for (auto _ : state) benchmark::DoNotOptimize(cohomology(fan, d, options).dims);
    state.SetLabel(c.fan);
}

void BM_serial_reference(benchmark::State& state) {
    const Case& c = cases()[state.range(0)];
    const Fan fan = named_fan(c.fan);
    const TDivisor d = divisor_of(c);
    for (auto _ : state) benchmark::DoNotOptimize(cohomology_reference(fan, d, true).dims);
    state.SetLabel(c.fan);
}

}  // namespace

BENCHMARK(BM_parallel)->ArgsProduct({{0, 1, 2, 3}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_serial_reference)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
