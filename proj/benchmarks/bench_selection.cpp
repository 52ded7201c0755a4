// SPDX-License-Identifier: Apache-2.0

#include <numbers>

#include <benchmark/benchmark.h>

#include "aoasel/expected_selector.hpp"
#include "aoasel/realtime_selector.hpp"
#include "aoasel/signal_lab.hpp"

using namespace aoasel;
using std::numbers::pi;

namespace {

void bm_crlb_theta(benchmark::State& state)
{
    const auto g = ArrayGeometry::make(6, 0.5);
    const auto p = SystemParams::make(1.0, 1.0, pi / 2.0, g.beta);
    const auto s = select_expected(g, 13);
    double theta = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(crlb_theta(s, theta, p));
        theta += 1e-3;
    }
}
BENCHMARK(bm_crlb_theta);

void bm_greedy(benchmark::State& state)
{
    const auto g = ArrayGeometry::make(6, 0.5);
    const auto p = SystemParams::make(1.0, 1.0, pi / 2.0, g.beta);
    const bool half = state.range(0) != 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(greedy_select(g, 0.35, 13, p, half));
}
BENCHMARK(bm_greedy)->Arg(0)->Arg(1);

void bm_start_set(benchmark::State& state)
{
    const auto g = ArrayGeometry::make(6, 0.5);
    double theta = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimal_start_set(g, theta));
        theta += 1e-3;
    }
}
BENCHMARK(bm_start_set);

void bm_ml_estimate(benchmark::State& state)
{
    const auto g = ArrayGeometry::make(6, 0.5);
    ChannelTruth truth;
    truth.theta = 0.5;
    truth.phi = 1.0;
    truth.pilot_power = 10.0;
    const auto batch = simulate_snapshots(g, truth, 16, 1);
    const auto set = select_expected(g, 13);
    for (auto _ : state)
        benchmark::DoNotOptimize(ml_estimate_refined(g, batch, set));
}
BENCHMARK(bm_ml_estimate);

} // namespace

BENCHMARK_MAIN();
