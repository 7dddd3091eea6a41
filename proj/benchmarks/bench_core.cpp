#include <numeric>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "losnlos/calibration.hpp"
#include "losnlos/propagation.hpp"
#include "losnlos/simcore.hpp"

using namespace losnlos;

namespace {

Scenario scenario(double density)
{
    Scenario s;
    s.layout = {LayoutKind::square_grid, density};
    s.users = UserRule{1000, 10, 1000};
    return s;
}

}  // namespace

static void BM_DrawGain(benchmark::State& state)
{
    LinkSampler sampler(CombinedLosNlosModel{}, ChannelSpec{}, 1, 2);
    double d = 0.001;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(sampler.draw_gain(d));
        d = d < 0.7 ? d * 1.001 : 0.001;
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_DrawGain);

static void BM_SimulateLinks(benchmark::State& state)
{
    auto const s = scenario(static_cast<double>(state.range(0)));
    std::uint64_t seed = 0;
    std::size_t links = 0;
    for (auto _ : state)
    {
        auto l = simulate_links(s, ++seed);
        links += l.n_bs() * l.n_users();
        benchmark::DoNotOptimize(l.serving.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(links));
}
BENCHMARK(BM_SimulateLinks)->Arg(100)->Arg(800)->Unit(benchmark::kMillisecond);

static void BM_Quantile(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    std::normal_distribution<double> n(0, 10);
    std::vector<double> v(static_cast<std::size_t>(state.range(0)));
    for (auto& x : v)
        x = n(rng);
    for (auto _ : state)
    {
        EmpiricalCdf cdf(v);
        benchmark::DoNotOptimize(cdf.quantile(0.8));
    }
}
BENCHMARK(BM_Quantile)->Arg(50000)->Arg(100000);

static void BM_Calibrate(benchmark::State& state)
{
    std::vector<std::uint64_t> seeds(10);
    std::iota(seeds.begin(), seeds.end(), 1);
    auto const batch = simulate_batch(scenario(400), seeds);
    NoiseSpec noise;
    CalibrationCriterion crit;
    for (auto _ : state)
        benchmark::DoNotOptimize(calibrate_ptx(batch, noise, crit).ptx_w);
}
BENCHMARK(BM_Calibrate)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
