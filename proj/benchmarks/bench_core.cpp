#include <benchmark/benchmark.h>

#include <random>

#include <smtop/io.hpp>
#include <smtop/neighborhood.hpp>
#include <smtop/product.hpp>

using namespace smtop;

namespace {

const std::string kData = SMTOP_FIXTURES;

SMSpace load(const std::string& name) { return io::load_sm_space(kData + "/" + name + ".space"); }

void BM_Multiply(benchmark::State& state)
{
    const auto f = multiply(DistFn::ramp(3), DistFn::step(1));
    const auto g = DistFn::step(Rational(5, 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(multiply(f, g));
}
BENCHMARK(BM_Multiply);

void BM_MengerDiceSquared(benchmark::State& state)
{
    const auto d = load("dice");
    const auto p = product_space(d, d);
    const auto t = TNorm::product();
    for (auto _ : state)
        benchmark::DoNotOptimize(check_menger(p, t));
}
BENCHMARK(BM_MengerDiceSquared)->Unit(benchmark::kMillisecond);

void BM_SphereFamilyRamp(benchmark::State& state)
{
    const auto s = load("ramp");
    for (auto _ : state)
        for (PointId p = 0; p < s.size(); ++p)
            benchmark::DoNotOptimize(sphere_family(s, p));
}
BENCHMARK(BM_SphereFamilyRamp)->Unit(benchmark::kMicrosecond);

void BM_ClassifyRandom(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<NeighborhoodSystem> systems;
    for (int i = 0; i < 64; ++i)
        systems.push_back(random_system(rng, n, 4));
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(systems[i++ % systems.size()]));
}
BENCHMARK(BM_ClassifyRandom)->Arg(5)->Arg(10)->Arg(20);

void BM_BoxTheorems(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_box_theorems(100, 0));
}
BENCHMARK(BM_BoxTheorems)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
