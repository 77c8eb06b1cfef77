#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "stocknn/dataset.hpp"
#include "stocknn/network.hpp"
#include "stocknn/prices.hpp"
#include "stocknn/rng.hpp"
#include "stocknn/stats.hpp"

using namespace stocknn;

namespace {

PriceSeries walk_series(std::size_t n_days, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<PriceDay> days;
    days.reserve(n_days);
    Date d{2016, 1, 4};
    double level = 100.0;
    for (std::size_t i = 0; i < n_days; ++i) {
        level *= 1.0 + rng::uniform_symmetric(gen, 0.03);
        days.push_back({d, level});
        d = next_day(d);
    }
    return PriceSeries("BENCH", std::move(days));
}

std::vector<nn::TrainingExample> training_set(std::size_t n_days) {
    const auto split = make_dataset(walk_series(n_days, 7), 10, HygieneMode::holdout);
    std::vector<nn::TrainingExample> set;
    for (const auto& ex : split.train) set.push_back({ex.features, ex.label});
    return set;
}

void BM_Forward(benchmark::State& state) {
    const nn::NetworkParams params = nn::init_network(nn::NetworkShape{10, 20, 2}, 1);
    std::vector<double> x(10, 0.5);
    for (auto _ : state) {
        auto result = nn::forward(params, x);
        benchmark::DoNotOptimize(result.rec.buy);
    }
}
BENCHMARK(BM_Forward);

void BM_Backprop(benchmark::State& state) {
    const nn::NetworkParams params = nn::init_network(nn::NetworkShape{10, 20, 2}, 1);
    std::vector<double> x(10, 0.5);
    for (auto _ : state) {
        auto grads = nn::backprop(params, x, 1);
        benchmark::DoNotOptimize(grads.b2[0]);
    }
}
BENCHMARK(BM_Backprop);

void BM_TrainEpochs(benchmark::State& state) {
    const auto set = training_set(250);  // ~one year of trading days
    const nn::NetworkParams init = nn::init_network(nn::NetworkShape{10, 20, 2}, 1);
    const auto epochs = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto trained = nn::train(init, set, nn::TrainConfig{0.5, epochs, 1});
        benchmark::DoNotOptimize(trained.b2[0]);
    }
}
BENCHMARK(BM_TrainEpochs)->Arg(10)->Arg(100)->Arg(1000);

void BM_ChunkAndLabel(benchmark::State& state) {
    const PriceSeries series = walk_series(250, 11);
    for (auto _ : state) {
        auto examples = label_chunks(chunk_series(series, 10));
        benchmark::DoNotOptimize(examples.size());
    }
}
BENCHMARK(BM_ChunkAndLabel);

void BM_ChiSquared(benchmark::State& state) {
    const std::vector<double> observed = {328.0, 57.0};
    const std::vector<double> expected = {192.5, 192.5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(chi_squared(observed, expected));
    }
}
BENCHMARK(BM_ChiSquared);

}  // namespace

BENCHMARK_MAIN();
