#include "stocknn/trials.hpp"

#include <random>

#include "stocknn/errors.hpp"
#include "stocknn/rng.hpp"

namespace stocknn {

std::string_view to_string(Arm arm) {
    return arm == Arm::experimental ? "experimental" : "control";
}

TrialOutcome run_experimental_trial(const PriceSeries& series, const nn::TrainConfig& cfg,
                                    std::size_t chunk_len, HygieneMode hygiene,
                                    std::size_t hidden_size) {
    const DatasetSplit split = make_dataset(series, chunk_len, hygiene);

    std::vector<nn::TrainingExample> train_set;
    train_set.reserve(split.train.size());
    for (const auto& ex : split.train) train_set.push_back({ex.features, ex.label});

    // One fresh network per ticker; no weight sharing across tickers.
    nn::NetworkShape shape{chunk_len, hidden_size, 2};
    nn::NetworkParams params = nn::init_network(shape, cfg.seed);
    params = nn::train(std::move(params), train_set, cfg);

    TrialOutcome outcome;
    outcome.ticker = series.ticker();
    outcome.arm = Arm::experimental;
    outcome.decision = nn::decide(nn::forward(params, split.test_example.features).rec);
    outcome.truth = split.test_example.label;
    outcome.correct = outcome.decision == outcome.truth;
    return outcome;
}

TrialOutcome run_control_trial(const PriceSeries& series, std::uint64_t rng_seed,
                               std::size_t chunk_len) {
    // Ground truth comes from the same labeling path as the experimental
    // arm; only the decision differs.
    const DatasetSplit split = make_dataset(series, chunk_len, HygieneMode::holdout);

    std::mt19937_64 gen(rng_seed);
    TrialOutcome outcome;
    outcome.ticker = series.ticker();
    outcome.arm = Arm::control;
    outcome.decision = rng::coin(gen);
    outcome.truth = split.test_example.label;
    outcome.correct = outcome.decision == outcome.truth;
    return outcome;
}

ContingencyTable aggregate(const std::vector<TrialOutcome>& outcomes, Arm arm) {
    if (outcomes.empty()) throw EmptyOutcomes("no outcomes to aggregate");
    ContingencyTable table;
    table.arm = arm;
    for (const auto& outcome : outcomes) {
        if (outcome.arm != arm)
            throw MixedArms(outcome.ticker + ": expected arm " + std::string(to_string(arm)) +
                            ", got " + std::string(to_string(outcome.arm)));
        if (outcome.correct)
            ++table.n_correct;
        else
            ++table.n_incorrect;
    }
    table.expected_correct = static_cast<double>(table.total()) / 2.0;
    table.expected_incorrect = table.expected_correct;
    return table;
}

}  // namespace stocknn
