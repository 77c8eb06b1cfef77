#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stocknn/dataset.hpp"
#include "stocknn/network.hpp"
#include "stocknn/prices.hpp"

namespace stocknn {

enum class Arm {
    experimental,  // trained network decides
    control,       // seeded coin flip decides
};

std::string_view to_string(Arm arm);

// One ticker's scored decision: what the arm decided on the final test
// window versus what actually happened.
struct TrialOutcome {
    std::string ticker;
    Arm arm = Arm::experimental;
    int decision = 0;
    int truth = 0;
    bool correct = false;
};

// A ticker that failed a data precondition is recorded, not silently
// dropped: either holds an outcome or names the skip reason.
struct TrialRecord {
    std::string ticker;
    Arm arm = Arm::experimental;
    std::optional<TrialOutcome> outcome;
    std::string skip_reason;

    bool skipped() const { return !outcome.has_value(); }
};

// Observed correct/incorrect counts for one arm, next to the expected
// counts under the null hypothesis of random decisions (half each).
struct ContingencyTable {
    Arm arm = Arm::experimental;
    std::size_t n_correct = 0;
    std::size_t n_incorrect = 0;
    double expected_correct = 0.0;
    double expected_incorrect = 0.0;

    std::size_t total() const { return n_correct + n_incorrect; }
    double accuracy() const {
        return total() == 0 ? 0.0 : static_cast<double>(n_correct) / static_cast<double>(total());
    }
};

// Full experimental trial for one ticker: window and label the series,
// split per the hygiene mode, train a freshly initialized network on the
// train set, decide on the test features, and score against the test
// label. Deterministic given cfg.seed.
// Propagates SeriesTooShort / TooFewExamples.
TrialOutcome run_experimental_trial(const PriceSeries& series, const nn::TrainConfig& cfg,
                                    std::size_t chunk_len, HygieneMode hygiene,
                                    std::size_t hidden_size = 20);

// Matched control trial: same ground truth as the experimental arm for the
// same ticker and chunk length, but the decision is a seeded coin flip on a
// stream independent of the network's.
TrialOutcome run_control_trial(const PriceSeries& series, std::uint64_t rng_seed,
                               std::size_t chunk_len);

// Counts correct/incorrect outcomes for one arm. Throws EmptyOutcomes on an
// empty list and MixedArms if any outcome belongs to the other arm.
ContingencyTable aggregate(const std::vector<TrialOutcome>& outcomes, Arm arm);

}  // namespace stocknn
