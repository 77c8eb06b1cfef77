#pragma once

#include <cstddef>
#include <vector>

#include "stocknn/prices.hpp"

namespace stocknn {

// One fixed-length window of daily highs, oldest first. Windows are
// consecutive and non-overlapping; the last window always ends at the most
// recent available day.
struct Chunk {
    std::size_t index = 0;  // 1-based window ordinal
    std::vector<double> highs;
};

// A window's normalized features paired with its look-ahead label:
// label = 1 exactly when the next window's maximum high strictly exceeds
// this window's maximum high.
struct LabeledExample {
    std::vector<double> features;  // each component in [0, 1]
    Chunk raw_chunk;
    int label = 0;
};

enum class HygieneMode {
    // Train on all n-1 examples and test on the last of them; the test
    // example is inside the training set. Replicates the original study's
    // construction, leak included.
    paper_faithful,
    // Train on examples 1..n-2, test on example n-1; disjoint.
    holdout,
};

struct DatasetSplit {
    std::vector<LabeledExample> train;
    LabeledExample test_example;
    HygieneMode mode = HygieneMode::holdout;
};

// Windows the series into floor(len / chunk_len) chunks. When the length is
// not an exact multiple, the oldest leftover days are discarded so the last
// chunk ends at the most recent day. Requires at least 2 * chunk_len days;
// throws SeriesTooShort otherwise.
std::vector<Chunk> chunk_series(const PriceSeries& series, std::size_t chunk_len);

// Pairs chunk k with the label derived from chunks k and k+1 (strict max
// comparison; a tie labels 0). Produces n-1 examples from n chunks.
std::vector<LabeledExample> label_chunks(const std::vector<Chunk>& chunks);

// Min-max scales the chunk's highs into [0, 1]. A flat window (max == min)
// maps to all 0.5.
std::vector<double> normalize_chunk(const Chunk& chunk);

// Splits labeled examples per the hygiene mode. Requires >= 2 examples;
// throws TooFewExamples.
DatasetSplit split_train_test(const std::vector<LabeledExample>& examples, HygieneMode mode);

// Convenience pipeline: chunk, label, split.
DatasetSplit make_dataset(const PriceSeries& series, std::size_t chunk_len, HygieneMode mode);

}  // namespace stocknn
