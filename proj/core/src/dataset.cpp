#include "stocknn/dataset.hpp"

#include <algorithm>
#include <stdexcept>

#include "stocknn/errors.hpp"

namespace stocknn {

std::vector<Chunk> chunk_series(const PriceSeries& series, std::size_t chunk_len) {
    if (chunk_len == 0) throw std::invalid_argument("chunk_series: chunk_len must be positive");
    const std::size_t n_days = series.size();
    if (n_days < 2 * chunk_len)
        throw SeriesTooShort(series.ticker() + ": " + std::to_string(n_days) + " days < " +
                             std::to_string(2 * chunk_len) +
                             " needed for two windows of " + std::to_string(chunk_len));
    const std::size_t n_chunks = n_days / chunk_len;
    const std::size_t start = n_days - n_chunks * chunk_len;  // oldest leftovers dropped

    std::vector<Chunk> chunks;
    chunks.reserve(n_chunks);
    const auto& days = series.days();
    for (std::size_t k = 0; k < n_chunks; ++k) {
        Chunk chunk;
        chunk.index = k + 1;
        chunk.highs.reserve(chunk_len);
        for (std::size_t i = 0; i < chunk_len; ++i)
            chunk.highs.push_back(days[start + k * chunk_len + i].high);
        chunks.push_back(std::move(chunk));
    }
    return chunks;
}

std::vector<LabeledExample> label_chunks(const std::vector<Chunk>& chunks) {
    if (chunks.size() < 2) throw std::invalid_argument("label_chunks: need at least 2 chunks");
    std::vector<LabeledExample> examples;
    examples.reserve(chunks.size() - 1);
    double next_max = *std::max_element(chunks[0].highs.begin(), chunks[0].highs.end());
    for (std::size_t k = 0; k + 1 < chunks.size(); ++k) {
        const double cur_max = next_max;
        next_max = *std::max_element(chunks[k + 1].highs.begin(), chunks[k + 1].highs.end());
        LabeledExample ex;
        ex.raw_chunk = chunks[k];
        ex.features = normalize_chunk(chunks[k]);
        ex.label = next_max > cur_max ? 1 : 0;  // strict: a tie is not a rise
        examples.push_back(std::move(ex));
    }
    return examples;
}

std::vector<double> normalize_chunk(const Chunk& chunk) {
    if (chunk.highs.empty()) throw std::invalid_argument("normalize_chunk: empty chunk");
    const auto [lo_it, hi_it] = std::minmax_element(chunk.highs.begin(), chunk.highs.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    std::vector<double> features(chunk.highs.size());
    if (hi == lo) {
        std::fill(features.begin(), features.end(), 0.5);
        return features;
    }
    const double range = hi - lo;
    for (std::size_t i = 0; i < features.size(); ++i) features[i] = (chunk.highs[i] - lo) / range;
    return features;
}

DatasetSplit split_train_test(const std::vector<LabeledExample>& examples, HygieneMode mode) {
    if (examples.size() < 2)
        throw TooFewExamples("need at least 2 labeled examples, got " +
                             std::to_string(examples.size()));
    DatasetSplit split;
    split.mode = mode;
    split.test_example = examples.back();
    if (mode == HygieneMode::paper_faithful) {
        split.train = examples;  // test example included, leak and all
    } else {
        split.train.assign(examples.begin(), examples.end() - 1);
    }
    return split;
}

DatasetSplit make_dataset(const PriceSeries& series, std::size_t chunk_len, HygieneMode mode) {
    return split_train_test(label_chunks(chunk_series(series, chunk_len)), mode);
}

}  // namespace stocknn
