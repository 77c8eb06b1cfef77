#pragma once

#include <cstdint>
#include <string>

#include "stocknn/network.hpp"

namespace stocknn::nn {

// Network parameters round-trip as a JSON document:
//   {"w1": [[...]], "b1": [...], "w2": [[...]], "b2": [...],
//    "shape": [input, hidden, output], "seed": N}
// Matrices are row-major lists of rows, values decimal floats.
struct ParamsDocument {
    NetworkParams params;
    std::uint64_t seed = 0;
};

std::string params_to_json(const NetworkParams& params, std::uint64_t seed);
ParamsDocument params_from_json(const std::string& text);

}  // namespace stocknn::nn
