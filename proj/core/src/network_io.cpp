#include "stocknn/network_io.hpp"

#include <json.hpp>

#include "stocknn/errors.hpp"

namespace stocknn::nn {

namespace {

using nlohmann::json;

json matrix_to_rows(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix rows_to_matrix(const json& rows, std::size_t want_rows, std::size_t want_cols,
                      const char* name) {
    if (!rows.is_array() || rows.size() != want_rows)
        throw Error(std::string(name) + ": expected " + std::to_string(want_rows) + " rows");
    Matrix m(want_rows, want_cols);
    for (std::size_t r = 0; r < want_rows; ++r) {
        const auto& row = rows.at(r);
        if (!row.is_array() || row.size() != want_cols)
            throw Error(std::string(name) + ": row " + std::to_string(r) + " has wrong width");
        for (std::size_t c = 0; c < want_cols; ++c) m(r, c) = row.at(c).get<double>();
    }
    return m;
}

std::vector<double> to_vector(const json& arr, std::size_t want, const char* name) {
    if (!arr.is_array() || arr.size() != want)
        throw Error(std::string(name) + ": expected " + std::to_string(want) + " entries");
    return arr.get<std::vector<double>>();
}

}  // namespace

std::string params_to_json(const NetworkParams& params, std::uint64_t seed) {
    const NetworkShape shape = params.shape();
    json doc;
    doc["w1"] = matrix_to_rows(params.w1);
    doc["b1"] = params.b1;
    doc["w2"] = matrix_to_rows(params.w2);
    doc["b2"] = params.b2;
    doc["shape"] = {shape.input, shape.hidden, shape.output};
    doc["seed"] = seed;
    return doc.dump();
}

ParamsDocument params_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("params document is not valid JSON: ") + e.what());
    }
    try {
        const auto shape_arr = doc.at("shape");
        if (!shape_arr.is_array() || shape_arr.size() != 3)
            throw Error("params document: shape must be [input, hidden, output]");
        const NetworkShape shape{shape_arr.at(0).get<std::size_t>(),
                                 shape_arr.at(1).get<std::size_t>(),
                                 shape_arr.at(2).get<std::size_t>()};
        if (shape.input == 0 || shape.hidden == 0 || shape.output == 0)
            throw ZeroDimension("params document: zero dimension in shape");

        ParamsDocument out;
        out.params.w1 = rows_to_matrix(doc.at("w1"), shape.hidden, shape.input, "w1");
        out.params.b1 = to_vector(doc.at("b1"), shape.hidden, "b1");
        out.params.w2 = rows_to_matrix(doc.at("w2"), shape.output, shape.hidden, "w2");
        out.params.b2 = to_vector(doc.at("b2"), shape.output, "b2");
        out.seed = doc.at("seed").get<std::uint64_t>();
        return out;
    } catch (const json::exception& e) {
        throw Error(std::string("params document missing or mistyped field: ") + e.what());
    }
}

}  // namespace stocknn::nn
