#include "stocknn/network.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "stocknn/errors.hpp"
#include "stocknn/rng.hpp"

namespace stocknn::nn {

double sigmoid(double z) {
    // Split on the sign so the exp argument is always <= 0.
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

namespace {

double sigmoid_slope(double activation) { return activation * (1.0 - activation); }

void require_features(const NetworkParams& params, std::span<const double> features) {
    const NetworkShape shape = params.shape();
    if (features.size() != shape.input)
        throw DimensionMismatch("expected " + std::to_string(shape.input) + " features, got " +
                                std::to_string(features.size()));
    if (shape.output != 2)
        throw DimensionMismatch("decision network needs exactly 2 outputs, has " +
                                std::to_string(shape.output));
}

struct Activations {
    std::vector<double> hidden;
    double sell = 0.0;
    double buy = 0.0;
};

Activations run_forward(const NetworkParams& params, std::span<const double> features) {
    const NetworkShape shape = params.shape();
    Activations act;
    act.hidden.resize(shape.hidden);
    for (std::size_t j = 0; j < shape.hidden; ++j) {
        double z = params.b1[j];
        for (std::size_t i = 0; i < shape.input; ++i) z += params.w1(j, i) * features[i];
        act.hidden[j] = sigmoid(z);
    }
    double z_out[2] = {params.b2[0], params.b2[1]};
    for (std::size_t j = 0; j < shape.hidden; ++j) {
        z_out[0] += params.w2(0, j) * act.hidden[j];
        z_out[1] += params.w2(1, j) * act.hidden[j];
    }
    act.sell = sigmoid(z_out[0]);
    act.buy = sigmoid(z_out[1]);
    return act;
}

// Accumulates (does not overwrite) the gradients of one example into `into`.
void accumulate_gradients(const NetworkParams& params, std::span<const double> features, int label,
                          Gradients& into) {
    const NetworkShape shape = params.shape();
    const Activations act = run_forward(params, features);

    // quadratic loss against the one-hot target
    const double target_sell = label == 0 ? 1.0 : 0.0;
    const double target_buy = label == 0 ? 0.0 : 1.0;
    const double delta_out[2] = {(act.sell - target_sell) * sigmoid_slope(act.sell),
                                 (act.buy - target_buy) * sigmoid_slope(act.buy)};

    into.b2[0] += delta_out[0];
    into.b2[1] += delta_out[1];
    for (std::size_t j = 0; j < shape.hidden; ++j) {
        into.w2(0, j) += delta_out[0] * act.hidden[j];
        into.w2(1, j) += delta_out[1] * act.hidden[j];
        const double back = delta_out[0] * params.w2(0, j) + delta_out[1] * params.w2(1, j);
        const double delta_hidden = back * sigmoid_slope(act.hidden[j]);
        into.b1[j] += delta_hidden;
        for (std::size_t i = 0; i < shape.input; ++i) into.w1(j, i) += delta_hidden * features[i];
    }
}

Gradients zero_gradients(const NetworkShape& shape) {
    Gradients g;
    g.w1 = Matrix(shape.hidden, shape.input);
    g.b1.assign(shape.hidden, 0.0);
    g.w2 = Matrix(shape.output, shape.hidden);
    g.b2.assign(shape.output, 0.0);
    return g;
}

}  // namespace

NetworkParams init_network(const NetworkShape& shape, std::uint64_t seed) {
    if (shape.input == 0 || shape.hidden == 0 || shape.output == 0)
        throw ZeroDimension("network dimensions must all be positive");
    std::mt19937_64 gen(seed);
    NetworkParams params;
    params.w1 = Matrix(shape.hidden, shape.input);
    params.b1.assign(shape.hidden, 0.0);
    params.w2 = Matrix(shape.output, shape.hidden);
    params.b2.assign(shape.output, 0.0);
    // Draw order is part of the reproducibility contract: w1 row-major,
    // then w2 row-major.
    const double bound1 = 1.0 / std::sqrt(static_cast<double>(shape.input));
    for (auto& w : params.w1.data()) w = rng::uniform_symmetric(gen, bound1);
    const double bound2 = 1.0 / std::sqrt(static_cast<double>(shape.hidden));
    for (auto& w : params.w2.data()) w = rng::uniform_symmetric(gen, bound2);
    return params;
}

ForwardResult forward(const NetworkParams& params, std::span<const double> features) {
    require_features(params, features);
    Activations act = run_forward(params, features);
    ForwardResult result;
    result.rec = Recommendation{act.sell, act.buy};
    result.hidden = std::move(act.hidden);
    return result;
}

int decide(const Recommendation& rec) { return rec.sell > rec.buy ? 0 : 1; }

double quadratic_loss(const Recommendation& rec, int label) {
    const double target_sell = label == 0 ? 1.0 : 0.0;
    const double target_buy = label == 0 ? 0.0 : 1.0;
    const double ds = rec.sell - target_sell;
    const double db = rec.buy - target_buy;
    return 0.5 * (ds * ds + db * db);
}

Gradients backprop(const NetworkParams& params, std::span<const double> features, int label) {
    require_features(params, features);
    Gradients g = zero_gradients(params.shape());
    accumulate_gradients(params, features, label, g);
    return g;
}

NetworkParams train(NetworkParams params, std::span<const TrainingExample> train_set,
                    const TrainConfig& cfg) {
    if (train_set.empty()) throw EmptyTrainSet("training set is empty");
    if (cfg.learning_rate <= 0.0) throw std::invalid_argument("learning_rate must be positive");
    if (cfg.epochs == 0) throw std::invalid_argument("epochs must be at least 1");
    for (const auto& ex : train_set) require_features(params, ex.features);

    const NetworkShape shape = params.shape();
    const double scale = cfg.learning_rate / static_cast<double>(train_set.size());
    Gradients sum = zero_gradients(shape);
    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        std::fill(sum.w1.data().begin(), sum.w1.data().end(), 0.0);
        std::fill(sum.b1.begin(), sum.b1.end(), 0.0);
        std::fill(sum.w2.data().begin(), sum.w2.data().end(), 0.0);
        std::fill(sum.b2.begin(), sum.b2.end(), 0.0);
        for (const auto& ex : train_set) accumulate_gradients(params, ex.features, ex.label, sum);

        for (std::size_t i = 0; i < sum.w1.data().size(); ++i)
            params.w1.data()[i] -= scale * sum.w1.data()[i];
        for (std::size_t j = 0; j < shape.hidden; ++j) params.b1[j] -= scale * sum.b1[j];
        for (std::size_t i = 0; i < sum.w2.data().size(); ++i)
            params.w2.data()[i] -= scale * sum.w2.data()[i];
        for (std::size_t k = 0; k < shape.output; ++k) params.b2[k] -= scale * sum.b2[k];
    }
    return params;
}

}  // namespace stocknn::nn
