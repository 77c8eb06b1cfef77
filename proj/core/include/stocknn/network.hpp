#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace stocknn::nn {

struct NetworkShape {
    std::size_t input = 10;
    std::size_t hidden = 20;
    std::size_t output = 2;
};

// Minimal row-major matrix; all shapes here are tiny.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Weights and biases of the single-hidden-layer network; sigmoid activation
// on both layers.
struct NetworkParams {
    Matrix w1;               // hidden x input
    std::vector<double> b1;  // hidden
    Matrix w2;               // output x hidden
    std::vector<double> b2;  // output

    NetworkShape shape() const {
        return NetworkShape{w1.cols(), w1.rows(), w2.rows()};
    }

    bool operator==(const NetworkParams&) const = default;
};

// Output pair of the network: sell strength and buy strength, both in
// (0, 1) because the output layer is sigmoid.
struct Recommendation {
    double sell = 0.0;
    double buy = 0.0;
};

struct TrainConfig {
    double learning_rate = 0.5;
    std::size_t epochs = 1000;
    std::uint64_t seed = 0;
};

// One training pair for the network: normalized feature window plus its
// binary buy/sell label.
struct TrainingExample {
    std::vector<double> features;
    int label = 0;
};

// Forward outputs plus the hidden activations backpropagation needs.
struct ForwardResult {
    Recommendation rec;
    std::vector<double> hidden;
};

// Partial derivatives of the loss, same shapes as NetworkParams.
struct Gradients {
    Matrix w1;
    std::vector<double> b1;
    Matrix w2;
    std::vector<double> b2;
};

// Numerically stable logistic function; returns a value in (0, 1) for any
// finite input, without overflow for large |z|.
double sigmoid(double z);

// Seeded initialization: weights i.i.d. uniform in [-1/sqrt(fan_in),
// +1/sqrt(fan_in)], biases zero. Identical seeds give bit-identical
// parameters. Throws ZeroDimension if any dimension is zero.
NetworkParams init_network(const NetworkShape& shape, std::uint64_t seed);

// hidden = sigmoid(w1 x + b1), output = sigmoid(w2 hidden + b2).
// Throws DimensionMismatch unless features.size() == input size and the
// network has exactly two outputs.
ForwardResult forward(const NetworkParams& params, std::span<const double> features);

// Buy/sell decision: 0 (sell) when sell strength strictly exceeds buy
// strength, else 1 (buy). Ties go to buy.
int decide(const Recommendation& rec);

// Quadratic loss 0.5 * ||output - target||^2 against the one-hot target
// (1,0) for label 0 and (0,1) for label 1.
double quadratic_loss(const Recommendation& rec, int label);

// Exact analytic gradients of the quadratic loss with respect to every
// weight and bias, via the cached forward activations and the sigmoid
// derivative f * (1 - f).
Gradients backprop(const NetworkParams& params, std::span<const double> features, int label);

// Full-batch gradient descent: cfg.epochs updates of
// params <- params - learning_rate * mean gradient over the training set.
// Deterministic given (params, example order, cfg). Throws EmptyTrainSet.
NetworkParams train(NetworkParams params, std::span<const TrainingExample> train_set,
                    const TrainConfig& cfg);

}  // namespace stocknn::nn
