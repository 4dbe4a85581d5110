#ifndef GLYPHREC_MLP_HPP
#define GLYPHREC_MLP_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace glyphrec {

// One-hidden-layer sigmoid MLP. Weight rows carry the bias in the last
// column, fed by an input clamped to 1. d1/d2 hold the previous update of
// every weight (the momentum state) and start zeroed.
struct MlpModel {
    int n_in = 0;
    int n_hidden = 0;
    int n_out = 0;
    std::vector<double> w1; // n_hidden x (n_in + 1), row-major
    std::vector<double> w2; // n_out x (n_hidden + 1), row-major
    std::vector<double> d1;
    std::vector<double> d2;
    // Comment lines captured from / emitted to the model file header.
    std::vector<std::string> header_comments;
};

// 1-out-of-m target: vector with a single 1 at class_id.
struct TrainTarget {
    int class_id = 0;
    std::vector<double> vector;

    static TrainTarget one_hot(int class_id, int n_out);
};

double sigmoid(double x);

struct ForwardResult {
    std::vector<double> hidden;
    std::vector<double> output;
};

// hidden_j = sigmoid(sum_i w1[j,i]*x_i + bias); output likewise from hidden.
// Sums accumulate index-ascending, bias added last (pinned order).
ForwardResult forward(const MlpModel& model, std::span<const double> x);

// Sum of squared errors, no 1/2 factor.
double sse_loss(std::span<const double> output, const TrainTarget& target);

// Gradients of the per-sample SSE with respect to every weight and bias.
struct Gradients {
    std::vector<double> g1;
    std::vector<double> g2;
};
Gradients backprop_gradients(const MlpModel& model, std::span<const double> x,
                             const TrainTarget& target);

// One online update: delta = -eta*grad + alpha*prev_delta (that exact
// expression), applied to every weight and stored back into d1/d2.
void backprop_step(MlpModel& model, std::span<const double> x,
                   const TrainTarget& target, double eta, double alpha);

// Argmax over output activations, ties to the lowest class index.
int predict(const MlpModel& model, std::span<const double> x);

// Weights and biases i.i.d. uniform on [-0.5, 0.5) from a seeded engine,
// drawn w1 row-major then w2 row-major. d1/d2 zeroed.
MlpModel init_weights(int n_in, int n_hidden, int n_out, std::uint64_t seed);

} // namespace glyphrec

#endif
