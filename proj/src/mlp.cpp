#include "mlp.hpp"

#include <cmath>

#include "rng.hpp"

namespace glyphrec {
namespace {

void check_input_size(const MlpModel& model, std::span<const double> x) {
    if (static_cast<int>(x.size()) != model.n_in)
        fail(ErrorCode::Dimension, "input has " + std::to_string(x.size()) +
                                       " values, model expects " +
                                       std::to_string(model.n_in));
}

} // namespace

TrainTarget TrainTarget::one_hot(int class_id, int n_out) {
    if (class_id < 0 || class_id >= n_out)
        fail(ErrorCode::LabelRange, "class " + std::to_string(class_id) +
                                        " outside 0.." + std::to_string(n_out - 1));
    TrainTarget t;
    t.class_id = class_id;
    t.vector.assign(n_out, 0.0);
    t.vector[class_id] = 1.0;
    return t;
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

ForwardResult forward(const MlpModel& model, std::span<const double> x) {
    check_input_size(model, x);
    ForwardResult r;
    r.hidden.resize(model.n_hidden);
    r.output.resize(model.n_out);

    int in_stride = model.n_in + 1;
    for (int j = 0; j < model.n_hidden; ++j) {
        const double* row = &model.w1[static_cast<std::size_t>(j) * in_stride];
        double net = 0.0;
        for (int i = 0; i < model.n_in; ++i) net += row[i] * x[i];
        net += row[model.n_in]; // bias
        r.hidden[j] = sigmoid(net);
    }

    int hid_stride = model.n_hidden + 1;
    for (int k = 0; k < model.n_out; ++k) {
        const double* row = &model.w2[static_cast<std::size_t>(k) * hid_stride];
        double net = 0.0;
        for (int j = 0; j < model.n_hidden; ++j) net += row[j] * r.hidden[j];
        net += row[model.n_hidden];
        r.output[k] = sigmoid(net);
    }
    return r;
}

double sse_loss(std::span<const double> output, const TrainTarget& target) {
    if (output.size() != target.vector.size())
        fail(ErrorCode::Dimension, "output and target lengths differ");
    double sum = 0.0;
    for (std::size_t k = 0; k < output.size(); ++k) {
        double e = target.vector[k] - output[k];
        sum += e * e;
    }
    return sum;
}

Gradients backprop_gradients(const MlpModel& model, std::span<const double> x,
                             const TrainTarget& target) {
    check_input_size(model, x);
    if (static_cast<int>(target.vector.size()) != model.n_out)
        fail(ErrorCode::Dimension, "target length does not match model outputs");

    ForwardResult fwd = forward(model, x);

    Gradients g;
    g.g1.assign(model.w1.size(), 0.0);
    g.g2.assign(model.w2.size(), 0.0);

    // Output layer: dE/dnet_k = 2*(o_k - t_k) * o_k*(1 - o_k).
    std::vector<double> delta_out(model.n_out);
    for (int k = 0; k < model.n_out; ++k) {
        double o = fwd.output[k];
        delta_out[k] = 2.0 * (o - target.vector[k]) * o * (1.0 - o);
    }

    int hid_stride = model.n_hidden + 1;
    for (int k = 0; k < model.n_out; ++k) {
        double* grow = &g.g2[static_cast<std::size_t>(k) * hid_stride];
        for (int j = 0; j < model.n_hidden; ++j) grow[j] = delta_out[k] * fwd.hidden[j];
        grow[model.n_hidden] = delta_out[k];
    }

    // Hidden layer, back through the pre-update w2.
    int in_stride = model.n_in + 1;
    for (int j = 0; j < model.n_hidden; ++j) {
        double back = 0.0;
        for (int k = 0; k < model.n_out; ++k)
            back += delta_out[k] * model.w2[static_cast<std::size_t>(k) * hid_stride + j];
        double h = fwd.hidden[j];
        double delta_hid = back * h * (1.0 - h);
        double* grow = &g.g1[static_cast<std::size_t>(j) * in_stride];
        for (int i = 0; i < model.n_in; ++i) grow[i] = delta_hid * x[i];
        grow[model.n_in] = delta_hid;
    }
    return g;
}

void backprop_step(MlpModel& model, std::span<const double> x,
                   const TrainTarget& target, double eta, double alpha) {
    Gradients g = backprop_gradients(model, x, target);
    for (std::size_t i = 0; i < model.w1.size(); ++i) {
        double step = -eta * g.g1[i] + alpha * model.d1[i];
        model.w1[i] += step;
        model.d1[i] = step;
    }
    for (std::size_t i = 0; i < model.w2.size(); ++i) {
        double step = -eta * g.g2[i] + alpha * model.d2[i];
        model.w2[i] += step;
        model.d2[i] = step;
    }
}

int predict(const MlpModel& model, std::span<const double> x) {
    ForwardResult fwd = forward(model, x);
    int best = 0;
    for (int k = 1; k < model.n_out; ++k)
        if (fwd.output[k] > fwd.output[best]) best = k;
    return best;
}

MlpModel init_weights(int n_in, int n_hidden, int n_out, std::uint64_t seed) {
    if (n_in < 1 || n_hidden < 1 || n_out < 1)
        fail(ErrorCode::InvalidArg, "layer sizes must be at least 1");
    MlpModel m;
    m.n_in = n_in;
    m.n_hidden = n_hidden;
    m.n_out = n_out;
    m.w1.resize(static_cast<std::size_t>(n_hidden) * (n_in + 1));
    m.w2.resize(static_cast<std::size_t>(n_out) * (n_hidden + 1));
    m.d1.assign(m.w1.size(), 0.0);
    m.d2.assign(m.w2.size(), 0.0);

    RngEngine eng(seed);
    for (double& w : m.w1) w = uniform_unit(eng) - 0.5;
    for (double& w : m.w2) w = uniform_unit(eng) - 0.5;
    return m;
}

} // namespace glyphrec
