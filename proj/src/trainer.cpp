#include "trainer.hpp"

#include <algorithm>

#include "rng.hpp"

namespace glyphrec {
namespace {

void check_samples(const std::vector<LabeledSample>& set, const char* name) {
    for (const LabeledSample& s : set)
        if (s.class_id < 0 || s.class_id >= kClassCount)
            fail(ErrorCode::Dimension, std::string(name) + " sample '" + s.id +
                                           "' has class " + std::to_string(s.class_id));
}

double accuracy(const MlpModel& model, const std::vector<LabeledSample>& set) {
    if (set.empty()) return 0.0;
    long correct = 0;
    for (const LabeledSample& s : set)
        if (predict(model, s.features) == s.class_id) ++correct;
    return static_cast<double>(correct) / static_cast<double>(set.size());
}

} // namespace

std::pair<MlpModel, TrainHistory> train(const std::vector<LabeledSample>& trainset,
                                        const std::vector<LabeledSample>& testset,
                                        const TrainConfig& config,
                                        const EpochObserver& observer) {
    if (trainset.empty()) fail(ErrorCode::InvalidArg, "training set is empty");
    if (!(config.eta > 0.0)) fail(ErrorCode::InvalidArg, "eta must be positive");
    if (!(config.alpha >= 0.0 && config.alpha < 1.0))
        fail(ErrorCode::InvalidArg, "alpha must lie in [0,1)");
    if (config.epochs < 1) fail(ErrorCode::InvalidArg, "epochs must be at least 1");
    if (config.n_hidden < 1) fail(ErrorCode::InvalidArg, "hidden size must be at least 1");
    check_samples(trainset, "train");
    check_samples(testset, "test");

    MlpModel model = init_weights(kFeatureCount, config.n_hidden, kClassCount, config.seed);
    RngEngine shuffle_rng(config.seed + 1);

    std::vector<TrainTarget> targets;
    targets.reserve(trainset.size());
    for (const LabeledSample& s : trainset)
        targets.push_back(TrainTarget::one_hot(s.class_id, kClassCount));

    std::vector<std::size_t> order(trainset.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    TrainHistory history;
    history.epochs.reserve(config.epochs);

    for (int epoch = 1; epoch <= config.epochs; ++epoch) {
        if (config.shuffle_each_epoch) shuffle_fisher_yates(order, shuffle_rng);
        for (std::size_t idx : order)
            backprop_step(model, trainset[idx].features, targets[idx], config.eta,
                          config.alpha);

        double sse = 0.0;
        long correct = 0;
        for (std::size_t i = 0; i < trainset.size(); ++i) {
            ForwardResult fwd = forward(model, trainset[i].features);
            sse += sse_loss(fwd.output, targets[i]);
            int best = 0;
            for (int k = 1; k < model.n_out; ++k)
                if (fwd.output[k] > fwd.output[best]) best = k;
            if (best == trainset[i].class_id) ++correct;
        }

        EpochRecord rec;
        rec.epoch = epoch;
        rec.train_sse = sse / static_cast<double>(trainset.size());
        rec.train_acc = static_cast<double>(correct) / static_cast<double>(trainset.size());
        rec.test_acc = accuracy(model, testset);
        history.epochs.push_back(rec);
        if (observer) observer(rec);
    }
    return {std::move(model), std::move(history)};
}

SweepResult sweep(const std::vector<LabeledSample>& trainset,
                  const std::vector<LabeledSample>& testset,
                  const std::vector<int>& hidden_sizes, const TrainConfig& base,
                  const SweepObserver& observer) {
    if (hidden_sizes.empty()) fail(ErrorCode::InvalidArg, "hidden size list is empty");
    for (int size : hidden_sizes)
        if (size < 1) fail(ErrorCode::InvalidArg, "hidden size must be at least 1");

    std::vector<int> sizes = hidden_sizes;
    std::sort(sizes.begin(), sizes.end());

    SweepResult result;
    result.rows.reserve(sizes.size());
    for (int size : sizes) {
        TrainConfig config = base;
        config.n_hidden = size;
        config.seed = base.seed + static_cast<std::uint64_t>(size);
        auto [model, history] = train(trainset, testset, config);
        const EpochRecord& last = history.epochs.back();
        SweepRow row{size, last.train_acc, last.test_acc};
        result.rows.push_back(row);
        if (observer) observer(row);
    }

    result.chosen = result.rows[0].n_hidden;
    double best = result.rows[0].test_acc;
    for (const SweepRow& row : result.rows)
        if (row.test_acc > best) { // strict: ties keep the smaller size
            best = row.test_acc;
            result.chosen = row.n_hidden;
        }
    return result;
}

} // namespace glyphrec
