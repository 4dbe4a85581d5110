#ifndef GLYPHREC_TRAINER_HPP
#define GLYPHREC_TRAINER_HPP

#include <functional>
#include <utility>
#include <vector>

#include "dataset.hpp"
#include "mlp.hpp"

namespace glyphrec {

struct TrainConfig {
    double eta = 0.8;
    double alpha = 0.7;
    int epochs = 500;
    int n_hidden = 60;
    std::uint64_t seed = 1;
    bool shuffle_each_epoch = true;
};

struct EpochRecord {
    int epoch; // 1-based
    double train_sse;
    double train_acc;
    double test_acc;
};

struct TrainHistory {
    std::vector<EpochRecord> epochs;
};

using EpochObserver = std::function<void(const EpochRecord&)>;

// Online momentum backprop. Weights come from init_weights(config.seed); the
// per-epoch Fisher-Yates shuffle consumes a separate mt19937_64 stream seeded
// with config.seed + 1.  Metrics are recorded after each epoch, over both
// sets in their stored order; an empty test set records test_acc = 0.
// Deterministic: identical inputs and config reproduce the model bit for bit.
std::pair<MlpModel, TrainHistory> train(const std::vector<LabeledSample>& trainset,
                                        const std::vector<LabeledSample>& testset,
                                        const TrainConfig& config,
                                        const EpochObserver& observer = {});

struct SweepRow {
    int n_hidden;
    double train_acc;
    double test_acc;
};

struct SweepResult {
    std::vector<SweepRow> rows; // ascending by hidden size
    int chosen;                 // argmax test accuracy, ties to the smaller size
};

using SweepObserver = std::function<void(const SweepRow&)>;

inline const std::vector<int> kDefaultSweepSizes = {35, 40, 45, 50, 55, 60, 65, 70, 75};

// One training run per hidden size, each independently initialized with
// seed = base.seed + size.
SweepResult sweep(const std::vector<LabeledSample>& trainset,
                  const std::vector<LabeledSample>& testset,
                  const std::vector<int>& hidden_sizes, const TrainConfig& base,
                  const SweepObserver& observer = {});

} // namespace glyphrec

#endif
