#ifndef GLYPHREC_EVAL_HPP
#define GLYPHREC_EVAL_HPP

#include <string>
#include <vector>

#include "dataset.hpp"
#include "mlp.hpp"

namespace glyphrec {

struct Misclassified {
    std::string id;
    int true_class;
    int predicted;
};

// confusion[true * n_out + predicted]; trace == correct, total sum == total.
struct EvalReport {
    long total = 0;
    long correct = 0;
    double accuracy = 0.0;
    int n_out = 0;
    std::vector<long> confusion;
    std::vector<Misclassified> misclassified; // ordered by sample id
};

EvalReport evaluate(const MlpModel& model, const std::vector<LabeledSample>& set);

// Writes each misclassified sample's canonical 64x64 PGM plus an index CSV
// `id,true,predicted` into out_dir. Returns the written paths.
std::vector<std::string> export_misclassified(const EvalReport& report,
                                              const std::vector<LabeledSample>& corpus,
                                              const std::string& out_dir);

} // namespace glyphrec

#endif
