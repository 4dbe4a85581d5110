#include "eval.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>

#include "pgm.hpp"
#include "textio.hpp"

namespace glyphrec {

EvalReport evaluate(const MlpModel& model, const std::vector<LabeledSample>& set) {
    if (set.empty()) fail(ErrorCode::InvalidArg, "evaluation set is empty");

    EvalReport report;
    report.n_out = model.n_out;
    report.confusion.assign(static_cast<std::size_t>(model.n_out) * model.n_out, 0);

    for (const LabeledSample& s : set) {
        if (s.class_id < 0 || s.class_id >= model.n_out)
            fail(ErrorCode::Dimension, "sample '" + s.id + "' has class " +
                                           std::to_string(s.class_id) +
                                           " outside the model's output range");
        int predicted = predict(model, s.features);
        report.total += 1;
        report.confusion[static_cast<std::size_t>(s.class_id) * model.n_out + predicted] += 1;
        if (predicted == s.class_id)
            report.correct += 1;
        else
            report.misclassified.push_back({s.id, s.class_id, predicted});
    }
    report.accuracy = static_cast<double>(report.correct) / static_cast<double>(report.total);
    std::sort(report.misclassified.begin(), report.misclassified.end(),
              [](const Misclassified& a, const Misclassified& b) { return a.id < b.id; });
    return report;
}

std::vector<std::string> export_misclassified(const EvalReport& report,
                                              const std::vector<LabeledSample>& corpus,
                                              const std::string& out_dir) {
    std::map<std::string, const LabeledSample*> by_id;
    for (const LabeledSample& s : corpus) by_id[s.id] = &s;

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) fail(ErrorCode::Io, out_dir + ": cannot create directory");

    std::vector<std::string> written;
    std::ostringstream index;
    index << "id,true,predicted\n";
    for (const Misclassified& m : report.misclassified) {
        auto it = by_id.find(m.id);
        if (it == by_id.end())
            fail(ErrorCode::Io, "misclassified sample '" + m.id + "' not found in corpus");

        std::string name = m.id;
        for (char& c : name)
            if (c == '/' || c == '\\' || c == ':') c = '_';
        std::string path = (std::filesystem::path(out_dir) / (name + ".pgm")).string();
        write_pgm(render_source(it->second->source), path);
        written.push_back(path);
        index << m.id << ',' << m.true_class << ',' << m.predicted << '\n';
    }

    std::string index_path = (std::filesystem::path(out_dir) / "misclassified.csv").string();
    write_text_file_atomic(index_path, index.str());
    written.push_back(index_path);
    return written;
}

} // namespace glyphrec
