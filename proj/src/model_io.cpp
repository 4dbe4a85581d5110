#include "model_io.hpp"

#include <cstdlib>
#include <sstream>

#include "textio.hpp"

namespace glyphrec {
namespace {

constexpr const char* kMagic = "MLP-TEXT v1";

[[noreturn]] void corrupt(const std::string& path, int line, const std::string& why) {
    fail(ErrorCode::CorruptModel, path + ":" + std::to_string(line) + ": " + why);
}

// Splits the raw text into lines; no trailing-newline entry.
std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

void parse_row(const std::string& line, int lineno, const std::string& path,
               double* out, int expected) {
    const char* p = line.c_str();
    for (int i = 0; i < expected; ++i) {
        char* end = nullptr;
        double v = std::strtod(p, &end);
        if (end == p)
            corrupt(path, lineno, "expected " + std::to_string(expected) +
                                      " values, found " + std::to_string(i));
        out[i] = v;
        p = end;
    }
    while (*p == ' ' || *p == '\t' || *p == '\r') ++p;
    if (*p != '\0') corrupt(path, lineno, "trailing data after row values");
}

} // namespace

void save_model(const MlpModel& model, const std::string& path) {
    std::ostringstream out;
    for (const std::string& c : model.header_comments) out << '#' << c << '\n';
    out << kMagic << '\n';
    out << model.n_in << ' ' << model.n_hidden << ' ' << model.n_out << '\n';

    auto emit = [&](const std::vector<double>& mat, int rows, int cols) {
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                if (c) out << ' ';
                out << format_double(mat[static_cast<std::size_t>(r) * cols + c], 17);
            }
            out << '\n';
        }
    };
    emit(model.w1, model.n_hidden, model.n_in + 1);
    emit(model.w2, model.n_out, model.n_hidden + 1);
    emit(model.d1, model.n_hidden, model.n_in + 1);
    emit(model.d2, model.n_out, model.n_hidden + 1);

    write_text_file_atomic(path, out.str());
}

MlpModel load_model(const std::string& path) {
    std::vector<std::string> lines = split_lines(read_text_file(path));

    MlpModel model;
    std::size_t i = 0;
    while (i < lines.size() && !lines[i].empty() && lines[i][0] == '#')
        model.header_comments.push_back(lines[i++].substr(1));

    if (i >= lines.size() || lines[i] != kMagic)
        corrupt(path, static_cast<int>(i + 1), std::string("expected magic '") + kMagic + "'");
    ++i;

    if (i >= lines.size()) corrupt(path, static_cast<int>(i + 1), "missing layer sizes");
    {
        std::istringstream hdr(lines[i]);
        std::string extra;
        if (!(hdr >> model.n_in >> model.n_hidden >> model.n_out) || (hdr >> extra))
            corrupt(path, static_cast<int>(i + 1), "bad layer-size line '" + lines[i] + "'");
        if (model.n_in < 1 || model.n_hidden < 1 || model.n_out < 1)
            corrupt(path, static_cast<int>(i + 1), "layer sizes must be positive");
    }
    ++i;

    auto read_matrix = [&](std::vector<double>& mat, int rows, int cols, const char* name) {
        mat.resize(static_cast<std::size_t>(rows) * cols);
        for (int r = 0; r < rows; ++r, ++i) {
            if (i >= lines.size())
                corrupt(path, static_cast<int>(i + 1),
                        std::string("truncated file: missing ") + name + " row " +
                            std::to_string(r));
            parse_row(lines[i], static_cast<int>(i + 1), path,
                      &mat[static_cast<std::size_t>(r) * cols], cols);
        }
    };
    read_matrix(model.w1, model.n_hidden, model.n_in + 1, "w1");
    read_matrix(model.w2, model.n_out, model.n_hidden + 1, "w2");
    read_matrix(model.d1, model.n_hidden, model.n_in + 1, "d1");
    read_matrix(model.d2, model.n_out, model.n_hidden + 1, "d2");

    for (; i < lines.size(); ++i)
        if (!lines[i].empty())
            corrupt(path, static_cast<int>(i + 1), "unexpected data after matrices");

    return model;
}

} // namespace glyphrec
