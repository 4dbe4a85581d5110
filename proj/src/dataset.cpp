#include "dataset.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <sstream>

#include "pgm.hpp"
#include "rng.hpp"
#include "textio.hpp"

namespace glyphrec {
namespace {

// ---------------------------------------------------------------------------
// Prototype glyphs: two seven-segment digits per class (tens digit 0..4 on
// the left, units digit 0..9 on the right), 3 px strokes. Arbitrary shapes,
// but fixed: persisted models depend on them.
// ---------------------------------------------------------------------------

constexpr int kStroke = 3;
constexpr int kDigitW = 18;
constexpr int kDigitH = 40;
constexpr int kGlyphTop = 12;
constexpr int kLeftX = 10;
constexpr int kRightX = 37;

// Segment bitmasks: A top, B upper-right, C lower-right, D bottom,
// E lower-left, F upper-left, G middle.
enum Segment { SegA = 1, SegB = 2, SegC = 4, SegD = 8, SegE = 16, SegF = 32, SegG = 64 };

constexpr int kDigitSegments[10] = {
    SegA | SegB | SegC | SegD | SegE | SegF,        // 0
    SegB | SegC,                                    // 1
    SegA | SegB | SegG | SegE | SegD,               // 2
    SegA | SegB | SegG | SegC | SegD,               // 3
    SegF | SegG | SegB | SegC,                      // 4
    SegA | SegF | SegG | SegC | SegD,               // 5
    SegA | SegF | SegG | SegE | SegD | SegC,        // 6
    SegA | SegB | SegC,                             // 7
    SegA | SegB | SegC | SegD | SegE | SegF | SegG, // 8
    SegA | SegB | SegC | SegD | SegF | SegG,        // 9
};

void fill_rect(BinaryImage& img, int r0, int c0, int h, int w) {
    for (int r = r0; r < r0 + h; ++r)
        for (int c = c0; c < c0 + w; ++c) img.set(r, c, true);
}

void draw_digit(BinaryImage& img, int digit, int x0, int y0) {
    int segs = kDigitSegments[digit];
    int midy = y0 + (kDigitH - kStroke) / 2;
    int half = kDigitH / 2;
    if (segs & SegA) fill_rect(img, y0, x0, kStroke, kDigitW);
    if (segs & SegG) fill_rect(img, midy, x0, kStroke, kDigitW);
    if (segs & SegD) fill_rect(img, y0 + kDigitH - kStroke, x0, kStroke, kDigitW);
    if (segs & SegF) fill_rect(img, y0, x0, half, kStroke);
    if (segs & SegB) fill_rect(img, y0, x0 + kDigitW - kStroke, half, kStroke);
    if (segs & SegE) fill_rect(img, y0 + half, x0, kDigitH - half, kStroke);
    if (segs & SegC) fill_rect(img, y0 + half, x0 + kDigitW - kStroke, kDigitH - half, kStroke);
}

BinaryImage morph(const BinaryImage& img, bool dilate) {
    BinaryImage out(img.width, img.height);
    for (int r = 0; r < img.height; ++r) {
        for (int c = 0; c < img.width; ++c) {
            bool any = false, all = true;
            for (int dr = -1; dr <= 1; ++dr)
                for (int dc = -1; dc <= 1; ++dc) {
                    bool v = img.at_padded(r + dr, c + dc);
                    any = any || v;
                    all = all && v;
                }
            out.set(r, c, dilate ? any : all);
        }
    }
    return out;
}

BinaryImage translate(const BinaryImage& img, int dr, int dc) {
    BinaryImage out(img.width, img.height);
    for (int r = 0; r < img.height; ++r)
        for (int c = 0; c < img.width; ++c)
            if (img.at(r, c)) out.set(r + dr, c + dc, true);
    return out;
}

// Largest |shift| that keeps every foreground pixel in-canvas.
void clamp_shift(const BinaryImage& img, int& dr, int& dc) {
    int rmin = img.height, rmax = -1, cmin = img.width, cmax = -1;
    for (int r = 0; r < img.height; ++r)
        for (int c = 0; c < img.width; ++c)
            if (img.at(r, c)) {
                rmin = std::min(rmin, r);
                rmax = std::max(rmax, r);
                cmin = std::min(cmin, c);
                cmax = std::max(cmax, c);
            }
    if (rmax < 0) { dr = dc = 0; return; }
    dr = std::clamp(dr, -rmin, img.height - 1 - rmax);
    dc = std::clamp(dc, -cmin, img.width - 1 - cmax);
}

std::string sample_id(int class_id, int index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "synth_c%02d_i%04d", class_id, index);
    return buf;
}

} // namespace

BinaryImage prototype_glyph(int class_id) {
    if (class_id < 0 || class_id >= kClassCount)
        fail(ErrorCode::LabelRange, "class " + std::to_string(class_id) +
                                        " outside 0.." + std::to_string(kClassCount - 1));
    BinaryImage img(kCanvasSize, kCanvasSize);
    draw_digit(img, class_id / 10, kLeftX, kGlyphTop);
    draw_digit(img, class_id % 10, kRightX, kGlyphTop);
    return img;
}

BinaryImage synth_glyph(int class_id, int index, std::uint64_t seed,
                        const PerturbSpec& perturb) {
    BinaryImage proto = prototype_glyph(class_id);
    BinaryImage img = proto;
    RngEngine eng = make_stream(seed, static_cast<std::uint32_t>(class_id),
                                static_cast<std::uint32_t>(index));

    if (perturb.max_shift_px > 0) {
        int span = 2 * perturb.max_shift_px + 1;
        int dr = static_cast<int>(uniform_below(eng, span)) - perturb.max_shift_px;
        int dc = static_cast<int>(uniform_below(eng, span)) - perturb.max_shift_px;
        clamp_shift(img, dr, dc);
        img = translate(img, dr, dc);
    }

    if (perturb.flip_prob > 0.0) {
        for (int r = 0; r < img.height; ++r)
            for (int c = 0; c < img.width; ++c)
                if (uniform_unit(eng) < perturb.flip_prob) img.set(r, c, !img.at(r, c));
    }

    for (int i = 0; i < std::abs(perturb.thickness_delta); ++i)
        img = morph(img, perturb.thickness_delta > 0);

    if (img.foreground_count() == 0) return proto;
    return img;
}

std::vector<LabeledSample> synth_corpus(int per_class, std::uint64_t seed,
                                        const PerturbSpec& perturb) {
    if (per_class < 1) fail(ErrorCode::InvalidArg, "per_class must be at least 1");
    std::vector<LabeledSample> corpus;
    corpus.reserve(static_cast<std::size_t>(per_class) * kClassCount);
    for (int c = 0; c < kClassCount; ++c) {
        for (int i = 0; i < per_class; ++i) {
            LabeledSample s;
            s.id = sample_id(c, i);
            s.class_id = c;
            s.source = SynthSource{c, i, seed, perturb};
            s.features = extract(synth_glyph(c, i, seed, perturb));
            corpus.push_back(std::move(s));
        }
    }
    return corpus;
}

std::string source_tag(const SampleSource& source) {
    if (const auto* f = std::get_if<FileSource>(&source))
        return "file:" + f->path + ";t=" + std::to_string(f->threshold);
    const auto& s = std::get<SynthSource>(source);
    std::ostringstream out;
    out << "synth:seed=" << s.seed << ";class=" << s.class_id << ";index=" << s.index
        << ";shift=" << s.perturb.max_shift_px << ";flip=" << format_double(s.perturb.flip_prob, 17)
        << ";thick=" << s.perturb.thickness_delta;
    return out.str();
}

BinaryImage render_source(const SampleSource& source) {
    if (const auto* f = std::get_if<FileSource>(&source))
        return scale_to_canvas(threshold(read_pgm(f->path), f->threshold));
    const auto& s = std::get<SynthSource>(source);
    return synth_glyph(s.class_id, s.index, s.seed, s.perturb);
}

std::vector<ManifestEntry> load_manifest(const std::string& path) {
    std::string text;
    try {
        text = read_text_file(path);
    } catch (const Error&) {
        fail(ErrorCode::Io, path + ": cannot open manifest");
    }

    std::filesystem::path dir = std::filesystem::path(path).parent_path();
    std::vector<ManifestEntry> entries;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1) {
            if (line != "path,label")
                fail(ErrorCode::Parse, path + ":1: manifest header must be 'path,label'");
            continue;
        }
        if (line.empty()) continue;

        std::size_t comma = line.find(',');
        if (comma == std::string::npos || comma == 0 ||
            line.find(',', comma + 1) != std::string::npos)
            fail(ErrorCode::Parse,
                 path + ":" + std::to_string(lineno) + ": malformed row '" + line + "'");

        std::string file = line.substr(0, comma);
        std::string label = line.substr(comma + 1);
        if (label.empty() ||
            !std::all_of(label.begin(), label.end(), [](char c) { return c >= '0' && c <= '9'; }))
            fail(ErrorCode::Parse,
                 path + ":" + std::to_string(lineno) + ": label '" + label + "' is not a number");
        long value = label.size() <= 9 ? std::stol(label) : kClassCount;
        if (value >= kClassCount)
            fail(ErrorCode::LabelRange, path + ":" + std::to_string(lineno) + ": label " +
                                            label + " outside 0.." +
                                            std::to_string(kClassCount - 1));

        ManifestEntry e;
        e.path = file;
        std::filesystem::path p(file);
        e.resolved_path = p.is_absolute() ? p.string() : (dir / p).string();
        e.class_id = static_cast<int>(value);
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<LabeledSample> load_corpus(const std::string& manifest_path, int threshold_t) {
    std::vector<ManifestEntry> entries = load_manifest(manifest_path);
    std::vector<LabeledSample> corpus;
    corpus.reserve(entries.size());
    for (const ManifestEntry& e : entries) {
        LabeledSample s;
        s.id = e.path;
        s.class_id = e.class_id;
        s.source = FileSource{e.resolved_path, threshold_t};
        s.features = extract(scale_to_canvas(threshold(read_pgm(e.resolved_path), threshold_t)));
        corpus.push_back(std::move(s));
    }
    return corpus;
}

std::pair<std::vector<LabeledSample>, std::vector<LabeledSample>>
split(const std::vector<LabeledSample>& corpus, const SplitSpec& spec) {
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
        fail(ErrorCode::InvalidArg, "train_fraction must lie in (0,1)");

    RngEngine eng(spec.seed);
    std::vector<LabeledSample> train, test;

    auto cut = [&](std::vector<std::size_t>& idx) {
        shuffle_fisher_yates(idx, eng);
        std::size_t k = static_cast<std::size_t>(
            std::floor(static_cast<double>(idx.size()) * spec.train_fraction));
        for (std::size_t i = 0; i < idx.size(); ++i)
            (i < k ? train : test).push_back(corpus[idx[i]]);
    };

    if (spec.per_class_equal) {
        std::map<int, std::vector<std::size_t>> by_class;
        for (std::size_t i = 0; i < corpus.size(); ++i)
            by_class[corpus[i].class_id].push_back(i);
        for (auto& [class_id, idx] : by_class) {
            if (idx.size() < 2)
                fail(ErrorCode::InsufficientSamples,
                     "class " + std::to_string(class_id) + " has only " +
                         std::to_string(idx.size()) + " sample(s); need at least 2");
            cut(idx);
        }
    } else {
        std::vector<std::size_t> idx(corpus.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        cut(idx);
    }
    return {std::move(train), std::move(test)};
}

} // namespace glyphrec
