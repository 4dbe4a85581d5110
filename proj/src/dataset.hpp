#ifndef GLYPHREC_DATASET_HPP
#define GLYPHREC_DATASET_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "features.hpp"
#include "image.hpp"

namespace glyphrec {

inline constexpr int kClassCount = 50;

// How to rebuild a sample's canonical 64x64 image.
struct FileSource {
    std::string path; // resolved path of the image file
    int threshold;
};

struct PerturbSpec {
    int max_shift_px = 0;
    double flip_prob = 0.0;
    int thickness_delta = 0;
};

struct SynthSource {
    int class_id = 0;
    int index = 0;
    std::uint64_t seed = 0;
    PerturbSpec perturb;
};

using SampleSource = std::variant<FileSource, SynthSource>;

std::string source_tag(const SampleSource& source);

struct LabeledSample {
    std::string id;
    FeatureVector features{};
    int class_id = 0;
    SampleSource source;
};

struct ManifestEntry {
    std::string path;          // as written in the manifest (the sample id)
    std::string resolved_path; // relative entries resolved against the manifest dir
    int class_id = 0;
};

// CSV with header `path,label`; labels validated against 0..49.
std::vector<ManifestEntry> load_manifest(const std::string& path);

// Manifest entries through the canonical pipeline:
// read PGM -> threshold -> scale to 64x64 -> extract.
std::vector<LabeledSample> load_corpus(const std::string& manifest_path, int threshold);

struct SplitSpec {
    double train_fraction = 0.8;
    std::uint64_t seed = 0;
    bool per_class_equal = true;
};

// Deterministic seeded partition. With per_class_equal, classes are shuffled
// and cut independently (ascending class order, one shared engine), each
// contributing floor(n_c * train_fraction) training samples; otherwise one
// global shuffle and cut.
std::pair<std::vector<LabeledSample>, std::vector<LabeledSample>>
split(const std::vector<LabeledSample>& corpus, const SplitSpec& spec);

// Fixed prototype glyph of a class: two seven-segment digits (tens 0..4,
// units 0..9) drawn with 3 px strokes on the 64x64 canvas.
BinaryImage prototype_glyph(int class_id);

// One perturbed sample image. Each (seed, class, index) owns a private RNG
// stream; draw order: shift dr, dc (iff max_shift_px > 0), then per-pixel
// flips row-major (iff flip_prob > 0), then |thickness_delta| rounds of
// 8-neighbour dilation or erosion. A perturbation that erases all ink falls
// back to the unperturbed prototype.
BinaryImage synth_glyph(int class_id, int index, std::uint64_t seed,
                        const PerturbSpec& perturb);

// per_class samples of each of the 50 classes, class-major then index.
std::vector<LabeledSample> synth_corpus(int per_class, std::uint64_t seed,
                                        const PerturbSpec& perturb);

// Rebuilds the canonical 64x64 image a sample's features came from.
BinaryImage render_source(const SampleSource& source);

} // namespace glyphrec

#endif
