#ifndef GLYPHREC_IMAGE_HPP
#define GLYPHREC_IMAGE_HPP

#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace glyphrec {

// Canonical glyph canvas is 64x64.
inline constexpr int kCanvasSize = 64;

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels; // row-major, 0..255

    std::uint8_t at(int row, int col) const {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }
};

struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits; // row-major, nonzero = ink

    BinaryImage() = default;
    BinaryImage(int w, int h) : width(w), height(h), bits(static_cast<std::size_t>(w) * h, 0) {}

    bool at(int row, int col) const {
        return bits[static_cast<std::size_t>(row) * width + col] != 0;
    }
    void set(int row, int col, bool v) {
        bits[static_cast<std::size_t>(row) * width + col] = v ? 1 : 0;
    }
    // Out-of-canvas cells read as background.
    bool at_padded(int row, int col) const {
        if (row < 0 || row >= height || col < 0 || col >= width) return false;
        return at(row, col);
    }
    long foreground_count() const {
        long n = 0;
        for (std::uint8_t b : bits) n += (b != 0);
        return n;
    }
    bool operator==(const BinaryImage&) const = default;
};

// Tight foreground-bounding square. side = max of the bounding-box extents;
// the shorter axis is centered with the extra pixel of slack going below /
// to the right (content biased top-left). row0/col0 may be negative and the
// square may extend past the canvas; cells out there read as background.
struct MinimalSquare {
    int row0 = 0;
    int col0 = 0;
    int side = 1;
};

// Ink is dark: foreground iff intensity < t.
BinaryImage threshold(const GrayImage& img, int t);

// Nearest-neighbor resample to the 64x64 canvas:
// output (r,c) takes input (floor(r*H/64), floor(c*W/64)).
BinaryImage scale_to_canvas(const BinaryImage& img);

// Throws EmptyImage when the image has no foreground pixel.
MinimalSquare minimal_square(const BinaryImage& img);

// Octant of a pixel inside sq, indexed 0..7 counterclockwise from east in
// pixel-center coordinates u = (col-col0+0.5)-s/2, v = s/2-(row-row0+0.5):
// octant = floor(atan2(v,u) / (pi/4)) with atan2 normalized to [0,2pi).
// Computed exactly in integers; sectors are half-open so every pixel lands
// in exactly one octant.
int octant_of(int row, int col, const MinimalSquare& sq);

} // namespace glyphrec

#endif
