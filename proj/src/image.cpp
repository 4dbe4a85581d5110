#include "image.hpp"

namespace glyphrec {

BinaryImage threshold(const GrayImage& img, int t) {
    BinaryImage out(img.width, img.height);
    for (std::size_t i = 0; i < img.pixels.size(); ++i)
        out.bits[i] = img.pixels[i] < t ? 1 : 0;
    return out;
}

BinaryImage scale_to_canvas(const BinaryImage& img) {
    BinaryImage out(kCanvasSize, kCanvasSize);
    for (int r = 0; r < kCanvasSize; ++r) {
        int sr = r * img.height / kCanvasSize;
        for (int c = 0; c < kCanvasSize; ++c) {
            int sc = c * img.width / kCanvasSize;
            out.set(r, c, img.at(sr, sc));
        }
    }
    return out;
}

MinimalSquare minimal_square(const BinaryImage& img) {
    int rmin = img.height, rmax = -1, cmin = img.width, cmax = -1;
    for (int r = 0; r < img.height; ++r) {
        for (int c = 0; c < img.width; ++c) {
            if (!img.at(r, c)) continue;
            if (r < rmin) rmin = r;
            if (r > rmax) rmax = r;
            if (c < cmin) cmin = c;
            if (c > cmax) cmax = c;
        }
    }
    if (rmax < 0) fail(ErrorCode::EmptyImage, "image has no foreground pixel");

    int bh = rmax - rmin + 1;
    int bw = cmax - cmin + 1;
    int side = bh > bw ? bh : bw;
    MinimalSquare sq;
    sq.side = side;
    sq.row0 = rmin - (side - bh) / 2;
    sq.col0 = cmin - (side - bw) / 2;
    return sq;
}

int octant_of(int row, int col, const MinimalSquare& sq) {
    // Doubled centered coordinates: U = 2u, V = 2v. Exact integers.
    int U = 2 * (col - sq.col0) + 1 - sq.side;
    int V = sq.side - 2 * (row - sq.row0) - 1;

    if (V == 0) return U >= 0 ? 0 : 4; // theta = 0 or pi (U==V==0 only at s=1)
    if (U == 0) return V > 0 ? 2 : 6;  // theta = pi/2 or 3pi/2
    if (U > 0 && V > 0) return V < U ? 0 : 1;
    if (U < 0 && V > 0) return V > -U ? 2 : 3;
    if (U < 0 && V < 0) return V > U ? 4 : 5;
    return -V > U ? 6 : 7;
}

} // namespace glyphrec
