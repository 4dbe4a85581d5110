#include "features.hpp"

#include <cmath>
#include <vector>

namespace glyphrec {
namespace {

// Perimeter point at angle j*pi/4: even j hits an edge midpoint, odd j a
// corner. Centered coordinates, u right, v up.
void perimeter_point(int j, double h, double& x, double& y) {
    switch (j & 7) {
    case 0: x = h;  y = 0;  break;
    case 1: x = h;  y = h;  break;
    case 2: x = 0;  y = h;  break;
    case 3: x = -h; y = h;  break;
    case 4: x = -h; y = 0;  break;
    case 5: x = -h; y = -h; break;
    case 6: x = 0;  y = -h; break;
    default: x = h; y = -h; break;
    }
}

int half_side_bins(int s) { return (s + 1) / 2; }           // ceil(s/2)
int diagonal_bins(int s) { return static_cast<int>(std::ceil(s / std::sqrt(2.0))); }

} // namespace

std::array<OctantSide, 3> octant_sides(int octant, int side_len) {
    double h = side_len * 0.5;
    double ax, ay, bx, by;
    perimeter_point(octant, h, ax, ay);
    perimeter_point(octant + 1, h, bx, by);

    std::array<OctantSide, 3> sides;

    // side a: perimeter segment A -> B. Axis-aligned, length s/2.
    double len_a = std::abs(bx - ax) + std::abs(by - ay);
    sides[0] = {ax, ay, (bx - ax) / len_a, (by - ay) / len_a, half_side_bins(side_len)};

    // Odd angles point at corners, even ones at edge midpoints.
    bool a_is_corner = (octant & 1) != 0;
    double cx = a_is_corner ? ax : bx, cy = a_is_corner ? ay : by; // corner
    double mx = a_is_corner ? bx : ax, my = a_is_corner ? by : ay; // midpoint

    // side b: center -> corner, length s/sqrt(2).
    double inv_diag = 1.0 / std::sqrt(2.0);
    sides[1] = {0.0, 0.0, (cx > 0 ? inv_diag : -inv_diag), (cy > 0 ? inv_diag : -inv_diag),
                diagonal_bins(side_len)};

    // side c: center -> edge midpoint, length s/2, axis-aligned.
    double len_c = std::abs(mx) + std::abs(my);
    sides[2] = {0.0, 0.0, mx / len_c, my / len_c, half_side_bins(side_len)};

    return sides;
}

std::array<double, kShadowCount> shadow_features(const BinaryImage& img,
                                                 const MinimalSquare& sq) {
    std::array<std::array<OctantSide, 3>, 8> sides;
    std::array<std::array<std::vector<char>, 3>, 8> occupied;
    for (int k = 0; k < 8; ++k) {
        sides[k] = octant_sides(k, sq.side);
        for (int s = 0; s < 3; ++s)
            occupied[k][s].assign(sides[k][s].bins, 0);
    }

    double half = sq.side * 0.5;
    for (int r = 0; r < img.height; ++r) {
        for (int c = 0; c < img.width; ++c) {
            if (!img.at(r, c)) continue;
            int k = octant_of(r, c, sq);
            // Square-relative pixel center; absolute coordinates never enter
            // the float math, so features are exactly translation invariant.
            double u = (c - sq.col0 + 0.5) - half;
            double v = half - (r - sq.row0 + 0.5);
            for (int s = 0; s < 3; ++s) {
                const OctantSide& sd = sides[k][s];
                double t = (u - sd.px) * sd.dx + (v - sd.py) * sd.dy;
                int bin = static_cast<int>(std::floor(t));
                if (bin < 0) bin = 0;
                if (bin >= sd.bins) bin = sd.bins - 1;
                occupied[k][s][bin] = 1;
            }
        }
    }

    std::array<double, kShadowCount> out;
    for (int k = 0; k < 8; ++k) {
        for (int s = 0; s < 3; ++s) {
            long hit = 0;
            for (char b : occupied[k][s]) hit += b;
            out[k * 3 + s] = static_cast<double>(hit) / sides[k][s].bins;
        }
    }
    return out;
}

std::array<double, kCentroidCount> centroid_features(const BinaryImage& img,
                                                     const MinimalSquare& sq) {
    // Vertex averages of the octant triangles, square-relative (row, col).
    // These are the defaults for octants with no foreground.
    static constexpr double kEmptyDefault[8][2] = {
        {1.0 / 3, 5.0 / 6}, {1.0 / 6, 2.0 / 3}, {1.0 / 6, 1.0 / 3}, {1.0 / 3, 1.0 / 6},
        {2.0 / 3, 1.0 / 6}, {5.0 / 6, 1.0 / 3}, {5.0 / 6, 2.0 / 3}, {2.0 / 3, 5.0 / 6},
    };

    long sum_r[8] = {0}, sum_c[8] = {0}, count[8] = {0};
    for (int r = 0; r < img.height; ++r) {
        for (int c = 0; c < img.width; ++c) {
            if (!img.at(r, c)) continue;
            int k = octant_of(r, c, sq);
            sum_r[k] += r - sq.row0; // integer sums, exact
            sum_c[k] += c - sq.col0;
            count[k] += 1;
        }
    }

    std::array<double, kCentroidCount> out;
    for (int k = 0; k < 8; ++k) {
        if (count[k] == 0) {
            out[k * 2] = kEmptyDefault[k][0];
            out[k * 2 + 1] = kEmptyDefault[k][1];
        } else {
            double n = static_cast<double>(count[k]);
            out[k * 2] = (static_cast<double>(sum_r[k]) / n + 0.5) / sq.side;
            out[k * 2 + 1] = (static_cast<double>(sum_c[k]) / n + 0.5) / sq.side;
        }
    }
    return out;
}

long longest_bar_sum(const BinaryImage& region, RunDirection dir) {
    int h = region.height, w = region.width;

    // Max run along one scan line starting at (r,c), stepping (dr,dc).
    auto line_max = [&](int r, int c, int dr, int dc) {
        long best = 0, run = 0;
        while (r >= 0 && r < h && c >= 0 && c < w) {
            if (region.at(r, c)) {
                if (++run > best) best = run;
            } else {
                run = 0;
            }
            r += dr;
            c += dc;
        }
        return best;
    };

    long sum = 0;
    switch (dir) {
    case RunDirection::Row:
        for (int r = 0; r < h; ++r) sum += line_max(r, 0, 0, 1);
        break;
    case RunDirection::Column:
        for (int c = 0; c < w; ++c) sum += line_max(0, c, 1, 0);
        break;
    case RunDirection::Diag:
        for (int c = 0; c < w; ++c) sum += line_max(0, c, 1, 1);
        for (int r = 1; r < h; ++r) sum += line_max(r, 0, 1, 1);
        break;
    case RunDirection::AntiDiag:
        for (int c = 0; c < w; ++c) sum += line_max(0, c, 1, -1);
        for (int r = 1; r < h; ++r) sum += line_max(r, w - 1, 1, -1);
        break;
    }
    return sum;
}

std::array<Region, 9> longest_run_regions(int side_len) {
    int corners[3] = {0, side_len / 4, (2 * side_len) / 4};
    int extent = (side_len + 1) / 2; // ceil(s/2); far corner + extent == s
    std::array<Region, 9> out;
    for (int gr = 0; gr < 3; ++gr)
        for (int gc = 0; gc < 3; ++gc)
            out[gr * 3 + gc] = {corners[gr], corners[gc], extent, extent};
    return out;
}

BinaryImage region_cells(const BinaryImage& img, const MinimalSquare& sq,
                         const Region& reg) {
    BinaryImage out(reg.width, reg.height);
    for (int i = 0; i < reg.height; ++i)
        for (int j = 0; j < reg.width; ++j)
            out.set(i, j, img.at_padded(sq.row0 + reg.row0 + i, sq.col0 + reg.col0 + j));
    return out;
}

std::array<double, kLongestRunCount> longest_run_features(const BinaryImage& img,
                                                          const MinimalSquare& sq) {
    static constexpr RunDirection kDirs[4] = {RunDirection::Row, RunDirection::Column,
                                              RunDirection::Diag, RunDirection::AntiDiag};
    std::array<double, kLongestRunCount> out;
    auto regions = longest_run_regions(sq.side);
    for (int i = 0; i < 9; ++i) {
        BinaryImage cells = region_cells(img, sq, regions[i]);
        double area = static_cast<double>(regions[i].height) * regions[i].width;
        for (int d = 0; d < 4; ++d)
            out[i * 4 + d] = static_cast<double>(longest_bar_sum(cells, kDirs[d])) / area;
    }
    return out;
}

FeatureVector extract(const BinaryImage& img) {
    if (img.width != kCanvasSize || img.height != kCanvasSize)
        fail(ErrorCode::Dimension, "extract expects a 64x64 image, got " +
                                       std::to_string(img.width) + "x" +
                                       std::to_string(img.height));
    MinimalSquare sq = minimal_square(img);

    FeatureVector fv;
    auto shadow = shadow_features(img, sq);
    auto centroid = centroid_features(img, sq);
    auto runs = longest_run_features(img, sq);
    std::size_t i = 0;
    for (double v : shadow) fv[i++] = v;
    for (double v : centroid) fv[i++] = v;
    for (double v : runs) fv[i++] = v;
    return fv;
}

} // namespace glyphrec
