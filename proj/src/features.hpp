#ifndef GLYPHREC_FEATURES_HPP
#define GLYPHREC_FEATURES_HPP

#include <array>

#include "image.hpp"

namespace glyphrec {

inline constexpr int kFeatureCount = 76;
inline constexpr int kShadowCount = 24;
inline constexpr int kCentroidCount = 16;
inline constexpr int kLongestRunCount = 36;

// Layout: [0..23] shadow (octant-major, sides a,b,c per octant),
// [24..39] centroid (octant-major, (row,col) pairs),
// [40..75] longest-run (region-major row-by-row over the 3x3 corner grid;
// within a region: row, column, main-diagonal, anti-diagonal).
using FeatureVector = std::array<double, kFeatureCount>;

// One projection side of an octant. Sides b and c start at the square
// center; side a starts at the octant's lower-angle perimeter endpoint.
// Pixel centers project perpendicularly onto the side's supporting line;
// the projection coordinate falls into unit-width bins [i, i+1).
struct OctantSide {
    double px, py; // start point, centered coords (u right, v up)
    double dx, dy; // unit direction
    int bins;
};

// The three sides (a = perimeter segment, b = half-diagonal to the corner,
// c = half-midline to the edge midpoint) of one octant of a square of the
// given side length. Bin counts: a and c ceil(s/2), b ceil(s/sqrt(2)).
std::array<OctantSide, 3> octant_sides(int octant, int side_len);

// 24 shadow features: per octant and side, occupied bins / total bins.
std::array<double, kShadowCount> shadow_features(const BinaryImage& img,
                                                 const MinimalSquare& sq);

// 16 centroid features: per octant, the mean pixel-center coordinate of its
// foreground pixels, square-relative in [0,1]. An empty octant reports the
// vertex average of its own triangle.
std::array<double, kCentroidCount> centroid_features(const BinaryImage& img,
                                                     const MinimalSquare& sq);

enum class RunDirection { Row, Column, Diag, AntiDiag };

// Sum over scan lines of the longest run of consecutive foreground cells.
// Rows: height lines; columns: width lines; each diagonal direction:
// height+width-1 lines.
long longest_bar_sum(const BinaryImage& region, RunDirection dir);

// One of the 9 overlapping sub-regions, relative to the minimal square.
struct Region {
    int row0, col0;
    int height, width;
};

// 3x3 grid of regions with corners {0, s/4, 2s/4} (integer division) on
// each axis, each region ceil(s/2) x ceil(s/2).
std::array<Region, 9> longest_run_regions(int side_len);

// Materializes a region's cells; cells beyond the canvas read background.
BinaryImage region_cells(const BinaryImage& img, const MinimalSquare& sq,
                         const Region& reg);

// 36 longest-run features, each longest_bar_sum normalized by the region
// area (its all-foreground value).
std::array<double, kLongestRunCount> longest_run_features(const BinaryImage& img,
                                                          const MinimalSquare& sq);

// Full 76-element vector of a canonical 64x64 glyph.
// Throws Dimension if the image is not 64x64, EmptyImage if blank.
FeatureVector extract(const BinaryImage& img);

} // namespace glyphrec

#endif
