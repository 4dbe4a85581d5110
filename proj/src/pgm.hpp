#ifndef GLYPHREC_PGM_HPP
#define GLYPHREC_PGM_HPP

#include <string>

#include "image.hpp"

namespace glyphrec {

// Reads a PGM file, P2 (ASCII) or P5 (binary), maxval <= 255.
GrayImage read_pgm(const std::string& path);

// Writes a binary glyph as plain-text P2, ink = 0, background = 255.
void write_pgm(const BinaryImage& img, const std::string& path);

} // namespace glyphrec

#endif
