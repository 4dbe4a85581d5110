#ifndef GLYPHREC_MODEL_IO_HPP
#define GLYPHREC_MODEL_IO_HPP

#include <string>

#include "mlp.hpp"

namespace glyphrec {

// Line-oriented text model format:
//   optional '#' comment lines (before the magic only)
//   MLP-TEXT v1
//   n_in n_hidden n_out
//   w1 rows, then w2 rows, then d1 and d2 rows in the same shapes,
//   one row per line, 17 significant digits per value.
// save(load(f)) reproduces f byte for byte: comments are kept on the model
// and values round-trip exactly.

void save_model(const MlpModel& model, const std::string& path);
MlpModel load_model(const std::string& path);

} // namespace glyphrec

#endif
