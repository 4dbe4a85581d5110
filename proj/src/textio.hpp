#ifndef GLYPHREC_TEXTIO_HPP
#define GLYPHREC_TEXTIO_HPP

#include <string>

namespace glyphrec {

// printf %.*g formatting; sig >= 17 round-trips doubles exactly.
std::string format_double(double v, int sig);

// Writes through a temp file + rename so failures leave no partial output.
void write_text_file_atomic(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);

} // namespace glyphrec

#endif
