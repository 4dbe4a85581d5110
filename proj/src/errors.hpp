#ifndef GLYPHREC_ERRORS_HPP
#define GLYPHREC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace glyphrec {

enum class ErrorCode {
    InvalidArg,
    Io,
    Parse,
    EmptyImage,
    Dimension,
    LabelRange,
    InsufficientSamples,
    CorruptModel,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string msg)
        : std::runtime_error(std::move(msg)), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace glyphrec

#endif
