#pragma once

#include <stdexcept>
#include <string>

namespace jflc {

/// Library error with a coarse category, mapped to status codes at the C boundary.
class Error : public std::runtime_error {
  public:
    enum class Kind {
        argument,    // bad value, unsupported option, out-of-scope request
        dimension,   // shape mismatch between operands
        numerical,   // singular system, non-finite intermediate
        io           // file read/write failure
    };

    Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

[[noreturn]] inline void fail_argument(const std::string& msg) {
    throw Error(Error::Kind::argument, msg);
}
[[noreturn]] inline void fail_dimension(const std::string& msg) {
    throw Error(Error::Kind::dimension, msg);
}
[[noreturn]] inline void fail_numerical(const std::string& msg) {
    throw Error(Error::Kind::numerical, msg);
}
[[noreturn]] inline void fail_io(const std::string& msg) {
    throw Error(Error::Kind::io, msg);
}

} // namespace jflc
