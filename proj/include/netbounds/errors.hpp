#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netbounds {

// Raised by the text codecs; position is the 1-based offset of the offending
// character (0 when the error concerns the input as a whole).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(position == 0
                                 ? message
                                 : message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A violated internal invariant: a bug, never a bad input. The CLI maps this
// to exit code 2. These checks stay on in release builds; the whole table
// computation must run without tripping one.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void check(bool condition, const char* what) {
    if (!condition)
        throw InternalError(what);
}

}  // namespace detail
}  // namespace netbounds
