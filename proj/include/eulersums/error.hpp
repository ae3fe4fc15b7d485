#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eulersums {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. The position is a 0-based byte offset into the parsed string.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error("syntax error at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A requested series or constant does not converge.
class DivergentError : public Error {
public:
    using Error::Error;
};

class PrecisionError : public Error {
public:
    using Error::Error;
};

} // namespace eulersums
