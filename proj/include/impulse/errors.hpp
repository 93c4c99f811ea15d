#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace impulse {

/// Base for every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BoundsError : public Error {
public:
    using Error::Error;
};

/// Malformed PGM input. `offset()` is the byte position where parsing stopped.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Image too small for a 3x3 filter.
class SizeError : public Error {
public:
    using Error::Error;
};

/// Operands with mismatched dimensions.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A ratio whose denominator is zero (all-zero reference, empty mask class).
class DegenerateError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace impulse
