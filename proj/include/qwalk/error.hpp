#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qwalk {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input to an operation (vertex out of range, u == v, invalid partition, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A configured size cap was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed graph text. `offset` is the byte position of the problem.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// The eigensolver did not converge.
class SpectralError : public Error {
public:
    using Error::Error;
};

/// Two routes that must agree did not. Always a bug, never a verdict.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace qwalk
