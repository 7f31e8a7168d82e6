#ifndef FTHRESH_ERRORS_HPP
#define FTHRESH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fthresh {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed polynomial text or case file. `position` is a 0-based byte
// offset into the offending source when known, -1 otherwise.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, long position = -1)
        : Error(position >= 0 ? msg + " at position " + std::to_string(position) : msg),
          position_(position) {}
    long position() const { return position_; }

private:
    long position_;
};

// Violated mathematical precondition: arity mismatch, non-hsop input,
// characteristic-zero Frobenius, zero polynomial where nonzero required, ...
class MathError : public Error {
public:
    using Error::Error;
};

// Exponent or degree left the supported range.
class OverflowError : public Error {
public:
    using Error::Error;
};

// A configurable step cap was hit (Groebner reduction steps, scan caps).
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

} // namespace fthresh

#endif
