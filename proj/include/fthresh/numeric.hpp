#ifndef FTHRESH_NUMERIC_HPP
#define FTHRESH_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "fthresh/errors.hpp"

namespace fthresh {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

inline BigRat rat_pow(const BigRat& base, unsigned exp) {
    BigRat r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

inline BigInt rat_num(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const BigRat& r) { return boost::multiprecision::denominator(r); }

inline std::string rat_to_string(const BigRat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Checked int64 helpers for exponent arithmetic. Exponents and weighted
// degrees live in int64_t; anything past MAX_EXPONENT is reported, not
// wrapped.
constexpr std::int64_t MAX_EXPONENT = std::int64_t(1) << 40;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r) || r > MAX_EXPONENT)
        throw OverflowError("exponent overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r) || r > MAX_EXPONENT)
        throw OverflowError("exponent overflow in multiplication");
    return r;
}

} // namespace fthresh

#endif
