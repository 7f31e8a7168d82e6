#ifndef FTHRESH_FIELDS_HPP
#define FTHRESH_FIELDS_HPP

#include <cstdint>
#include <string>

#include "fthresh/errors.hpp"
#include "fthresh/numeric.hpp"

namespace fthresh {

// Coefficient fields are small value-type descriptors; elements are plain
// values and every arithmetic operation goes through the descriptor. Generic
// code is templated on the descriptor type.

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    for (std::uint64_t d = 11; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// F_p, residues stored in [0, p). p is capped so products fit in uint64_t.
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p >= (std::uint64_t(1) << 31))
            throw MathError("prime characteristic too large: " + std::to_string(p));
        if (!is_prime_u64(p))
            throw MathError("characteristic must be prime, got " + std::to_string(p));
    }

    std::uint64_t characteristic() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }

    Elem from_int(std::int64_t n) const {
        std::int64_t r = n % std::int64_t(p_);
        if (r < 0) r += std::int64_t(p_);
        return Elem(r);
    }
    Elem from_big(const BigInt& n) const {
        BigInt r = n % BigInt(p_);
        if (r < 0) r += p_;
        return r.convert_to<std::uint64_t>();
    }
    // Rational coefficient syntax is Q-only; reaching this is a field error.
    Elem from_fraction(const BigInt&, const BigInt&) const {
        throw MathError("fractional coefficients are not elements of F_" + std::to_string(p_));
    }

    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }

    Elem inv(Elem a) const {
        if (a == 0) throw MathError("division by zero in F_" + std::to_string(p_));
        // extended Euclid on (a, p)
        std::int64_t t = 0, newt = 1, r = std::int64_t(p_), newr = std::int64_t(a);
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
            tmp = r - q * newr; r = newr; newr = tmp;
        }
        if (t < 0) t += std::int64_t(p_);
        return Elem(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == one(); }
    bool eq(Elem a, Elem b) const { return a == b; }
    bool less(Elem a, Elem b) const { return a < b; }

    std::string to_string(Elem a) const { return std::to_string(a); }
    // Residues print without a sign, so a leading '-' never appears.
    bool is_negative_display(Elem) const { return false; }
    Elem abs_display(Elem a) const { return a; }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return !(*this == o); }

private:
    std::uint64_t p_;
};

// Q with arbitrary-precision rational elements.
class RationalField {
public:
    using Elem = BigRat;

    std::uint64_t characteristic() const { return 0; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }

    Elem from_int(std::int64_t n) const { return Elem(n); }
    Elem from_big(const BigInt& n) const { return Elem(n); }
    Elem from_fraction(const BigInt& num, const BigInt& den) const {
        if (den == 0) throw MathError("zero denominator in rational coefficient");
        return Elem(num) / Elem(den);
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw MathError("division by zero in Q");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool less(const Elem& a, const Elem& b) const { return a < b; }

    std::string to_string(const Elem& a) const { return rat_to_string(a); }
    bool is_negative_display(const Elem& a) const { return a < 0; }
    Elem abs_display(const Elem& a) const { return a < 0 ? Elem(-a) : a; }

    bool operator==(const RationalField&) const { return true; }
    bool operator!=(const RationalField&) const { return false; }

private:
    Elem inv_guard(const Elem& b) const {
        if (b == 0) throw MathError("division by zero in Q");
        return b;
    }
};

} // namespace fthresh

#endif
