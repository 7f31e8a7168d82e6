#ifndef FTHRESH_MONOMIAL_HPP
#define FTHRESH_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fthresh/numeric.hpp"

namespace fthresh {

// A monomial is its exponent vector; the variable names live in the ring.
using Exponents = std::vector<std::int64_t>;

inline bool mono_divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponents mono_mul(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

// Quotient a/b, valid when b | a.
inline Exponents mono_div(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Exponents mono_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

inline Exponents mono_gcd(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
    return r;
}

inline Exponents mono_pow(const Exponents& a, std::int64_t n) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], n);
    return r;
}

inline bool mono_coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

inline bool mono_is_one(const Exponents& a) {
    for (auto e : a)
        if (e != 0) return false;
    return true;
}

inline std::int64_t mono_total_degree(const Exponents& a) {
    std::int64_t d = 0;
    for (auto e : a) d = checked_add(d, e);
    return d;
}

// Weighted-degree-reverse-lexicographic order, optionally with a leading
// elimination block: monomials are compared on the first `elim_block`
// variables (weighted degrevlex) and ties fall through to the remaining
// variables. elim_block == 0 is plain weighted degrevlex. 1 is minimal and
// the order is multiplicative, so it is a monomial order for positive
// weights.
struct MonomialOrder {
    std::vector<std::int64_t> weights;
    std::size_t elim_block = 0;

    std::int64_t weighted_degree(const Exponents& u, std::size_t lo, std::size_t hi) const {
        std::int64_t d = 0;
        for (std::size_t i = lo; i < hi; ++i) d = checked_add(d, checked_mul(u[i], weights[i]));
        return d;
    }
    std::int64_t weighted_degree(const Exponents& u) const {
        return weighted_degree(u, 0, weights.size());
    }

    // +1 if u > v, 0 if equal, -1 if u < v.
    int compare(const Exponents& u, const Exponents& v) const {
        if (elim_block > 0) {
            int c = compare_range(u, v, 0, elim_block);
            if (c != 0) return c;
            return compare_range(u, v, elim_block, weights.size());
        }
        return compare_range(u, v, 0, weights.size());
    }

    bool greater(const Exponents& u, const Exponents& v) const { return compare(u, v) > 0; }
    bool less(const Exponents& u, const Exponents& v) const { return compare(u, v) < 0; }

private:
    int compare_range(const Exponents& u, const Exponents& v, std::size_t lo, std::size_t hi) const {
        std::int64_t du = weighted_degree(u, lo, hi);
        std::int64_t dv = weighted_degree(v, lo, hi);
        if (du != dv) return du > dv ? 1 : -1;
        // reverse lex tie-break: scan from the last variable; the smaller
        // exponent at the first difference wins.
        for (std::size_t i = hi; i-- > lo;) {
            if (u[i] != v[i]) return u[i] < v[i] ? 1 : -1;
        }
        return 0;
    }
};

} // namespace fthresh

#endif
