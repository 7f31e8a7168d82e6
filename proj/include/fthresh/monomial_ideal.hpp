#ifndef FTHRESH_MONOMIAL_IDEAL_HPP
#define FTHRESH_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "fthresh/monomial.hpp"
#include "fthresh/errors.hpp"

namespace fthresh {

// Closed-form monomial-ideal combinatorics. These are the independent
// oracles the Groebner and Hilbert paths are checked against, so everything
// here is plain divisibility on exponent vectors.

inline std::vector<Exponents> minimalize_monomials(std::vector<Exponents> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponents> minimal;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& g : minimal)
            if (mono_divides(g, m)) { redundant = true; break; }
        if (!redundant) {
            // m may in turn make earlier generators redundant
            std::vector<Exponents> next;
            for (auto& g : minimal)
                if (!mono_divides(m, g)) next.push_back(std::move(g));
            next.push_back(m);
            minimal = std::move(next);
        }
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

struct MonomialIdeal {
    std::size_t arity = 0;
    std::vector<Exponents> gens; // antichain, sorted

    MonomialIdeal() = default;
    MonomialIdeal(std::size_t n, std::vector<Exponents> generators) : arity(n) {
        for (const auto& g : generators) {
            if (g.size() != n) throw MathError("monomial ideal arity mismatch");
            for (auto e : g)
                if (e < 0) throw MathError("negative exponent in monomial ideal");
        }
        gens = minimalize_monomials(std::move(generators));
    }

    bool is_zero_ideal() const { return gens.empty(); }
    bool is_unit_ideal() const { return gens.size() == 1 && mono_is_one(gens[0]); }
};

inline bool staircase_member(const Exponents& m, const MonomialIdeal& L) {
    if (m.size() != L.arity) throw MathError("staircase_member arity mismatch");
    for (const auto& g : L.gens)
        if (mono_divides(g, m)) return true;
    return false;
}

// true iff all degree-r products of a_gens lie in L (the monomial oracle for
// the nu computation).
inline bool power_containment(std::int64_t r, const MonomialIdeal& L,
                              const std::vector<Exponents>& a_gens) {
    if (r == 0) return L.is_unit_ideal();
    if (a_gens.empty()) return true;
    for (const auto& g : a_gens)
        if (g.size() != L.arity) throw MathError("power_containment arity mismatch");
    Exponents acc(L.arity, 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t remaining, const Exponents& cur) -> bool {
        if (i + 1 == a_gens.size()) {
            Exponents total = mono_mul(cur, mono_pow(a_gens[i], remaining));
            return staircase_member(total, L);
        }
        for (std::int64_t v = remaining; v >= 0; --v) {
            if (!self(self, i + 1, remaining - v, mono_mul(cur, mono_pow(a_gens[i], v))))
                return false;
        }
        return true;
    };
    return rec(rec, 0, r, acc);
}

// L : m for a single monomial m, componentwise truncated subtraction.
inline MonomialIdeal monomial_colon_single(const MonomialIdeal& L, const Exponents& m) {
    std::vector<Exponents> gens;
    gens.reserve(L.gens.size());
    for (const auto& g : L.gens) {
        Exponents q(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) q[i] = g[i] > m[i] ? g[i] - m[i] : 0;
        gens.push_back(std::move(q));
    }
    return MonomialIdeal(L.arity, std::move(gens));
}

inline MonomialIdeal monomial_intersect(const MonomialIdeal& A, const MonomialIdeal& B) {
    std::vector<Exponents> gens;
    gens.reserve(A.gens.size() * B.gens.size());
    for (const auto& a : A.gens)
        for (const auto& b : B.gens) gens.push_back(mono_lcm(a, b));
    return MonomialIdeal(A.arity, std::move(gens));
}

// L : L' = intersection over generators m' of L' of (L : m').
inline MonomialIdeal monomial_colon(const MonomialIdeal& L, const MonomialIdeal& Lp) {
    if (L.arity != Lp.arity) throw MathError("monomial_colon arity mismatch");
    if (Lp.gens.empty()) throw MathError("colon by the zero ideal");
    MonomialIdeal acc = monomial_colon_single(L, Lp.gens[0]);
    for (std::size_t i = 1; i < Lp.gens.size(); ++i)
        acc = monomial_intersect(acc, monomial_colon_single(L, Lp.gens[i]));
    return acc;
}

// Generator data of the Taylor complex: the subset's lcm and its weighted
// degree (all the degree-counting argument consumes).
struct TaylorData {
    std::vector<Exponents> gens;
    std::vector<std::size_t> subset;
    Exponents lcm;
    std::int64_t degree = 0;
};

inline TaylorData taylor_lcm(const std::vector<Exponents>& gens,
                             const std::vector<std::size_t>& subset,
                             const std::vector<std::int64_t>& weights) {
    if (subset.empty()) throw MathError("taylor_lcm requires a nonempty subset");
    TaylorData data;
    data.gens = gens;
    data.subset = subset;
    data.lcm = gens.at(subset[0]);
    for (std::size_t k = 1; k < subset.size(); ++k) data.lcm = mono_lcm(data.lcm, gens.at(subset[k]));
    MonomialOrder order;
    order.weights = weights;
    data.degree = order.weighted_degree(data.lcm);
    return data;
}

// Number of monomials outside the staircase, or nullopt when infinite.
// Finite iff every variable has a pure power among the generators.
inline std::optional<std::int64_t> staircase_length(const MonomialIdeal& L) {
    if (L.is_unit_ideal()) return 0;
    std::vector<std::int64_t> cap(L.arity, -1);
    for (const auto& g : L.gens) {
        int nz = -1;
        bool pure = true;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i] > 0) {
                if (nz >= 0) { pure = false; break; }
                nz = int(i);
            }
        }
        if (pure && nz >= 0)
            cap[std::size_t(nz)] = cap[std::size_t(nz)] < 0
                                       ? g[std::size_t(nz)]
                                       : std::min(cap[std::size_t(nz)], g[std::size_t(nz)]);
    }
    for (std::size_t i = 0; i < L.arity; ++i)
        if (cap[i] < 0) return std::nullopt;

    std::int64_t count = 0;
    Exponents cur(L.arity, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == L.arity) {
            if (!staircase_member(cur, L)) ++count;
            return;
        }
        for (std::int64_t e = 0; e < cap[i]; ++e) {
            cur[i] = e;
            self(self, i + 1);
        }
        cur[i] = 0;
    };
    rec(rec, 0);
    return count;
}

} // namespace fthresh

#endif
