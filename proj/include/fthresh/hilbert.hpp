#ifndef FTHRESH_HILBERT_HPP
#define FTHRESH_HILBERT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fthresh/groebner.hpp"
#include "fthresh/monomial_ideal.hpp"

namespace fthresh {

// Dense integer polynomial in t, ascending coefficients, no trailing zeros.
struct UniPoly {
    std::vector<BigInt> coeffs;

    static UniPoly zero() { return {}; }
    static UniPoly one() { return {{BigInt(1)}}; }

    bool is_zero() const { return coeffs.empty(); }
    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& c : coeffs) s += c;
        return s;
    }

    UniPoly operator+(const UniPoly& o) const {
        UniPoly r;
        r.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), BigInt(0));
        for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = coeffs[i];
        for (std::size_t i = 0; i < o.coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
        r.trim();
        return r;
    }

    // this * t^k
    UniPoly shifted(std::int64_t k) const {
        if (is_zero()) return *this;
        UniPoly r;
        r.coeffs.assign(std::size_t(k), BigInt(0));
        r.coeffs.insert(r.coeffs.end(), coeffs.begin(), coeffs.end());
        return r;
    }

    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return zero();
        UniPoly r;
        r.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs.size(); ++j)
                r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
        r.trim();
        return r;
    }

    // quotient by (1 - t); requires eval_at_one() == 0
    UniPoly divide_by_one_minus_t() const {
        if (is_zero()) return zero();
        UniPoly q;
        q.coeffs.resize(coeffs.size() - 1, BigInt(0));
        BigInt carry = 0;
        for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
            carry += coeffs[i];
            q.coeffs[i] = carry;
        }
        q.trim();
        return q;
    }
};

// 1 - t^d
inline UniPoly one_minus_t_pow(std::int64_t d) {
    UniPoly p;
    p.coeffs.assign(std::size_t(d) + 1, BigInt(0));
    p.coeffs[0] = 1;
    p.coeffs[std::size_t(d)] = -1;
    return p;
}

namespace detail {

// Numerator of the Hilbert series of A/L for a monomial ideal L in the
// weighted ring: N with P = N / prod_i (1 - t^{w_i}). Pivot recursion on a
// frequent variable; the short exact sequence
//   0 -> A/(L:x)(-w) -> A/L -> A/(L+(x)) -> 0
// gives N(L) = N(L + (x)) + t^w N(L : x).
inline UniPoly hilbert_numerator(const MonomialIdeal& L, const std::vector<std::int64_t>& weights) {
    if (L.gens.empty()) return UniPoly::one();
    if (L.is_unit_ideal()) return UniPoly::zero();

    MonomialOrder measure;
    measure.weights = weights;

    // pure-power base case: generators in an antichain with pairwise
    // disjoint support multiply out directly
    bool all_pure = true;
    for (const auto& g : L.gens) {
        int nz = 0;
        for (auto e : g)
            if (e > 0) ++nz;
        if (nz > 1) { all_pure = false; break; }
    }
    if (all_pure) {
        UniPoly acc = UniPoly::one();
        for (const auto& g : L.gens) acc = acc * one_minus_t_pow(measure.weighted_degree(g));
        return acc;
    }

    // pivot: the variable hitting the most generators
    std::vector<std::size_t> hits(L.arity, 0);
    for (const auto& g : L.gens)
        for (std::size_t i = 0; i < L.arity; ++i)
            if (g[i] > 0) ++hits[i];
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < L.arity; ++i)
        if (hits[i] > hits[pivot]) pivot = i;

    Exponents xv(L.arity, 0);
    xv[pivot] = 1;

    std::vector<Exponents> plus = L.gens;
    plus.push_back(xv);
    MonomialIdeal Lplus(L.arity, std::move(plus));

    MonomialIdeal Lcolon = monomial_colon_single(L, xv);

    return hilbert_numerator(Lplus, weights) +
           hilbert_numerator(Lcolon, weights).shifted(weights[pivot]);
}

template <class F>
MonomialIdeal initial_ideal_of(const Ideal<F>& I, const GbConfig& cfg) {
    auto gb = groebner_basis(I, cfg);
    return MonomialIdeal(I.ring.base->arity(), gb.initial_ideal());
}

} // namespace detail

// P(R,t) = N(t) / prod_i (1 - t^{w_i}) with d = pole order at t = 1.
struct HilbertSeries {
    UniPoly numerator;
    std::vector<std::int64_t> denom_weights;
    std::int64_t pole_order = 0;

    // coefficients of the series expansion up to degree `cutoff`
    std::vector<BigInt> expand(std::int64_t cutoff) const {
        std::vector<BigInt> c(std::size_t(cutoff) + 1, BigInt(0));
        for (std::size_t i = 0; i < numerator.coeffs.size() && i <= std::size_t(cutoff); ++i)
            c[i] = numerator.coeffs[i];
        for (auto w : denom_weights)
            for (std::size_t n = std::size_t(w); n <= std::size_t(cutoff); ++n)
                c[n] += c[n - std::size_t(w)];
        return c;
    }

    // lim_{t->1} (1-t)^{pole_order} P(R,t), exact.
    BigRat limit_constant() const {
        if (numerator.is_zero()) return BigRat(0);
        UniPoly m = numerator;
        while (m.eval_at_one() == 0) m = m.divide_by_one_minus_t();
        BigInt denom = 1;
        for (auto w : denom_weights) denom *= w;
        return BigRat(m.eval_at_one(), denom);
    }
};

template <class F>
HilbertSeries hilbert_series(const RingPresentation<F>& R,
                             const GbConfig& cfg = default_gb_config()) {
    Ideal<F> rel(R, {});
    auto init = detail::initial_ideal_of(rel, cfg);
    HilbertSeries hs;
    hs.numerator = detail::hilbert_numerator(init, R.base->order.weights);
    hs.denom_weights = R.base->order.weights;
    if (hs.numerator.is_zero()) {
        hs.pole_order = 0;
        return hs;
    }
    UniPoly m = hs.numerator;
    std::int64_t vanish = 0;
    while (!m.is_zero() && m.eval_at_one() == 0) {
        m = m.divide_by_one_minus_t();
        ++vanish;
    }
    hs.pole_order = std::int64_t(hs.denom_weights.size()) - vanish;
    return hs;
}

template <class F>
std::int64_t krull_dimension(const RingPresentation<F>& R,
                             const GbConfig& cfg = default_gb_config()) {
    return hilbert_series(R, cfg).pole_order;
}

template <class F>
BigRat multiplicity_constant(const RingPresentation<F>& R,
                             const GbConfig& cfg = default_gb_config()) {
    return hilbert_series(R, cfg).limit_constant();
}

// Count of weighted-degree-n monomials outside the initial ideal of the
// relations (the dimension of R_n); used to cross-check series expansions.
template <class F>
BigInt standard_monomial_count(const RingPresentation<F>& R, std::int64_t degree,
                               const GbConfig& cfg = default_gb_config()) {
    Ideal<F> rel(R, {});
    auto init = detail::initial_ideal_of(rel, cfg);
    const auto& weights = R.base->order.weights;
    BigInt count = 0;
    Exponents cur(weights.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
        if (i + 1 == weights.size()) {
            if (left % weights[i] == 0) {
                cur[i] = left / weights[i];
                if (!staircase_member(cur, init)) ++count;
            }
            return;
        }
        for (std::int64_t e = 0; e * weights[i] <= left; ++e) {
            cur[i] = e;
            self(self, i + 1, left - e * weights[i]);
        }
    };
    if (!weights.empty()) rec(rec, 0, degree);
    return count;
}

template <class F>
std::optional<std::int64_t> quotient_length(const Ideal<F>& I,
                                            const GbConfig& cfg = default_gb_config()) {
    return staircase_length(detail::initial_ideal_of(I, cfg));
}

// d homogeneous elements (d = dim R) generating an ideal of finite
// colength. Inhomogeneous or zero generators are errors, not `false`.
template <class F>
bool is_hsop(const std::vector<Polynomial<F>>& gens, const RingPresentation<F>& R,
             const GbConfig& cfg = default_gb_config()) {
    for (const auto& g : gens) {
        if (g.is_zero()) throw MathError("hsop candidate contains a zero generator");
        if (!g.is_homogeneous())
            throw MathError("hsop candidate is not homogeneous: " + to_string(g));
    }
    if (std::int64_t(gens.size()) != krull_dimension(R, cfg)) return false;
    return quotient_length(Ideal<F>(R, gens), cfg).has_value();
}

struct MultiplicityReport {
    std::vector<std::int64_t> ideal_degrees; // sorted ascending
    BigRat ring_constant;                    // lim (1-t)^d P(R,t)
    BigRat multiplicity;                     // e(J), exact
};

// e(J) = (prod deg f_i) * lim_{t->1} (1-t)^d P(R,t) for J generated by an
// hsop f_1..f_d.
template <class F>
MultiplicityReport multiplicity_hsop(const Ideal<F>& J, const GbConfig& cfg = default_gb_config()) {
    const auto& R = J.ring;
    if (!is_hsop(J.gens, R, cfg))
        throw MathError("multiplicity_hsop: generators are not a homogeneous system of parameters");
    MultiplicityReport rep;
    for (const auto& g : J.gens) rep.ideal_degrees.push_back(*g.weighted_degree());
    std::sort(rep.ideal_degrees.begin(), rep.ideal_degrees.end());
    rep.ring_constant = multiplicity_constant(R, cfg);
    rep.multiplicity = rep.ring_constant;
    for (auto d : rep.ideal_degrees) rep.multiplicity *= d;
    if (rep.multiplicity <= 0) throw MathError("computed multiplicity is not positive");
    return rep;
}

struct HilbertSamuelReport {
    BigRat value;                      // stabilized d-th finite difference
    bool stabilized = false;           // last two differences agree
    std::vector<std::int64_t> lengths; // l(R/J^n) for n = 1..nmax
};

namespace detail {

// d-th finite differences of n -> l(R/I^n); shared by the hsop oracle and
// the m-primary multiplicity used in diagnostics.
template <class F>
HilbertSamuelReport hs_finite_differences(const Ideal<F>& I, std::int64_t dim, std::int64_t nmax,
                                          const GbConfig& cfg) {
    HilbertSamuelReport rep;
    for (std::int64_t n = 1; n <= nmax; ++n) {
        Ideal<F> In(I.ring, power_products(I.gens, n, I.ring.base));
        auto len = quotient_length(In, cfg);
        if (!len) throw MathError("quotient by ideal power has infinite length");
        rep.lengths.push_back(*len);
    }
    std::vector<BigInt> diff;
    diff.reserve(rep.lengths.size() + 1);
    diff.push_back(0); // l(R/I^0) = 0
    for (auto v : rep.lengths) diff.push_back(v);
    for (std::int64_t k = 0; k < dim; ++k) {
        std::vector<BigInt> next;
        for (std::size_t i = 1; i < diff.size(); ++i) next.push_back(diff[i] - diff[i - 1]);
        diff = std::move(next);
    }
    if (diff.size() >= 2) {
        rep.stabilized = diff[diff.size() - 1] == diff[diff.size() - 2];
        rep.value = BigRat(diff.back());
    } else if (diff.size() == 1) {
        rep.value = BigRat(diff.back());
    } else {
        throw MathError("hilbert_samuel oracle needs nmax > dim");
    }
    return rep;
}

} // namespace detail

// Independent multiplicity oracle: the d-th finite difference of
// n -> l(R/J^n) stabilizes to e(J) once n passes the postulation number.
template <class F>
HilbertSamuelReport hilbert_samuel_oracle(const Ideal<F>& J, std::int64_t nmax,
                                          const GbConfig& cfg = default_gb_config()) {
    const auto& R = J.ring;
    if (!is_hsop(J.gens, R, cfg))
        throw MathError("hilbert_samuel_oracle: not a homogeneous system of parameters");
    std::int64_t d = krull_dimension(R, cfg);
    if (nmax < d + 2) throw MathError("hilbert_samuel_oracle: nmax must be at least dim + 2");
    return detail::hs_finite_differences(J, d, nmax, cfg);
}

// Same finite-difference computation for an arbitrary finite-colength
// homogeneous ideal (no hsop gate); diagnostics only.
template <class F>
HilbertSamuelReport multiplicity_primary(const Ideal<F>& I, std::int64_t nmax,
                                         const GbConfig& cfg = default_gb_config()) {
    std::int64_t d = krull_dimension(I.ring, cfg);
    if (nmax < d + 2) throw MathError("multiplicity_primary: nmax must be at least dim + 2");
    return detail::hs_finite_differences(I, d, nmax, cfg);
}

} // namespace fthresh

#endif
