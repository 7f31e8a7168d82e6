#ifndef FTHRESH_POLYNOMIAL_HPP
#define FTHRESH_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fthresh/fields.hpp"
#include "fthresh/ring.hpp"

namespace fthresh {

// Sparse multivariate polynomial with terms kept strictly descending under
// the ring's monomial order. The canonical form (sorted, no zero
// coefficients) makes equality, hashing and printing deterministic.
template <class F>
class Polynomial {
public:
    using Coeff = typename F::Elem;
    struct Term {
        Exponents mono;
        Coeff coeff;
    };

    explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

    Polynomial(RingPtr<F> ring, std::vector<Term> terms, bool already_canonical = false)
        : ring_(std::move(ring)), terms_(std::move(terms)) {
        for (const auto& t : terms_)
            if (t.mono.size() != ring_->arity())
                throw MathError("exponent vector arity mismatch");
        if (!already_canonical) normalize();
    }

    static Polynomial zero(RingPtr<F> ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr<F> ring, Coeff c) {
        Polynomial p(ring);
        if (!ring->field.is_zero(c))
            p.terms_.push_back({Exponents(ring->arity(), 0), std::move(c)});
        return p;
    }

    static Polynomial one(RingPtr<F> ring) {
        auto c = ring->field.one();
        return constant(std::move(ring), c);
    }

    static Polynomial monomial(RingPtr<F> ring, Exponents e, Coeff c) {
        Polynomial p(ring);
        if (e.size() != p.ring_->arity()) throw MathError("exponent vector arity mismatch");
        if (!p.ring_->field.is_zero(c)) p.terms_.push_back({std::move(e), std::move(c)});
        return p;
    }

    static Polynomial variable(RingPtr<F> ring, std::size_t idx) {
        Exponents e(ring->arity(), 0);
        e.at(idx) = 1;
        auto c = ring->field.one();
        return monomial(std::move(ring), std::move(e), c);
    }

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const {
        if (terms_.empty()) throw MathError("zero polynomial has no leading term");
        return terms_.front();
    }
    const Exponents& leading_monomial() const { return leading_term().mono; }
    const Coeff& leading_coeff() const { return leading_term().coeff; }

    // Everything but the leading term.
    Polynomial tail() const {
        if (terms_.empty()) return *this;
        Polynomial r(ring_);
        r.terms_.assign(terms_.begin() + 1, terms_.end());
        return r;
    }

    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && mono_is_one(terms_[0].mono));
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, ring_->field.neg(t.coeff)});
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        const auto& field = a.ring_->field;
        const auto& order = a.ring_->order;
        Polynomial r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = order.compare(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                auto s = field.add(a.terms_[i].coeff, b.terms_[j].coeff);
                if (!field.is_zero(s)) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        if (a.is_zero() || b.is_zero()) return zero(a.ring_);
        if (b.terms_.size() == 1) return a.times_term(b.terms_[0]);
        if (a.terms_.size() == 1) return b.times_term(a.terms_[0]);
        const auto& field = a.ring_->field;
        std::vector<Term> cross;
        cross.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_)
                cross.push_back({mono_mul(ta.mono, tb.mono), field.mul(ta.coeff, tb.coeff)});
        return Polynomial(a.ring_, std::move(cross));
    }

    // f * (single term)
    Polynomial times_term(const Term& t) const {
        Polynomial r(ring_);
        if (ring_->field.is_zero(t.coeff)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& ta : terms_) {
            auto c = ring_->field.mul(ta.coeff, t.coeff);
            if (!ring_->field.is_zero(c)) r.terms_.push_back({mono_mul(ta.mono, t.mono), std::move(c)});
        }
        return r; // multiplying by a fixed monomial preserves the term order
    }

    Polynomial times_monomial(const Exponents& m) const {
        return times_term(Term{m, ring_->field.one()});
    }

    Polynomial scaled(const Coeff& c) const {
        Polynomial r(ring_);
        if (ring_->field.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, ring_->field.mul(t.coeff, c)});
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(ring_->field.inv(leading_coeff()));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        const auto& field = a.ring_->field;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            if (a.terms_[i].mono != b.terms_[i].mono) return false;
            if (!field.eq(a.terms_[i].coeff, b.terms_[i].coeff)) return false;
        }
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Structural order for deterministic sets of polynomials (not the
    // monomial order on terms, which only orders monomials).
    friend bool struct_less(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
        const auto& field = a.ring_->field;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            if (a.terms_[i].mono != b.terms_[i].mono) return a.terms_[i].mono < b.terms_[i].mono;
            if (!field.eq(a.terms_[i].coeff, b.terms_[i].coeff))
                return field.less(a.terms_[i].coeff, b.terms_[i].coeff);
        }
        return false;
    }

    // Weighted degree of a nonzero homogeneous polynomial; nullopt when the
    // terms disagree ("not homogeneous").
    std::optional<std::int64_t> weighted_degree() const {
        if (is_zero()) throw MathError("zero polynomial has no degree");
        const auto& order = ring_->order;
        std::int64_t d = order.weighted_degree(terms_[0].mono);
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (order.weighted_degree(terms_[i].mono) != d) return std::nullopt;
        return d;
    }

    bool is_homogeneous() const { return is_zero() || weighted_degree().has_value(); }

    // Largest weighted degree over the terms (for inhomogeneous bookkeeping).
    std::int64_t max_weighted_degree() const {
        if (is_zero()) throw MathError("zero polynomial has no degree");
        std::int64_t d = ring_->order.weighted_degree(terms_[0].mono);
        for (const auto& t : terms_)
            d = std::max(d, ring_->order.weighted_degree(t.mono));
        return d;
    }

private:
    void normalize() {
        const auto& order = ring_->order;
        const auto& field = ring_->field;
        std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
            return order.greater(a.mono, b.mono);
        });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono) {
                out.back().coeff = field.add(out.back().coeff, t.coeff);
                if (field.is_zero(out.back().coeff)) out.pop_back();
            } else if (!field.is_zero(t.coeff)) {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

    RingPtr<F> ring_;
    std::vector<Term> terms_;
};

// f^n by repeated squaring. Over F_p the p^e-th power distributes over sums,
// so that part is done term by term (coefficients are fixed by Fermat).
template <class F>
Polynomial<F> poly_power(const Polynomial<F>& f, std::int64_t n) {
    if (n < 0) throw MathError("negative polynomial power");
    auto ring = f.ring();
    if (n == 0) return Polynomial<F>::one(ring);
    if (f.is_zero()) return f;

    std::int64_t m = n;
    Polynomial<F> base = f;
    if (std::uint64_t p = ring->field.characteristic(); p > 1) {
        std::int64_t frob = 1;
        while (m % std::int64_t(p) == 0 && frob <= MAX_EXPONENT / std::int64_t(p)) {
            frob = checked_mul(frob, std::int64_t(p));
            m /= std::int64_t(p);
        }
        if (frob > 1) {
            std::vector<typename Polynomial<F>::Term> terms;
            terms.reserve(f.terms().size());
            for (const auto& t : f.terms()) terms.push_back({mono_pow(t.mono, frob), t.coeff});
            base = Polynomial<F>(ring, std::move(terms), true);
        }
    }
    Polynomial<F> acc = Polynomial<F>::one(ring);
    while (m > 0) {
        if (m & 1) acc = acc * base;
        if (m >>= 1) base = base * base;
    }
    return acc;
}

template <class F>
Polynomial<F> poly_mul(const Polynomial<F>& f, const Polynomial<F>& g) {
    return f * g;
}

// Canonical text form; parse_polynomial of the result gives back the input.
template <class F>
std::string to_string(const Polynomial<F>& f) {
    if (f.is_zero()) return "0";
    const auto& ring = *f.ring();
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        bool neg = ring.field.is_negative_display(t.coeff);
        auto mag = ring.field.abs_display(t.coeff);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string coeff_str = ring.field.to_string(mag);
        bool coeff_is_one = ring.field.is_one(mag);
        if (mono_is_one(t.mono)) {
            out += coeff_str;
            continue;
        }
        bool wrote_factor = false;
        if (!coeff_is_one) {
            out += coeff_str;
            wrote_factor = true;
        }
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (wrote_factor) out += "*";
            out += ring.vars[i].name;
            if (t.mono[i] != 1) out += "^" + std::to_string(t.mono[i]);
            wrote_factor = true;
        }
    }
    return out;
}

} // namespace fthresh

#endif
