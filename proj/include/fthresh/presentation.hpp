#ifndef FTHRESH_PRESENTATION_HPP
#define FTHRESH_PRESENTATION_HPP

#include <set>
#include <string>
#include <vector>

#include "fthresh/polynomial.hpp"

namespace fthresh {

// R = B/I: the ambient weighted ring together with homogeneous defining
// relations. An empty relation list presents the polynomial ring itself.
template <class F>
struct RingPresentation {
    RingPtr<F> base;
    std::vector<Polynomial<F>> relations;

    RingPresentation() = default;
    RingPresentation(RingPtr<F> b, std::vector<Polynomial<F>> rels)
        : base(std::move(b)), relations(std::move(rels)) {
        for (const auto& r : relations) {
            require_same_ring(base, r.ring());
            if (r.is_zero()) throw MathError("zero relation in presentation");
            if (!r.is_homogeneous())
                throw MathError("relation is not homogeneous: " + to_string(r));
        }
    }

    bool same_presentation(const RingPresentation& o) const {
        if (!base->same_structure(*o.base)) return false;
        if (relations.size() != o.relations.size()) return false;
        for (std::size_t i = 0; i < relations.size(); ++i)
            if (relations[i] != o.relations[i]) return false;
        return true;
    }
};

// An ideal of R given by generators. Construction canonicalizes: zero
// generators dropped, duplicates removed, order of first appearance kept.
template <class F>
struct Ideal {
    RingPresentation<F> ring;
    std::vector<Polynomial<F>> gens;

    Ideal() = default;
    Ideal(RingPresentation<F> r, std::vector<Polynomial<F>> generators)
        : ring(std::move(r)) {
        gens.reserve(generators.size());
        for (auto& g : generators) {
            require_same_ring(ring.base, g.ring());
            if (g.is_zero()) continue;
            bool dup = false;
            for (const auto& h : gens)
                if (h == g) { dup = true; break; }
            if (!dup) gens.push_back(std::move(g));
        }
    }

    bool is_zero_ideal() const { return gens.empty(); }
};

template <class F>
void require_same_presentation(const Ideal<F>& a, const Ideal<F>& b) {
    if (!a.ring.same_presentation(b.ring))
        throw MathError("ideals live in different presentations");
}

// Visit every product of `r` generators (one per multiset combination of
// exponents summing to r). The visitor returns false to stop early; the
// function returns false iff a visitor did. Duplicate products may repeat,
// which is harmless for containment sweeps.
template <class F, class Visit>
bool for_each_power_product(const std::vector<Polynomial<F>>& gens, std::int64_t r,
                            const RingPtr<F>& ring, Visit&& visit) {
    if (r == 0) return visit(Polynomial<F>::one(ring));
    if (gens.empty()) return true;
    // cache g^k along the current branch: powers[i] holds gens[i]^{expo[i]}
    std::vector<std::int64_t> expo(gens.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t remaining,
                   const Polynomial<F>& acc) -> bool {
        if (i + 1 == gens.size()) {
            return visit(acc * poly_power(gens[i], remaining));
        }
        for (std::int64_t v = remaining; v >= 0; --v) {
            expo[i] = v;
            Polynomial<F> next = v == 0 ? acc : acc * poly_power(gens[i], v);
            if (!self(self, i + 1, remaining - v, next)) return false;
        }
        return true;
    };
    return rec(rec, 0, r, Polynomial<F>::one(ring));
}

// All products of `r` generators, deduplicated. A generating set of I^r for
// any generating set of I.
template <class F>
std::vector<Polynomial<F>> power_products(const std::vector<Polynomial<F>>& gens, std::int64_t r,
                                          const RingPtr<F>& ring) {
    std::vector<Polynomial<F>> result;
    auto cmp = [](const Polynomial<F>& a, const Polynomial<F>& b) { return struct_less(a, b); };
    std::set<Polynomial<F>, decltype(cmp)> seen(cmp);
    for_each_power_product(gens, r, ring, [&](Polynomial<F> prod) {
        if (!prod.is_zero() && seen.insert(prod).second) result.push_back(std::move(prod));
        return true;
    });
    return result;
}

} // namespace fthresh

#endif
