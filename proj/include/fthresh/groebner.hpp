#ifndef FTHRESH_GROEBNER_HPP
#define FTHRESH_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <type_traits>
#include <vector>

#include "fthresh/presentation.hpp"

namespace fthresh {

struct GbConfig {
    std::int64_t step_limit = 1'000'000; // single-term reduction steps
};

inline const GbConfig& default_gb_config() {
    static const GbConfig cfg{};
    return cfg;
}

namespace detail {

struct StepCounter {
    std::int64_t steps = 0;
    std::int64_t limit;
    explicit StepCounter(const GbConfig& cfg) : limit(cfg.step_limit) {}
    void step() {
        if (++steps > limit)
            throw ResourceLimitError("Groebner step limit of " + std::to_string(limit) +
                                     " reduction steps exceeded");
    }
};

// Scale a nonzero polynomial to its canonical working form: monic over F_p,
// primitive integer coefficients with positive leading coefficient over Q.
template <class F>
Polynomial<F> normalize_scale(const Polynomial<F>& f) {
    if (f.is_zero()) return f;
    if constexpr (std::is_same_v<F, RationalField>) {
        BigInt num_gcd = 0, den_lcm = 1;
        for (const auto& t : f.terms()) {
            num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(rat_num(t.coeff)));
            den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(t.coeff));
        }
        BigRat scale(den_lcm, num_gcd);
        if (f.leading_coeff() < 0) scale = -scale;
        return f.scaled(scale);
    } else {
        return f.monic();
    }
}

// Fully reduced remainder of f modulo a list of nonzero polynomials.
template <class F>
Polynomial<F> reduce_full(Polynomial<F> f, const std::vector<Polynomial<F>>& basis,
                          StepCounter& sc) {
    const auto ring = f.ring();
    const auto& field = ring->field;
    std::vector<typename Polynomial<F>::Term> remainder;
    while (!f.is_zero()) {
        const auto lt = f.leading_term();
        const Polynomial<F>* divisor = nullptr;
        for (const auto& g : basis) {
            if (mono_divides(g.leading_monomial(), lt.mono)) {
                divisor = &g;
                break;
            }
        }
        if (divisor) {
            sc.step();
            auto qmono = mono_div(lt.mono, divisor->leading_monomial());
            auto qcoeff = field.div(lt.coeff, divisor->leading_coeff());
            f = f - divisor->times_term({std::move(qmono), std::move(qcoeff)});
        } else {
            remainder.push_back(lt);
            f = f.tail();
        }
    }
    return Polynomial<F>(ring, std::move(remainder), true);
}

template <class F>
struct SPair {
    Exponents lcm;
    std::size_t i, j; // i < j, indices into the working basis
};

// Buchberger with the Gebauer-Moeller update and normal pair selection
// (smallest lcm in the term order). Returns the unique reduced basis.
template <class F>
std::vector<Polynomial<F>> buchberger(const RingPtr<F>& ring,
                                      const std::vector<Polynomial<F>>& input,
                                      StepCounter& sc) {
    const auto& order = ring->order;
    std::vector<Polynomial<F>> gb;
    std::vector<SPair<F>> pairs;

    auto update_pairs = [&](std::size_t t) {
        const Exponents& lm_t = gb[t].leading_monomial();
        // candidate pairs (i, t); Gebauer-Moeller M/F/T pruning
        std::vector<SPair<F>> cand;
        cand.reserve(t);
        for (std::size_t i = 0; i < t; ++i)
            cand.push_back({mono_lcm(gb[i].leading_monomial(), lm_t), i, t});
        std::vector<SPair<F>> kept;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            bool coprime = mono_coprime(gb[cand[a].i].leading_monomial(), lm_t);
            bool dominated = false;
            if (!coprime) {
                for (std::size_t b = a + 1; b < cand.size() && !dominated; ++b)
                    if (mono_divides(cand[b].lcm, cand[a].lcm)) dominated = true;
                for (const auto& k : kept)
                    if (mono_divides(k.lcm, cand[a].lcm)) { dominated = true; break; }
            }
            if (coprime || !dominated) kept.push_back(cand[a]);
        }
        std::vector<SPair<F>> fresh;
        for (auto& c : kept)
            if (!mono_coprime(gb[c.i].leading_monomial(), lm_t)) fresh.push_back(std::move(c));
        // B criterion on old pairs
        std::vector<SPair<F>> survivors;
        survivors.reserve(pairs.size() + fresh.size());
        for (auto& pr : pairs) {
            const Exponents& lm_i = gb[pr.i].leading_monomial();
            const Exponents& lm_j = gb[pr.j].leading_monomial();
            bool drop = mono_divides(lm_t, pr.lcm) && mono_lcm(lm_i, lm_t) != pr.lcm &&
                        mono_lcm(lm_j, lm_t) != pr.lcm;
            if (!drop) survivors.push_back(std::move(pr));
        }
        for (auto& c : fresh) survivors.push_back(std::move(c));
        pairs = std::move(survivors);
    };

    auto add_element = [&](Polynomial<F> h) {
        gb.push_back(normalize_scale(h));
        update_pairs(gb.size() - 1);
    };

    for (const auto& g : input) {
        if (g.is_zero()) continue;
        auto h = reduce_full(g, gb, sc);
        if (!h.is_zero()) add_element(std::move(h));
    }

    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            int c = order.compare(pairs[k].lcm, pairs[best].lcm);
            if (c < 0 || (c == 0 && (pairs[k].i < pairs[best].i ||
                                     (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
                best = k;
        }
        SPair<F> pr = pairs[best];
        pairs.erase(pairs.begin() + long(best));

        const auto& f = gb[pr.i];
        const auto& g = gb[pr.j];
        auto spoly = f.times_term({mono_div(pr.lcm, f.leading_monomial()), g.leading_coeff()}) -
                     g.times_term({mono_div(pr.lcm, g.leading_monomial()), f.leading_coeff()});
        auto h = reduce_full(std::move(spoly), gb, sc);
        if (!h.is_zero()) add_element(std::move(h));
    }

    // minimalize: keep only elements whose leading monomial is not divisible
    // by another kept leading monomial
    std::vector<std::size_t> idx(gb.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        int c = order.compare(gb[a].leading_monomial(), gb[b].leading_monomial());
        return c < 0 || (c == 0 && a < b);
    });
    std::vector<Polynomial<F>> minimal;
    for (std::size_t i : idx) {
        bool redundant = false;
        for (const auto& h : minimal)
            if (mono_divides(h.leading_monomial(), gb[i].leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(gb[i]);
    }

    // tail-reduce each element against the others and make monic
    std::vector<Polynomial<F>> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<F>> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(reduce_full(minimal[i], others, sc).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
        return order.greater(a.leading_monomial(), b.leading_monomial());
    });
    return reduced;
}

} // namespace detail

// Reduced Groebner basis of (I.gens + ring relations) in the ambient ring.
// All quotient-ring computations go through this: adjoining the relations
// turns R-questions into ambient questions.
template <class F>
struct GroebnerBasis {
    Ideal<F> ideal;
    std::vector<Polynomial<F>> basis;

    std::vector<Exponents> initial_ideal() const {
        std::vector<Exponents> lms;
        lms.reserve(basis.size());
        for (const auto& g : basis) lms.push_back(g.leading_monomial());
        return lms;
    }
};

template <class F>
GroebnerBasis<F> groebner_basis(const Ideal<F>& ideal,
                                const GbConfig& cfg = default_gb_config()) {
    detail::StepCounter sc(cfg);
    std::vector<Polynomial<F>> input = ideal.gens;
    for (const auto& r : ideal.ring.relations) input.push_back(r);
    GroebnerBasis<F> gb;
    gb.ideal = ideal;
    gb.basis = detail::buchberger(ideal.ring.base, input, sc);
    return gb;
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb,
                          const GbConfig& cfg = default_gb_config()) {
    require_same_ring(f.ring(), gb.ideal.ring.base);
    detail::StepCounter sc(cfg);
    return detail::reduce_full(f, gb.basis, sc);
}

template <class F>
bool ideal_member(const Polynomial<F>& f, const Ideal<F>& ideal,
                  const GbConfig& cfg = default_gb_config()) {
    return normal_form(f, groebner_basis(ideal, cfg), cfg).is_zero();
}

// Containment B `subseteq` A, both modulo the shared relations.
template <class F>
bool ideal_contains(const Ideal<F>& a, const Ideal<F>& b,
                    const GbConfig& cfg = default_gb_config()) {
    require_same_presentation(a, b);
    auto gb = groebner_basis(a, cfg);
    for (const auto& g : b.gens)
        if (!normal_form(g, gb, cfg).is_zero()) return false;
    return true;
}

template <class F>
bool ideal_equal(const Ideal<F>& a, const Ideal<F>& b,
                 const GbConfig& cfg = default_gb_config()) {
    return ideal_contains(a, b, cfg) && ideal_contains(b, a, cfg);
}

// Bounded check that every generator of `a` has some power <= maxexp lying
// in J (mod relations). A false answer is only a verdict up to that bound.
template <class F>
bool radical_contains(const Ideal<F>& J, const Ideal<F>& a, std::int64_t maxexp,
                      const GbConfig& cfg = default_gb_config()) {
    require_same_presentation(J, a);
    if (maxexp < 1) throw MathError("radical_contains requires maxexp >= 1");
    auto gb = groebner_basis(J, cfg);
    for (const auto& g : a.gens) {
        bool found = false;
        for (std::int64_t m = 1; m <= maxexp; ++m) {
            if (normal_form(poly_power(g, m), gb, cfg).is_zero()) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

template <class F>
std::int64_t default_radical_maxexp(const RingPresentation<F>& r) {
    std::int64_t sum = 0;
    for (const auto& v : r.base->vars) sum = checked_add(sum, v.degree);
    return 2 * sum;
}

namespace detail {

// Transport polynomials into a ring with `extra` fresh variables prepended
// (the elimination block) and back.
template <class F>
Polynomial<F> shift_into(const Polynomial<F>& f, const RingPtr<F>& ext, std::size_t extra) {
    std::vector<typename Polynomial<F>::Term> terms;
    terms.reserve(f.term_count());
    for (const auto& t : f.terms()) {
        Exponents e(ext->arity(), 0);
        for (std::size_t i = 0; i < t.mono.size(); ++i) e[extra + i] = t.mono[i];
        terms.push_back({std::move(e), t.coeff});
    }
    return Polynomial<F>(ext, std::move(terms));
}

template <class F>
bool free_of_block(const Polynomial<F>& f, std::size_t block) {
    for (const auto& t : f.terms())
        for (std::size_t i = 0; i < block; ++i)
            if (t.mono[i] != 0) return false;
    return true;
}

template <class F>
Polynomial<F> project_out(const Polynomial<F>& f, const RingPtr<F>& target, std::size_t block) {
    std::vector<typename Polynomial<F>::Term> terms;
    terms.reserve(f.term_count());
    for (const auto& t : f.terms()) {
        Exponents e(t.mono.begin() + long(block), t.mono.end());
        terms.push_back({std::move(e), t.coeff});
    }
    return Polynomial<F>(target, std::move(terms));
}

// q with f = q*g; greedy leading-term division, valid whenever g | f.
template <class F>
Polynomial<F> exact_divide(Polynomial<F> f, const Polynomial<F>& g) {
    const auto ring = f.ring();
    const auto& field = ring->field;
    std::vector<typename Polynomial<F>::Term> qterms;
    while (!f.is_zero()) {
        const auto& lt = f.leading_term();
        if (!mono_divides(g.leading_monomial(), lt.mono))
            throw MathError("exact division failed");
        typename Polynomial<F>::Term qt{mono_div(lt.mono, g.leading_monomial()),
                                        field.div(lt.coeff, g.leading_coeff())};
        f = f - g.times_term(qt);
        qterms.push_back(std::move(qt));
    }
    return Polynomial<F>(ring, std::move(qterms));
}

} // namespace detail

// Generators of the intersection of two ideals in the ambient ring (the
// relations are the caller's business), via the single auxiliary variable s:
// (s*A + (1-s)*B) `cap` k[vars].
template <class F>
std::vector<Polynomial<F>> intersect_ambient(const RingPtr<F>& ring,
                                             const std::vector<Polynomial<F>>& A,
                                             const std::vector<Polynomial<F>>& B,
                                             const GbConfig& cfg = default_gb_config()) {
    std::vector<VariableSpec> vars;
    vars.push_back({"@s", 1});
    for (const auto& v : ring->vars) vars.push_back(v);
    auto ext = make_ring(ring->field, vars, 1);

    auto s = Polynomial<F>::variable(ext, 0);
    auto one_minus_s = Polynomial<F>::one(ext) - s;
    std::vector<Polynomial<F>> gens;
    for (const auto& f : A) gens.push_back(s * detail::shift_into(f, ext, 1));
    for (const auto& g : B) gens.push_back(one_minus_s * detail::shift_into(g, ext, 1));

    detail::StepCounter sc(cfg);
    auto gb = detail::buchberger(ext, gens, sc);
    std::vector<Polynomial<F>> result;
    for (const auto& h : gb)
        if (detail::free_of_block(h, 1)) result.push_back(detail::project_out(h, ring, 1));
    return result;
}

// Colon ideal {f : f*J `subseteq` I} in R = ambient/relations, computed in
// the ambient ring as ((I + relations) : g) intersected over the generators
// g of J, with (K : g) = (K `cap` (g)) / g.
template <class F>
Ideal<F> colon_ideal(const Ideal<F>& I, const Ideal<F>& J,
                     const GbConfig& cfg = default_gb_config()) {
    require_same_presentation(I, J);
    const auto& ring = I.ring.base;

    std::vector<Polynomial<F>> ambient = I.gens;
    for (const auto& r : I.ring.relations) ambient.push_back(r);

    if (J.gens.empty()) throw MathError("colon by the zero ideal");

    std::vector<Polynomial<F>> acc; // generators of the running intersection
    bool first = true;
    for (const auto& g : J.gens) {
        std::vector<Polynomial<F>> quot;
        if (g.is_constant()) {
            quot = ambient; // colon by a unit
        } else {
            auto meet = intersect_ambient(ring, ambient, {g}, cfg);
            quot.reserve(meet.size());
            for (const auto& h : meet) quot.push_back(detail::exact_divide(h, g));
        }
        if (first) {
            acc = std::move(quot);
            first = false;
        } else {
            acc = intersect_ambient(ring, acc, quot, cfg);
        }
    }

    // present the result inside R: reduce generators modulo the relations
    Ideal<F> rel_ideal(I.ring, {});
    auto rel_gb = groebner_basis(rel_ideal, cfg);
    std::vector<Polynomial<F>> reduced;
    for (const auto& h : acc) {
        auto nf = normal_form(h, rel_gb, cfg);
        if (!nf.is_zero()) reduced.push_back(detail::normalize_scale(nf).monic());
    }
    return Ideal<F>(I.ring, std::move(reduced));
}

// Defining (toric) ideal of the subring generated by monomial images:
// kernel of k[target] -> k[source], T_i -> m_i, by eliminating the source
// block from (T_i - m_i). Target weights are the weighted degrees of the
// images divided by their common gcd.
template <class F>
RingPresentation<F> monomial_map_kernel(const F& field, const std::vector<std::string>& target_names,
                                        const std::vector<VariableSpec>& source_vars,
                                        const std::vector<Exponents>& images,
                                        const GbConfig& cfg = default_gb_config()) {
    if (target_names.size() != images.size())
        throw MathError("monomial_map_kernel: one image per target variable required");
    if (images.empty()) throw MathError("monomial_map_kernel: no images");

    MonomialOrder source_order;
    for (const auto& v : source_vars) source_order.weights.push_back(v.degree);

    std::vector<std::int64_t> degs;
    for (const auto& img : images) {
        if (img.size() != source_vars.size())
            throw MathError("monomial_map_kernel: image arity mismatch");
        if (mono_is_one(img)) throw MathError("monomial_map_kernel: constant image");
        for (auto e : img)
            if (e < 0) throw MathError("monomial_map_kernel: negative exponent");
        degs.push_back(source_order.weighted_degree(img));
    }
    std::int64_t g = 0;
    for (auto d : degs) g = std::gcd(g, d);

    // extended ring: source block first (eliminated), then targets with
    // unscaled weights so the graph relations are homogeneous
    std::vector<VariableSpec> ext_vars = source_vars;
    for (std::size_t i = 0; i < target_names.size(); ++i)
        ext_vars.push_back({target_names[i], degs[i]});
    auto ext = make_ring(field, ext_vars, source_vars.size());

    std::vector<Polynomial<F>> gens;
    for (std::size_t i = 0; i < images.size(); ++i) {
        Exponents tvar(ext->arity(), 0);
        tvar[source_vars.size() + i] = 1;
        Exponents img(ext->arity(), 0);
        for (std::size_t k = 0; k < images[i].size(); ++k) img[k] = images[i][k];
        gens.push_back(Polynomial<F>::monomial(ext, tvar, field.one()) -
                       Polynomial<F>::monomial(ext, img, field.one()));
    }

    detail::StepCounter sc(cfg);
    auto gb = detail::buchberger(ext, gens, sc);

    std::vector<VariableSpec> target_vars;
    for (std::size_t i = 0; i < target_names.size(); ++i)
        target_vars.push_back({target_names[i], degs[i] / g});
    auto target = make_ring(field, target_vars);

    std::vector<Polynomial<F>> kernel;
    for (const auto& h : gb)
        if (detail::free_of_block(h, source_vars.size()))
            kernel.push_back(detail::project_out(h, target, source_vars.size()));
    return RingPresentation<F>(target, std::move(kernel));
}

} // namespace fthresh

#endif
