#ifndef FTHRESH_FROBENIUS_HPP
#define FTHRESH_FROBENIUS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fthresh/groebner.hpp"
#include "fthresh/hilbert.hpp"

namespace fthresh {

namespace detail {

template <class F>
std::uint64_t require_positive_characteristic(const Ideal<F>& I, const char* op) {
    std::uint64_t p = I.ring.base->field.characteristic();
    if (p == 0) throw MathError(std::string(op) + " requires positive characteristic");
    return p;
}

inline void require_power_of_p(std::int64_t q, std::uint64_t p) {
    if (q < 1) throw MathError("q must be a positive power of the characteristic");
    std::int64_t t = q;
    while (t % std::int64_t(p) == 0) t /= std::int64_t(p);
    if (t != 1)
        throw MathError(std::to_string(q) + " is not a power of the characteristic " +
                        std::to_string(p));
}

// all products of r generators lie in the ideal behind `gb`?
template <class F>
bool power_contained(const std::vector<Polynomial<F>>& gens, std::int64_t r,
                     const GroebnerBasis<F>& gb, const GbConfig& cfg) {
    return for_each_power_product(gens, r, gb.ideal.ring.base, [&](const Polynomial<F>& prod) {
        return normal_form(prod, gb, cfg).is_zero();
    });
}

// witness exponents m_i <= maxexp with g_i^{m_i} in J (mod relations)
template <class F>
std::optional<std::vector<std::int64_t>> radical_witnesses(const Ideal<F>& J, const Ideal<F>& a,
                                                           std::int64_t maxexp,
                                                           const GbConfig& cfg) {
    auto gb = groebner_basis(J, cfg);
    std::vector<std::int64_t> out;
    for (const auto& g : a.gens) {
        std::int64_t found = 0;
        for (std::int64_t m = 1; m <= maxexp; ++m) {
            if (normal_form(poly_power(g, m), gb, cfg).is_zero()) {
                found = m;
                break;
            }
        }
        if (found == 0) return std::nullopt;
        out.push_back(found);
    }
    return out;
}

} // namespace detail

// J^[q]: the ideal generated by the q-th powers of the generators. Valid for
// any generating set because Frobenius is a ring endomorphism.
template <class F>
Ideal<F> frobenius_power(const Ideal<F>& J, std::int64_t q) {
    std::uint64_t p = detail::require_positive_characteristic(J, "frobenius_power");
    detail::require_power_of_p(q, p);
    std::vector<Polynomial<F>> gens;
    gens.reserve(J.gens.size());
    for (const auto& g : J.gens) gens.push_back(poly_power(g, q));
    return Ideal<F>(J.ring, std::move(gens));
}

// Least N >= 0 with a^{N+1} contained in J (mod relations). The scan is
// bounded by the pigeonhole consequence of the radical witnesses: once every
// generator g_i satisfies g_i^{m_i} in J, any product of sum(m_i - 1) + 1
// generators contains some g_i^{m_i}.
template <class F>
std::int64_t least_power_in(const Ideal<F>& a, const Ideal<F>& J,
                            const GbConfig& cfg = default_gb_config(),
                            std::int64_t scan_cap = 0) {
    require_same_presentation(a, J);
    if (a.is_zero_ideal() || J.is_zero_ideal())
        throw MathError("least_power_in needs nonzero ideals");
    auto witnesses = detail::radical_witnesses(J, a, default_radical_maxexp(J.ring), cfg);
    if (!witnesses)
        throw MathError("least_power_in: the radical of J does not contain a (bounded check)");
    std::int64_t bound = 1;
    for (auto m : *witnesses) bound += m - 1;
    if (scan_cap > 0 && bound > scan_cap)
        throw ResourceLimitError("least_power_in scan bound " + std::to_string(bound) +
                                 " exceeds cap " + std::to_string(scan_cap));
    auto gb = groebner_basis(J, cfg);
    for (std::int64_t n = 1; n <= bound; ++n) {
        if (detail::power_contained(a.gens, n, gb, cfg)) return n - 1;
    }
    throw MathError("least_power_in: pigeonhole bound violated (internal error)");
}

// nu_a^J(q) = max{ r : a^r not contained in J^[q] }, certified by explicit
// generator-product membership at r = nu and r = nu + 1.
template <class F>
std::int64_t nu(const Ideal<F>& a, const Ideal<F>& J, std::int64_t q,
                const GbConfig& cfg = default_gb_config()) {
    require_same_presentation(a, J);
    std::uint64_t p = detail::require_positive_characteristic(J, "nu");
    detail::require_power_of_p(q, p);
    if (a.is_zero_ideal() || J.is_zero_ideal()) throw MathError("nu needs nonzero ideals");

    std::int64_t N = least_power_in(a, J, cfg); // also certifies the radical hypothesis
    auto gbq = groebner_basis(frobenius_power(J, q), cfg);

    // a subset of J^[q] (includes the unit-ideal degenerate case): nu = 0
    if (detail::power_contained(a.gens, 1, gbq, cfg)) return 0;

    std::int64_t mu = std::int64_t(a.gens.size());
    std::int64_t hi = mu * (q - 1) + (N + 1) * q; // pigeonhole: containment holds here
    if (!detail::power_contained(a.gens, hi, gbq, cfg))
        throw MathError("nu: pigeonhole window violated (internal error)");
    std::int64_t lo = 1; // known escape: a^1 not contained (checked above)
    while (hi - lo > 1) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (detail::power_contained(a.gens, mid, gbq, cfg))
            hi = mid;
        else
            lo = mid;
    }
    // certificates: a^lo escapes, a^{lo+1} is contained
    if (detail::power_contained(a.gens, lo, gbq, cfg) ||
        !detail::power_contained(a.gens, lo + 1, gbq, cfg))
        throw MathError("nu: certificate check failed (internal error)");
    return lo;
}

struct NuRow {
    std::int64_t e = 0;
    std::int64_t q = 0;
    std::int64_t nu = 0;
    BigRat ratio;        // nu / q
    bool failed = false; // resource error recorded for this row
    std::string error;
};

template <class F>
struct NuTable {
    Ideal<F> a;
    Ideal<F> J;
    std::vector<NuRow> rows;
};

template <class F>
NuTable<F> nu_table(const Ideal<F>& a, const Ideal<F>& J, std::int64_t emax,
                    const GbConfig& cfg = default_gb_config()) {
    if (emax < 1) throw MathError("nu_table needs emax >= 1");
    std::uint64_t p = detail::require_positive_characteristic(J, "nu_table");
    std::int64_t N = least_power_in(a, J, cfg);
    std::int64_t mu = std::int64_t(a.gens.size());

    NuTable<F> table{a, J, {}};
    std::int64_t q = 1;
    for (std::int64_t e = 1; e <= emax; ++e) {
        q = checked_mul(q, std::int64_t(p));
        NuRow row;
        row.e = e;
        row.q = q;
        try {
            row.nu = nu(a, J, q, cfg);
            row.ratio = BigRat(row.nu, q);
            // boundedness sanity from the pigeonhole window
            if (row.nu > mu * (q - 1) + (N + 1) * q - 1)
                throw MathError("nu_table: row exceeds the pigeonhole bound");
        } catch (const ResourceLimitError& err) {
            row.failed = true;
            row.error = err.what();
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

// Bracketing data for pt^J(a): an exact lower envelope plus an affine-model
// extrapolation from the last two rows, labeled diagnostic unless the table
// satisfies the nu(q*p) >= p*nu(q) regularity seen on regular rings.
struct ThresholdEstimate {
    std::vector<NuRow> rows;
    BigRat lower;       // max over computed ratios
    BigRat extrapolated; // slope of the affine fit through the last two rows
    bool monotone = true;
    bool diagnostic_only = true;

    std::string label() const { return diagnostic_only ? "diagnostic" : "lower-bound-certified"; }
};

template <class F>
ThresholdEstimate threshold_bracket(const NuTable<F>& table) {
    std::vector<const NuRow*> ok;
    for (const auto& r : table.rows)
        if (!r.failed) ok.push_back(&r);
    if (ok.empty()) throw MathError("threshold_bracket: table has no successful rows");

    ThresholdEstimate est;
    est.rows = table.rows;
    est.lower = ok[0]->ratio;
    for (const auto* r : ok) est.lower = std::max(est.lower, r->ratio);
    for (std::size_t i = 1; i < ok.size(); ++i)
        if (ok[i]->ratio < ok[i - 1]->ratio) est.monotone = false;

    if (ok.size() >= 2) {
        const auto& r1 = *ok[ok.size() - 2];
        const auto& r2 = *ok[ok.size() - 1];
        est.extrapolated = BigRat(r2.nu - r1.nu, r2.q - r1.q);
    } else {
        est.extrapolated = est.lower;
    }

    bool regular = true;
    for (std::size_t i = 1; i < ok.size(); ++i) {
        // consecutive table rows satisfy q_{i} = p^{e_i}; demand the
        // Frobenius regularity nu(q') >= (q'/q) nu(q)
        if (BigRat(ok[i]->nu) < BigRat(ok[i - 1]->nu * (ok[i]->q / ok[i - 1]->q)))
            regular = false;
    }
    est.diagnostic_only = !(regular && ok.size() >= 2);
    if (est.monotone && est.lower > est.extrapolated && ok.size() >= 2)
        throw MathError("threshold_bracket: monotone table with lower > extrapolated");
    return est;
}

struct ClosureVerdict {
    bool member = false;
    std::int64_t witness_e = -1; // least e with x^{p^e} in I^{[p^e]}
    std::int64_t bound = 0;      // the e-range that was searched
};

// Bounded Frobenius-closure membership: search e = 0..emax for
// x^{p^e} in I^{[p^e]}. A negative verdict only refutes up to the bound.
template <class F>
ClosureVerdict frobenius_closure_member(const Polynomial<F>& x, const Ideal<F>& I,
                                        std::int64_t emax,
                                        const GbConfig& cfg = default_gb_config()) {
    std::uint64_t p = detail::require_positive_characteristic(I, "frobenius_closure_member");
    if (emax < 0) throw MathError("frobenius_closure_member needs emax >= 0");
    ClosureVerdict verdict;
    verdict.bound = emax;
    std::int64_t q = 1;
    for (std::int64_t e = 0; e <= emax; ++e) {
        auto gb = groebner_basis(frobenius_power(I, q), cfg);
        if (normal_form(poly_power(x, q), gb, cfg).is_zero()) {
            verdict.member = true;
            verdict.witness_e = e;
            return verdict;
        }
        q = checked_mul(q, std::int64_t(p));
    }
    return verdict;
}

// Exact finite-level identities from the bracket-power calculus, plus the
// two containment monotonicities when comparison ideals are supplied.
struct ScalingIdentityReport {
    struct Line {
        std::string identity;
        std::int64_t lhs = 0;
        std::int64_t rhs = 0;
        bool holds = false;
    };
    std::vector<Line> lines;

    bool all_hold() const {
        for (const auto& l : lines)
            if (!l.holds) return false;
        return true;
    }
};

template <class F>
ScalingIdentityReport check_scaling_identities(
    const Ideal<F>& a, const Ideal<F>& J, std::int64_t r, std::int64_t e, std::int64_t eprime,
    const std::optional<Ideal<F>>& superset_of_J = std::nullopt,
    const std::optional<Ideal<F>>& subset_of_a = std::nullopt,
    const GbConfig& cfg = default_gb_config()) {
    if (r < 1) throw MathError("check_scaling_identities needs r >= 1");
    if (e < 1 || eprime < 0) throw MathError("check_scaling_identities needs e >= 1, e' >= 0");
    std::uint64_t p = detail::require_positive_characteristic(J, "check_scaling_identities");

    std::int64_t q = 1;
    for (std::int64_t i = 0; i < e; ++i) q = checked_mul(q, std::int64_t(p));
    std::int64_t qprime = 1;
    for (std::int64_t i = 0; i < eprime; ++i) qprime = checked_mul(qprime, std::int64_t(p));

    ScalingIdentityReport report;
    std::int64_t base = nu(a, J, q, cfg);

    {
        Ideal<F> ar(a.ring, power_products(a.gens, r, a.ring.base));
        std::int64_t lhs = nu(ar, J, q, cfg);
        std::int64_t rhs = base / r;
        report.lines.push_back(
            {"nu_{a^" + std::to_string(r) + "}(q) == floor(nu_a(q)/" + std::to_string(r) + ")",
             lhs, rhs, lhs == rhs});
    }
    {
        std::int64_t lhs = nu(a, frobenius_power(J, qprime), q, cfg);
        std::int64_t rhs = nu(a, J, checked_mul(q, qprime), cfg);
        report.lines.push_back({"nu_a^{J^[q']}(q) == nu_a^J(q q')", lhs, rhs, lhs == rhs});
    }
    if (superset_of_J) {
        std::int64_t lhs = nu(a, *superset_of_J, q, cfg);
        report.lines.push_back(
            {"I >= J implies nu^I <= nu^J", lhs, base, lhs <= base});
    }
    if (subset_of_a) {
        std::int64_t lhs = nu(*subset_of_a, J, q, cfg);
        report.lines.push_back({"b <= a implies nu_b <= nu_a", lhs, base, lhs <= base});
    }

    for (const auto& line : report.lines)
        if (!line.holds)
            throw MathError("scaling identity violated: " + line.identity + " (lhs " +
                            std::to_string(line.lhs) + ", rhs " + std::to_string(line.rhs) + ")");
    return report;
}

// Seeded random instances of the identity suite over small monomial data.
struct ScalingSuiteResult {
    std::uint64_t seed = 0;
    int instances = 0;
    int checks = 0;
};

inline ScalingSuiteResult run_scaling_identity_suite(std::uint64_t seed, int instances,
                                                     const GbConfig& cfg = default_gb_config()) {
    std::mt19937_64 rng(seed);
    ScalingSuiteResult result;
    result.seed = seed;
    const std::uint64_t primes[3] = {2, 3, 5};
    std::uniform_int_distribution<int> prime_pick(0, 2);
    std::uniform_int_distribution<std::int64_t> cd(1, 3);
    std::uniform_int_distribution<int> agens(1, 3);
    std::uniform_int_distribution<std::int64_t> expd(0, 2);
    std::uniform_int_distribution<std::int64_t> rd(1, 3);

    for (int inst = 0; inst < instances; ++inst) {
        PrimeField field(primes[prime_pick(rng)]);
        auto ring = make_ring(field, {{"x", 1}, {"y", 1}});
        auto pres = RingPresentation<PrimeField>(ring, {});

        auto mono = [&](std::int64_t i, std::int64_t j) {
            return Polynomial<PrimeField>::monomial(ring, {i, j}, field.one());
        };
        Ideal<PrimeField> J(pres, {mono(cd(rng), 0), mono(0, cd(rng))});

        std::vector<Polynomial<PrimeField>> ag;
        int na = agens(rng);
        for (int i = 0; i < na; ++i) {
            std::int64_t u = expd(rng), v = expd(rng);
            if (u + v == 0) u = 1;
            ag.push_back(mono(u, v));
        }
        Ideal<PrimeField> a(pres, ag);

        // comparison ideals: enlarge J by a fresh monomial, shrink a to a
        // nonempty generator subset
        std::vector<Polynomial<PrimeField>> ig = J.gens;
        std::int64_t u = expd(rng), v = expd(rng);
        if (u + v == 0) v = 1;
        ig.push_back(mono(u, v));
        Ideal<PrimeField> I(pres, ig);
        std::vector<Polynomial<PrimeField>> bg(a.gens.begin(),
                                               a.gens.begin() + 1 + (std::size_t(rng()) % a.gens.size()));
        Ideal<PrimeField> b(pres, bg);

        auto report = check_scaling_identities(a, J, rd(rng), 1, 1, I, b, cfg);
        ++result.instances;
        result.checks += int(report.lines.size());
    }
    return result;
}

} // namespace fthresh

#endif
