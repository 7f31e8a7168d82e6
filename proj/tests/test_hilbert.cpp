#include <catch2/catch_amalgamated.hpp>

#include "fthresh/hilbert.hpp"
#include "test_support.hpp"

using namespace fthresh;

namespace {

template <class F>
RingPresentation<F> veronese3(const F& field) {
    auto ring = make_ring(field, {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}});
    return pres_of(ring, {"b^2 - a*c", "c^2 - b*d", "b*c - a*d"});
}

} // namespace

TEST_CASE("hilbert series of free polynomial rings") {
    auto series = hilbert_series(pres_of(ring_q({"x", "y"})));
    CHECK(series.numerator.coeffs == std::vector<BigInt>{1});
    CHECK(series.denom_weights == std::vector<std::int64_t>{1, 1});
    CHECK(series.pole_order == 2);

    auto weighted = hilbert_series(pres_of(ring_q({"x", "y"}, {2, 3})));
    CHECK(weighted.numerator.coeffs == std::vector<BigInt>{1});
    CHECK(weighted.denom_weights == std::vector<std::int64_t>{2, 3});
    CHECK(weighted.pole_order == 2);
    CHECK(weighted.limit_constant() == BigRat(1, 6));
}

TEST_CASE("hilbert series of the third Veronese") {
    auto pres = veronese3(PrimeField(2));
    auto series = hilbert_series(pres);
    // (1 + 2t) / (1-t)^2: Hilbert function 1, 4, 7, 10, ... = 3n + 1
    CHECK(series.pole_order == 2);
    auto coeffs = series.expand(6);
    for (std::int64_t n = 0; n <= 6; ++n) CHECK(coeffs[std::size_t(n)] == (n == 0 ? 1 : 3 * n + 1));
    CHECK(series.limit_constant() == BigRat(3));

    // series/count agreement, the per-degree oracle
    for (std::int64_t n = 0; n <= 8; ++n)
        CHECK(standard_monomial_count(pres, n) == (n == 0 ? 1 : 3 * n + 1));
}

TEST_CASE("krull dimension as pole order") {
    CHECK(krull_dimension(pres_of(ring_q({"x", "y", "z"}))) == 3);
    CHECK(krull_dimension(veronese3(RationalField{})) == 2);

    auto cusp = pres_of(ring_q({"a", "b"}, {2, 3}), {"b^2 - a^3"});
    CHECK(krull_dimension(cusp) == 1);
    auto cs = hilbert_series(cusp);
    // (1 - t^6) / ((1-t^2)(1-t^3))
    CHECK(cs.limit_constant() == BigRat(1));
    auto coeffs = cs.expand(12);
    // semigroup <2,3>: dimensions 1,0,1,1,1,1,... per degree
    std::vector<BigInt> expect{1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
    CHECK(coeffs == expect);
}

TEST_CASE("multiplicity constants") {
    CHECK(multiplicity_constant(pres_of(ring_q({"x", "y"}))) == BigRat(1));
    CHECK(multiplicity_constant(pres_of(ring_q({"x", "y"}, {2, 3}))) == BigRat(1, 6));
    CHECK(multiplicity_constant(veronese3(PrimeField(3))) == BigRat(3));
}

TEST_CASE("hsop detection") {
    auto Q = ring_q({"x", "y"});
    auto pres = pres_of(Q);
    CHECK(is_hsop(ideal_of(pres, {"x^2", "y^3"}).gens, pres));
    CHECK_FALSE(is_hsop(ideal_of(pres, {"x^2", "x*y"}).gens, pres));
    CHECK_FALSE(is_hsop(ideal_of(pres, {"x"}).gens, pres)); // wrong count
    CHECK_THROWS_AS(is_hsop({pp("x + y^2", Q)}, pres), MathError);

    auto vp = veronese3(PrimeField(2));
    CHECK(is_hsop(ideal_of(vp, {"a", "d"}).gens, vp));
    CHECK_FALSE(is_hsop(ideal_of(vp, {"a", "b"}).gens, vp)); // d not nilpotent mod (a,b)
}

TEST_CASE("multiplicity of hsop ideals") {
    auto pres = pres_of(ring_q({"x", "y"}));
    auto rep = multiplicity_hsop(ideal_of(pres, {"x^2", "y^3"}));
    CHECK(rep.multiplicity == BigRat(6));
    CHECK(rep.ideal_degrees == std::vector<std::int64_t>{2, 3});

    auto vp = veronese3(PrimeField(2));
    CHECK(multiplicity_hsop(ideal_of(vp, {"a", "d"})).multiplicity == BigRat(3));

    auto w = pres_of(ring_q({"x", "y"}, {2, 3}));
    CHECK(multiplicity_hsop(ideal_of(w, {"x", "y"})).multiplicity == BigRat(1));

    CHECK_THROWS_AS(multiplicity_hsop(ideal_of(pres, {"x^2", "x*y"})), MathError);
}

TEST_CASE("quotient lengths") {
    auto pres = pres_of(ring_q({"x", "y"}));
    CHECK(quotient_length(ideal_of(pres, {"x^2", "y^3"})) == 6);
    CHECK_FALSE(quotient_length(ideal_of(pres, {"x"})).has_value());

    auto vp = veronese3(PrimeField(2));
    CHECK(quotient_length(ideal_of(vp, {"a", "d"})) == 3); // 1, b, c
}

TEST_CASE("hilbert-samuel oracle stabilizes to the multiplicity") {
    auto pres = pres_of(ring_q({"x", "y"}));
    auto rep = hilbert_samuel_oracle(ideal_of(pres, {"x^2", "y^3"}), 5);
    CHECK(rep.stabilized);
    CHECK(rep.value == BigRat(6));
    CHECK(rep.lengths == std::vector<std::int64_t>{6, 18, 36, 60, 90});

    auto unit = hilbert_samuel_oracle(ideal_of(pres, {"x", "y"}), 4);
    CHECK(unit.stabilized);
    CHECK(unit.value == BigRat(1));

    auto vp = veronese3(PrimeField(2));
    auto vrep = hilbert_samuel_oracle(ideal_of(vp, {"a", "d"}), 6);
    CHECK(vrep.stabilized);
    CHECK(vrep.value == multiplicity_hsop(ideal_of(vp, {"a", "d"})).multiplicity);

    CHECK_THROWS_AS(hilbert_samuel_oracle(ideal_of(pres, {"x^2", "x*y"}), 6), MathError);
    CHECK_THROWS_AS(hilbert_samuel_oracle(ideal_of(pres, {"x", "y"}), 3), MathError);
}

TEST_CASE("CM monomial complete intersections: multiplicity equals length") {
    auto pres = pres_of(ring_q({"x", "y", "z"}));
    for (auto gens : {std::vector<std::string>{"x", "y", "z"},
                      std::vector<std::string>{"x^2", "y^2", "z^3"},
                      std::vector<std::string>{"x^3", "y^4", "z^2"}}) {
        auto J = ideal_of(pres, gens);
        auto e = multiplicity_hsop(J).multiplicity;
        auto len = quotient_length(J);
        REQUIRE(len.has_value());
        CHECK(e == BigRat(*len));
    }
}

TEST_CASE("Frobenius scaling of multiplicities") {
    auto pres = pres_of(ring_fp(2, {"x", "y"}));
    auto e1 = multiplicity_hsop(ideal_of(pres, {"x^2", "y^3"})).multiplicity;
    for (std::int64_t q : {2, 4, 8}) {
        auto eq = multiplicity_hsop(ideal_of(pres, {"x^" + std::to_string(2 * q),
                                                    "y^" + std::to_string(3 * q)}))
                      .multiplicity;
        CHECK(eq == BigRat(q) * BigRat(q) * e1);
    }
}

TEST_CASE("multiplicity additivity over the minimal primes of k[x,y]/(xy)") {
    // e((x+y)) on the reducible curve equals the sum over the two lines
    auto line_pair = pres_of(ring_q({"x", "y"}), {"x*y"});
    auto a = ideal_of(line_pair, {"x + y"});
    CHECK(krull_dimension(line_pair) == 1);
    auto e_total = multiplicity_hsop(a).multiplicity;

    // components R/(x) and R/(y) are coordinate lines; the image of x+y is a
    // degree-1 parameter in each, so each contributes multiplicity 1
    auto line = pres_of(ring_q({"t"}));
    auto e_component = multiplicity_hsop(ideal_of(line, {"t"})).multiplicity;
    CHECK(e_total == e_component + e_component);
}

TEST_CASE("series and standard monomial counts agree on corpus-style rings") {
    std::vector<RingPresentation<RationalField>> rings;
    rings.push_back(pres_of(ring_q({"x", "y"})));
    rings.push_back(pres_of(ring_q({"x", "y"}, {2, 3}), {"y^2 - x^3"}));
    rings.push_back(veronese3(RationalField{}));
    rings.push_back(pres_of(ring_q({"x", "y"}), {"x*y"}));
    for (const auto& R : rings) {
        auto series = hilbert_series(R);
        auto coeffs = series.expand(20);
        for (std::int64_t n = 0; n <= 20; ++n)
            CHECK(coeffs[std::size_t(n)] == standard_monomial_count(R, n));
    }
}
