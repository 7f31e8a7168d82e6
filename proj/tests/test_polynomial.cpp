#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace fthresh;

TEST_CASE("parse_polynomial reads terms into canonical form") {
    auto R = ring_fp(5, {"x", "y"});
    auto f = pp("x^2*y + 3*y^3", R);
    REQUIRE(f.term_count() == 2);
    CHECK(f.terms()[0].mono == Exponents{2, 1}); // degrevlex: x^2*y > y^3
    CHECK(f.terms()[0].coeff == 1);
    CHECK(f.terms()[1].mono == Exponents{0, 3});
    CHECK(f.terms()[1].coeff == 3);

    CHECK(pp("0", R).is_zero());

    auto R2 = ring_fp(2, {"a", "b", "c", "d"});
    auto g = pp("b^2 - a*c", R2);
    REQUIRE(g.term_count() == 2);
    CHECK(g.terms()[0].mono == Exponents{0, 2, 0, 0});
    CHECK(g.terms()[0].coeff == 1);
    CHECK(g.terms()[1].mono == Exponents{1, 0, 1, 0});
    CHECK(g.terms()[1].coeff == 1); // -1 = 1 in F_2
}

TEST_CASE("parser reports positions and field errors") {
    auto R = ring_fp(2, {"x", "y"});
    CHECK_THROWS_AS(pp("x + + y", R), ParseError);
    CHECK_THROWS_AS(pp("x + z", R), ParseError);
    CHECK_THROWS_AS(pp("1/2*x", R), ParseError); // no fractions in F_2
    CHECK_THROWS_AS(pp("x^", R), ParseError);
    CHECK_THROWS_AS(pp("", R), ParseError);
    CHECK_THROWS_AS(pp("x ? y", R), ParseError);

    try {
        pp("x + w", R);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
        CHECK(std::string(e.what()).find("unknown variable") != std::string::npos);
    }

    auto Q = ring_q({"x"});
    CHECK(pp("1/2*x + 1/2*x", Q) == pp("x", Q));
    CHECK_THROWS_AS(pp("1/0*x", Q), ParseError);
}

TEST_CASE("poly_mul matches hand results") {
    auto Q = ring_q({"x", "y"});
    CHECK(pp("x+y", Q) * pp("x-y", Q) == pp("x^2 - y^2", Q));

    auto R2 = ring_fp(2, {"x", "y"});
    CHECK(pp("x+y", R2) * pp("x+y", R2) == pp("x^2 + y^2", R2));
    CHECK((pp("x+y", Q) * Polynomial<RationalField>::zero(Q)).is_zero());
}

TEST_CASE("poly_power: repeated squaring and Frobenius fast path") {
    auto R2 = ring_fp(2, {"x", "y"});
    CHECK(poly_power(pp("x+y", R2), 4) == pp("x^4 + y^4", R2));
    CHECK(poly_power(pp("x+y", R2), 0) == Polynomial<PrimeField>::one(R2));

    auto Q = ring_q({"x", "y"});
    CHECK(poly_power(pp("x+y", Q), 3) == pp("x^3 + 3*x^2*y + 3*x*y^2 + y^3", Q));
}

TEST_CASE("weighted degree and homogeneity") {
    auto Q = ring_q({"x", "y"});
    CHECK(pp("x^2*y", Q).weighted_degree() == 3);
    CHECK_FALSE(pp("x + y^2", Q).weighted_degree().has_value());
    CHECK_THROWS_AS(Polynomial<RationalField>::zero(Q).weighted_degree(), MathError);

    auto W = ring_q({"x", "y"}, {2, 3});
    CHECK(pp("x", W).weighted_degree() == 2);
    CHECK(pp("x^3 - y^2", W).weighted_degree() == 6);
}

TEST_CASE("exponent overflow is reported, not wrapped") {
    auto Q = ring_q({"x"});
    auto f = pp("x^1000000000", Q);
    CHECK_THROWS_AS(poly_power(f, 1'000'000'000'000LL), OverflowError);
}

TEST_CASE("ring axioms on random polynomials (fixed seed)") {
    std::mt19937_64 rng(20240817);
    auto R5 = ring_fp(5, {"x", "y", "z"});
    auto Q = ring_q({"x", "y"});
    for (int iter = 0; iter < 60; ++iter) {
        auto f = random_poly(R5, rng), g = random_poly(R5, rng), h = random_poly(R5, rng);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f + (-f)).is_zero());

        auto fq = random_poly(Q, rng), gq = random_poly(Q, rng), hq = random_poly(Q, rng);
        CHECK((fq * gq) * hq == fq * (gq * hq));
        CHECK(fq * (gq + hq) == fq * gq + fq * hq);
    }
}

TEST_CASE("Frobenius additivity over F_p for q = p^e") {
    std::mt19937_64 rng(987654);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        auto R = ring_fp(p, {"x", "y"});
        for (int iter = 0; iter < 20; ++iter) {
            auto f = random_poly(R, rng), g = random_poly(R, rng);
            for (std::int64_t q : {std::int64_t(p), std::int64_t(p * p)}) {
                CHECK(poly_power(f + g, q) == poly_power(f, q) + poly_power(g, q));
            }
        }
    }
}

TEST_CASE("print/parse round trip on random polynomials") {
    std::mt19937_64 rng(13579);
    auto R3 = ring_fp(3, {"x", "y", "z"});
    auto Q = ring_q({"u", "v"}, {2, 5});
    for (int iter = 0; iter < 80; ++iter) {
        auto f = random_poly(R3, rng);
        CHECK(pp(to_string(f), R3) == f);
        auto g = random_poly(Q, rng);
        CHECK(pp(to_string(g), Q) == g);
    }
    CHECK(to_string(Polynomial<PrimeField>::zero(R3)) == "0");
}

TEST_CASE("homogeneity is preserved by products and powers") {
    std::mt19937_64 rng(24680);
    auto W = ring_q({"x", "y", "z"}, {1, 2, 3});
    std::uniform_int_distribution<std::int64_t> degd(1, 8);
    auto random_homog = [&](std::int64_t deg) {
        // collect monomials of the requested weighted degree
        std::vector<Exponents> monos;
        for (std::int64_t a = 0; a <= deg; ++a)
            for (std::int64_t b = 0; 2 * b <= deg - a; ++b)
                if ((deg - a - 2 * b) % 3 == 0)
                    monos.push_back({a, b, (deg - a - 2 * b) / 3});
        std::vector<Polynomial<RationalField>::Term> terms;
        std::uniform_int_distribution<std::int64_t> coeffd(-4, 4);
        for (const auto& m : monos) terms.push_back({m, BigRat(coeffd(rng))});
        return Polynomial<RationalField>(W, std::move(terms));
    };
    for (int iter = 0; iter < 30; ++iter) {
        std::int64_t da = degd(rng), db = degd(rng);
        auto f = random_homog(da), g = random_homog(db);
        if (f.is_zero() || g.is_zero()) continue;
        auto prod = f * g;
        if (!prod.is_zero()) CHECK(prod.weighted_degree() == da + db);
        auto pw = poly_power(f, 3);
        if (!pw.is_zero()) CHECK(pw.weighted_degree() == 3 * da);
    }
}
