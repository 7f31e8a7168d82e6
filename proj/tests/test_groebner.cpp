#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace fthresh;

namespace {

// Direct Buchberger certificate: every S-pair of `basis` reduces to zero.
// Deliberately ignores the engine's pair pruning.
template <class F>
bool all_spairs_reduce(const std::vector<Polynomial<F>>& basis) {
    if (basis.empty()) return true;
    detail::StepCounter sc(default_gb_config());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const auto& f = basis[i];
            const auto& g = basis[j];
            auto lcm = mono_lcm(f.leading_monomial(), g.leading_monomial());
            auto s = f.times_term({mono_div(lcm, f.leading_monomial()), g.leading_coeff()}) -
                     g.times_term({mono_div(lcm, g.leading_monomial()), f.leading_coeff()});
            if (!detail::reduce_full(s, basis, sc).is_zero()) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("reduced basis of (x^2 - y, y^2 - x) over Q") {
    auto Q = ring_q({"x", "y"});
    auto pres = pres_of(Q);
    auto I = ideal_of(pres, {"x^2 - y", "y^2 - x"});
    auto gb = groebner_basis(I);
    // hand Buchberger: the single S-pair reduces to zero, so the input
    // (already interreduced and monic) is the reduced basis
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.basis[0] == pp("x^2 - y", Q));
    CHECK(gb.basis[1] == pp("y^2 - x", Q));
    CHECK(all_spairs_reduce(gb.basis));
}

TEST_CASE("principal ideal basis") {
    auto R = ring_fp(3, {"x", "y"});
    auto gb = groebner_basis(ideal_of(pres_of(R), {"x"}));
    REQUIRE(gb.basis.size() == 1);
    CHECK(gb.basis[0] == pp("x", R));
}

TEST_CASE("Veronese relations are their own reduced basis") {
    auto R = ring_fp(2, {"a", "b", "c", "d"});
    auto I = ideal_of(pres_of(R), {"b^2 - a*c", "c^2 - b*d", "b*c - a*d"});
    auto gb = groebner_basis(I);
    REQUIRE(gb.basis.size() == 3);
    CHECK(gb.basis[0] == pp("b^2 + a*c", R));
    CHECK(gb.basis[1] == pp("b*c + a*d", R));
    CHECK(gb.basis[2] == pp("c^2 + b*d", R));
    CHECK(all_spairs_reduce(gb.basis));
}

TEST_CASE("normal form examples and properties") {
    auto Q = ring_q({"x", "y"});
    auto pres = pres_of(Q);
    auto G1 = groebner_basis(ideal_of(pres, {"x^2 - y"}));
    CHECK(normal_form(pp("x^2", Q), G1) == pp("y", Q));

    auto G2 = groebner_basis(ideal_of(pres, {"x"}));
    CHECK(normal_form(pp("y", Q), G2) == pp("y", Q));

    auto RV = ring_fp(2, {"a", "b", "c", "d"});
    auto GV = groebner_basis(ideal_of(pres_of(RV), {"b^2 - a*c", "c^2 - b*d", "b*c - a*d"}));
    CHECK(normal_form(pp("b^2", RV), GV) == pp("a*c", RV));

    std::mt19937_64 rng(555);
    for (int i = 0; i < 25; ++i) {
        auto f = random_poly(Q, rng), g = random_poly(Q, rng);
        auto nf_f = normal_form(f, G1);
        CHECK(normal_form(nf_f, G1) == nf_f); // idempotence
        CHECK(normal_form(f + g, G1) == normal_form(nf_f + normal_form(g, G1), G1));
    }
}

TEST_CASE("ideal membership with staircase cross-check") {
    auto R = ring_fp(5, {"x", "y"});
    auto pres = pres_of(R);
    auto I = ideal_of(pres, {"x^2", "y^3"});
    auto gb = groebner_basis(I);
    CHECK_FALSE(normal_form(pp("x*y^2", R), gb).is_zero());
    CHECK(normal_form(pp("x^2*y", R), gb).is_zero());
    CHECK(ideal_member(Polynomial<PrimeField>::zero(R), I));
}

TEST_CASE("membership agrees with exact linear algebra on graded pieces") {
    std::mt19937_64 rng(777);
    auto R = ring_fp(7, {"x", "y", "z"});
    auto pres = pres_of(R);
    auto I = ideal_of(pres, {"x^2 - y*z", "y^2", "z^3"});
    auto gb = groebner_basis(I);
    std::uniform_int_distribution<std::int64_t> coeffd(0, 6);
    for (std::int64_t deg = 1; deg <= 6; ++deg) {
        for (int trial = 0; trial < 8; ++trial) {
            // random homogeneous polynomial of the given total degree
            std::vector<Polynomial<PrimeField>::Term> terms;
            for (std::int64_t a = 0; a <= deg; ++a)
                for (std::int64_t b = 0; b <= deg - a; ++b)
                    terms.push_back({{a, b, deg - a - b}, coeffd(rng)});
            Polynomial<PrimeField> f(R, std::move(terms));
            if (f.is_zero()) continue;
            bool by_gb = normal_form(f, gb).is_zero();
            bool by_la = member_by_linalg(f, I.gens);
            CHECK(by_gb == by_la);
        }
    }
}

TEST_CASE("ideal containment") {
    auto R = ring_fp(2, {"x", "y"});
    auto pres = pres_of(R);
    auto A = ideal_of(pres, {"x^2", "y^3"});
    auto m4 = Ideal<PrimeField>(pres, power_products(ideal_of(pres, {"x", "y"}).gens, 4, R));
    auto m3 = Ideal<PrimeField>(pres, power_products(ideal_of(pres, {"x", "y"}).gens, 3, R));
    CHECK(ideal_contains(A, m4));
    CHECK_FALSE(ideal_contains(A, m3)); // x*y^2 escapes
    CHECK(ideal_contains(A, A));
}

TEST_CASE("colon ideal examples") {
    auto Q = ring_q({"x", "y"});
    auto pres = pres_of(Q);

    auto C1 = colon_ideal(ideal_of(pres, {"x^2*y"}), ideal_of(pres, {"y"}));
    REQUIRE(C1.gens.size() == 1);
    CHECK(C1.gens[0] == pp("x^2", Q));

    auto C2 = colon_ideal(ideal_of(pres, {"x^2", "x*y"}), ideal_of(pres, {"x"}));
    CHECK(ideal_equal(C2, ideal_of(pres, {"x", "y"})));

    auto I = ideal_of(pres, {"x^2 - y^2", "x*y^3"});
    auto C3 = colon_ideal(I, ideal_of(pres, {"1"}));
    CHECK(ideal_equal(C3, I));
}

TEST_CASE("colon correctness properties") {
    std::mt19937_64 rng(4242);
    auto R = ring_fp(3, {"x", "y"});
    auto pres = pres_of(R);
    auto I = ideal_of(pres, {"x^3", "x*y^2 - y^3"});
    auto J = ideal_of(pres, {"x*y", "y^2"});
    auto C = colon_ideal(I, J);
    auto gbI = groebner_basis(I);
    for (const auto& c : C.gens)
        for (const auto& j : J.gens)
            CHECK(normal_form(c * j, gbI).is_zero());
    // a sample of non-members of C must fail to multiply J into I
    auto gbC = groebner_basis(C);
    int tested = 0;
    for (int trial = 0; trial < 60 && tested < 10; ++trial) {
        auto f = random_poly(R, rng, 3, 3);
        if (f.is_zero() || normal_form(f, gbC).is_zero()) continue;
        ++tested;
        bool some_product_escapes = false;
        for (const auto& j : J.gens)
            if (!normal_form(f * j, gbI).is_zero()) some_product_escapes = true;
        CHECK(some_product_escapes);
    }
    CHECK(tested >= 5);
}

TEST_CASE("radical containment is a bounded check") {
    auto R = ring_fp(3, {"x", "y"});
    auto pres = pres_of(R);
    CHECK(radical_contains(ideal_of(pres, {"x^2", "y^3"}), ideal_of(pres, {"x", "y"}), 4));
    CHECK_FALSE(radical_contains(ideal_of(pres, {"x"}), ideal_of(pres, {"y"}), 10));
    CHECK(radical_contains(ideal_of(pres, {"x+y"}), ideal_of(pres, {"x+y"}), 1));
}

TEST_CASE("monomial map kernels via elimination") {
    RationalField QQ;
    std::vector<VariableSpec> src{{"x", 1}, {"y", 1}};

    SECTION("third Veronese of k[x,y]") {
        auto pres = monomial_map_kernel(QQ, {"a", "b", "c", "d"}, src,
                                        {{3, 0}, {2, 1}, {1, 2}, {0, 3}});
        REQUIRE(pres.base->arity() == 4);
        for (const auto& v : pres.base->vars) CHECK(v.degree == 1);
        auto expect = pres_of(pres.base); // ambient, no relations
        auto want = ideal_of(expect, {"b^2 - a*c", "c^2 - b*d", "b*c - a*d"});
        auto got = Ideal<RationalField>(expect, pres.relations);
        CHECK(ideal_equal(got, want));
    }

    SECTION("polynomial subring has zero kernel") {
        auto pres = monomial_map_kernel(QQ, {"a", "b"}, src, {{2, 0}, {0, 2}});
        CHECK(pres.relations.empty());
        CHECK(pres.base->vars[0].degree == 1); // degrees (2,2) scale to (1,1)
    }

    SECTION("cusp t^2, t^3") {
        std::vector<VariableSpec> line{{"t", 1}};
        auto pres = monomial_map_kernel(QQ, {"a", "b"}, line, {{2}, {3}});
        CHECK(pres.base->vars[0].degree == 2);
        CHECK(pres.base->vars[1].degree == 3);
        REQUIRE(pres.relations.size() == 1);
        CHECK(pres.relations[0] == pp("a^3 - b^2", pres.base));
    }
}

TEST_CASE("deterministic reduced bases") {
    auto R = ring_fp(7, {"x", "y", "z"});
    auto pres = pres_of(R);
    auto I = ideal_of(pres, {"x^2*y - z^3", "y^2 - x*z", "3*z^2*x - y*x^2"});
    auto gb1 = groebner_basis(I);
    auto gb2 = groebner_basis(I);
    REQUIRE(gb1.basis.size() == gb2.basis.size());
    for (std::size_t i = 0; i < gb1.basis.size(); ++i)
        CHECK(to_string(gb1.basis[i]) == to_string(gb2.basis[i]));
    CHECK(all_spairs_reduce(gb1.basis));
}

TEST_CASE("step limit raises a resource error") {
    auto R = ring_fp(2, {"x", "y", "z"});
    auto pres = pres_of(R);
    auto I = ideal_of(pres, {"x^2*y - z^3", "y^2 - x*z", "z^2*x - y*x^2"});
    GbConfig tight;
    tight.step_limit = 3;
    CHECK_THROWS_AS(groebner_basis(I, tight), ResourceLimitError);
}

TEST_CASE("quotient-ring computations adjoin the relations") {
    auto R = ring_fp(2, {"a", "b", "c", "d"});
    auto veronese = pres_of(R, {"b^2 - a*c", "c^2 - b*d", "b*c - a*d"});
    auto J = ideal_of(veronese, {"a", "d"});
    auto gb = groebner_basis(J);
    // b*c reduces to a*d which lies in (a,d)
    CHECK(normal_form(pp("b*c", R), gb).is_zero());
    CHECK_FALSE(normal_form(pp("b", R), gb).is_zero());
}
