#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "coordcheck/groebner.hpp"
#include "support.hpp"

using namespace testsupport;

TEST_CASE("normal forms") {
    Ring r = qring({"x", "y", "z"});
    CHECK(normal_form(pp(r, "x^2"), {pp(r, "x")}).is_zero());
    CHECK(normal_form(pp(r, "x^2 + y"), {pp(r, "x")}) == pp(r, "y"));
    // One reduction step against the sphere relation.
    CHECK(normal_form(pp(r, "x^2 + y^2 + z^2"), {pp(r, "x^2 + y^2 + z^2 - 1")}) ==
          pp(r, "1"));
}

TEST_CASE("buchberger on basic ideals") {
    Ring r = qring({"x"});
    CHECK(buchberger({pp(r, "x")}) == std::vector<Polynomial>{pp(r, "x")});
    CHECK(buchberger({pp(r, "2")}) == std::vector<Polynomial>{pp(r, "1")});

    Ring lexring = qring({"x", "y", "z"}, MonomialOrder::lex());
    auto basis = buchberger({pp(lexring, "x - y"), pp(lexring, "y - z")});
    CHECK(basis == std::vector<Polynomial>{pp(lexring, "x - z"), pp(lexring, "y - z")});
}

TEST_CASE("elimination orders expose the eliminant") {
    // y^3 = y*(x - y^2) generates the elimination ideal of (x - y^2, x*y).
    Ring lexring = qring({"x", "y"}, MonomialOrder::lex());
    auto basis = buchberger({pp(lexring, "x - y^2"), pp(lexring, "x*y")});
    CHECK(basis ==
          std::vector<Polynomial>{pp(lexring, "x - y^2"), pp(lexring, "y^3")});

    Ring blockring = qring({"x", "y"}, MonomialOrder::block(
                                           MonomialOrder::degrevlex(), 1,
                                           MonomialOrder::degrevlex()));
    auto block_basis =
        buchberger({pp(blockring, "x - y^2"), pp(blockring, "x*y")});
    CHECK(block_basis == std::vector<Polynomial>{pp(blockring, "x - y^2"),
                                                 pp(blockring, "y^3")});
}

TEST_CASE("membership") {
    Ring r = qring({"x", "y"});
    CHECK(contains(Ideal(r, {pp(r, "x"), pp(r, "y")}), pp(r, "x + y")));
    CHECK_FALSE(contains(Ideal(r, {pp(r, "x^2")}), pp(r, "x")));

    // x^2 - 1 = 1*(x^2+y^2+z^2-1) + (-y)*y + (-z)*z, so membership must hold.
    Ring s = qring({"x", "y", "z"});
    Polynomial rel = pp(s, "x^2 + y^2 + z^2 - 1");
    Polynomial target = pp(s, "x^2 - 1");
    CHECK(target ==
          rel + pp(s, "-y") * pp(s, "y") + pp(s, "-z") * pp(s, "z"));
    CHECK(contains(Ideal(s, {pp(s, "y"), pp(s, "z"), rel}), target));
}

TEST_CASE("unit ideal detection") {
    // Partial derivatives of z*V - y*W over the sphere presentation.
    Ring h = qring({"x", "y", "z", "U", "V", "W"}, MonomialOrder::degrevlex(),
                   {"x^2 + y^2 + z^2 - 1"}, 3);
    Ideal partials(h, {Polynomial::zero(h), pp(h, "z"), pp(h, "-y")});
    CHECK_FALSE(is_unit_ideal(partials));
    CHECK(partials.reduced_basis() ==
          std::vector<Polynomial>{pp(h, "x^2 - 1"), pp(h, "y"), pp(h, "z")});

    Ring r = qring({"x"});
    CHECK(is_unit_ideal(Ideal(r, {pp(r, "1")})));
    CHECK(is_unit_ideal(Ideal(r, {pp(r, "x"), pp(r, "x - 1")})));
}

TEST_CASE("unit certificates verify exactly") {
    Ring r = qring({"x", "y"});
    Ideal ideal(r, {pp(r, "x"), pp(r, "x - 1")});
    auto cert = unit_certificate(ideal);
    REQUIRE(cert.has_value());
    Polynomial sum = Polynomial::zero(r);
    for (std::size_t i = 0; i < cert->generators.size(); ++i)
        sum = sum + cert->cofactors[i] * cert->generators[i];
    CHECK(sum.is_one());
    CHECK_FALSE(unit_certificate(Ideal(r, {pp(r, "x")})).has_value());
}

TEST_CASE("ideal equality") {
    Ring r = qring({"x", "y"});
    CHECK(ideal_equals(Ideal(r, {pp(r, "x"), pp(r, "y")}),
                       Ideal(r, {pp(r, "x + y"), pp(r, "y")})));
    CHECK_FALSE(ideal_equals(Ideal(r, {pp(r, "x")}), Ideal(r, {pp(r, "x^2")})));
}

TEST_CASE("minor ideal equals image ideal for F = X1*X2, T = (X3)") {
    Ring r = qring({"X1", "X2", "X3"});
    Polynomial f = pp(r, "X1*X2");
    Polynomial t = pp(r, "X3");

    // 2x2 minors of [[X2, X1, 0], [0, 0, 1]] by explicit cofactor expansion.
    Polynomial f1 = partial(f, "X1"), f2 = partial(f, "X2"), f3 = partial(f, "X3");
    Polynomial t1 = partial(t, "X1"), t2 = partial(t, "X2"), t3 = partial(t, "X3");
    std::vector<Polynomial> minor_oracle = {
        f1 * t2 - f2 * t1, // columns {1,2}
        f1 * t3 - f3 * t1, // columns {1,3}
        f2 * t3 - f3 * t2, // columns {2,3}
    };

    // Images of the Jacobian derivation of (F, X3), fixed sign convention.
    std::vector<Polynomial> images = {pp(r, "X1"), pp(r, "-X2"),
                                      Polynomial::zero(r)};
    CHECK(ideal_equals(Ideal(r, minor_oracle), Ideal(r, images)));
}

TEST_CASE("cyclic-3 reduced basis in lex order") {
    // From x = -y-z: y^2+y*z+z^2; then x*y*z = 1 reduces to z^3 - 1.
    Ring r = qring({"x", "y", "z"}, MonomialOrder::lex());
    auto basis = buchberger({pp(r, "x + y + z"), pp(r, "x*y + y*z + z*x"),
                             pp(r, "x*y*z - 1")});
    CHECK(basis == std::vector<Polynomial>{pp(r, "x + y + z"),
                                           pp(r, "y^2 + y*z + z^2"),
                                           pp(r, "z^3 - 1")});
    Ideal ideal(r, {pp(r, "x + y + z"), pp(r, "x*y + y*z + z*x"),
                    pp(r, "x*y*z - 1")});
    CHECK(contains(ideal, pp(r, "x^3 - 1")));
    CHECK_FALSE(contains(ideal, pp(r, "x - 1")));
}

TEST_CASE("division identity and reduced remainders") {
    std::mt19937 rng(101);
    Ring r = qring({"x", "y", "z"});
    for (int i = 0; i < 200; ++i) {
        Polynomial f = random_poly(rng, r, 3, 5, 3);
        std::vector<Polynomial> basis;
        int nb = 1 + static_cast<int>(rng() % 3);
        for (int b = 0; b < nb; ++b)
            basis.push_back(random_nonzero_poly(rng, r, 3, 3, 3));
        DivisionResult d = divide(f, basis);
        Polynomial recombined = d.remainder;
        for (std::size_t b = 0; b < basis.size(); ++b)
            recombined = recombined + d.quotients[b] * basis[b];
        CHECK(recombined == f);
        // No remainder term is divisible by any basis leading monomial.
        for (const auto& [m, c] : d.remainder.terms()) {
            (void)c;
            for (const auto& b : basis)
                CHECK_FALSE(leading_term(b).first.divides(m));
        }
        // Idempotence.
        CHECK(normal_form(d.remainder, basis) == d.remainder);
    }
}

TEST_CASE("buchberger output certifies itself") {
    std::mt19937 rng(103);
    Ring r = qring({"x", "y", "z"});
    for (int i = 0; i < 120; ++i) {
        std::vector<Polynomial> gens;
        int ng = 1 + static_cast<int>(rng() % 3);
        for (int g = 0; g < ng; ++g)
            gens.push_back(random_poly(rng, r, 3, 3, 3));
        auto basis = buchberger(gens);
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = a + 1; b < basis.size(); ++b)
                CHECK(normal_form(s_polynomial(basis[a], basis[b]), basis).is_zero());
        // Generators reduce to zero against their own basis.
        for (const auto& g : gens) CHECK(normal_form(g, basis).is_zero());
    }
}

TEST_CASE("reduced basis is invariant under generator permutation") {
    std::mt19937 rng(107);
    Ring r = qring({"x", "y", "z"});
    for (int i = 0; i < 80; ++i) {
        std::vector<Polynomial> gens;
        int ng = 2 + static_cast<int>(rng() % 2);
        for (int g = 0; g < ng; ++g)
            gens.push_back(random_poly(rng, r, 3, 3, 3));
        auto basis = buchberger(gens);
        std::vector<Polynomial> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(buchberger(shuffled) == basis);
        std::reverse(shuffled.begin(), shuffled.end());
        CHECK(buchberger(shuffled) == basis);
    }
}

TEST_CASE("unit ideal contains everything") {
    std::mt19937 rng(109);
    Ring r = qring({"x", "y"});
    Ideal unit(r, {pp(r, "x"), pp(r, "x - 1")});
    REQUIRE(is_unit_ideal(unit));
    for (int i = 0; i < 50; ++i)
        CHECK(contains(unit, random_poly(rng, r, 4, 5, 5)));
}

TEST_CASE("quotient-ring membership matches the free-ring computation") {
    std::mt19937 rng(113);
    Ring quotient = qring({"x", "y", "z"}, MonomialOrder::degrevlex(),
                          {"x^2 + y^2 + z^2 - 1"});
    Ring free = qring({"x", "y", "z"});
    Polynomial rel = pp(free, "x^2 + y^2 + z^2 - 1");
    for (int i = 0; i < 60; ++i) {
        std::vector<Polynomial> gens_q, gens_f;
        int ng = 1 + static_cast<int>(rng() % 2);
        for (int g = 0; g < ng; ++g) {
            Polynomial p = random_poly(rng, free, 2, 3, 3);
            gens_f.push_back(p);
            gens_q.push_back(pp(quotient, p.to_string()));
        }
        Polynomial f = random_poly(rng, free, 3, 4, 3);
        gens_f.push_back(rel);
        bool in_free = contains(Ideal(free, gens_f), f);
        bool in_quotient = contains(Ideal(quotient, gens_q),
                                    pp(quotient, f.to_string()));
        CHECK(in_free == in_quotient);
    }
}

TEST_CASE("step budget aborts instead of answering") {
    Ring r = qring({"x", "y", "z"});
    std::vector<Polynomial> gens = {pp(r, "x^2 + y^2 + z^2 - 1"),
                                    pp(r, "x*y - z^2"), pp(r, "y^3 - x*z")};
    set_step_budget(1);
    CHECK_THROWS_AS(buchberger(gens), BudgetExhaustedError);
    set_step_budget(std::nullopt);
    CHECK_NOTHROW(buchberger(gens));
}
