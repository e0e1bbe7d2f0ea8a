#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coordcheck/derivation.hpp"
#include "support.hpp"

using namespace testsupport;

namespace {

Ring sphere_ring() {
    return qring({"x", "y", "z", "U", "V", "W"}, MonomialOrder::degrevlex(),
                 {"x^2 + y^2 + z^2 - 1"}, 3);
}

Derivation deriv(const Ring& r, std::map<std::string, std::string> images) {
    std::map<std::string, Polynomial> polys;
    for (const auto& v : r->variables()) {
        auto it = images.find(v);
        polys.emplace(v, it == images.end() ? Polynomial::zero(r)
                                            : pp(r, it->second));
    }
    return Derivation(r, std::move(polys));
}

} // namespace

TEST_CASE("apply") {
    Ring r = qring({"X", "Y"});
    Derivation ddy = deriv(r, {{"X", "0"}, {"Y", "1"}});
    CHECK(apply(ddy, pp(r, "Y^2")) == pp(r, "2*Y"));
    CHECK(apply(ddy, pp(r, "5")).is_zero());

    Derivation tri = deriv(r, {{"X", "Y"}, {"Y", "0"}});
    CHECK(apply(tri, pp(r, "X*Y")) == pp(r, "Y^2"));
}

TEST_CASE("derivations must respect relations") {
    Ring s = qring({"x", "y"}, MonomialOrder::degrevlex(), {"x^2 - 1"});
    CHECK_THROWS_AS(deriv(s, {{"x", "1"}, {"y", "0"}}), Error);
    CHECK_NOTHROW(deriv(s, {{"x", "0"}, {"y", "x"}}));
}

TEST_CASE("jacobian matrices") {
    Ring r = qring({"X", "Y"});
    Matrix id2 = jacobian_matrix({pp(r, "X"), pp(r, "Y")}, {"X", "Y"});
    CHECK(id2.at(0, 0).is_one());
    CHECK(id2.at(0, 1).is_zero());
    CHECK(id2.at(1, 0).is_zero());
    CHECK(id2.at(1, 1).is_one());

    Ring h = sphere_ring();
    Matrix row = jacobian_matrix({pp(h, "z*V - y*W")}, {"U", "V", "W"});
    CHECK(row.rows() == 1);
    CHECK(row.at(0, 0).is_zero());
    CHECK(row.at(0, 1) == pp(h, "z"));
    CHECK(row.at(0, 2) == pp(h, "-y"));

    Ring t = qring({"t", "X", "Y"}, MonomialOrder::degrevlex(), {}, 1);
    Matrix jac = jacobian_matrix({pp(t, "Y + t*X^2*Y^2"), pp(t, "X")}, {"X", "Y"});
    CHECK(jac.at(0, 0) == pp(t, "2*t*X*Y^2"));
    CHECK(jac.at(0, 1) == pp(t, "1 + 2*t*X^2*Y"));
    CHECK(jac.at(1, 0).is_one());
    CHECK(jac.at(1, 1).is_zero());
}

TEST_CASE("determinants") {
    Ring r = qring({"x", "y", "z"});
    Matrix id2(2, 2, r);
    id2.set(0, 0, Polynomial::one(r));
    id2.set(1, 1, Polynomial::one(r));
    CHECK(determinant(id2).is_one());

    Matrix rep(2, 2, r);
    rep.set(0, 0, pp(r, "x + y"));
    rep.set(0, 1, pp(r, "z^2"));
    rep.set(1, 0, pp(r, "x + y"));
    rep.set(1, 1, pp(r, "z^2"));
    CHECK(determinant(rep).is_zero());

    Matrix m(3, 3, r);
    m.set(0, 1, pp(r, "z"));
    m.set(0, 2, pp(r, "-y"));
    m.set(1, 0, pp(r, "x"));
    m.set(1, 1, pp(r, "y"));
    m.set(1, 2, pp(r, "z"));
    m.set(2, 0, Polynomial::one(r));
    CHECK(determinant_bareiss(m) == pp(r, "y^2 + z^2"));
    CHECK(determinant_cofactor(m) == pp(r, "y^2 + z^2"));

    Matrix rect(2, 3, r);
    CHECK_THROWS_AS(determinant(rect), ArityError);
}

TEST_CASE("minors") {
    Ring h = sphere_ring();
    Matrix row = jacobian_matrix({pp(h, "z*V - y*W")}, {"U", "V", "W"});
    auto ones = minors(row, 1);
    REQUIRE(ones.size() == 3);
    CHECK(ones[0].is_zero());
    CHECK(ones[1] == pp(h, "z"));
    CHECK(ones[2] == pp(h, "-y"));

    Ring r = qring({"X", "Y"});
    Matrix id2 = jacobian_matrix({pp(r, "X"), pp(r, "Y")}, {"X", "Y"});
    auto m2 = minors(id2, 2);
    REQUIRE(m2.size() == 1);
    CHECK(m2[0].is_one());
    CHECK_THROWS_AS(minors(id2, 3), ArityError);

    // Maximal minors of Jac(X1, T1)/(X1, X2, T1): the signed-partials pattern.
    Ring a = qring({"X1", "X2", "T1"});
    Matrix jac = jacobian_matrix({pp(a, "X1"), pp(a, "T1")}, {"X1", "X2", "T1"});
    auto mm = minors(jac, 2);
    REQUIRE(mm.size() == 3);
    CHECK(mm[0].is_zero());
    CHECK(mm[1].is_one());
    CHECK(mm[2].is_zero());
}

TEST_CASE("jacobian derivations") {
    Ring r = qring({"X", "Y"});
    Derivation d = jacobian_derivation({pp(r, "X")}, {"X", "Y"});
    CHECK(d.image("X").is_zero());
    CHECK(d.image("Y").is_one());
    CHECK(apply(d, pp(r, "X")).is_zero());

    Ring a = qring({"X1", "X2", "X3"});
    Derivation d3 = jacobian_derivation({pp(a, "X1*X2"), pp(a, "X3")},
                                        {"X1", "X2", "X3"});
    CHECK(d3.image("X1") == pp(a, "X1"));
    CHECK(d3.image("X2") == pp(a, "-X2"));
    CHECK(d3.image("X3").is_zero());
    CHECK(apply(d3, pp(a, "X1*X2")).is_zero());
    CHECK(apply(d3, pp(a, "X3")).is_zero());

    CHECK_THROWS_AS(jacobian_derivation({pp(a, "X1")}, {"X1", "X2", "X3"}),
                    ArityError);
}

TEST_CASE("fixed point freeness") {
    Ring r = qring({"X", "Y"});
    Verdict v = is_fixed_point_free(deriv(r, {{"X", "0"}, {"Y", "1"}}));
    CHECK(v.proven_p());
    CHECK(std::holds_alternative<UnitCertificate>(v.witness));

    Verdict w = is_fixed_point_free(deriv(r, {{"X", "Y"}, {"Y", "-X"}}));
    CHECK(w.refuted_p());
    const auto& basis = std::get<BasisWitness>(w.witness).basis;
    CHECK(basis == std::vector<Polynomial>{pp(r, "X"), pp(r, "Y")});
}

TEST_CASE("jacobian derivation of (g, s) over the sphere is not fixed point free") {
    Ring h = sphere_ring();
    Derivation delta = jacobian_derivation({pp(h, "z*V - y*W"),
                                            pp(h, "x*U + y*V + z*W")},
                                           {"U", "V", "W"});
    CHECK(is_fixed_point_free(delta).refuted_p());
}

TEST_CASE("local nilpotency certification") {
    Ring r = qring({"X", "Y"});
    Verdict tri = is_locally_nilpotent(deriv(r, {{"X", "Y"}, {"Y", "0"}}), 8);
    CHECK(tri.proven_p());
    auto indices = std::get<IndexWitness>(tri.witness).indices;
    REQUIRE(indices.size() == 2);
    CHECK(indices[0] == std::pair<std::string, int>{"X", 2});
    CHECK(indices[1] == std::pair<std::string, int>{"Y", 1});

    // Y -> X^2 -> 2X -> 2 -> 0 needs four applications.
    Verdict quad = is_locally_nilpotent(deriv(r, {{"X", "1"}, {"Y", "X^2"}}), 8);
    CHECK(quad.proven_p());
    auto qi = std::get<IndexWitness>(quad.witness).indices;
    CHECK(qi[0] == std::pair<std::string, int>{"X", 2});
    CHECK(qi[1] == std::pair<std::string, int>{"Y", 4});
    CHECK(is_locally_nilpotent(deriv(r, {{"X", "1"}, {"Y", "X^2"}}), 3).exhausted_p());

    // An eigen-direction is never certified either way.
    Ring one = qring({"X"});
    for (int bound : {1, 2, 4, 16, 64}) {
        Verdict v = is_locally_nilpotent(deriv(one, {{"X", "X"}}), bound);
        CHECK(v.exhausted_p());
        CHECK(v.bound == bound);
    }
}

TEST_CASE("nilpotency iterates are reduced modulo relations") {
    Ring s = qring({"x", "y"}, MonomialOrder::degrevlex(), {"x^2 - 1"});
    // The image of y is the relation itself, so it vanishes immediately in
    // the quotient.
    Verdict v = is_locally_nilpotent(deriv(s, {{"x", "0"}, {"y", "x^2 - 1"}}), 4);
    CHECK(v.proven_p());
    auto indices = std::get<IndexWitness>(v.witness).indices;
    CHECK(indices[1] == std::pair<std::string, int>{"y", 1});
}

TEST_CASE("slice search works modulo relations") {
    Ring s = qring({"x", "y"}, MonomialOrder::degrevlex(), {"x^2 - 1"});
    Derivation d = deriv(s, {{"x", "0"}, {"y", "x"}});
    // apply(D, x*y) = x^2 which reduces to 1 in the quotient.
    auto g = find_slice(d, 2);
    REQUIRE(g.has_value());
    std::vector<Polynomial> rel = buchberger(s->relations());
    CHECK(normal_form(apply(d, *g), rel).is_one());
    CHECK_FALSE(find_slice(d, 1).has_value());
}

TEST_CASE("slice search") {
    Ring r = qring({"X", "Y"});
    auto slice = find_slice(deriv(r, {{"X", "0"}, {"Y", "1"}}), 1);
    REQUIRE(slice.has_value());
    CHECK(*slice == pp(r, "Y"));

    CHECK_FALSE(find_slice(deriv(r, {{"X", "Y"}, {"Y", "0"}}), 4).has_value());

    Ring one = qring({"X"});
    auto half = find_slice(deriv(one, {{"X", "2"}}), 1);
    REQUIRE(half.has_value());
    CHECK(*half == pp(one, "1/2 X"));
}

TEST_CASE("slice certificates re-verify") {
    std::mt19937 rng(211);
    Ring r = qring({"X", "Y"});
    for (int i = 0; i < 40; ++i) {
        // Triangular derivations are locally nilpotent by construction.
        Polynomial py = random_poly(rng, r, 2, 3, 2);
        std::map<std::string, Polynomial> images{
            {"X", substitute(py, {{"X", Polynomial::zero(r)}})}, // p(Y) only
            {"Y", Polynomial::constant(r, 1)}};
        Derivation d(r, images);
        REQUIRE(is_locally_nilpotent(d, 16).proven_p());
        auto g = find_slice(d, 3);
        REQUIRE(g.has_value());
        CHECK(apply(d, *g).is_one());
    }
}

TEST_CASE("retraction checks") {
    Ring r = qring({"U", "V", "W"});
    std::map<std::string, Polynomial> identity;
    CHECK(is_retraction(identity, r).proven_p());

    std::map<std::string, Polynomial> rotate{{"U", pp(r, "V")},
                                             {"V", pp(r, "W")},
                                             {"W", pp(r, "U")}};
    CHECK(is_retraction(rotate, r).refuted_p());

    Ring h = sphere_ring();
    Polynomial s = pp(h, "x*U + y*V + z*W");
    std::map<std::string, Polynomial> phi{
        {"U", pp(h, "U") - pp(h, "x") * s},
        {"V", pp(h, "V") - pp(h, "y") * s},
        {"W", pp(h, "W") - pp(h, "z") * s}};
    CHECK(is_retraction(phi, h).proven_p());

    // s lies in the kernel of phi at the generator level.
    for (const auto& v : h->variables())
        phi.emplace(v, Polynomial::variable(h, v));
    std::vector<Polynomial> rel = buchberger(h->relations());
    CHECK(normal_form(substitute(s, phi), rel).is_zero());
}

TEST_CASE("apply satisfies the Leibniz rule on random pairs") {
    std::mt19937 rng(223);
    Ring r = qring({"x", "y", "z"});
    for (int i = 0; i < 150; ++i) {
        std::map<std::string, Polynomial> images;
        for (const auto& v : r->variables())
            images.emplace(v, random_poly(rng, r, 2, 3, 3));
        Derivation d(r, std::move(images));
        Polynomial f = random_poly(rng, r, 3, 4, 3);
        Polynomial g = random_poly(rng, r, 3, 4, 3);
        CHECK(apply(d, f * g) == f * apply(d, g) + g * apply(d, f));
    }
}

TEST_CASE("jacobian derivation alternation and antisymmetry") {
    std::mt19937 rng(227);
    Ring r = qring({"x", "y", "z"});
    for (int i = 0; i < 80; ++i) {
        Polynomial f1 = random_poly(rng, r, 2, 3, 3);
        Polynomial f2 = random_poly(rng, r, 2, 3, 3);
        Derivation d12 = jacobian_derivation({f1, f2}, r->variables());
        Derivation d21 = jacobian_derivation({f2, f1}, r->variables());
        CHECK(apply(d12, f1).is_zero());
        CHECK(apply(d12, f2).is_zero());
        for (const auto& v : r->variables())
            CHECK(d12.image(v) == -d21.image(v));
    }
}

TEST_CASE("minor ideal equals derivation image ideal on random inputs") {
    std::mt19937 rng(229);
    for (int n : {1, 2}) {
        std::vector<std::string> vars = {"X1", "X2"};
        for (int t = 1; t <= n; ++t) vars.push_back("T" + std::to_string(t));
        Ring r = qring(vars);
        for (int i = 0; i < 25; ++i) {
            // F over the two non-stable variables only.
            Polynomial f = Polynomial::zero(r);
            {
                Ring two = qring({"X1", "X2"});
                f = pp(r, random_poly(rng, two, 3, 5, 2).to_string());
            }
            std::vector<Polynomial> polys{f};
            for (int t = 1; t <= n; ++t)
                polys.push_back(pp(r, "T" + std::to_string(t)));
            Matrix jac = jacobian_matrix(polys, vars);
            Derivation delta = jacobian_derivation(polys, vars);
            CHECK(ideal_equals(Ideal(r, minors(jac, polys.size())),
                               Ideal(r, delta.images())));
        }
    }
}

TEST_CASE("Bareiss and cofactor determinants agree on random matrices") {
    std::mt19937 rng(233);
    Ring r = qring({"x", "y"});
    for (int i = 0; i < 150; ++i) {
        std::size_t n = 1 + rng() % 4;
        Matrix m(n, n, r);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                m.set(a, b, random_poly(rng, r, 2, 2, 2));
        if (n >= 2 && rng() % 3 == 0) {
            // Duplicate a row to exercise the singular path.
            for (std::size_t b = 0; b < n; ++b) m.set(n - 1, b, m.at(0, b));
        }
        Polynomial det_b = determinant_bareiss(m);
        CHECK(det_b == determinant_cofactor(m));
        CHECK(determinant(m) == det_b);
    }
}
