#include <doctest.h>

#include "conelab/errors.hpp"
#include "test_util.hpp"

using namespace conelab;
using namespace conelab::testutil;

TEST_SUITE_BEGIN("polynomial");

TEST_CASE("addition basics") {
    auto r = ring_xy();
    CHECK(P(r, "x + y") + P(r, "0 - x") == P(r, "y"));
    CHECK(P(r, "x^2 + y") + Polynomial::zero(r) == P(r, "x^2 + y"));
    CHECK(P(r, "x^2") + P(r, "2*x^2") == P(r, "3*x^2"));
}

TEST_CASE("multiplication basics") {
    auto r = ring_xy();
    CHECK(P(r, "(x + y)*(x - y)") == P(r, "x^2 - y^2"));
    CHECK(P(r, "x^2*y - 3") * Polynomial::constant(r, 1) == P(r, "x^2*y - 3"));
    CHECK(P(r, "x + 1") * P(r, "x + 1") == P(r, "x^2 + 2*x + 1"));
}

TEST_CASE("ring mismatch is rejected") {
    auto r1 = ring_xy();
    auto r2 = ring_xyz();
    CHECK_THROWS_AS(P(r1, "x") + P(r2, "x"), RingMismatchError);
    CHECK_THROWS_AS(P(r1, "x") * P(r2, "z"), RingMismatchError);
}

TEST_CASE("derivative") {
    auto r = ring_xyzt();
    int x = 0;
    CHECK(P(r, "x^2*y").derivative(x) == P(r, "2*x*y"));
    CHECK(P(r, "y^3").derivative(x) == Polynomial::zero(r));
    CHECK(P(r, "x^2 - t*x").derivative(x) == P(r, "2*x - t"));
}

TEST_CASE("substitution examples") {
    auto r = PolyRing::make({"x", "y", "a", "b"});
    std::map<int, Polynomial> shift{{0, P(r, "x + a")}, {1, P(r, "y + b")}};
    CHECK(substitute(P(r, "x*y"), shift, r) == P(r, "x*y + x*b + y*a + a*b"));
    CHECK(substitute(P(r, "x^2*y - 3*b"), {}, r) == P(r, "x^2*y - 3*b"));

    auto rt = ring_xyzt();
    std::map<int, Polynomial> at0{{3, Polynomial::zero(rt)}};
    CHECK(substitute(P(rt, "z*(z - t*x)"), at0, rt) == P(rt, "z^2"));
}

TEST_CASE("substitution is a ring homomorphism") {
    auto r = ring_xy();
    auto target = ring_xyz();
    PolyGen gen(r, 12345);
    std::map<int, Polynomial> phi{{0, P(target, "x + z^2")}, {1, P(target, "y - 2*z")}};
    for (int i = 0; i < 50; ++i) {
        Polynomial f = gen.next(), g = gen.next();
        CHECK(substitute(f + g, phi, target) ==
              substitute(f, phi, target) + substitute(g, phi, target));
        CHECK(substitute(f * g, phi, target) ==
              substitute(f, phi, target) * substitute(g, phi, target));
    }
}

TEST_CASE("ring axioms on random inputs") {
    auto r = ring_xyz();
    PolyGen gen(r, 987);
    for (int i = 0; i < 60; ++i) {
        Polynomial f = gen.next(), g = gen.next(), h = gen.next();
        CHECK((f + g) + h == f + (g + h));
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f + (-f) == Polynomial::zero(r));
    }
}

TEST_CASE("Leibniz rule") {
    auto r = ring_xyz();
    PolyGen gen(r, 55);
    for (int i = 0; i < 40; ++i) {
        Polynomial f = gen.next(), g = gen.next();
        for (int v = 0; v < 3; ++v) {
            CHECK((f * g).derivative(v) == f * g.derivative(v) + g * f.derivative(v));
        }
    }
}

TEST_CASE("term order invariants") {
    auto lex = PolyRing::make({"x", "y", "z"}, std::nullopt, MonomialOrder::lex(3));
    Polynomial f = P(lex, "y^3 + x*z + x^2");
    REQUIRE(f.size() == 3);
    CHECK(f.terms()[0].m.e == std::vector<int>{2, 0, 0});
    CHECK(f.terms()[1].m.e == std::vector<int>{1, 0, 1});
    CHECK(f.terms()[2].m.e == std::vector<int>{0, 3, 0});

    auto grv = ring_xyz();
    Polynomial g = P(grv, "x*y^2 + x^2*z + z^3 + x");
    // grevlex ties go to the monomial with the smaller exponent in the last
    // differing variable: x*y^2 beats x^2*z, which beats z^3
    CHECK(g.terms()[0].m.e == std::vector<int>{1, 2, 0});
    CHECK(g.terms()[1].m.e == std::vector<int>{2, 0, 1});
    CHECK(g.terms()[2].m.e == std::vector<int>{0, 0, 3});
    CHECK(g.terms()[3].m.e == std::vector<int>{1, 0, 0});
}

TEST_CASE("primitive normalization") {
    auto r = ring_xy();
    CHECK(P(r, "2*x + 4*y").primitive_normalized() == P(r, "x + 2*y"));
    CHECK((P(r, "0 - x - y")).primitive_normalized() == P(r, "x + y"));
    CHECK(P(r, "1/2*x^2 - 3/4*y").primitive_normalized() == P(r, "2*x^2 - 3*y"));
}

TEST_CASE("exact division") {
    auto r = ring_xyz();
    auto q = divide_exact(P(r, "x^2 - y^2"), P(r, "x - y"));
    REQUIRE(q.has_value());
    CHECK(*q == P(r, "x + y"));
    CHECK(!divide_exact(P(r, "x^2 + y"), P(r, "x + 1")).has_value());
    CHECK_THROWS_AS(divide_exact(P(r, "x"), Polynomial::zero(r)), DomainError);
}

TEST_CASE("rendering round trip") {
    auto r = ring_xyzt();
    PolyGen gen(r, 777);
    for (int i = 0; i < 40; ++i) {
        Polynomial f = gen.next();
        CHECK(parse_polynomial(r, f.to_string()) == f);
    }
}

TEST_SUITE_END();
