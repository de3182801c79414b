#include <doctest.h>

#include "conelab/errors.hpp"
#include "conelab/normal_cone.hpp"
#include "test_util.hpp"

using namespace conelab;
using namespace conelab::testutil;

namespace {

bool u_homogeneous(const Polynomial& g, std::span<const int> dirs) {
    if (g.is_zero()) return true;
    int d = g.terms().front().m.deg_on(dirs);
    for (const Term& t : g.terms())
        if (t.m.deg_on(dirs) != d) return false;
    return true;
}

} // namespace

TEST_SUITE_BEGIN("normal_cone");

TEST_CASE("polarization operator") {
    auto r = ring_xy();
    ConeRingLayout c = make_cone_ring(r);
    auto C = c.ring; // x, y, u1, u2
    Polynomial f = P(C, "x^2*y");
    CHECK(polarize(f, c.base_vars, c.dir_vars, 0) == f);
    CHECK(polarize(f, c.base_vars, c.dir_vars, 1) == P(C, "2*x*y*u1 + x^2*u2"));

    auto r1 = PolyRing::make({"x"});
    ConeRingLayout c1 = make_cone_ring(r1);
    CHECK(c1.ring->name(1) == "u");
    CHECK(polarize(P(c1.ring, "x^3"), c1.base_vars, c1.dir_vars, 3) == P(c1.ring, "6*u^3"));
}

TEST_CASE("initial form ideal basics") {
    auto r = PolyRing::make({"x", "u"});
    std::vector<int> dirs{1};
    Ideal Q(r, PL(r, {"u"}));
    CHECK(ideal_equal(initial_form_ideal(Q, dirs), Q));

    // already direction-homogeneous ideals are fixed points
    Ideal H(r, PL(r, {"x*u", "u^2 - x^2*u"}));
    // second generator is not homogeneous; use a homogeneous one instead
    Ideal H2(r, PL(r, {"x*u", "x^3*u^2"}));
    CHECK(ideal_equal(initial_form_ideal(H2, dirs), H2));

    // idempotence on a non-homogeneous input
    Ideal M(r, PL(r, {"u + u^2 + x"}));
    Ideal once = initial_form_ideal(M, dirs);
    CHECK(ideal_equal(initial_form_ideal(once, dirs), once));
}

TEST_CASE("initial form of the off-diagonal product generator") {
    auto r = PolyRing::make({"x", "y", "a", "b"});
    std::vector<int> dirs{2, 3};
    Ideal Q(r, PL(r, {"x*b + y*a + a*b"}));
    Ideal in = initial_form_ideal(Q, dirs);
    CHECK(ideal_contains(in, Ideal(r, PL(r, {"y*a + x*b"}))));
}

TEST_CASE("tangent star cone of a smooth hypersurface is its tangent bundle") {
    auto r = ring_xy();
    Polynomial f = P(r, "y - x^2");
    ConePresentation ts = tangent_star_ideal(Ideal(r, {f}));
    auto C = ts.ring;
    Polynomial fc = map_to_ring(f, C);
    Polynomial pf = polarize(fc, ts.base_vars, ts.dir_vars, 1);
    CHECK(ideal_equal(ts.ideal, Ideal(C, {fc, pf})));
}

TEST_CASE("triple line complete intersection: printed cone ideal") {
    auto r = ring_xyz();
    Ideal X(r, PL(r, {"x*y", "z*(z - x)"}));
    ConePresentation ts = tangent_star_ideal(X, {"a", "b", "c"});
    auto C = ts.ring;
    REQUIRE(C->names() == std::vector<std::string>{"x", "y", "z", "a", "b", "c"});
    Ideal expected(C, PL(C, {"x*y", "z*(z - x)", "z*a + x*c - 2*z*c", "y*a + x*b",
                             "c^2*(2*x*b - z*b + y*c)", "b*c^2*(a^2 - 2*a*c + c^2)"}));
    CHECK(ideal_equal(ts.ideal, expected));

    // cone properties
    for (const Polynomial& g : ts.ideal.generators()) CHECK(u_homogeneous(g, ts.dir_vars));

    // center recovery: cone + (dirs) = X + (dirs)
    std::vector<Polynomial> dirs_gens;
    for (int u : ts.dir_vars) dirs_gens.push_back(Polynomial::variable(C, u));
    std::vector<Polynomial> lhs = ts.ideal.generators(), rhs;
    for (const Polynomial& g : X.generators()) rhs.push_back(map_to_ring(g, C));
    for (const Polynomial& u : dirs_gens) {
        lhs.push_back(u);
        rhs.push_back(u);
    }
    CHECK(ideal_equal(Ideal(C, lhs), Ideal(C, rhs)));
}

TEST_CASE("hypersurface generator formula") {
    auto r = ring_xy();
    SUBCASE("squarefree: f and Pf") {
        Polynomial f = P(r, "x*y - 1");
        auto gens = hypersurface_ts_generators(f);
        REQUIRE(gens.size() == 2);
        auto C = gens[0].ring();
        CHECK(gens[0] == map_to_ring(f, C));
        CHECK(gens[1] == P(C, "y*u1 + x*u2"));
    }
    SUBCASE("x^2*y") {
        Polynomial f = P(r, "x^2*y");
        auto gens = hypersurface_ts_generators(f);
        REQUIRE(gens.size() == 3);
        auto C = gens[0].ring();
        CHECK(gens[1] == P(C, "2*x*y*u1 + x^2*u2"));
        CHECK(gens[2] == P(C, "6*y^2*u1^3"));
    }
    SUBCASE("x^2 in one variable") {
        auto r1 = PolyRing::make({"x"});
        auto gens = hypersurface_ts_generators(P(r1, "x^2"));
        REQUIRE(gens.size() == 3);
        auto C = gens[0].ring();
        CHECK(gens[1] == P(C, "2*x*u"));
        CHECK(gens[2] == P(C, "6*u^3"));
    }
    SUBCASE("constant input is rejected") {
        CHECK_THROWS_AS(hypersurface_ts_generators(Polynomial::constant(r, 3)), DomainError);
    }
}

TEST_CASE("deformation and polarization define the same cone") {
    SUBCASE("absolute, one variable") {
        auto r = PolyRing::make({"x"});
        for (const char* fs : {"x^2", "x^3 - x"}) {
            Polynomial f = P(r, fs);
            ConePresentation a = tangent_star_ideal(Ideal(r, {f}));
            ConePresentation b = hypersurface_ts_cone(f);
            CHECK(ideal_equal(a.ideal, map_ideal(b.ideal, a.ring)));
        }
    }
    SUBCASE("relative node family") {
        auto r = PolyRing::make({"x", "y", "t"}, "t");
        Polynomial f = P(r, "x*y - t");
        ConePresentation a = tangent_star_ideal(Ideal(r, {f}));
        ConePresentation b = hypersurface_ts_cone(f);
        CHECK(ideal_equal(a.ideal, map_ideal(b.ideal, a.ring)));
    }
}

TEST_CASE("rees presentation of the normal cone") {
    SUBCASE("point in a line: full line bundle") {
        auto r = PolyRing::make({"x"});
        Ideal Y(r, {});
        std::vector<Polynomial> center = PL(r, {"x"});
        Ideal cone = rees_normal_cone(Y, center);
        auto F = cone.ring();
        REQUIRE(F->nvars() == 2); // x and one fiber coordinate
        CHECK(ideal_equal(cone, Ideal(F, {Polynomial::variable(F, 0)})));
    }
    SUBCASE("tangent cone of the node") {
        auto r = ring_xy();
        Ideal Y(r, PL(r, {"x*y"}));
        std::vector<Polynomial> center = PL(r, {"x", "y"});
        Ideal cone = rees_normal_cone(Y, center, {"p", "q"});
        auto F = cone.ring();
        Polynomial pq = P(F, "p*q");
        CHECK(normal_form(pq, cone.groebner()).is_zero());
        // and the cone is exactly (x, y, p*q)
        CHECK(ideal_equal(cone, Ideal(F, PL(F, {"x", "y", "p*q"}))));
    }
}

TEST_CASE("fiber comparison outcomes") {
    auto r = PolyRing::make({"x", "y", "t"}, "t");
    SUBCASE("non-coalescing node family stays equal") {
        Ideal X(r, PL(r, {"x*y - t"}));
        ConePresentation C = tangent_star_ideal(X);
        FiberCompareResult res = cone_fiber_compare(C, X);
        CHECK(res.outcome == FiberCompare::equal);
        CHECK(!res.certificate.has_value());
    }
    SUBCASE("coalescing pair of lines gives a strictly larger family fiber") {
        Ideal X(r, PL(r, {"x*(x - t)"}));
        ConePresentation C = tangent_star_ideal(X);
        FiberCompareResult res = cone_fiber_compare(C, X);
        CHECK(res.outcome == FiberCompare::cone_fiber_strictly_larger);
        REQUIRE(res.certificate.has_value());
        CHECK(!normal_form(*res.certificate, res.family_fiber.groebner()).is_zero());
        CHECK(normal_form(*res.certificate, res.fiber_cone.groebner()).is_zero());
    }
}

TEST_SUITE_END();
