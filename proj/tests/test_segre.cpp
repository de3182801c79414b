#include <doctest.h>

#include "conelab/errors.hpp"
#include "conelab/segre.hpp"
#include "test_util.hpp"

using namespace conelab;
using namespace conelab::testutil;

TEST_SUITE_BEGIN("segre");

TEST_CASE("s0 of a tangent star cone") {
    auto r = PolyRing::make({"x", "y", "t"}, "t");
    SUBCASE("squarefree input is its own class") {
        CycleClass c = s0_tangent_star(P(r, "x*y - t"));
        REQUIRE(c.terms.size() == 1);
        CHECK(c.terms[0].weight == 1);
        CHECK(c.terms[0].component == P(r, "x*y - t"));
    }
    SUBCASE("weights are squared multiplicities") {
        CycleClass c = s0_tangent_star(P(r, "x^2*y"));
        REQUIRE(c.terms.size() == 2);
        CHECK(c.terms[0].weight == 1);
        CHECK(c.terms[0].component == P(r, "y"));
        CHECK(c.terms[1].weight == 4);
        CHECK(c.terms[1].component == P(r, "x"));
    }
    SUBCASE("degree bookkeeping") {
        std::vector<int> xv = r->coordinate_vars();
        for (const char* fs : {"x^3*(y - 1)^2", "x*y*(x - y)", "(x^2 - y^3)^2*x"}) {
            Polynomial f = P(r, fs);
            CycleClass c = s0_tangent_star(f);
            int total = 0;
            Polynomial prod = Polynomial::constant(r, 1);
            for (const auto& e : c.terms) {
                int m = 0;
                while (m * m < e.weight) ++m;
                CHECK(m * m == e.weight);
                total += m * e.component.degree_on(xv);
                prod = prod * e.component.pow(m);
            }
            CHECK(total == f.degree_on(xv));
            CHECK(prod.primitive_normalized() == f.primitive_normalized());
        }
    }
    SUBCASE("constant input is rejected") {
        CHECK_THROWS_AS(s0_tangent_star(P(r, "t - 3")), DomainError);
    }
}

TEST_CASE("coalescence criteria") {
    auto r = PolyRing::make({"x", "y", "t"}, "t");
    SUBCASE("node family stays reduced") {
        CoalescenceReport rep = coalescence_check(P(r, "x*y - t"));
        CHECK(rep.verdict);
        CHECK(!rep.certificate.has_value());
    }
    SUBCASE("two branches merging at t = 0") {
        CoalescenceReport rep = coalescence_check(P(r, "x^2 - t^2"));
        CHECK(!rep.verdict);
        CHECK(rep.failing_criterion == 1);
        REQUIRE(rep.certificate.has_value());
        CHECK(*rep.certificate == P(r, "x"));
    }
    SUBCASE("x(x - t) merges the same way") {
        CoalescenceReport rep = coalescence_check(P(r, "x*(x - t)"));
        CHECK(!rep.verdict);
        CHECK(rep.failing_criterion == 1);
        CHECK(*rep.certificate == P(r, "x"));
    }
    SUBCASE("distinct multiplicity classes colliding is criterion 2") {
        // (x - t) simple and y^2 double; at t = 0 the simple branch x stays
        // coprime to y, but x*(y - x + t)^2 degenerates differently:
        CoalescenceReport rep = coalescence_check(P(r, "(x - t)*y^2"));
        CHECK(rep.verdict);
        rep = coalescence_check(P(r, "x*(x - t)^2"));
        CHECK(!rep.verdict);
        CHECK(rep.failing_criterion == 2);
        REQUIRE(rep.certificate.has_value());
        CHECK(*rep.certificate == P(r, "x"));
    }
    SUBCASE("degenerate families are rejected") {
        CHECK_THROWS_AS(coalescence_check(P(r, "t*x^2 + x")), DomainError);
        CHECK_THROWS_AS(coalescence_check(P(r, "t*x")), DomainError);
        auto rn = ring_xy();
        CHECK_THROWS_AS(coalescence_check(P(rn, "x*y")), DomainError);
    }
}

TEST_CASE("s0 specialization") {
    auto r = PolyRing::make({"x", "y", "t"}, "t");
    SUBCASE("non-coalescing family specializes") {
        SpecializationReport rep = s0_specializes(P(r, "x*y - t"));
        CHECK(rep.verdict);
        REQUIRE(rep.family_class.terms.size() == 1);
        REQUIRE(rep.fiber_class.terms.size() == 1);
        CHECK(rep.fiber_class.terms[0].component == P(r, "x*y"));
    }
    SUBCASE("merging branches break specialization") {
        SpecializationReport rep = s0_specializes(P(r, "x^2 - t^2"));
        CHECK(!rep.verdict);
        REQUIRE(rep.family_class.terms.size() == 1);
        CHECK(rep.family_class.terms[0].weight == 1);
        CHECK(rep.family_class.terms[0].component == P(r, "x^2 - t^2"));
        REQUIRE(rep.fiber_class.terms.size() == 1);
        CHECK(rep.fiber_class.terms[0].weight == 4);
        CHECK(rep.fiber_class.terms[0].component == P(r, "x"));
    }
    SUBCASE("constant family is trivially fine") {
        SpecializationReport rep = s0_specializes(P(r, "x^2*y"));
        CHECK(rep.verdict);
        REQUIRE(rep.family_class.terms.size() == 2);
        CHECK(rep.family_class.terms[0].weight == rep.fiber_class.terms[0].weight);
        CHECK(rep.family_class.terms[1].weight == rep.fiber_class.terms[1].weight);
    }
}

TEST_SUITE_END();
