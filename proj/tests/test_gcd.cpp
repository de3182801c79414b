#include <doctest.h>

#include "conelab/errors.hpp"
#include "conelab/poly_gcd.hpp"
#include "test_util.hpp"

using namespace conelab;
using namespace conelab::testutil;

TEST_SUITE_BEGIN("gcd");

TEST_CASE("gcd basics") {
    auto r = ring_xy();
    CHECK(multivariate_gcd(P(r, "3*x^2 - 3*y^2"), Polynomial::zero(r)) == P(r, "x^2 - y^2"));
    CHECK(multivariate_gcd(P(r, "x^2 - y^2"), P(r, "x^2 + 2*x*y + y^2")) == P(r, "x + y"));
    CHECK(multivariate_gcd(P(r, "x"), P(r, "y")) == Polynomial::constant(r, 1));
}

TEST_CASE("gcd divides both arguments") {
    auto r = ring_xyz();
    PolyGen gen(r, 31337, 3, 2, 3);
    for (int i = 0; i < 30; ++i) {
        Polynomial a = gen.next_nonzero(), b = gen.next_nonzero(), c = gen.next_nonzero();
        Polynomial f = a * c, g = b * c;
        Polynomial d = multivariate_gcd(f, g);
        CHECK(divide_exact(f, d).has_value());
        CHECK(divide_exact(g, d).has_value());
        // the common factor c must divide the gcd
        CHECK(divide_exact(d, c.primitive_normalized()).has_value());
    }
}

TEST_CASE("gcd scales with common polynomial factor") {
    auto r = ring_xy();
    PolyGen gen(r, 4242, 3, 2, 3);
    for (int i = 0; i < 20; ++i) {
        Polynomial f = gen.next_nonzero(), g = gen.next_nonzero(), a = gen.next_nonzero();
        Polynomial lhs = multivariate_gcd(a * f, a * g);
        Polynomial rhs = (a.primitive_normalized() * multivariate_gcd(f, g)).primitive_normalized();
        CHECK(divide_exact(lhs, rhs).has_value());
        CHECK(divide_exact(rhs, lhs).has_value());
    }
}

TEST_CASE("squarefree decomposition examples") {
    auto r = ring_xy();
    std::vector<int> vars{0, 1};
    auto dec = squarefree_decomposition(P(r, "x^2*y"), vars);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == 1);
    CHECK(dec[0].second == P(r, "y"));
    CHECK(dec[1].first == 2);
    CHECK(dec[1].second == P(r, "x"));

    auto already = squarefree_decomposition(P(r, "x*y + 1"), vars);
    REQUIRE(already.size() == 1);
    CHECK(already[0].first == 1);
    CHECK(already[0].second == P(r, "x*y + 1"));

    CHECK_THROWS_AS(squarefree_decomposition(Polynomial::zero(r), vars), DomainError);
}

TEST_CASE("squarefree decomposition with a parameter") {
    auto r = PolyRing::make({"x", "t"}, "t");
    std::vector<int> vars{0};
    auto dec = squarefree_decomposition(P(r, "(x - t)^2*(x + t)"), vars);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == 1);
    CHECK(dec[0].second == P(r, "x + t"));
    CHECK(dec[1].first == 2);
    CHECK(dec[1].second == P(r, "x - t"));
}

TEST_CASE("squarefree reassembly and pairwise structure") {
    auto r = ring_xy();
    std::vector<int> vars{0, 1};
    PolyGen gen(r, 2024, 2, 2, 2);
    int done = 0;
    for (int i = 0; done < 25 && i < 200; ++i) {
        Polynomial a = gen.next_nonzero(), b = gen.next_nonzero();
        Polynomial f = a * a * b;
        if (f.is_constant()) continue;
        ++done;
        auto dec = squarefree_decomposition(f, vars);
        Polynomial prod = Polynomial::constant(r, 1);
        for (const auto& [m, g] : dec) {
            prod = prod * g.pow(m);
            // each part squarefree on vars
            CHECK(squarefree_obstruction(g, vars).is_constant());
        }
        // reassembles up to content (both are primitive multiples of each other)
        CHECK(prod.primitive_normalized() == f.primitive_normalized());
        // parts pairwise coprime
        for (size_t s = 0; s < dec.size(); ++s)
            for (size_t u = s + 1; u < dec.size(); ++u)
                CHECK(multivariate_gcd(dec[s].second, dec[u].second).is_constant());
    }
    REQUIRE(done == 25);
}

TEST_SUITE_END();
