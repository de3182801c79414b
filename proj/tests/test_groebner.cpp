#include <doctest.h>

#include <algorithm>
#include <random>

#include "conelab/errors.hpp"
#include "conelab/groebner.hpp"
#include "test_util.hpp"

using namespace conelab;
using namespace conelab::testutil;

namespace {

// oracle-style check: every S-polynomial reduces to zero against the basis
bool all_spairs_reduce(const GroebnerBasis& G) {
    const auto& e = G.elements();
    for (size_t i = 0; i < e.size(); ++i) {
        for (size_t j = i + 1; j < e.size(); ++j) {
            Monomial l = Monomial::lcm(e[i].leading_monomial(), e[j].leading_monomial());
            Polynomial s = e[i].times_term(1 / e[i].leading_coefficient(),
                                           l / e[i].leading_monomial()) -
                           e[j].times_term(1 / e[j].leading_coefficient(),
                                           l / e[j].leading_monomial());
            if (!normal_form(s, G).is_zero()) return false;
        }
    }
    return true;
}

bool mutually_generate(const RingPtr& r, const std::vector<Polynomial>& A,
                       const std::vector<Polynomial>& B) {
    return ideal_contains(Ideal(r, A), Ideal(r, B)) && ideal_contains(Ideal(r, B), Ideal(r, A));
}

} // namespace

TEST_SUITE_BEGIN("groebner");

TEST_CASE("monomial generators are already reduced") {
    auto r = ring_xy();
    auto G = buchberger(r, PL(r, {"x", "y"}));
    REQUIRE(G.size() == 2);
    CHECK(G.elements()[0] == P(r, "y"));
    CHECK(G.elements()[1] == P(r, "x"));
}

TEST_CASE("zero ideal gives the empty basis") {
    auto r = ring_xy();
    std::vector<Polynomial> zero{Polynomial::zero(r)};
    CHECK(buchberger(r, zero).size() == 0);
    CHECK(normal_form(P(r, "x + 1"), buchberger(r, zero)) == P(r, "x + 1"));
}

TEST_CASE("twisted-cubic style ideal under lex") {
    auto r = PolyRing::make({"x", "y", "z"}, std::nullopt, MonomialOrder::lex(3));
    auto gens = PL(r, {"x^2 - y", "x^3 - z"});
    auto G = buchberger(r, gens);
    CHECK(all_spairs_reduce(G));
    CHECK(mutually_generate(r, gens, G.elements()));
    // x*z - y^2 and y^3 - z^2 are forced into any lex basis
    Ideal I(r, gens);
    CHECK(normal_form(P(r, "x*z - y^2"), G).is_zero());
    CHECK(normal_form(P(r, "y^3 - z^2"), G).is_zero());
}

TEST_CASE("normal form basics") {
    auto r = ring_xyz();
    auto G = buchberger(r, PL(r, {"x", "y"}));
    CHECK(normal_form(P(r, "x*y + z"), G) == P(r, "z"));
    CHECK(normal_form(P(r, "x"), buchberger(r, PL(r, {"x^2"}))) == P(r, "x"));
}

TEST_CASE("generators reduce to zero against their basis") {
    auto r = ring_xyz();
    auto gens = PL(r, {"x*y - z^2", "y^2 - x*z", "x^2*z - y"});
    auto G = buchberger(r, gens);
    for (const auto& g : gens) CHECK(normal_form(g, G).is_zero());
}

TEST_CASE("normal form is idempotent") {
    auto r = ring_xyz();
    auto G = buchberger(r, PL(r, {"x*y - 1", "y^2 - x"}));
    PolyGen gen(r, 99);
    for (int i = 0; i < 30; ++i) {
        Polynomial f = gen.next();
        Polynomial nf = normal_form(f, G);
        CHECK(normal_form(nf, G) == nf);
    }
}

TEST_CASE("membership soundness for random combinations") {
    auto r = ring_xyz();
    auto gens = PL(r, {"x^2 - y*z", "y^3 - z"});
    auto G = buchberger(r, gens);
    PolyGen gen(r, 1312);
    for (int i = 0; i < 30; ++i) {
        Polynomial combo = Polynomial::zero(r);
        for (const auto& g : gens) combo = combo + gen.next() * g;
        CHECK(normal_form(combo, G).is_zero());
    }
}

TEST_CASE("reduced basis is canonical across generator permutations") {
    auto r = ring_xyz();
    auto gens = PL(r, {"x^2 + y", "x*y + z", "z^2 - x", "y^2 - z*x + 1"});
    auto G0 = buchberger(r, gens);
    std::mt19937 rng(7);
    for (int i = 0; i < 6; ++i) {
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(buchberger(r, gens) == G0);
    }
}

TEST_CASE("pair-elimination criteria do not change the basis") {
    auto r = ring_xyz();
    std::vector<std::vector<Polynomial>> cases = {
        PL(r, {"x^2 - y", "x^3 - z"}),
        PL(r, {"x*y - z^2", "y^2 - x*z"}),
        PL(r, {"x^2 + y^2 + z^2 - 1", "x*y - z", "y*z - x"}),
        PL(r, {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"}),
    };
    for (const auto& gens : cases) {
        BuchbergerOptions all, none, onlyCoprime, onlyChain;
        none.coprime_criterion = none.chain_criterion = false;
        onlyCoprime.chain_criterion = false;
        onlyChain.coprime_criterion = false;
        GroebnerStats sAll, sNone;
        auto GA = buchberger(r, gens, all, &sAll);
        auto GN = buchberger(r, gens, none, &sNone);
        CHECK(GA == GN);
        CHECK(GA == buchberger(r, gens, onlyCoprime));
        CHECK(GA == buchberger(r, gens, onlyChain));
        CHECK(sAll.pairs_enqueued <= sNone.pairs_enqueued);
    }
}

TEST_CASE("resource cap raises a distinct failure") {
    auto r = ring_xyz();
    BuchbergerOptions opts;
    opts.max_pairs = 1;
    CHECK_THROWS_AS(
        buchberger(r, PL(r, {"x^2 + y^2 + z^2 - 1", "x*y - z", "y*z - x", "x*z - y"}), opts),
        ResourceLimitError);
}

TEST_CASE("ideal containment and equality") {
    auto r = ring_xy();
    CHECK(ideal_contains(Ideal(r, PL(r, {"x^2", "x*y"})), Ideal(r, PL(r, {"x^2"}))));
    CHECK(!ideal_contains(Ideal(r, PL(r, {"x^2"})), Ideal(r, PL(r, {"x"}))));
    CHECK(ideal_equal(Ideal(r, PL(r, {"x", "y"})), Ideal(r, PL(r, {"x + y", "x - y"}))));
    CHECK(!ideal_equal(Ideal(r, PL(r, {"x"})), Ideal(r, PL(r, {"x^2"}))));
}

TEST_CASE("groebner cache is reused") {
    auto r = ring_xyz();
    Ideal I(r, PL(r, {"x^2 - y", "y^2 - z"}));
    const GroebnerBasis& a = I.groebner();
    const GroebnerBasis& b = I.groebner();
    CHECK(&a == &b);
}

TEST_SUITE_END();
