#include <doctest.h>

#include "conelab/errors.hpp"
#include "conelab/flatness.hpp"
#include "test_util.hpp"

using namespace conelab;
using namespace conelab::testutil;

namespace {

// witness soundness: membership in the tested expression plus nonzero normal
// form against I
void check_witness_flat(const Ideal& I, const FlatnessReport& rep) {
    REQUIRE(rep.witness.has_value());
    Polynomial t = Polynomial::variable(I.ring(), *I.ring()->param());
    CHECK(normal_form(*rep.witness * t, I.groebner()).is_zero());
    CHECK(!normal_form(*rep.witness, I.groebner()).is_zero());
}

} // namespace

TEST_SUITE_BEGIN("flatness");

TEST_CASE("embedded component detection") {
    auto r = ring_xy();
    Ideal I(r, PL(r, {"x^2", "x*y"}));
    TestIdeal J = make_test_ideal(I, Ideal(r, PL(r, {"x^2"})));
    FlatnessReport rep = has_no_embedded_components(I, J);
    CHECK(!rep.verdict);
    REQUIRE(rep.witness.has_value());
    CHECK(*rep.witness == P(r, "x"));
    CHECK(!normal_form(*rep.witness, I.groebner()).is_zero());

    Ideal prime(r, PL(r, {"x"}));
    FlatnessReport rep2 =
        has_no_embedded_components(prime, make_test_ideal(prime, prime));
    CHECK(rep2.verdict);
    CHECK(!rep2.witness.has_value());
}

TEST_CASE("flatness over the germ") {
    auto r = PolyRing::make({"x", "t"}, "t");
    Ideal nonflat(r, PL(r, {"t*x"}));
    FlatnessReport rep = is_flat_over_germ(nonflat);
    CHECK(!rep.verdict);
    REQUIRE(rep.witness.has_value());
    CHECK(*rep.witness == P(r, "x"));
    check_witness_flat(nonflat, rep);

    Ideal flat(r, PL(r, {"x - t"}));
    CHECK(is_flat_over_germ(flat).verdict);

    auto noparam = ring_xy();
    CHECK_THROWS_AS(is_flat_over_germ(Ideal(noparam, PL(noparam, {"x"}))), DomainError);
}

TEST_CASE("single colon agrees with saturation on the germ criterion") {
    auto r = PolyRing::make({"x", "y", "t"}, "t");
    FlatnessOptions opts;
    opts.also_saturated = true;
    for (const auto& gens : {std::vector<std::string>{"t*x"},
                             {"t^2*x", "t*y"},
                             {"x - t"},
                             {"x*y - t"},
                             {"t*(x - y)", "x^2"}}) {
        Ideal I(r, PL(r, gens));
        FlatnessReport rep = is_flat_over_germ(I, opts);
        REQUIRE(rep.saturated_verdict.has_value());
        CHECK(*rep.saturated_verdict == rep.verdict);
    }
}

TEST_CASE("internal flatness") {
    auto r = PolyRing::make({"x", "t"}, "t");

    // flat implies internally flat
    Ideal flat(r, PL(r, {"x - t"}));
    TestIdeal Jf = make_test_ideal(flat, flat);
    CHECK(is_internally_flat(flat, Jf).verdict);

    // V(t*x) is the union of the two coordinate lines, no embedded part, so
    // internal flatness holds even though flatness over the germ fails
    Ideal tx(r, PL(r, {"t*x"}));
    TestIdeal Jtx = make_test_ideal(tx, tx);
    CHECK(!is_flat_over_germ(tx).verdict);
    CHECK(is_internally_flat(tx, Jtx).verdict);

    // an embedded point sitting over t = 0 breaks internal flatness:
    // (t^2, t*x) = (t) meet (t^2, x, ...) with an embedded component at the origin
    Ideal emb(r, PL(r, {"t^2", "t*x"}));
    TestIdeal Je = make_test_ideal(emb, Ideal(r, PL(r, {"t^2"})));
    FlatnessReport rep = is_internally_flat(emb, Je);
    CHECK(!rep.verdict);
    REQUIRE(rep.witness.has_value());
    Polynomial t = P(r, "t");
    CHECK(normal_form(*rep.witness * t, emb.groebner()).is_zero());
    CHECK(!normal_form(*rep.witness, emb.groebner()).is_zero());
}

TEST_CASE("hypothesis notes record the dimension sanity check") {
    auto r = ring_xy();
    Ideal I(r, PL(r, {"x^2", "x*y"}));
    TestIdeal J = make_test_ideal(I, Ideal(r, PL(r, {"x^2"})));
    FlatnessReport rep = has_no_embedded_components(I, J);
    REQUIRE(!rep.hypothesis_notes.empty());
    CHECK(rep.hypothesis_notes[0].find("user-asserted") != std::string::npos);
}

TEST_SUITE_END();
