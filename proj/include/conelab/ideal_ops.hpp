#ifndef CONELAB_IDEAL_OPS_HPP
#define CONELAB_IDEAL_OPS_HPP

#include <cstdint>

#include "conelab/groebner.hpp"

namespace conelab {

// Derived ideal operations.  Every result lives in the input ring; auxiliary
// elimination variables are internal.

Ideal intersect(const Ideal& I, const Ideal& J, const BuchbergerOptions& opts = {});

// {f : f*J contained in I}; J must not be the zero ideal.
Ideal colon(const Ideal& I, const Ideal& J, const BuchbergerOptions& opts = {});
Ideal colon(const Ideal& I, const Polynomial& g, const BuchbergerOptions& opts = {});

// I : f^infinity
Ideal saturate(const Ideal& I, const Polynomial& f, const BuchbergerOptions& opts = {});

// I intersected with the subring omitting `vars`; generators of the result do
// not involve them.
Ideal eliminate(const Ideal& I, std::span<const int> vars, const BuchbergerOptions& opts = {});

// Krull dimension of the quotient ring, by independent-set search over the
// leading monomials of the reduced basis.
inline constexpr int kEmptyScheme = -1; // dimension of V(unit ideal)
int dimension(const Ideal& I, const BuchbergerOptions& opts = {});
int height(const Ideal& I, const BuchbergerOptions& opts = {});

// Test ideal of Prop-style colon criteria: generated by a regular sequence of
// length height(I) inside I, certified by prefix heights.
struct TestIdealStep {
    int index;
    std::vector<int> coefficients; // per generator of I
    int verified_height;
};

struct TestIdeal {
    Ideal ideal;
    std::vector<TestIdealStep> certificate; // empty when user-supplied
};

// Deterministic for a fixed seed; coefficients from {-3..3}\{0}; bounded
// retries, failure reported via ResourceLimitError.
TestIdeal build_test_ideal(const Ideal& I, uint64_t seed, const BuchbergerOptions& opts = {});

// Validate a user-supplied candidate: J inside I, gens(J) count equals
// height(I), prefix heights equal prefix lengths.  Throws DomainError if not.
TestIdeal make_test_ideal(const Ideal& I, const Ideal& J, const BuchbergerOptions& opts = {});

} // namespace conelab

#endif
