#ifndef CONELAB_FLATNESS_HPP
#define CONELAB_FLATNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "conelab/ideal_ops.hpp"

namespace conelab {

enum class FlatnessCriterion { no_embedded, flat, internally_flat };

// Verdict plus certificate for one colon-ideal criterion.  A false verdict
// always carries a witness: an element of the tested ideal expression with
// nonzero normal form against I.
struct FlatnessReport {
    FlatnessCriterion criterion;
    bool verdict = false;
    std::optional<Polynomial> witness;
    std::optional<TestIdeal> test_ideal_used;
    std::vector<std::string> hypothesis_notes;
    // Verdict of the saturation variant (I : t^inf in place of I : t) when it
    // was requested; recorded alongside, never silently merged.
    std::optional<bool> saturated_verdict;
};

struct FlatnessOptions {
    bool also_saturated = false;
    BuchbergerOptions gb;
};

// Y has no embedded components  <=>  J : (J : I) inside I.
FlatnessReport has_no_embedded_components(const Ideal& I, const TestIdeal& J,
                                          const FlatnessOptions& opts = {});

// The family is flat over the germ at the origin of the parameter line
// <=>  I : t inside I.  Requires a declared parameter.
FlatnessReport is_flat_over_germ(const Ideal& I, const FlatnessOptions& opts = {});

// Internal flatness: (I : t) meet (J : (J : I)) inside I.
FlatnessReport is_internally_flat(const Ideal& I, const TestIdeal& J,
                                  const FlatnessOptions& opts = {});

} // namespace conelab

#endif
