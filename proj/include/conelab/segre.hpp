#ifndef CONELAB_SEGRE_HPP
#define CONELAB_SEGRE_HPP

#include <optional>
#include <vector>

#include "conelab/polynomial.hpp"

namespace conelab {

// Codimension-one cycle class: integer weights on pairwise coprime squarefree
// components.  For the top Segre class of a hypersurface tangent star cone the
// weight of the multiplicity-m part is m^2.
struct CycleClass {
    struct Entry {
        int weight;
        Polynomial component;
    };
    std::vector<Entry> terms; // ascending multiplicity
};

// s0 of the tangent star cone of the hypersurface f: (m^2, g_m) over the
// multiplicity classes of f on the coordinate block.
CycleClass s0_tangent_star(const Polynomial& f);

struct CoalescenceReport {
    bool verdict = false;
    std::optional<int> failing_criterion;  // 1: a component fails to stay reduced
                                           // 2: distinct components collide
    std::optional<Polynomial> certificate; // repeated or shared factor at t = 0
};

// Do the components of the family f stay reduced and distinct at t = 0?
// Degenerate families (vanishing or degree-dropping at t = 0) are rejected.
CoalescenceReport coalescence_check(const Polynomial& f);

struct SpecializationReport {
    bool verdict = false;
    CoalescenceReport coalescence;
    CycleClass family_class; // s0 over the family
    CycleClass fiber_class;  // s0 of the fiber at t = 0
};

// s0 specializes exactly when the components do not coalesce; on a true
// verdict the two classes are checked to agree term by term.
SpecializationReport s0_specializes(const Polynomial& f);

} // namespace conelab

#endif
