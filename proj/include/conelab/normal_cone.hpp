#ifndef CONELAB_NORMAL_CONE_HPP
#define CONELAB_NORMAL_CONE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conelab/ideal_ops.hpp"

namespace conelab {

// A cone ideal presentation: coordinates x (plus optional family parameter)
// and one direction variable per coordinate.  Every generator is homogeneous
// in the direction block, and setting directions to zero recovers the center.
struct ConePresentation {
    enum class Provenance { deformation, polarization, rees };

    RingPtr ring;
    std::vector<int> base_vars; // cone-ring indices of the coordinates
    std::vector<int> dir_vars;  // parallel direction indices
    Ideal ideal;
    Provenance provenance;
};

// Ring of a cone presentation over `base`: coordinates in base order, then the
// direction block, then the family parameter (when declared) last.  Direction
// names default to u (one variable) or u1..un.
struct ConeRingLayout {
    RingPtr ring;
    std::vector<int> base_vars;
    std::vector<int> dir_vars;
};
ConeRingLayout make_cone_ring(const RingPtr& base, std::vector<std::string> dir_names = {});

// Ideal of initial forms (lowest degree parts in the direction block) of Q:
// rescale directions by a fresh deformation variable s, saturate by s, then
// set s to zero.
Ideal initial_form_ideal(const Ideal& Q, std::span<const int> dir_vars,
                         const BuchbergerOptions& opts = {});

// Relative tangent star cone of V(IX): both copies of the defining ideal, the
// second shifted by the direction block, then initial forms.  The family
// parameter, if declared, is shared by the two copies.
ConePresentation tangent_star_ideal(const Ideal& IX, std::vector<std::string> dir_names = {},
                                    const BuchbergerOptions& opts = {});

// k-th iterate of the polarization operator sum_i u_i d/dx_i.
Polynomial polarize(const Polynomial& f, std::span<const int> base_vars,
                    std::span<const int> dir_vars, int k);

// The explicit tangent star cone equations of a hypersurface, derived from the
// squarefree multiplicity structure of f; generators come back in the order
// [f, S_1 f, S_2 f, ...] stopping before the first identically zero one.
ConePresentation hypersurface_ts_cone(const Polynomial& f, std::vector<std::string> dir_names = {},
                                      const BuchbergerOptions& opts = {});
std::vector<Polynomial> hypersurface_ts_generators(const Polynomial& f,
                                                   std::vector<std::string> dir_names = {});

// Normal cone of the center (IY + IZ_extra) inside V(IY), presented in a
// trivial bundle with one fiber coordinate per element of IZ_extra: the Rees
// ideal by elimination, plus the center's ideal.
Ideal rees_normal_cone(const Ideal& IY, std::span<const Polynomial> IZ_extra,
                       std::vector<std::string> fiber_names = {},
                       const BuchbergerOptions& opts = {});

enum class FiberCompare { equal, cone_fiber_strictly_larger };

struct FiberCompareResult {
    FiberCompare outcome;
    std::optional<Polynomial> certificate; // generator of the fiber cone missing
                                           // from the family fiber
    Ideal family_fiber;                    // cone ideal at parameter zero
    Ideal fiber_cone;                      // cone of the fiber at parameter zero
};

// Compare the fiber of the cone family at parameter zero with the cone of the
// fiber.  The family fiber can only be the same or larger as a scheme; the
// reverse containment is reported as an internal consistency failure.
FiberCompareResult cone_fiber_compare(const ConePresentation& C, const Ideal& IX,
                                      const BuchbergerOptions& opts = {});

} // namespace conelab

#endif
