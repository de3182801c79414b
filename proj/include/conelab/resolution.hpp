#ifndef CONELAB_RESOLUTION_HPP
#define CONELAB_RESOLUTION_HPP

#include <optional>
#include <vector>

#include "conelab/groebner.hpp"

namespace conelab {

struct PolyMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<Polynomial>> a; // a[row][col]

    static PolyMatrix zero(const RingPtr& ring, int rows, int cols);
};

// Free resolution of R/I: F_0 = R, maps[k] is the map F_{k+1} -> F_k given by
// columns over the polynomial ring.  When the input is graded the resolution
// is minimized (no nonzero constant entries) and carries degree shifts.
struct FreeResolution {
    RingPtr ring;
    std::vector<int> ranks;              // ranks[k] = rank of F_k; ranks[0] = 1
    std::vector<PolyMatrix> maps;        // maps[k]: F_{k+1} -> F_k
    bool graded = false;
    bool minimized = false;
    std::vector<std::vector<int>> shifts; // per level, when graded

    int length() const { return static_cast<int>(ranks.size()) - 1; }
};

// Generators of the first syzygy module of the given polynomial list (the
// kernel of R^r -> R sending basis vectors onto the entries), irredundant.
std::vector<std::vector<Polynomial>> syzygies(const RingPtr& ring,
                                              std::span<const Polynomial> gens,
                                              const BuchbergerOptions& opts = {});

FreeResolution free_resolution(const Ideal& I, const BuchbergerOptions& opts = {});

int projective_dimension(const FreeResolution& res);

struct CMReport {
    std::optional<bool> cohen_macaulay; // nullopt: indeterminate (non-graded)
    int projective_dimension = 0;
    bool pd_exact = true; // false when only an upper bound (non-graded input)
    int height = 0;
};

// Graded test: pd(R/I) equals height(I).  Non-graded inputs get an
// indeterminate verdict with a pd upper bound, never a boolean.
CMReport is_cohen_macaulay(const Ideal& I, const BuchbergerOptions& opts = {});

} // namespace conelab

#endif
