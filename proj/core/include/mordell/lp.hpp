#pragma once

#include <vector>

#include "mordell/real_algebraic.hpp"

namespace mordell {

// Outcome of the exact membership test for 0 in conv(points). When contains
// holds, coefficients is a convex combination of the input points summing to
// zero. Otherwise functional satisfies <functional, p> > 0 for every input
// point, a strict separation witness.
struct HullCertificate {
    bool contains = false;
    std::vector<RealAlgebraic> coefficients;
    std::vector<RealAlgebraic> functional;
};

// Decides 0 in conv(points) by a phase-one simplex with Bland's rule, so the
// pivot sequence is finite. All pivots are exact; entries may be arbitrary
// real algebraic numbers, and rational inputs stay rational throughout.
// Points must share one dimension. Zero-dimensional points are allowed: the
// hull of a nonempty set then contains the origin trivially.
HullCertificate zero_in_convex_hull(const std::vector<std::vector<RealAlgebraic>>& points);

} // namespace mordell
