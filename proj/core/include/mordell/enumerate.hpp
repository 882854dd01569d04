#pragma once

#include "mordell/lattice.hpp"

namespace mordell {

// all nonzero lattice points of the (open or closed) box, decided exactly.
// completeness comes from walking every candidate inside a bounding ball of
// the box on a numerically reduced basis, with a safety margin; membership
// of each candidate is exact. collection stops once max_points are found.
LatticePointSet enumerate_in_box(const Lattice& lat, const SymmetricBox& box, bool open,
                                 size_t max_points = static_cast<size_t>(-1));

// integer coefficient vectors whose images can lie in the closed ball of the
// given radius: LLL reduction then a bounded coordinate walk. one vector per
// +- pair is returned (first nonzero coefficient positive); zero is omitted.
// node budget overruns throw BudgetError.
std::vector<std::vector<long long>> ellipsoid_candidates(const std::vector<std::vector<double>>& basis,
                                                         double radius, size_t budget);

} // namespace mordell
