#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mordell/lattice.hpp"
#include "mordell/lp.hpp"
#include "mordell/partition.hpp"

namespace mordell {

// nonzero lattice point strictly inside the box, when one exists
std::optional<LatticePoint> interior_witness(const Lattice& lat, const SymmetricBox& box);
// true when no nonzero lattice point lies in the open box; decided exactly
bool is_admissible(const Lattice& lat, const SymmetricBox& box);

// smallest weighted sup norm max_i w_i |x_i| over nonzero lattice points,
// computed exactly from one closed-box enumeration. With unit weights this is
// the half width of the largest admissible cube: the open cube of that half
// width is admissible and any larger one strictly contains a lattice point.
RealAlgebraic weighted_sup_min(const Lattice& lat, const std::vector<Rational>& weights);
RealAlgebraic largest_admissible_cube(const Lattice& lat);

// positive diagonal with product one mapping the box to a cube of the same
// volume; the identity whenever the box already is a cube
RVector normalize_to_cube(const Lattice& lat, const SymmetricBox& box);

// Boundary contact of an admissible box, grouped by axis. face[i] indexes the
// boundary points on the positive i-th face (mirror images cover the negative
// one), face_interior[i] those in its relative interior, meaning no other
// coordinate is tight. Axes in unlocked have no contact at all; axes in
// growable have untouched relative interior, and for those the box extends to
// a strictly larger admissible box in that direction.
struct LockingConfiguration {
    LatticePointSet boundary;
    std::vector<std::vector<size_t>> face;
    std::vector<std::vector<size_t>> face_interior;
    std::vector<int> unlocked;
    std::vector<int> growable;
    bool fully_locked() const { return growable.empty(); }
};
LockingConfiguration locking_points(const Lattice& lat, const SymmetricBox& box);

// Optimality obstruction for a box under the block-diagonal group of p: for
// every block Q and axis i0 in Q, zero must lie in the convex hull of the
// face-i0 locking points projected to the remaining coordinates of Q. A
// failed certificate carries a functional that is strictly positive on those
// projections; the shear x -> x + t f(x_Q) e_{i0} then frees the face, so the
// box volume was not maximal over the orbit. Requires every face locked in
// its relative interior.
struct FaceCertificate {
    int block = 0;
    int axis = 0;
    bool certified = false;
    std::vector<RealAlgebraic> improving; // empty when certified
};
std::vector<FaceCertificate> locking_certificate(const Lattice& lat, const SymmetricBox& box,
                                                 const Partition& p);

struct SearchBudget {
    long max_evals = 2000;
    double max_seconds = 30.0;
};

struct SearchRecord {
    std::vector<Rational> diagonal; // product one
    RealAlgebraic cube;             // largest admissible cube in that frame
};

struct MordellEstimate {
    RealAlgebraic kappa_lower;        // product of witness half widths / covolume
    SymmetricBox witness_box;         // admissible for the input lattice
    std::vector<Rational> normalizer; // diagonal mapping the witness box to a cube
    bool certified = false;
    bool degenerate = false; // search pressed against the diagonal entry cap
    long evaluations = 0;
    std::vector<SearchRecord> search_log;
};

// Certified lower bound for the Mordell constant: pattern search over the
// positive diagonal group, multiplicative steps on rational diagonal entries
// with the last entry balancing the product, multi-start from a coarse grid
// plus seeded extras. Each evaluation is one exact cube computation, and the
// reported witness box is re-checked for admissibility before returning, so
// the bound holds regardless of where the search stopped.
MordellEstimate kappa_search(const Lattice& lat, const SearchBudget& budget = {},
                             unsigned seed = 0);

// Exhaustive two-dimensional reference: over all pairs of lattice points with
// coefficient sup norm at most radius, form the box with half widths
// (|v_1|, |w_2|), keep the exactly admissible ones, and return the best
// |v_1 w_2| / covolume. Nondecreasing in the radius.
RealAlgebraic kappa_oracle_2d(const Lattice& lat, long radius);

// smallest |prod_i x_i| over nonzero points with coefficient sup norm at most
// radius; an upper bound for the lattice's product minimum, exact (for module
// lattices it equals scale^n times the smallest absolute norm)
RealAlgebraic lambda_inf(const Lattice& lat, long radius);

// Two-dimensional cross check: a vanishing product minimum forces kappa
// toward one, while a stable positive minimum keeps it strictly below one.
// Disagreements between the two computations are reported, not resolved.
struct GruberReport {
    RealAlgebraic lambda_upper;
    bool lambda_stable = false;
    RealAlgebraic kappa_lower;
    bool consistent = false;
    std::string note;
};
GruberReport gruber_consistency(const Lattice& lat, long radius,
                                const SearchBudget& budget = {});

} // namespace mordell
