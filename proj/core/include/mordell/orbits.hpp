#pragma once

#include <string>
#include <vector>

#include "mordell/lattice.hpp"
#include "mordell/partition.hpp"
#include "mordell/wedderburn.hpp"

namespace mordell {

enum class OrbitClass { not_closed, closed_infinite_volume, finite_volume };

std::string orbit_class_name(OrbitClass c);

// rational algebra of diagonal maps, constant on the blocks of a partition,
// that preserve the rational span of the lattice
struct AssociatedAlgebra {
    Partition partition;
    int dim_q = 0;
    std::vector<QMatrix> q_basis;   // action in lattice coordinates: diag * M = M * q
    std::vector<RVector> diagonals; // diagonals[k][i]: diagonal entry i of basis element k
    // basis as elements of the origin algebra; empty on the ambient path
    std::vector<AlgebraElement> elements;
    WedderburnDecomposition decomposition;
    bool is_field = false;
    Partition induced_partition; // coordinates grouped by equal diagonals across the algebra
};

// symbolic path when the lattice has an origin, otherwise a rational linear
// system over the common field of the basis entries
AssociatedAlgebra associated_algebra(const Lattice& lat, const Partition& p);

struct OrbitReport {
    OrbitClass cls;
    AssociatedAlgebra algebra;
};

// closed iff the algebra dimension reaches the block count; finite volume
// iff it is moreover a field
OrbitReport classify_orbit(const Lattice& lat, const Partition& p);

// every partition with a closed orbit, one entry per subalgebra realized
std::vector<OrbitReport> all_closed_orbits(const Lattice& lat);

// coordinates grouped by the component idempotent acting as one on them;
// defined for closed orbits only
Partition tilde_partition(const AssociatedAlgebra& a);

// exact equality of the ranks of the vectors projected to two blocks of the
// partition; the blocks must share a block of the coarsened partition
bool kernel_lemma_check(const Lattice& lat, const Partition& p, int block1, int block2,
                        const std::vector<std::vector<long long>>& vectors);

// the span regenerates itself: its coordinate partition p_b satisfies
// span == associated_algebra(lat, p_b) as rational subspaces
bool subalgebra_roundtrip_check(const Lattice& lat, const std::vector<AlgebraElement>& span_b);

} // namespace mordell
