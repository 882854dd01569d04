#pragma once

#include <optional>
#include <vector>

#include "mordell/etale.hpp"
#include "mordell/linalg.hpp"
#include "mordell/real_algebraic.hpp"

namespace mordell {

using RVector = std::vector<RealAlgebraic>;
using RMatrix = std::vector<RVector>; // row major

// symbolic record of a lattice built from algebra data: generator j is
// scale * (hom values of l_basis[j])
struct LatticeOrigin {
    AlgebraPtr algebra;
    std::vector<AlgebraElement> l_basis;
    RealAlgebraic scale; // c with c^n |det V| = 1
    Rational gram_det;   // det of the trace form gram of l_basis, equals det(V)^2
};

class Lattice {
public:
    // columns generate the lattice; covolume |det| computed exactly
    static Lattice from_basis(RMatrix basis);

    int n() const { return n_; }
    const std::optional<LatticeOrigin>& origin() const { return origin_; }
    const RealAlgebraic& covolume() const { return covolume_; }

    // entry (row i, generator j); symbolic lattices compute it on demand
    RealAlgebraic entry(int i, int j) const;
    RMatrix basis_matrix() const;
    // engaged when every entry is rational; exact fast paths key off it
    const std::optional<QMatrix>& rational_basis() const { return rational_; }

    // exact image of an integer coefficient vector
    RVector image(const std::vector<long long>& coeffs) const;
    // double approximation of the generators, for numeric reduction only
    std::vector<std::vector<double>> approx_basis() const;

private:
    Lattice() = default;
    void detect_rational();

    int n_ = 0;
    std::optional<LatticeOrigin> origin_;
    std::optional<RMatrix> matrix_; // engaged iff origin_ is not
    std::optional<QMatrix> rational_;
    RealAlgebraic covolume_;

    friend Lattice construct_lattice(const AlgebraPtr&, const std::vector<AlgebraElement>&);
    friend Lattice direct_sum(const Lattice&, const Lattice&);
    friend Lattice apply_diagonal(const Lattice&, const RVector&);
};

// unimodular lattice spanned by the hom value vectors of an independent
// algebra basis, scaled to covolume one; the symbolic origin is recorded
Lattice construct_lattice(const AlgebraPtr& algebra, const std::vector<AlgebraElement>& l_basis);

// block diagonal sum; covolume multiplies; the symbolic origin is dropped
Lattice direct_sum(const Lattice& a, const Lattice& b);

// scale row i by diag[i]; entries must be positive with product one
Lattice apply_diagonal(const Lattice& lat, const RVector& diag);

// the combination sum coeffs[j] * l_basis[j] inside the origin algebra
AlgebraElement origin_combination(const Lattice& lat, const std::vector<long long>& coeffs);

// [-a_1,a_1] x ... x [-a_n,a_n]
class SymmetricBox {
public:
    explicit SymmetricBox(RVector half_widths);
    int n() const { return static_cast<int>(a_.size()); }
    const RVector& half_widths() const { return a_; }
    const RealAlgebraic& half_width(int i) const { return a_[static_cast<size_t>(i)]; }
    RealAlgebraic volume() const; // 2^n prod a_i

private:
    RVector a_;
};

struct LatticePoint {
    std::vector<long long> coeffs;
    RVector image;              // basis * coeffs, exact
    std::vector<int> tight_rows; // rows where |image| equals the box half width (closed enumeration)
};
using LatticePointSet = std::vector<LatticePoint>;

struct LatticeSplit {
    std::vector<int> rows;                                 // coordinate subset S, 0-based
    std::vector<std::vector<long long>> part_coeffs;       // basis of the sublattice supported on S
    std::vector<std::vector<long long>> complement_coeffs; // basis of the part supported off S
};

// bounded search for a coordinate split using sublattice vectors of
// coefficient sup norm <= search_radius; nullopt means not found within
// the radius, not indecomposable
std::optional<LatticeSplit> is_decomposable(const Lattice& lat, int search_radius);

} // namespace mordell
