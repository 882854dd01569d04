#pragma once

#include "mordell/etale.hpp"
#include "mordell/partition.hpp"

namespace mordell {

// Unital injective Q-algebra homomorphism between etale algebras, given by
// a rational matrix in the concatenated power bases: row i is the image of
// the i-th source basis element. Validated exhaustively on construction.
class SubalgebraEmbedding {
public:
    SubalgebraEmbedding(AlgebraPtr source, AlgebraPtr target, QMatrix map);

    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    const QMatrix& map() const { return map_; }

    AlgebraElement apply(const AlgebraElement& x) const;

private:
    AlgebraPtr source_;
    AlgebraPtr target_;
    QMatrix map_;
};

// Partition of the target homomorphisms by equal restriction to the image:
// i and i' share a block iff sigma_i(phi(b)) = sigma_i'(phi(b)) for every b.
Partition algebra_partition(const SubalgebraEmbedding& emb);

// Every target-component projection of the image is all of that component.
bool is_essential(const SubalgebraEmbedding& emb);

// Source and target have the same number of components.
bool is_aligned(const SubalgebraEmbedding& emb);

} // namespace mordell
