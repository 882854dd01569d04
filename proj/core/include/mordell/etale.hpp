#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "mordell/number_field.hpp"

namespace mordell {

class EtaleAlgebra;
using AlgebraPtr = std::shared_ptr<const EtaleAlgebra>;

// Element of an etale algebra: one field element per component.
class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(AlgebraPtr alg, std::vector<FieldElement> parts);

    const AlgebraPtr& algebra() const { return alg_; }
    const FieldElement& part(int j) const;
    const std::vector<FieldElement>& parts() const { return parts_; }

    bool is_zero() const;
    bool is_unit() const; // invertible: every part nonzero

    AlgebraElement operator-() const;
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement operator*(const Rational& c) const;
    AlgebraElement inverse() const;
    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    // coordinates in the concatenated power bases (dimension of the algebra)
    QVector coords() const;

    std::string str() const;

private:
    AlgebraPtr alg_;
    std::vector<FieldElement> parts_;
};

// Direct sum of totally real number fields with its real homomorphisms
// enumerated by hom_table: entry i is (component j, embedding k).
class EtaleAlgebra : public std::enable_shared_from_this<EtaleAlgebra> {
public:
    // Default enumeration: components in input order, embeddings ascending.
    static AlgebraPtr create(std::vector<FieldPtr> components);
    static AlgebraPtr create(std::vector<FieldPtr> components, std::vector<std::pair<int, int>> hom_table);

    int dim() const { return dim_; }
    int num_components() const { return static_cast<int>(components_.size()); }
    const FieldPtr& component(int j) const;
    const std::vector<FieldPtr>& components() const { return components_; }
    const std::vector<std::pair<int, int>>& hom_table() const { return hom_table_; }

    AlgebraElement zero() const;
    AlgebraElement one() const;
    AlgebraElement idempotent(int j) const; // unit in component j, zero elsewhere
    AlgebraElement element(std::vector<FieldElement> parts) const;
    AlgebraElement from_coords(const QVector& x) const;
    // i-th basis vector of the concatenated power bases
    AlgebraElement basis_element(int i) const;

private:
    EtaleAlgebra(std::vector<FieldPtr> comps, std::vector<std::pair<int, int>> table);
    std::vector<FieldPtr> components_;
    std::vector<std::pair<int, int>> hom_table_;
    int dim_ = 0;
};

// sigma_i(a), exactly.
RealAlgebraic hom_value(const AlgebraElement& a, int i);
std::vector<RealAlgebraic> hom_values(const AlgebraElement& a);
// sign of sigma_i(a) by interval refinement (cheap).
int hom_sign(const AlgebraElement& a, int i);
// rational enclosure of sigma_i(a) of width < w.
std::pair<Rational, Rational> hom_interval(const AlgebraElement& a, int i, const Rational& w);

} // namespace mordell
