#pragma once

#include "mordell/field_poly.hpp"

namespace mordell {

// A number field together with a distinguished real embedding: a concrete
// subfield of R. Starting point for building composita incrementally.
class EmbeddedField {
public:
    EmbeddedField(); // the rationals
    EmbeddedField(FieldPtr field, int emb);

    const FieldPtr& field() const { return field_; }
    int emb() const { return emb_; }
    int degree() const { return field_->degree(); }

    RealAlgebraic value(const FieldElement& e) const;
    RealAlgebraic gen_value() const; // image of the generator

    // Exact representation of v inside this subfield of R, when it lies
    // there. Costs a factorization of v's minimal polynomial over the field.
    std::optional<FieldElement> express(const RealAlgebraic& v) const;

private:
    FieldPtr field_;
    int emb_;
};

// Common overfield for finitely many real algebraic numbers, built by
// adjoining values one at a time via primitive elements. Representations of
// everything added earlier are kept current as the field grows. Only
// totally real values are supported.
class CommonField {
public:
    CommonField();

    // Returns the index of the value's representation (deduplicated).
    size_t add(const RealAlgebraic& v);

    const EmbeddedField& field() const { return field_; }
    size_t size() const { return reps_.size(); }
    const FieldElement& rep(size_t i) const;

private:
    void adjoin(const RealAlgebraic& v);
    EmbeddedField field_;
    std::vector<RealAlgebraic> values_;
    std::vector<FieldElement> reps_;
};

// Convenience wrapper: common field of all values, with representations in
// input order written to *reps when given.
EmbeddedField common_field(const std::vector<RealAlgebraic>& vals, std::vector<FieldElement>* reps = nullptr);

} // namespace mordell
