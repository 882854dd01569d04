#pragma once

#include <vector>

#include "mordell/linalg.hpp"
#include "mordell/number_field.hpp"
#include "mordell/polynomial.hpp"

namespace mordell {

// a commutative semisimple subalgebra of M_n(Q) split into number field summands
struct WedderburnDecomposition {
    int ambient_n = 0;
    std::vector<QMatrix> basis;        // independent spanning subset of the input, input order kept
    QMatrix unit;                      // algebra identity; need not be the ambient identity matrix
    std::vector<FieldPtr> components;
    std::vector<QMatrix> idempotents;  // primitive, parallel to components
    QMatrix generator;                 // generic element whose minimal polynomial splits the algebra
    QPolynomial generator_minpoly;     // squarefree, degree = dim()

    int dim() const { return static_cast<int>(basis.size()); }
};

// input: matrices spanning a commutative algebra (a unit need not be listed; one must exist in the span).
// throws NotAnAlgebraError when the span is not closed or not commutative,
// NotSemisimpleError when the span contains nilpotents,
// UnsupportedError when a component field is not totally real.
WedderburnDecomposition wedderburn(const std::vector<QMatrix>& matrices);

// true iff the algebra is a single number field
bool is_field(const WedderburnDecomposition& d);

} // namespace mordell
