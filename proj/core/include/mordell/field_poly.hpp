#pragma once

#include <utility>
#include <vector>

#include "mordell/number_field.hpp"

namespace mordell {

// Univariate polynomial with coefficients in a fixed NumberFieldR,
// coefficients ascending, normalized (no zero leading coefficient).
class KPoly {
public:
    explicit KPoly(FieldPtr field); // zero polynomial
    KPoly(FieldPtr field, std::vector<FieldElement> coeffs);
    static KPoly from_rational(const FieldPtr& field, const QPolynomial& p);
    static KPoly constant(const FieldElement& c);

    const FieldPtr& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    FieldElement coeff(int k) const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    // When every coefficient is rational, the corresponding QPolynomial.
    std::optional<QPolynomial> as_rational_poly() const;

    KPoly operator-() const;
    KPoly operator+(const KPoly& o) const;
    KPoly operator-(const KPoly& o) const;
    KPoly operator*(const KPoly& o) const;
    KPoly operator*(const FieldElement& c) const;
    std::pair<KPoly, KPoly> divrem(const KPoly& d) const;
    KPoly monic() const;
    KPoly derivative() const;
    FieldElement eval(const FieldElement& x) const;
    KPoly shift_by(const FieldElement& c) const; // p(x + c)

    std::string str() const;

private:
    void normalize();
    FieldPtr field_;
    std::vector<FieldElement> coeffs_;
};

// Monic gcd via the Euclidean algorithm (coefficients live in a field).
KPoly gcd_monic(KPoly a, KPoly b);

KPoly squarefree_part(const KPoly& f);

// Norm from K[x] down to Q[x]: the product of the embedding images of f.
// Exact, via resultant elimination of the field generator.
QPolynomial kpoly_norm(const KPoly& f);

// Monic irreducible factors with multiplicities, sorted by degree. Uses
// factorization of norms of shifted polynomials to reduce to Q[x].
std::vector<std::pair<KPoly, int>> factor_over_field(const KPoly& f);

} // namespace mordell
