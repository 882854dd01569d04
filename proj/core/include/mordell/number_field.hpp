#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "mordell/linalg.hpp"
#include "mordell/polynomial.hpp"
#include "mordell/real_algebraic.hpp"

namespace mordell {

class NumberFieldR;
using FieldPtr = std::shared_ptr<const NumberFieldR>;

// Element of a NumberFieldR in power-basis coordinates (always reduced mod
// the minimal polynomial, so the representation is canonical).
class FieldElement {
public:
    FieldElement() = default; // detached; only assignment is valid
    FieldElement(FieldPtr field, std::vector<Rational> coords);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    std::optional<Rational> as_rational() const;
    QPolynomial as_poly() const; // coords as polynomial in the generator

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator*(const Rational& c) const;
    FieldElement inverse() const;
    FieldElement pow(long e) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    QMatrix mult_matrix() const; // multiplication by *this in the power basis
    Rational trace() const;
    Rational norm() const;
    QPolynomial minimal_polynomial() const; // over Q, monic irreducible

    // Exact image under the k-th real embedding.
    RealAlgebraic value(int emb) const;
    // Rational enclosure of that image, of width < w. Much cheaper than
    // value() when only bounds are needed.
    std::pair<Rational, Rational> value_interval(int emb, const Rational& w) const;
    // Exact sign of the image, via interval refinement only.
    int sign_at(int emb) const;

    std::string str() const;

private:
    void check_field(const FieldElement& o) const;
    FieldPtr field_;
    std::vector<Rational> coords_;
};

// Totally real number field Q[x]/(m), m monic irreducible with all roots
// real. The real embeddings are indexed 0..degree-1 in ascending order of
// the image of the generator.
class NumberFieldR : public std::enable_shared_from_this<NumberFieldR> {
public:
    // Validates: positive degree, irreducible, totally real. Non-monic input
    // is normalized. Throws InvalidInputError otherwise.
    static FieldPtr create(const QPolynomial& min_poly);
    // The rationals as the degree-1 field Q[x]/(x).
    static FieldPtr rationals();

    int degree() const { return min_poly_.degree(); }
    const QPolynomial& min_poly() const { return min_poly_; }
    const RealRoot& embedding(int k) const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement gen() const;
    FieldElement element(std::vector<Rational> coords) const;
    FieldElement element(const Rational& c) const;
    FieldElement from_poly(const QPolynomial& g) const; // g(gen), reduced mod m

private:
    NumberFieldR(QPolynomial m, std::vector<RealRoot> embs);
    QPolynomial min_poly_;
    std::vector<RealRoot> embeddings_;
};

} // namespace mordell
