#pragma once

#include "mordell/polynomial.hpp"

namespace mordell {

// One real root of a monic squarefree polynomial, pinned down by an open
// isolating interval with rational non-root endpoints. Immutable; refinement
// returns a new object. Rational roots are allowed (the interval just
// surrounds them).
class RealRoot {
public:
    // Validates: poly monic squarefree, lo < hi, endpoints not roots, exactly
    // one root inside.
    static RealRoot make(QPolynomial poly, Rational lo, Rational hi);

    // Convenience: the unique root of poly in (lo, hi) where poly is any
    // nonzero polynomial; the squarefree part is taken automatically.
    static RealRoot isolate(const QPolynomial& poly, const Rational& lo, const Rational& hi);

    const QPolynomial& poly() const { return poly_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    double approx() const { return approx_; }

    RealRoot refined(int steps) const;             // bisect this many times
    RealRoot refine_below(const Rational& w) const; // until width < w

    // -1, 0, +1 comparison of the root against a rational point.
    int cmp(const Rational& q) const;
    bool is_rational(Rational* value = nullptr) const;

    // Total order on roots; equal roots are recognized exactly.
    int compare(const RealRoot& o) const;

private:
    RealRoot(QPolynomial p, Rational lo, Rational hi);
    void bisect_once();
    QPolynomial poly_;
    Rational lo_, hi_;
    double approx_ = 0;
};

} // namespace mordell
