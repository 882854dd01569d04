#pragma once

#include <optional>

#include "mordell/real_root.hpp"

namespace mordell {

// Exact real algebraic number: minimal polynomial (monic irreducible) plus an
// isolating interval. Rationals are carried explicitly as a fast path.
// Immutable; every operation returns a fresh value, so instances can be
// shared across threads freely.
class RealAlgebraic {
public:
    RealAlgebraic() : rat_(Rational(0)) {}
    /* implicit */ RealAlgebraic(const Rational& q) : rat_(q) {}
    /* implicit */ RealAlgebraic(long n) : rat_(Rational(n)) {}

    // The unique root of p (any nonzero polynomial) inside (lo, hi). The
    // minimal polynomial is extracted by factoring.
    static RealAlgebraic root_of(const QPolynomial& p, const Rational& lo, const Rational& hi);
    // The idx-th real root of p in ascending order (0-based).
    static RealAlgebraic nth_real_root_of(const QPolynomial& p, int idx);
    // Fast path for callers that already know p is irreducible: skips the
    // factoring step. The interval is still validated to isolate one root.
    static RealAlgebraic from_irreducible(const QPolynomial& p, const Rational& lo, const Rational& hi);

    bool is_rational() const { return rat_.has_value(); }
    const Rational& rational_value() const; // throws unless rational
    // Minimal polynomial; for rationals x - q.
    QPolynomial minimal_polynomial() const;
    int degree() const { return rat_ ? 1 : root_->poly().degree(); }

    // Open rational enclosure of width < w.
    std::pair<Rational, Rational> enclosure(const Rational& w) const;
    double approx() const;

    RealAlgebraic operator-() const;
    RealAlgebraic operator+(const RealAlgebraic& o) const;
    RealAlgebraic operator-(const RealAlgebraic& o) const;
    RealAlgebraic operator*(const RealAlgebraic& o) const;
    RealAlgebraic operator/(const RealAlgebraic& o) const;
    RealAlgebraic inverse() const;
    RealAlgebraic abs() const;
    RealAlgebraic pow(int e) const;
    // positive real n-th root; requires *this > 0 (or zero)
    RealAlgebraic nth_root(int n) const;

    int sign() const;
    int compare(const RealAlgebraic& o) const;
    bool operator==(const RealAlgebraic& o) const { return compare(o) == 0; }
    bool operator!=(const RealAlgebraic& o) const { return compare(o) != 0; }
    bool operator<(const RealAlgebraic& o) const { return compare(o) < 0; }
    bool operator<=(const RealAlgebraic& o) const { return compare(o) <= 0; }
    bool operator>(const RealAlgebraic& o) const { return compare(o) > 0; }
    bool operator>=(const RealAlgebraic& o) const { return compare(o) >= 0; }

    std::string str() const;

private:
    explicit RealAlgebraic(RealRoot r) : root_(std::move(r)) {}
    static RealAlgebraic from_minimal(QPolynomial minpoly, Rational lo, Rational hi);
    // pick out which root of `candidates_poly` equals f(this, o) by interval
    // refinement, where (flo, fhi) maps enclosures of the operands to an
    // enclosure of the result
    template <typename F>
    static RealAlgebraic select_root(const QPolynomial& combined, const RealAlgebraic& a,
                                     const RealAlgebraic& b, F&& enclose);

    Rational abs_rat_bound() const;

    std::optional<Rational> rat_;
    std::optional<RealRoot> root_; // engaged iff !rat_; poly irreducible
};

// convenience: sign of (a - b) without building the difference
inline int sign_of(const RealAlgebraic& a) { return a.sign(); }

} // namespace mordell
