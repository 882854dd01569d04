#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mordell/rational.hpp"

namespace mordell {

// Univariate polynomial over Q. Coefficients ascending; no trailing zeros.
// The zero polynomial has an empty coefficient vector and degree -1.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Rational> coeffs);
    static QPolynomial zero() { return QPolynomial(); }
    static QPolynomial constant(const Rational& c);
    static QPolynomial x(); // the monomial x
    // c * x^k
    static QPolynomial monomial(const Rational& c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](int i) const;        // 0 beyond degree
    const Rational& leading() const;                 // throws on zero poly
    bool is_monic() const;

    QPolynomial operator-() const;
    QPolynomial operator+(const QPolynomial& o) const;
    QPolynomial operator-(const QPolynomial& o) const;
    QPolynomial operator*(const QPolynomial& o) const;
    QPolynomial operator*(const Rational& s) const;
    QPolynomial operator/(const Rational& s) const;
    bool operator==(const QPolynomial& o) const { return c_ == o.c_; }

    // Euclidean division; remainder degree < divisor degree.
    std::pair<QPolynomial, QPolynomial> divrem(const QPolynomial& d) const;
    // Division that must be exact; throws DomainError on nonzero remainder.
    QPolynomial exact_div(const QPolynomial& d) const;

    QPolynomial derivative() const;
    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return sign(eval(x)); }
    double eval_double(double x) const;

    QPolynomial monic() const; // throws on zero poly

    // Variable substitutions used by the algebraic-number layer.
    QPolynomial shift(const Rational& a) const;      // p(x + a)
    QPolynomial scale_var(const Rational& a) const;  // p(a * x), a != 0
    QPolynomial negate_var() const;                  // p(-x)
    QPolynomial compose_xn(int n) const;             // p(x^n)
    QPolynomial compose(const QPolynomial& q) const; // p(q(x))

    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rational> c_;
};

QPolynomial gcd(const QPolynomial& a, const QPolynomial& b); // monic result
QPolynomial squarefree_part(const QPolynomial& p);           // monic

// Yun decomposition: list of (monic squarefree factor, multiplicity) with
// distinct factors pairwise coprime; product of f_i^{m_i} equals p / lc.
std::vector<std::pair<QPolynomial, int>> squarefree_decomposition(const QPolynomial& p);

// Resultant of p and q (exact, via an integer Sylvester determinant).
Rational resultant(const QPolynomial& p, const QPolynomial& q);

// Resultants eliminating y, used to combine algebraic numbers:
//   add: Res_y(p(y), q(x - y))   has x = a + b among its roots
//   mul: Res_y(p(y), y^m q(x/y)) has x = a * b among its roots (q(0) != 0)
QPolynomial resultant_add(const QPolynomial& p, const QPolynomial& q);
QPolynomial resultant_mul(const QPolynomial& p, const QPolynomial& q);

// Sturm machinery. The sequence is built from the squarefree part, so root
// counts are counts of distinct real roots.
class SturmSequence {
public:
    explicit SturmSequence(const QPolynomial& p);
    const QPolynomial& squarefree() const { return seq_.front(); }
    // distinct real roots in the half-open interval (a, b], a < b
    int count_half_open(const Rational& a, const Rational& b) const;
    // distinct real roots in the open interval (a, b); endpoints may be roots
    int count_open(const Rational& a, const Rational& b) const;
    int count_all() const;
    int variations_at(const Rational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

private:
    std::vector<QPolynomial> seq_;
};

// All real roots get an isolating open interval with rational endpoints that
// are themselves not roots. Sorted ascending. Input may have multiplicities;
// isolation runs on the squarefree part.
struct IsolatingInterval {
    Rational lo, hi;
};
std::vector<IsolatingInterval> isolate_real_roots(const QPolynomial& p);

// Cauchy-style bound: all real roots lie in (-B, B).
Rational root_bound(const QPolynomial& p);

// Integer polynomial helpers shared with the factorization code.
std::vector<Integer> to_primitive_integer(const QPolynomial& p, Rational* content = nullptr);
QPolynomial from_integer_coeffs(const std::vector<Integer>& c);

// Exact interval extension: image bounds of p over [lo, hi] by interval
// Horner (not tight, but correct and cheap).
std::pair<Rational, Rational> eval_interval(const QPolynomial& p, const Rational& lo, const Rational& hi);

// Unique polynomial of degree < xs.size() through the given points (Newton
// divided differences). The xs must be distinct.
QPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// u with u*a = 1 mod m; requires gcd(a, m) constant.
QPolynomial inverse_mod(const QPolynomial& a, const QPolynomial& m);

} // namespace mordell
