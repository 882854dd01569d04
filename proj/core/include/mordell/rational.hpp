#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "mordell/errors.hpp"

namespace mordell {

// mpq_class is always kept canonical (reduced, positive denominator) by GMP
// as long as values are produced through arithmetic or canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw InvalidInputError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "p/q", and decimal literals like "-1.25" or "0.5e-3".
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline Rational abs(const Rational& q) { return ::abs(q); }

Integer floor_div(const Integer& a, const Integer& b);
Integer floor_rat(const Rational& q);
Integer ceil_rat(const Rational& q);

Rational pow_rat(const Rational& base, long e);

// Exact value as double (nearest); fine for display and seeding numerics.
inline double to_double(const Rational& q) { return q.get_d(); }

// Dyadic rational within 2^-bits of x, used to freeze numeric seeds into
// exact candidates.
Rational dyadic_from_double(double x, int bits = 40);

// isqrt(n) = floor(sqrt(n)); exact_sqrt additionally demands n be a square.
Integer isqrt(const Integer& n);
bool is_square(const Integer& n, Integer* root = nullptr);

// Largest f with f^2 | n; returns (f, n/f^2).
void square_split(const Integer& n, Integer& f, Integer& rest);

} // namespace mordell
