#include "mordell/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace mordell {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw InvalidInputError("empty rational literal");
    // plain integer or p/q: hand to GMP directly
    bool simple = true;
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            simple = false;
    }
    try {
        if (simple) {
            Rational q(s);
            if (q.get_den() == 0) throw InvalidInputError("zero denominator in '" + s + "'");
            q.canonicalize();
            return q;
        }
    } catch (const std::invalid_argument&) {
        throw InvalidInputError("bad rational literal '" + s + "'");
    }

    // decimal form: [sign] digits [. digits] [e exp]
    std::string t = s;
    long exp10 = 0;
    auto epos = t.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = std::strtol(t.c_str() + epos + 1, nullptr, 10);
        t = t.substr(0, epos);
    }
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        exp10 -= static_cast<long>(t.size() - dot - 1);
        t.erase(dot, 1);
    }
    if (t.empty() || t == "-" || t == "+") throw InvalidInputError("bad rational literal '" + s + "'");
    try {
        Rational q{Integer(t), 1};
        Integer p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
        if (exp10 < 0)
            q /= Rational(p10);
        else
            q *= Rational(p10);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw InvalidInputError("bad rational literal '" + s + "'");
    }
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer floor_rat(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }

Integer ceil_rat(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Rational pow_rat(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    bool inv = e < 0;
    unsigned long k = static_cast<unsigned long>(inv ? -e : e);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), k);
    if (inv) {
        if (n == 0) throw DomainError("0 to a negative power");
        std::swap(n, d);
    }
    Rational r{n, d};
    r.canonicalize();
    return r;
}

Rational dyadic_from_double(double x, int bits) {
    if (!std::isfinite(x)) throw InvalidInputError("non-finite double");
    double scaled = std::ldexp(x, bits);
    // round to nearest integer; doubles this size are exact in mpz
    double r = std::nearbyint(scaled);
    Integer num;
    {
        mpz_class tmp;
        mpz_set_d(tmp.get_mpz_t(), r);
        num = tmp;
    }
    Integer den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    Rational q{num, den};
    q.canonicalize();
    return q;
}

Integer isqrt(const Integer& n) {
    if (n < 0) throw DomainError("isqrt of negative");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Integer& n, Integer* root) {
    if (n < 0) return false;
    Integer r = isqrt(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

void square_split(const Integer& n, Integer& f, Integer& rest) {
    if (n <= 0) throw DomainError("square_split needs positive input");
    f = 1;
    rest = n;
    // peel small square factors; desk scale keeps this cheap
    for (Integer p = 2; p * p * p * p <= n || p <= 1000; ++p) {
        if (p * p > rest) break;
        while (rest % (p * p) == 0) {
            rest /= p * p;
            f *= p;
        }
    }
    Integer r;
    if (is_square(rest, &r)) {
        f *= r;
        rest = 1;
    }
}

} // namespace mordell
