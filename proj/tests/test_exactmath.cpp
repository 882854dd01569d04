#include <doctest.h>

#include "mordell/errors.hpp"
#include "mordell/factor.hpp"
#include "mordell/polynomial.hpp"
#include "mordell/real_algebraic.hpp"

using namespace mordell;

static QPolynomial poly(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return QPolynomial(std::move(v));
}

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational("-6/8") == rat(-3, 4));
    CHECK(parse_rational("7") == rat(7));
    CHECK(parse_rational("-1.25") == rat(-5, 4));
    CHECK(parse_rational("0.5e-2") == rat(1, 200));
    CHECK(to_string(rat(-3, 4)) == "-3/4");
    CHECK(to_string(rat(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInputError);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidInputError);
}

TEST_CASE("polynomial arithmetic and division") {
    QPolynomial p = poly({-2, 0, 1}); // x^2 - 2
    QPolynomial q = poly({1, 1});     // x + 1
    CHECK((p * q).degree() == 3);
    auto [d, r] = p.divrem(q);
    CHECK(d == poly({-1, 1}));
    CHECK(r == poly({-1}));
    CHECK(p.eval(rat(3)) == rat(7));
    CHECK(p.shift(rat(1)) == poly({-1, 2, 1}));       // (x+1)^2 - 2
    CHECK(p.scale_var(rat(2)) == poly({-2, 0, 4}));   // (2x)^2 - 2
    CHECK(poly({0, 1, 0, 5}).negate_var() == poly({0, -1, 0, -5}));
    CHECK(p.compose_xn(3) == poly({-2, 0, 0, 0, 0, 0, 1}));
    CHECK_THROWS_AS(p.divrem(QPolynomial::zero()), DomainError);
    CHECK_THROWS_AS(QPolynomial::zero().monic(), DomainError);
}

TEST_CASE("gcd and squarefree structure") {
    QPolynomial a = poly({-2, 0, 1});
    QPolynomial b = poly({-3, 0, 1});
    CHECK(gcd(a, b).degree() == 0);
    QPolynomial p = a * a * b; // (x^2-2)^2 (x^2-3)
    QPolynomial g = gcd(p, p.derivative());
    CHECK(g == a.monic());
    auto sq = squarefree_decomposition(p);
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].first == b.monic());
    CHECK(sq[0].second == 1);
    CHECK(sq[1].first == a.monic());
    CHECK(sq[1].second == 2);
    CHECK(squarefree_part(p) == (a * b).monic());
}

TEST_CASE("resultants") {
    QPolynomial a = poly({-2, 0, 1});
    QPolynomial b = poly({-3, 0, 1});
    CHECK(resultant(a, b) == rat(1)); // (3-2)(3-2)
    CHECK(resultant(a, a) == rat(0));
    // sum of sqrt2 and sqrt3 is a root of the add-resultant
    QPolynomial s = resultant_add(a, b);
    CHECK(s.degree() == 4);
    // x^4 - 10x^2 + 1 divides it (here: equals it up to scaling)
    CHECK(s.monic() == poly({1, 0, -10, 0, 1}));
    QPolynomial m = resultant_mul(a, b);
    CHECK(m.monic() == poly({-6, 0, 1}).monic() * poly({-6, 0, 1}).monic()); // (x^2-6)^2
}

TEST_CASE("sturm isolation on a totally real cubic") {
    // three real roots, one in each of (-2,-1), (-1,0), (1,2)
    QPolynomial p = poly({-1, -3, 0, 1});
    SturmSequence st(p);
    CHECK(st.count_all() == 3);
    CHECK(st.count_open(rat(-2), rat(-1)) == 1);
    CHECK(st.count_open(rat(-1), rat(0)) == 1);
    CHECK(st.count_open(rat(1), rat(2)) == 1);
    auto iso = isolate_real_roots(p);
    REQUIRE(iso.size() == 3);
    for (const auto& iv : iso) CHECK(iv.lo < iv.hi);
    CHECK(iso[0].hi <= iso[1].lo);
    CHECK(iso[1].hi <= iso[2].lo);
}

TEST_CASE("sturm with endpoint roots and half-open counts") {
    QPolynomial p = poly({0, 1}); // x
    SturmSequence st(p);
    CHECK(st.count_half_open(rat(-1), rat(0)) == 1);
    CHECK(st.count_half_open(rat(0), rat(1)) == 0);
    CHECK(st.count_open(rat(-1), rat(0)) == 0);
    CHECK(st.count_open(rat(-1), rat(1)) == 1);
}

TEST_CASE("zero polynomial error paths") {
    CHECK_THROWS_AS(isolate_real_roots(QPolynomial::zero()), DomainError);
    CHECK_THROWS_AS(factor_over_q(QPolynomial::zero()), InvalidInputError);
    CHECK_THROWS_AS(SturmSequence(QPolynomial::zero()), DomainError);
}

TEST_CASE("factorization over Q") {
    // (x^2-2)(x^2-3)
    auto f1 = factor_over_q(poly({-2, 0, 1}) * poly({-3, 0, 1}));
    REQUIRE(f1.size() == 2);
    CHECK(f1[0].first == poly({-3, 0, 1}));
    CHECK(f1[1].first == poly({-2, 0, 1}));

    // multiplicities
    auto f2 = factor_over_q(poly({-2, 0, 1}) * poly({-2, 0, 1}));
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].first == poly({-2, 0, 1}));
    CHECK(f2[0].second == 2);

    // irreducible over Q but reducible mod every prime
    auto f3 = factor_over_q(poly({1, 0, 0, 0, 1}));
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].first == poly({1, 0, 0, 0, 1}));

    // minimal polynomial of sqrt2 + sqrt3
    CHECK(is_irreducible(poly({1, 0, -10, 0, 1})));

    // rational roots and content
    auto f4 = factor_over_q(poly({0, -4, 0, 4})); // 4x(x-1)(x+1) ... actually 4x^3-4x = 4x(x^2-1)
    REQUIRE(f4.size() == 3);
    for (const auto& [g, m] : f4) {
        CHECK(g.degree() == 1);
        CHECK(m == 1);
    }

    // a sextic product with repeated quadratic
    QPolynomial big = poly({-1, -3, 0, 1}) * poly({-2, 0, 1}) * poly({-2, 0, 1});
    auto f5 = factor_over_q(big);
    REQUIRE(f5.size() == 2);
}

TEST_CASE("real root refinement keeps the root and halves width") {
    RealRoot r = RealRoot::isolate(poly({-2, 0, 1}), rat(1), rat(2));
    RealRoot r2 = r.refined(5);
    CHECK(r2.width() * 32 <= r.width());
    CHECK(r2.lo() >= r.lo());
    CHECK(r2.hi() <= r.hi());
    // sign change still brackets the root
    CHECK(r2.poly().sign_at(r2.lo()) * r2.poly().sign_at(r2.hi()) < 0);
    CHECK(r.compare(r2) == 0);
}

TEST_CASE("real root comparison and rational queries") {
    RealRoot s2 = RealRoot::isolate(poly({-2, 0, 1}), rat(1), rat(2));
    RealRoot s2neg = RealRoot::isolate(poly({-2, 0, 1}), rat(-2), rat(-1));
    RealRoot s3 = RealRoot::isolate(poly({-3, 0, 1}), rat(1), rat(2));
    CHECK(s2.compare(s3) < 0);
    CHECK(s3.compare(s2) > 0);
    CHECK(s2.compare(s2) == 0);
    CHECK(s2neg.compare(s2) < 0);
    CHECK(s2.cmp(rat(1)) > 0);
    CHECK(s2.cmp(rat(3, 2)) < 0); // sqrt2 < 1.5
    CHECK(s2.cmp(rat(7, 5)) > 0); // sqrt2 > 1.4
}

TEST_CASE("real algebraic arithmetic") {
    RealAlgebraic s2 = RealAlgebraic::nth_real_root_of(poly({-2, 0, 1}), 1);
    RealAlgebraic s3 = RealAlgebraic::nth_real_root_of(poly({-3, 0, 1}), 1);
    CHECK(s2.sign() == 1);
    CHECK((-s2).sign() == -1);
    CHECK((s2 * s2) == RealAlgebraic(rat(2)));
    CHECK((s2 * s3) == RealAlgebraic::nth_real_root_of(poly({-6, 0, 1}), 1));
    CHECK((s2 + s3).minimal_polynomial() == poly({1, 0, -10, 0, 1}));
    CHECK((s2 - s2).sign() == 0);
    CHECK((s2 / s2) == RealAlgebraic(rat(1)));
    CHECK(s2.inverse() * s2 == RealAlgebraic(rat(1)));
    CHECK(s2.pow(4) == RealAlgebraic(rat(4)));
    CHECK((-s2).abs() == s2);

    // sqrt2 + sqrt3 equals sqrt(5 + 2 sqrt6)
    RealAlgebraic lhs = s2 + s3;
    RealAlgebraic rhs = (RealAlgebraic(rat(5)) + RealAlgebraic(rat(24)).nth_root(2)).nth_root(2);
    CHECK(lhs == rhs);
    CHECK((lhs - rhs).sign() == 0);

    // rational nth roots come out rational
    RealAlgebraic two = RealAlgebraic(rat(8)).nth_root(3);
    CHECK(two.is_rational());
    CHECK(two.rational_value() == rat(2));
    RealAlgebraic half = RealAlgebraic(rat(1, 4)).nth_root(2);
    CHECK(half.rational_value() == rat(1, 2));

    // ordering
    CHECK(s2 < s3);
    CHECK(s3 > s2);
    CHECK(RealAlgebraic(rat(1)) < s2);
    CHECK(s2 < RealAlgebraic(rat(3, 2)));
    CHECK_THROWS_AS(s2 / RealAlgebraic(rat(0)), DomainError);
    CHECK_THROWS_AS((-s2).nth_root(2), DomainError);
}

TEST_CASE("real algebraic enclosures narrow and contain") {
    RealAlgebraic s2 = RealAlgebraic::nth_real_root_of(poly({-2, 0, 1}), 1);
    auto [lo1, hi1] = s2.enclosure(rat(1, 100));
    auto [lo2, hi2] = s2.enclosure(rat(1, 100000));
    CHECK(hi1 - lo1 < rat(1, 100));
    CHECK(hi2 - lo2 < rat(1, 100000));
    CHECK(lo2 * lo2 < rat(2));
    CHECK(hi2 * hi2 > rat(2));
    double a = s2.approx();
    CHECK(a > 1.41421356);
    CHECK(a < 1.41421357);
}
