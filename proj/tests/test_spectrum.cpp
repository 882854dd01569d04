#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "mordell/errors.hpp"
#include "mordell/spectrum.hpp"

using namespace mordell;

namespace {

QuadraticIrrational qi(long p, long q, long d, long r) {
    return QuadraticIrrational(Integer(p), Integer(q), Integer(d), Integer(r));
}

RealAlgebraic ra(long v) { return RealAlgebraic(Rational(v)); }
RealAlgebraic rt(long v) { return RealAlgebraic(Rational(v)).nth_root(2); }

std::vector<long long> digits(std::initializer_list<long long> v) { return {v}; }

// digit stream of the expansion: preperiod then the period repeated
long long stream_digit(const CFExpansion& e, size_t i) {
    if (i < e.preperiod.size()) return e.preperiod[i];
    return e.period[(i - e.preperiod.size()) % e.period.size()];
}

} // namespace

TEST_CASE("surd expansions are exactly periodic") {
    auto r2 = cf_expand(qi(0, 1, 2, 1));
    CHECK(r2.preperiod == digits({1}));
    CHECK(r2.period == digits({2}));

    auto phi = cf_expand(qi(1, 1, 5, 2));
    CHECK(phi.preperiod.empty());
    CHECK(phi.period == digits({1}));

    auto r5 = cf_expand(qi(0, 1, 5, 1));
    CHECK(r5.preperiod == digits({2}));
    CHECK(r5.period == digits({4}));

    auto r3 = cf_expand(qi(0, 1, 3, 1));
    CHECK(r3.preperiod == digits({1}));
    CHECK(r3.period == digits({1, 2}));

    // negative value: integer part is negative, later digits stay positive
    auto neg = cf_expand(qi(1, -1, 2, 1));
    CHECK(neg.preperiod == digits({-1, 1, 1}));
    CHECK(neg.period == digits({2}));

    // every quadratic terminates with a nonempty period
    for (long p = -3; p <= 3; p += 2)
        for (long q = -2; q <= 2; ++q) {
            if (q == 0) continue;
            for (long d : {2, 3, 7, 13})
                for (long r : {1, 2, 5}) {
                    auto e = cf_expand(qi(p, q, d, r));
                    CHECK(!e.period.empty());
                    for (size_t i = 1; i < e.preperiod.size(); ++i) CHECK(e.preperiod[i] >= 1);
                    for (long long a : e.period) CHECK(a >= 1);
                }
        }
}

TEST_CASE("canonical forms reduce and reject rationals") {
    auto x = qi(2, 2, 8, 4); // (2 + 2*sqrt(8))/4 = (1 + 2*sqrt(2))/2
    CHECK(x.p() == 1);
    CHECK(x.q() == 2);
    CHECK(x.d() == 2);
    CHECK(x.r() == 2);
    CHECK(x.value() == (ra(1) + ra(2) * rt(2)) / ra(2));

    auto y = qi(0, -3, 12, -6); // sqrt(12) = 2*sqrt(3), sign moved into q
    CHECK(y.p() == 0);
    CHECK(y.q() == 1);
    CHECK(y.d() == 3);
    CHECK(y.r() == 1);

    CHECK(qi(7, 1, 5, 3).field_discriminant() == 5);
    CHECK(qi(0, 1, 2, 1).field_discriminant() == 8);
    CHECK(qi(0, 1, 13, 1).field_discriminant() == 13);

    CHECK_THROWS_AS(qi(1, 1, 4, 2), InvalidInputError);  // sqrt(4) is rational
    CHECK_THROWS_AS(qi(1, 0, 5, 2), InvalidInputError);  // no irrational part
    CHECK_THROWS_AS(qi(1, 1, 5, 0), InvalidInputError);  // zero denominator
    CHECK_THROWS_AS(qi(1, 1, -5, 2), InvalidInputError); // negative radicand
}

TEST_CASE("convergents approach the value at the classical rate") {
    auto x = qi(0, 1, 7, 1); // [2; 1,1,1,4 repeating]
    auto e = cf_expand(x);
    CHECK(e.preperiod == digits({2}));
    CHECK(e.period == digits({1, 1, 1, 4}));

    RealAlgebraic v = x.value();
    Rational h0(1), hm(0), k0(0), km(1); // h/k convergent recurrences
    std::optional<RealAlgebraic> prev_err;
    for (size_t j = 0; j + 1 < 12; ++j) {
        Rational a(static_cast<long>(stream_digit(e, j)));
        Rational h = a * h0 + hm, k = a * k0 + km;
        hm = h0;
        km = k0;
        h0 = h;
        k0 = k;
        Rational anext(static_cast<long>(stream_digit(e, j + 1)));
        Rational knext = anext * k0 + km;
        RealAlgebraic err = (v - RealAlgebraic(h / k)).abs();
        CHECK(err <= RealAlgebraic(Rational(1) / (k * knext)));
        if (prev_err) CHECK(err < *prev_err);
        prev_err = err;
    }
}

TEST_CASE("digit bounds sort quadratics into bad sets") {
    CHECK(in_bad_k(qi(1, 1, 5, 2), 1));       // golden ratio: all ones
    CHECK(!in_bad_k(qi(0, 1, 2, 1), 1));      // sqrt(2) has digit 2
    CHECK(in_bad_k(qi(0, 1, 2, 1), 2));
    CHECK(!in_bad_k(qi(0, 1, 5, 1), 2));      // sqrt(5) repeats digit 4
    CHECK(!in_bad_k(qi(0, 1, 5, 1), 3));
    CHECK(in_bad_k(qi(0, 1, 5, 1), 4));
    CHECK_THROWS_AS(in_bad_k(qi(0, 1, 5, 1), 0), InvalidInputError);
}

TEST_CASE("the parametric family lands on the expected surds") {
    auto m1 = cusick_family(1);
    CHECK(m1 == qi(0, 1, 5, 1));
    CHECK(m1.value() == rt(5));

    auto m2 = cusick_family(2); // sqrt(32)/2 = 2 sqrt(2)
    CHECK(m2 == qi(0, 2, 2, 1));
    CHECK(m2.value() == ra(2) * rt(2));
    auto e2 = cf_expand(m2);
    CHECK(e2.preperiod == digits({2}));
    CHECK(e2.period == digits({1, 4}));
    CHECK(max_tail_digit(e2) == 4); // the eventual digits are not bounded by 2

    auto m3 = cusick_family(3);
    CHECK(m3 == qi(0, 1, 77, 3));

    CHECK_THROWS_AS(cusick_family(0), InvalidInputError);
}

TEST_CASE("plane lattices of quadratics match the field constructions") {
    Lattice l2 = quadratic_lattice(qi(0, 1, 2, 1));
    CHECK(l2.covolume() == ra(1));
    CHECK(kappa_oracle_2d(l2, 10) == (ra(2) + rt(2)) / ra(4));

    Lattice lphi = quadratic_lattice(qi(1, 1, 5, 2));
    CHECK(lphi.covolume() == ra(1));
    CHECK(kappa_oracle_2d(lphi, 10) == (ra(5) + rt(5)) / ra(10));

    // the conjugate generates the same additive group, hence the same lattice
    Lattice lconj = quadratic_lattice(qi(1, -1, 5, 2));
    CHECK(kappa_oracle_2d(lconj, 10) == (ra(5) + rt(5)) / ra(10));

    // product minima are positive and already stable at these radii
    RealAlgebraic lam = lambda_inf(lphi, 10);
    CHECK(lam.sign() > 0);
    CHECK(lam == lambda_inf(lphi, 20));
}

TEST_CASE("spectrum scans are sorted, bounded, and reproducible") {
    std::vector<std::pair<long long, QuadraticIrrational>> family;
    for (long long m = 1; m <= 6; ++m) family.emplace_back(m, cusick_family(m));

    // generous wall clock so the deterministic evaluation budget binds
    SearchBudget budget;
    budget.max_evals = 300;
    budget.max_seconds = 300.0;
    auto pts = spectrum_scan(family, budget, 8, 0);
    REQUIRE(pts.size() == 6);

    // discriminants: 5, 8, 77, 140, 221, 5 for m = 1..6; ties break on m
    std::vector<long long> order;
    for (const auto& p : pts) order.push_back(p.param);
    CHECK(order == std::vector<long long>({1, 6, 2, 3, 4, 5}));
    CHECK(pts[0].field_disc == 5);
    CHECK(pts[1].field_disc == 5); // distinct parameters can share a field
    CHECK(pts[2].field_disc == 8);

    for (const auto& p : pts) {
        CHECK(p.lambda.sign() > 0);
        CHECK(p.kappa_oracle.sign() > 0);
        CHECK(p.kappa_oracle < ra(1)); // positive product minimum keeps kappa below one
        CHECK(p.kappa_search <= ra(1));
        CHECK(p.certified);
        CHECK(p.kappa_search <= p.kappa_oracle);
        CHECK(p.max_digit >= 1);
    }
    CHECK(pts[0].max_digit == 4); // sqrt(5)
    CHECK(pts[2].max_digit == 4); // 2 sqrt(2) = [2; 1, 4]

    std::string csv = spectrum_csv(pts);
    CHECK(csv.substr(0, csv.find('\n')) ==
          "param,D,discriminant,max_digit,lambda,kappa_oracle,kappa_search,certified");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);

    // byte determinism: a fresh scan renders the identical document
    auto again = spectrum_scan(family, budget, 8, 0);
    CHECK(spectrum_csv(again) == csv);

    // worker parallelism must not change the output
    setenv("MORDELL_THREADS", "3", 1);
    auto parallel = spectrum_scan(family, budget, 8, 0);
    unsetenv("MORDELL_THREADS");
    CHECK(spectrum_csv(parallel) == csv);

    CHECK(spectrum_csv({}) == "param,D,discriminant,max_digit,lambda,kappa_oracle,kappa_search,certified\n");
}

TEST_CASE("interleaved words follow the centered block pattern") {
    auto ones = interleave_word(std::vector<long long>(5, 1), std::vector<long long>(5, 1), 9);
    CHECK(ones.word == digits({1, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(ones.uniform_digit == 2);

    // backward a, b and forward c, d with distinct symbols
    auto w = interleave_word({7, 8}, {9, 10}, 5);
    CHECK(w.word == digits({9, 7, 9, 10, 8}));

    // block t occupies positions t^2 .. (t+1)^2 - 1 and reads a_{-t} .. a_t
    std::vector<long long> alpha = {101, 102, 103};
    std::vector<long long> omega = {200, 201, 202, 203};
    auto full = interleave_word(alpha, omega, 16);
    for (long t = 0; t <= 3; ++t)
        for (long i = -t; i <= t; ++i) {
            long long expect = i >= 0 ? omega[static_cast<size_t>(i)]
                                      : alpha[static_cast<size_t>(-i - 1)];
            CHECK(full.word[static_cast<size_t>(t * t + i + t)] == expect);
        }

    // digits of sqrt(2) on both sides: bounded by 2, companion digit 3
    std::vector<long long> back(20, 2), fwd(20, 2);
    fwd[0] = 1;
    auto s2 = interleave_word(back, fwd, 20);
    CHECK(*std::max_element(s2.word.begin(), s2.word.end()) == 2);
    CHECK(s2.uniform_digit == 3);

    CHECK(interleave_word({}, {}, 0).word.empty());
    CHECK_THROWS_AS(interleave_word({1}, {1, 1}, 9), InvalidInputError); // backward runs out
    CHECK_THROWS_AS(interleave_word({1, 1}, {1}, 4), InvalidInputError); // forward runs out
    CHECK_THROWS_AS(interleave_word({}, {}, -1), InvalidInputError);
}
