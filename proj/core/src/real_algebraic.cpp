#include "mordell/real_algebraic.hpp"

#include <algorithm>
#include <cmath>

#include "mordell/errors.hpp"
#include "mordell/factor.hpp"

namespace mordell {

namespace {

// rational q > 0 with q^n strictly below y (y > 0), reasonably tight
Rational rational_below_nth_root(const Rational& y, int n) {
    double guess = std::pow(to_double(y), 1.0 / n) * (1 - 1e-9);
    if (!(guess > 0)) guess = 0;
    Rational q = dyadic_from_double(guess, 48);
    if (q < 0) q = 0;
    while (pow_rat(q, n) >= y) q = q * Rational(1048575, 1048576);
    return q;
}

Rational rational_above_nth_root(const Rational& y, int n) {
    double guess = std::pow(to_double(y), 1.0 / n) * (1 + 1e-9);
    Rational q = dyadic_from_double(guess, 48) + Rational(1, 1L << 30);
    while (pow_rat(q, n) <= y) q = q * Rational(1048577, 1048576);
    return q;
}

} // namespace

const Rational& RealAlgebraic::rational_value() const {
    if (!rat_) throw DomainError("value is not rational");
    return *rat_;
}

QPolynomial RealAlgebraic::minimal_polynomial() const {
    if (rat_) return QPolynomial({-*rat_, Rational(1)});
    return root_->poly();
}

RealAlgebraic RealAlgebraic::from_minimal(QPolynomial minpoly, Rational lo, Rational hi) {
    if (minpoly.degree() == 1) return RealAlgebraic(-minpoly[0]);
    return RealAlgebraic(RealRoot::make(std::move(minpoly), std::move(lo), std::move(hi)));
}

RealAlgebraic RealAlgebraic::root_of(const QPolynomial& p, const Rational& lo, const Rational& hi) {
    RealRoot iso = RealRoot::isolate(p, lo, hi); // validates isolation
    // find the irreducible factor owning this root
    for (const auto& [g, mult] : factor_over_q(iso.poly())) {
        (void)mult;
        if (g.degree() < 1) continue;
        SturmSequence st(g);
        if (st.count_open(iso.lo(), iso.hi()) == 1) return from_minimal(g, iso.lo(), iso.hi());
    }
    throw DomainError("no irreducible factor owns the isolated root");
}

RealAlgebraic RealAlgebraic::from_irreducible(const QPolynomial& p, const Rational& lo, const Rational& hi) {
    if (p.degree() < 1 || !p.is_monic())
        throw DomainError("from_irreducible: polynomial must be monic of positive degree");
    return from_minimal(p, lo, hi);
}

RealAlgebraic RealAlgebraic::nth_real_root_of(const QPolynomial& p, int idx) {
    auto roots = isolate_real_roots(p);
    if (idx < 0 || idx >= static_cast<int>(roots.size()))
        throw InvalidInputError("real root index out of range");
    return root_of(p, roots[static_cast<size_t>(idx)].lo, roots[static_cast<size_t>(idx)].hi);
}

std::pair<Rational, Rational> RealAlgebraic::enclosure(const Rational& w) const {
    if (w <= 0) throw InvalidInputError("enclosure width must be positive");
    if (rat_) return {*rat_ - w / 3, *rat_ + w / 3};
    RealRoot r = root_->refine_below(w);
    return {r.lo(), r.hi()};
}

double RealAlgebraic::approx() const {
    if (rat_) return to_double(*rat_);
    RealRoot r =
        root_->refine_below(Rational(1, Integer(1) << 52) * std::max(Rational(1), abs_rat_bound()));
    return (to_double(r.lo()) + to_double(r.hi())) / 2;
}

// crude magnitude bound used only to scale refinement targets
Rational RealAlgebraic::abs_rat_bound() const {
    if (rat_) return mordell::abs(*rat_) + 1;
    Rational m = std::max(mordell::abs(root_->lo()), mordell::abs(root_->hi()));
    return m + 1;
}

int RealAlgebraic::sign() const {
    if (rat_) return mordell::sign(*rat_);
    return root_->cmp(Rational(0));
}

int RealAlgebraic::compare(const RealAlgebraic& o) const {
    if (rat_ && o.rat_) return mordell::sign(*rat_ - *o.rat_) ;
    if (rat_) return -o.root_->cmp(*rat_);
    if (o.rat_) return root_->cmp(*o.rat_);
    return root_->compare(*o.root_);
}

RealAlgebraic RealAlgebraic::operator-() const {
    if (rat_) return RealAlgebraic(Rational(-*rat_));
    QPolynomial m = root_->poly().negate_var();
    if (mordell::sign(m.leading()) < 0) m = -m;
    return from_minimal(m.monic(), -root_->hi(), -root_->lo());
}

template <typename F>
RealAlgebraic RealAlgebraic::select_root(const QPolynomial& combined, const RealAlgebraic& a,
                                         const RealAlgebraic& b, F&& enclose) {
    QPolynomial sf = squarefree_part(combined);
    struct Cand {
        QPolynomial minpoly;
        RealRoot root;
    };
    std::vector<Cand> cands;
    for (const auto& [g, mult] : factor_over_q(sf)) {
        (void)mult;
        if (g.degree() < 1) continue;
        for (const auto& iv : isolate_real_roots(g)) cands.push_back({g, RealRoot::make(g, iv.lo, iv.hi)});
    }
    Rational w(1, 16);
    for (int round = 0; round < 256; ++round, w /= 16) {
        auto ea = a.enclosure(w), eb = b.enclosure(w);
        auto [lo, hi] = enclose(ea, eb);
        // candidates whose isolating interval meets the result enclosure
        int hit = -1, hits = 0;
        for (size_t i = 0; i < cands.size(); ++i) {
            const RealRoot& r = cands[i].root;
            bool disjoint = (r.hi() <= lo) || (hi <= r.lo());
            if (!disjoint) {
                ++hits;
                hit = static_cast<int>(i);
            }
        }
        if (hits == 1) {
            // tighten the stored interval with the enclosure when possible
            const Cand& c = cands[static_cast<size_t>(hit)];
            return from_minimal(c.minpoly, c.root.lo(), c.root.hi());
        }
        // shrink candidate intervals too, so overlaps die out
        for (auto& c : cands) c.root = c.root.refined(2);
    }
    throw DomainError("failed to separate combined algebraic value");
}

RealAlgebraic RealAlgebraic::operator+(const RealAlgebraic& o) const {
    if (rat_ && o.rat_) return RealAlgebraic(Rational(*rat_ + *o.rat_));
    if (o.rat_) {
        if (*o.rat_ == 0) return *this;
        QPolynomial m = root_->poly().shift(-*o.rat_); // p(x - q) has root a + q
        return from_minimal(m.monic(), root_->lo() + *o.rat_, root_->hi() + *o.rat_);
    }
    if (rat_) return o + *this;
    QPolynomial comb = resultant_add(root_->poly(), o.root_->poly());
    return select_root(comb, *this, o, [](const auto& ea, const auto& eb) {
        return std::pair<Rational, Rational>(ea.first + eb.first, ea.second + eb.second);
    });
}

RealAlgebraic RealAlgebraic::operator-(const RealAlgebraic& o) const { return *this + (-o); }

RealAlgebraic RealAlgebraic::operator*(const RealAlgebraic& o) const {
    if (rat_ && o.rat_) return RealAlgebraic(Rational(*rat_ * *o.rat_));
    if (o.rat_) {
        if (*o.rat_ == 0) return RealAlgebraic(Rational(0));
        QPolynomial m = root_->poly().scale_var(Rational(1) / *o.rat_).monic(); // root q*a
        Rational l = root_->lo() * *o.rat_, h = root_->hi() * *o.rat_;
        if (l > h) std::swap(l, h);
        return from_minimal(std::move(m), std::move(l), std::move(h));
    }
    if (rat_) return o * *this;
    QPolynomial comb = resultant_mul(root_->poly(), o.root_->poly());
    return select_root(comb, *this, o, [](const auto& ea, const auto& eb) {
        Rational p1 = ea.first * eb.first, p2 = ea.first * eb.second;
        Rational p3 = ea.second * eb.first, p4 = ea.second * eb.second;
        Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
        Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
        return std::pair<Rational, Rational>(std::move(lo), std::move(hi));
    });
}

RealAlgebraic RealAlgebraic::inverse() const {
    if (rat_) {
        if (*rat_ == 0) throw DomainError("inverse of zero");
        return RealAlgebraic(Rational(1 / *rat_));
    }
    // reverse coefficients: roots map to reciprocals
    const QPolynomial& p = root_->poly();
    std::vector<Rational> rc(p.coeffs().rbegin(), p.coeffs().rend());
    QPolynomial m = QPolynomial(std::move(rc)).monic();
    RealRoot r = *root_;
    while (!(r.lo() > 0 || r.hi() < 0)) r = r.refined(1);
    return from_minimal(std::move(m), Rational(1) / r.hi(), Rational(1) / r.lo());
}

RealAlgebraic RealAlgebraic::operator/(const RealAlgebraic& o) const {
    if (o.sign() == 0) throw DomainError("division by zero");
    if (rat_ && o.rat_) return RealAlgebraic(Rational(*rat_ / *o.rat_));
    return *this * o.inverse();
}

RealAlgebraic RealAlgebraic::abs() const { return sign() < 0 ? -*this : *this; }

RealAlgebraic RealAlgebraic::pow(int e) const {
    if (e == 0) return RealAlgebraic(Rational(1));
    if (e < 0) return inverse().pow(-e);
    RealAlgebraic acc(Rational(1)), base = *this;
    unsigned k = static_cast<unsigned>(e);
    while (k) {
        if (k & 1u) acc = acc * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return acc;
}

RealAlgebraic RealAlgebraic::nth_root(int n) const {
    if (n < 1) throw InvalidInputError("nth_root needs n >= 1");
    if (n == 1) return *this;
    int s = sign();
    if (s < 0) throw DomainError("nth_root of negative value");
    if (s == 0) return RealAlgebraic(Rational(0));
    if (rat_) {
        // exact rational root when numerator and denominator are n-th powers
        Integer num = rat_->get_num(), den = rat_->get_den(), rn, rd;
        if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n)) != 0 &&
            mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n)) != 0) {
            Rational r{rn, rd};
            r.canonicalize();
            return RealAlgebraic(r);
        }
    }
    QPolynomial comb = minimal_polynomial().compose_xn(n);
    QPolynomial sf = squarefree_part(comb);
    struct Cand {
        QPolynomial minpoly;
        RealRoot root;
    };
    std::vector<Cand> cands;
    for (const auto& [g, mult] : factor_over_q(sf)) {
        (void)mult;
        if (g.degree() < 1) continue;
        for (const auto& iv : isolate_real_roots(g))
            if (iv.hi > 0) cands.push_back({g, RealRoot::make(g, iv.lo, iv.hi)});
    }
    Rational w(1, 16);
    for (int round = 0; round < 256; ++round, w /= 16) {
        auto [vlo, vhi] = enclosure(w);
        if (vlo <= 0) continue; // tighten until the enclosure is positive
        Rational rlo = rational_below_nth_root(vlo, n);
        Rational rhi = rational_above_nth_root(vhi, n);
        int hit = -1, hits = 0;
        for (size_t i = 0; i < cands.size(); ++i) {
            const RealRoot& r = cands[i].root;
            bool disjoint = (r.hi() <= rlo) || (rhi <= r.lo());
            if (!disjoint) {
                ++hits;
                hit = static_cast<int>(i);
            }
        }
        if (hits == 1) {
            const Cand& c = cands[static_cast<size_t>(hit)];
            return from_minimal(c.minpoly, c.root.lo(), c.root.hi());
        }
        for (auto& c : cands) c.root = c.root.refined(2);
    }
    throw DomainError("failed to isolate nth root");
}

std::string RealAlgebraic::str() const {
    if (rat_) return to_string(*rat_);
    return "root of " + root_->poly().str() + " in (" + to_string(root_->lo()) + ", " +
           to_string(root_->hi()) + ")";
}

} // namespace mordell
