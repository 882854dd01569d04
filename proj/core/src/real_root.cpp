#include "mordell/real_root.hpp"

#include "mordell/errors.hpp"

namespace mordell {

RealRoot::RealRoot(QPolynomial p, Rational lo, Rational hi)
    : poly_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {
    approx_ = (to_double(lo_) + to_double(hi_)) / 2;
}

RealRoot RealRoot::make(QPolynomial poly, Rational lo, Rational hi) {
    if (poly.is_zero() || poly.degree() < 1) throw InvalidInputError("RealRoot needs positive degree");
    if (!poly.is_monic()) throw InvalidInputError("RealRoot polynomial must be monic");
    if (!(lo < hi)) throw InvalidInputError("RealRoot interval is empty");
    if (poly.sign_at(lo) == 0 || poly.sign_at(hi) == 0)
        throw InvalidInputError("RealRoot interval endpoints must not be roots");
    {
        QPolynomial sf = squarefree_part(poly);
        if (sf.degree() != poly.degree()) throw InvalidInputError("RealRoot polynomial must be squarefree");
    }
    SturmSequence st(poly);
    if (st.count_open(lo, hi) != 1) throw InvalidInputError("interval does not isolate exactly one root");
    return RealRoot(std::move(poly), std::move(lo), std::move(hi));
}

RealRoot RealRoot::isolate(const QPolynomial& poly, const Rational& lo, const Rational& hi) {
    if (poly.is_zero()) throw InvalidInputError("cannot isolate a root of the zero polynomial");
    QPolynomial sf = squarefree_part(poly);
    return make(std::move(sf), lo, hi);
}

void RealRoot::bisect_once() {
    Rational mid = (lo_ + hi_) / 2;
    int s = poly_.sign_at(mid);
    if (s == 0) {
        // the root is exactly mid: tighten around it, avoiding other roots
        Rational w = (hi_ - lo_) / 4;
        while (true) {
            Rational a = mid - w, b = mid + w;
            if (a > lo_ && b < hi_ && poly_.sign_at(a) != 0 && poly_.sign_at(b) != 0) {
                lo_ = a;
                hi_ = b;
                break;
            }
            w /= 2;
        }
    } else {
        int sl = poly_.sign_at(lo_);
        if (sl * s < 0)
            hi_ = mid;
        else
            lo_ = mid;
    }
    approx_ = (to_double(lo_) + to_double(hi_)) / 2;
}

RealRoot RealRoot::refined(int steps) const {
    RealRoot r = *this;
    for (int i = 0; i < steps; ++i) r.bisect_once();
    return r;
}

RealRoot RealRoot::refine_below(const Rational& w) const {
    RealRoot r = *this;
    while (r.width() >= w) r.bisect_once();
    return r;
}

int RealRoot::cmp(const Rational& q) const {
    if (q <= lo_) return 1;  // root > lo >= q, root in open interval
    if (q >= hi_) return -1;
    int s = poly_.sign_at(q);
    if (s == 0) return 0;
    // q inside the interval and not a root: root < q iff sign change on (lo, q)
    int sl = poly_.sign_at(lo_);
    return (sl * s < 0) ? -1 : 1;
}

bool RealRoot::is_rational(Rational* value) const {
    if (poly_.degree() == 1) {
        if (value) *value = -poly_[0];
        return true;
    }
    return false;
}

int RealRoot::compare(const RealRoot& o) const {
    RealRoot a = *this, b = o;
    QPolynomial g = gcd(a.poly_, b.poly_);
    std::optional<SturmSequence> st_g, st_a, st_b;
    if (g.degree() > 0) {
        st_g.emplace(g);
        st_a.emplace(a.poly_);
        st_b.emplace(b.poly_);
    }
    for (;;) {
        if (a.hi_ <= b.lo_) return -1;
        if (b.hi_ <= a.lo_) return 1;
        // overlapping: equality is possible only through a shared factor
        if (st_g) {
            Rational il = std::max(a.lo_, b.lo_);
            Rational ih = std::min(a.hi_, b.hi_);
            if (il < ih && st_g->count_open(il, ih) == 1) {
                // the unique shared root in the overlap is both roots
                if (st_a->count_open(il, ih) == 1 && st_b->count_open(il, ih) == 1) return 0;
            }
        }
        a.bisect_once();
        b.bisect_once();
    }
}

} // namespace mordell
