#include "mordell/field_poly.hpp"

#include <algorithm>
#include <sstream>

#include "mordell/errors.hpp"
#include "mordell/factor.hpp"

namespace mordell {

KPoly::KPoly(FieldPtr field) : field_(std::move(field)) {
    if (!field_) throw DomainError("polynomial without a field");
}

KPoly::KPoly(FieldPtr field, std::vector<FieldElement> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw DomainError("polynomial without a field");
    for (const auto& c : coeffs_)
        if (c.field().get() != field_.get()) throw DomainError("coefficient from a different field");
    normalize();
}

KPoly KPoly::from_rational(const FieldPtr& field, const QPolynomial& p) {
    std::vector<FieldElement> c;
    c.reserve(static_cast<size_t>(p.degree() + 1));
    for (int i = 0; i <= p.degree(); ++i) c.push_back(field->element(p[i]));
    return KPoly(field, std::move(c));
}

KPoly KPoly::constant(const FieldElement& c) { return KPoly(c.field(), {c}); }

void KPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement KPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return field_->zero();
    return coeffs_[static_cast<size_t>(k)];
}

std::optional<QPolynomial> KPoly::as_rational_poly() const {
    std::vector<Rational> c;
    for (const auto& e : coeffs_) {
        auto q = e.as_rational();
        if (!q) return std::nullopt;
        c.push_back(*q);
    }
    return QPolynomial(c);
}

KPoly KPoly::operator-() const {
    std::vector<FieldElement> c = coeffs_;
    for (auto& x : c) x = -x;
    return KPoly(field_, std::move(c));
}

KPoly KPoly::operator+(const KPoly& o) const {
    if (field_.get() != o.field_.get()) throw DomainError("polynomials over different fields");
    std::vector<FieldElement> c(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = c[i] + coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] = c[i] + o.coeffs_[i];
    return KPoly(field_, std::move(c));
}

KPoly KPoly::operator-(const KPoly& o) const { return *this + (-o); }

KPoly KPoly::operator*(const KPoly& o) const {
    if (field_.get() != o.field_.get()) throw DomainError("polynomials over different fields");
    if (is_zero() || o.is_zero()) return KPoly(field_);
    std::vector<FieldElement> c(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    return KPoly(field_, std::move(c));
}

KPoly KPoly::operator*(const FieldElement& c) const {
    std::vector<FieldElement> v = coeffs_;
    for (auto& x : v) x = x * c;
    return KPoly(field_, std::move(v));
}

std::pair<KPoly, KPoly> KPoly::divrem(const KPoly& d) const {
    if (d.is_zero()) throw DomainError("division by zero polynomial");
    if (degree() < d.degree()) return {KPoly(field_), *this};
    FieldElement inv_lc = d.coeffs_.back().inverse();
    std::vector<FieldElement> rem = coeffs_;
    std::vector<FieldElement> quo(static_cast<size_t>(degree() - d.degree() + 1), field_->zero());
    for (int k = degree() - d.degree(); k >= 0; --k) {
        FieldElement q = rem[static_cast<size_t>(k + d.degree())] * inv_lc;
        quo[static_cast<size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= d.degree(); ++j) {
            size_t idx = static_cast<size_t>(k + j);
            rem[idx] = rem[idx] - q * d.coeffs_[static_cast<size_t>(j)];
        }
    }
    rem.resize(static_cast<size_t>(std::max(d.degree(), 0)));
    return {KPoly(field_, std::move(quo)), KPoly(field_, std::move(rem))};
}

KPoly KPoly::monic() const {
    if (is_zero()) throw DomainError("monic of zero polynomial");
    return *this * coeffs_.back().inverse();
}

KPoly KPoly::derivative() const {
    if (degree() < 1) return KPoly(field_);
    std::vector<FieldElement> c;
    c.reserve(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) c.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
    return KPoly(field_, std::move(c));
}

FieldElement KPoly::eval(const FieldElement& x) const {
    FieldElement r = field_->zero();
    for (int i = degree(); i >= 0; --i) r = r * x + coeffs_[static_cast<size_t>(i)];
    return r;
}

KPoly KPoly::shift_by(const FieldElement& c) const {
    KPoly lin(field_, {c, field_->one()});
    KPoly r(field_);
    for (int i = degree(); i >= 0; --i) r = r * lin + constant(coeffs_[static_cast<size_t>(i)]);
    return r;
}

std::string KPoly::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << "; ";
        os << coeffs_[i].str();
    }
    os << ")";
    return os.str();
}

KPoly gcd_monic(KPoly a, KPoly b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
    while (!b.is_zero()) {
        KPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

KPoly squarefree_part(const KPoly& f) {
    if (f.is_zero()) throw DomainError("squarefree part of zero polynomial");
    if (f.degree() < 1) return KPoly::constant(f.field()->one());
    KPoly g = gcd_monic(f, f.derivative());
    if (g.degree() == 0) return f.monic();
    return f.divrem(g).first.monic();
}

QPolynomial kpoly_norm(const KPoly& f) {
    if (f.is_zero()) return QPolynomial();
    const FieldPtr& K = f.field();
    const int d = K->degree();
    if (d == 1) {
        auto q = f.as_rational_poly();
        return *q;
    }
    const QPolynomial& m = K->min_poly();
    const int D = f.degree() * d;
    std::vector<Rational> xs, ys;
    xs.reserve(static_cast<size_t>(D) + 1);
    for (long t = 0; static_cast<int>(xs.size()) <= D; ++t) {
        Rational xv(t % 2 == 0 ? t / 2 : -(t / 2 + 1));
        // f with x evaluated at xv becomes a polynomial in the generator
        QPolynomial qt;
        for (int i = f.degree(); i >= 0; --i) qt = qt * QPolynomial::constant(xv) + f.coeff(i).as_poly();
        xs.push_back(xv);
        ys.push_back(qt.is_zero() ? Rational(0) : resultant(m, qt));
    }
    return interpolate(xs, ys);
}

namespace {

// deterministic order: degree, then coordinates of coefficients from the top
bool kpoly_less(const KPoly& a, const KPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const FieldElement fa = a.coeff(i), fb = b.coeff(i);
        const auto& ca = fa.coords();
        const auto& cb = fb.coords();
        for (size_t j = 0; j < ca.size(); ++j) {
            if (ca[j] != cb[j]) return ca[j] < cb[j];
        }
    }
    return false;
}

// monic squarefree input
std::vector<KPoly> factor_squarefree_over_field(const KPoly& s) {
    const FieldPtr& K = s.field();
    if (s.degree() <= 1) return {s};
    if (K->degree() == 1) {
        auto q = s.as_rational_poly();
        std::vector<KPoly> out;
        for (const auto& [g, mult] : factor_over_q(*q)) {
            (void)mult;
            if (g.degree() >= 1) out.push_back(KPoly::from_rational(K, g));
        }
        return out;
    }
    FieldElement theta = K->gen();
    for (long t = 0;; ++t) {
        long k = (t % 2 == 0) ? t / 2 : -(t / 2 + 1);
        FieldElement shift = theta * Rational(k);
        KPoly shifted = s.shift_by(-shift); // s(x - k*theta)
        QPolynomial nrm = kpoly_norm(shifted);
        // need the norm squarefree so root sets downstairs stay disjoint
        QPolynomial g = gcd(nrm, nrm.derivative());
        if (g.degree() != 0) continue;
        std::vector<KPoly> out;
        KPoly rem = s;
        for (const auto& [h, mult] : factor_over_q(nrm)) {
            (void)mult;
            if (h.degree() < 1) continue;
            if (rem.degree() < 1) break;
            KPoly lifted = KPoly::from_rational(K, h).shift_by(shift); // h(x + k*theta)
            KPoly fac = gcd_monic(rem, lifted);
            if (fac.degree() >= 1) {
                rem = rem.divrem(fac).first;
                out.push_back(std::move(fac));
            }
        }
        if (rem.degree() != 0) throw DomainError("norm factorization did not exhaust the polynomial");
        return out;
    }
}

} // namespace

std::vector<std::pair<KPoly, int>> factor_over_field(const KPoly& f) {
    if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
    std::vector<std::pair<KPoly, int>> out;
    if (f.degree() < 1) return out;
    KPoly s = squarefree_part(f);
    KPoly fm = f.monic();
    for (KPoly& g : factor_squarefree_over_field(s)) {
        // multiplicity by repeated exact division
        int mult = 0;
        KPoly w = fm;
        for (;;) {
            auto [q, r] = w.divrem(g);
            if (!r.is_zero()) break;
            ++mult;
            w = q;
            if (w.degree() < g.degree()) break;
        }
        out.emplace_back(std::move(g), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return kpoly_less(a.first, b.first); });
    return out;
}

} // namespace mordell
