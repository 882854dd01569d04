#include "mordell/number_field.hpp"

#include <sstream>

#include "mordell/errors.hpp"
#include "mordell/factor.hpp"

namespace mordell {

namespace {

// extended euclid in Q[x]: returns g = gcd (monic) and u with u*a = g mod b
void ext_gcd_mod(const QPolynomial& a, const QPolynomial& b, QPolynomial& g, QPolynomial& u) {
    QPolynomial r0 = b, r1 = a;        // invariant: r_i = u_i * a  (mod b)
    QPolynomial u0({Rational(0)}), u1({Rational(1)});
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        QPolynomial u2 = u0 - q * u1;
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u2;
    }
    if (r0.is_zero()) throw DomainError("ext_gcd_mod: both inputs zero");
    Rational lc = r0.leading();
    g = r0.monic();
    u = u0 * (Rational(1) / lc);
}

} // namespace

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw DomainError("field element without a field");
    if (coords_.size() != static_cast<size_t>(field_->degree()))
        throw DomainError("field element coordinate count does not match degree");
}

bool FieldElement::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_one() const {
    if (coords_.empty() || coords_[0] != 1) return false;
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

std::optional<Rational> FieldElement::as_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return std::nullopt;
    return coords_.empty() ? Rational(0) : coords_[0];
}

QPolynomial FieldElement::as_poly() const { return QPolynomial(coords_); }

void FieldElement::check_field(const FieldElement& o) const {
    if (field_.get() != o.field_.get()) throw DomainError("field elements from different fields");
}

FieldElement FieldElement::operator-() const {
    std::vector<Rational> c = coords_;
    for (auto& x : c) x = -x;
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_field(o);
    std::vector<Rational> c = coords_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_field(o);
    std::vector<Rational> c = coords_;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_field(o);
    return field_->from_poly(as_poly() * o.as_poly());
}

FieldElement FieldElement::operator*(const Rational& c) const {
    std::vector<Rational> v = coords_;
    for (auto& x : v) x *= c;
    return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero field element");
    QPolynomial g, u;
    ext_gcd_mod(as_poly(), field_->min_poly(), g, u);
    // minimal polynomial is irreducible, so the gcd is 1
    if (g.degree() != 0) throw DomainError("field inverse: gcd not constant");
    return field_->from_poly(u * (Rational(1) / g[0]));
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement r = field_->one();
    FieldElement b = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return field_.get() == o.field_.get() && coords_ == o.coords_;
}

QMatrix FieldElement::mult_matrix() const {
    int d = field_->degree();
    QMatrix m(static_cast<size_t>(d), QVector(static_cast<size_t>(d), Rational(0)));
    FieldElement col = *this;
    for (int j = 0; j < d; ++j) {
        // column j = this * gen^j in the power basis
        for (int i = 0; i < d; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.coords_[static_cast<size_t>(i)];
        if (j + 1 < d) col = col * field_->gen();
    }
    return m;
}

Rational FieldElement::trace() const {
    QMatrix m = mult_matrix();
    Rational t(0);
    for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

Rational FieldElement::norm() const { return det(mult_matrix()); }

QPolynomial FieldElement::minimal_polynomial() const {
    auto q = as_rational();
    if (q) return QPolynomial({-*q, Rational(1)});
    // characteristic polynomial of the multiplication matrix by
    // Faddeev-LeVerrier, then the (unique) irreducible factor vanishing here
    QMatrix m = mult_matrix();
    size_t n = m.size();
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    QMatrix mk = m;
    for (size_t k = 1; k <= n; ++k) {
        Rational tr(0);
        for (size_t i = 0; i < n; ++i) tr += mk[i][i];
        Rational ck = -tr / Rational(static_cast<long>(k));
        coeffs[n - k] = ck;
        if (k == n) break;
        for (size_t i = 0; i < n; ++i) mk[i][i] += ck;
        mk = mat_mul(m, mk);
    }
    QPolynomial charpoly(coeffs);
    for (const auto& [g, mult] : factor_over_q(charpoly)) {
        (void)mult;
        if (g.degree() < 1) continue;
        // evaluate g at this element exactly
        FieldElement acc = field_->zero();
        for (int k = g.degree(); k >= 0; --k) {
            acc = acc * *this + field_->element(g[k]);
        }
        if (acc.is_zero()) return g;
    }
    throw DomainError("no factor of the characteristic polynomial vanishes");
}

RealAlgebraic FieldElement::value(int emb) const {
    auto q = as_rational();
    if (q) return RealAlgebraic(*q);
    QPolynomial g = as_poly();
    QPolynomial me = minimal_polynomial();
    if (me.degree() == 1) return RealAlgebraic(-me[0]);
    auto candidates = isolate_real_roots(me);
    RealRoot theta = field_->embedding(emb);
    for (int round = 0; round < 512; ++round) {
        auto [glo, ghi] = eval_interval(g, theta.lo(), theta.hi());
        // the image is a root of me lying in [glo, ghi]; once that interval
        // fits inside a single isolating interval we are done
        for (const auto& c : candidates) {
            if (c.lo < glo && ghi < c.hi) return RealAlgebraic::from_irreducible(me, c.lo, c.hi);
        }
        theta = theta.refined(2);
    }
    throw DomainError("embedding value did not separate from other conjugates");
}

std::pair<Rational, Rational> FieldElement::value_interval(int emb, const Rational& w) const {
    if (w <= 0) throw DomainError("value_interval: width must be positive");
    auto q = as_rational();
    if (q) return {*q - w / 4, *q + w / 4};
    QPolynomial g = as_poly();
    RealRoot theta = field_->embedding(emb);
    for (;;) {
        auto [glo, ghi] = eval_interval(g, theta.lo(), theta.hi());
        if (ghi - glo < w) return {glo, ghi};
        theta = theta.refined(2);
    }
}

int FieldElement::sign_at(int emb) const {
    if (is_zero()) return 0;
    auto q = as_rational();
    if (q) return *q > 0 ? 1 : -1;
    QPolynomial g = as_poly();
    RealRoot theta = field_->embedding(emb);
    // g(theta) != 0 because deg g < deg m and m is irreducible
    for (;;) {
        auto [glo, ghi] = eval_interval(g, theta.lo(), theta.hi());
        if (glo > 0) return 1;
        if (ghi < 0) return -1;
        theta = theta.refined(2);
    }
}

std::string FieldElement::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << to_string(coords_[i]);
    }
    os << "]";
    return os.str();
}

NumberFieldR::NumberFieldR(QPolynomial m, std::vector<RealRoot> embs) : min_poly_(std::move(m)), embeddings_(std::move(embs)) {}

FieldPtr NumberFieldR::create(const QPolynomial& min_poly) {
    if (min_poly.degree() < 1) throw InvalidInputError("number field polynomial must have positive degree");
    QPolynomial m = min_poly.monic();
    if (!is_irreducible(m)) throw InvalidInputError("number field polynomial must be irreducible: " + m.str());
    auto intervals = isolate_real_roots(m);
    if (static_cast<int>(intervals.size()) != m.degree())
        throw InvalidInputError("number field is not totally real: " + m.str());
    std::vector<RealRoot> embs;
    embs.reserve(intervals.size());
    for (const auto& iv : intervals) embs.push_back(RealRoot::make(m, iv.lo, iv.hi));
    return FieldPtr(new NumberFieldR(std::move(m), std::move(embs)));
}

FieldPtr NumberFieldR::rationals() {
    static FieldPtr q = create(QPolynomial({Rational(0), Rational(1)}));
    return q;
}

const RealRoot& NumberFieldR::embedding(int k) const {
    if (k < 0 || k >= degree()) throw DomainError("embedding index out of range");
    return embeddings_[static_cast<size_t>(k)];
}

FieldElement NumberFieldR::zero() const { return element(Rational(0)); }

FieldElement NumberFieldR::one() const { return element(Rational(1)); }

FieldElement NumberFieldR::gen() const {
    std::vector<Rational> c(static_cast<size_t>(degree()), Rational(0));
    if (degree() == 1) {
        // generator of Q[x]/(x) is 0
        return FieldElement(shared_from_this(), std::move(c));
    }
    c[1] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberFieldR::element(std::vector<Rational> coords) const {
    if (coords.size() != static_cast<size_t>(degree())) throw InvalidInputError("coordinate count does not match field degree");
    return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement NumberFieldR::element(const Rational& c) const {
    std::vector<Rational> v(static_cast<size_t>(degree()), Rational(0));
    v[0] = c;
    return FieldElement(shared_from_this(), std::move(v));
}

FieldElement NumberFieldR::from_poly(const QPolynomial& g) const {
    QPolynomial r = g.divrem(min_poly_).second;
    std::vector<Rational> c(static_cast<size_t>(degree()), Rational(0));
    for (int i = 0; i <= r.degree(); ++i) c[static_cast<size_t>(i)] = r[i];
    return FieldElement(shared_from_this(), std::move(c));
}

} // namespace mordell
