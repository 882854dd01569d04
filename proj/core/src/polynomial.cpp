#include "mordell/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "mordell/errors.hpp"

namespace mordell {

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

void QPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPolynomial QPolynomial::constant(const Rational& c) {
    QPolynomial p;
    if (c != 0) p.c_ = {c};
    return p;
}

QPolynomial QPolynomial::x() { return monomial(Rational(1), 1); }

QPolynomial QPolynomial::monomial(const Rational& c, int k) {
    QPolynomial p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(k) + 1, Rational(0));
        p.c_.back() = c;
    }
    return p;
}

const Rational& QPolynomial::operator[](int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(i)];
}

const Rational& QPolynomial::leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
}

bool QPolynomial::is_monic() const { return !c_.empty() && c_.back() == 1; }

QPolynomial QPolynomial::operator-() const {
    QPolynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPolynomial(std::move(r));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const { return *this + (-o); }

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
    if (is_zero() || o.is_zero()) return QPolynomial();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return QPolynomial(std::move(r));
}

QPolynomial QPolynomial::operator*(const Rational& s) const {
    if (s == 0) return QPolynomial();
    QPolynomial r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

QPolynomial QPolynomial::operator/(const Rational& s) const {
    if (s == 0) throw DomainError("division of polynomial by zero scalar");
    QPolynomial r = *this;
    for (auto& v : r.c_) v /= s;
    return r;
}

std::pair<QPolynomial, QPolynomial> QPolynomial::divrem(const QPolynomial& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    QPolynomial q, r = *this;
    const int dd = d.degree();
    const Rational& lc = d.leading();
    while (!r.is_zero() && r.degree() >= dd) {
        int k = r.degree() - dd;
        Rational f = r.leading() / lc;
        // r -= f x^k d;  q += f x^k
        std::vector<Rational> qc = q.c_;
        if (static_cast<int>(qc.size()) < k + 1) qc.resize(static_cast<size_t>(k) + 1, Rational(0));
        qc[static_cast<size_t>(k)] += f;
        q = QPolynomial(std::move(qc));
        std::vector<Rational> rc = r.c_;
        for (int i = 0; i <= dd; ++i) rc[static_cast<size_t>(i + k)] -= f * d.c_[static_cast<size_t>(i)];
        r = QPolynomial(std::move(rc));
    }
    return {q, r};
}

QPolynomial QPolynomial::exact_div(const QPolynomial& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

QPolynomial QPolynomial::derivative() const {
    if (degree() < 1) return QPolynomial();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return QPolynomial(std::move(r));
}

Rational QPolynomial::eval(const Rational& x) const {
    Rational v(0);
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

double QPolynomial::eval_double(double x) const {
    double v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i].get_d();
    return v;
}

QPolynomial QPolynomial::monic() const {
    if (is_zero()) throw DomainError("monic of zero polynomial");
    return *this / leading();
}

QPolynomial QPolynomial::shift(const Rational& a) const {
    // Horner on p(x+a): process coefficients high to low multiplying by (x+a)
    QPolynomial xa({a, Rational(1)});
    QPolynomial r;
    for (size_t i = c_.size(); i-- > 0;) r = r * xa + constant(c_[i]);
    return r;
}

QPolynomial QPolynomial::scale_var(const Rational& a) const {
    if (a == 0) throw DomainError("scale_var by zero");
    QPolynomial r = *this;
    Rational f(1);
    for (size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] *= f;
        f *= a;
    }
    r.normalize();
    return r;
}

QPolynomial QPolynomial::negate_var() const {
    QPolynomial r = *this;
    for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

QPolynomial QPolynomial::compose_xn(int n) const {
    if (n < 1) throw DomainError("compose_xn needs n >= 1");
    if (is_zero()) return QPolynomial();
    std::vector<Rational> r(static_cast<size_t>(degree()) * n + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i * static_cast<size_t>(n)] = c_[i];
    return QPolynomial(std::move(r));
}

QPolynomial QPolynomial::compose(const QPolynomial& q) const {
    QPolynomial r;
    for (size_t i = c_.size(); i-- > 0;) r = r * q + constant(c_[i]);
    return r;
}

std::string QPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = (*this)[i];
        if (c == 0) continue;
        if (!first) os << (sign(c) > 0 ? " + " : " - ");
        else if (sign(c) < 0) os << "-";
        Rational a = abs(c);
        if (i == 0 || a != 1) os << to_string(a) << (i > 0 ? "*" : "");
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// integer helpers

std::vector<Integer> to_primitive_integer(const QPolynomial& p, Rational* content) {
    if (p.is_zero()) {
        if (content) *content = 0;
        return {};
    }
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        Integer d = c.get_den();
        den_lcm = lcm(den_lcm, d);
    }
    std::vector<Integer> z(p.coeffs().size());
    Integer g = 0;
    for (size_t i = 0; i < z.size(); ++i) {
        Rational scaled = p.coeffs()[i] * Rational(den_lcm);
        z[i] = scaled.get_num();
        g = gcd(g, z[i]);
    }
    if (g == 0) g = 1;
    for (auto& v : z) v /= g;
    // keep leading coefficient positive so that content carries the sign
    Rational cont{g, den_lcm};
    cont.canonicalize();
    if (z.back() < 0) {
        for (auto& v : z) v = -v;
        cont = -cont;
    }
    if (content) *content = cont;
    return z;
}

QPolynomial from_integer_coeffs(const std::vector<Integer>& c) {
    std::vector<Rational> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = Rational(c[i]);
    return QPolynomial(std::move(r));
}

// ---------------------------------------------------------------------------
// gcd via primitive pseudo-remainder sequence on integer images

static std::vector<Integer> int_pseudo_rem(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    // prem(a, b): lc(b)^(deg a - deg b + 1) * a mod b, computed in place
    std::vector<Integer> r = a;
    const int db = static_cast<int>(b.size()) - 1;
    const Integer& lb = b.back();
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
        int k = static_cast<int>(r.size()) - 1 - db;
        Integer lr = r.back();
        for (auto& v : r) v *= lb;
        for (int i = 0; i <= db; ++i) r[static_cast<size_t>(i + k)] -= lr * b[static_cast<size_t>(i)];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return r;
}

static void int_make_primitive(std::vector<Integer>& a) {
    Integer g = 0;
    for (const auto& v : a) g = gcd(g, v);
    if (g == 0) return;
    for (auto& v : a) v /= g;
    if (a.back() < 0)
        for (auto& v : a) v = -v;
}

QPolynomial gcd(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero()) return b.is_zero() ? QPolynomial() : b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<Integer> u = to_primitive_integer(a);
    std::vector<Integer> v = to_primitive_integer(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        std::vector<Integer> r = int_pseudo_rem(u, v);
        int_make_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    return from_integer_coeffs(u).monic();
}

QPolynomial squarefree_part(const QPolynomial& p) {
    if (p.is_zero()) throw DomainError("squarefree part of zero polynomial");
    if (p.degree() == 0) return QPolynomial::constant(Rational(1));
    QPolynomial g = gcd(p, p.derivative());
    return p.exact_div(g).monic();
}

std::vector<std::pair<QPolynomial, int>> squarefree_decomposition(const QPolynomial& p) {
    if (p.is_zero()) throw DomainError("squarefree decomposition of zero polynomial");
    std::vector<std::pair<QPolynomial, int>> out;
    QPolynomial f = p.monic();
    if (f.degree() == 0) return out;
    // Yun's algorithm
    QPolynomial d = f.derivative();
    QPolynomial w = gcd(f, d);
    QPolynomial a = f.exact_div(w);
    QPolynomial c = d.exact_div(w) - a.derivative();
    int m = 1;
    while (a.degree() > 0) {
        QPolynomial g = gcd(a, c);
        if (g.degree() > 0) out.emplace_back(g.monic(), m);
        a = a.exact_div(g);
        c = c.exact_div(g) - a.derivative();
        ++m;
    }
    return out;
}

// ---------------------------------------------------------------------------
// resultants

static Integer bareiss_det(std::vector<std::vector<Integer>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    Integer denom = 1;
    int sign_flips = 0;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            ++sign_flips;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = t / denom; // exact by Bareiss
            }
            m[i][k] = 0;
        }
        denom = m[k][k];
    }
    Integer det = m[n - 1][n - 1];
    return (sign_flips % 2) ? Integer(-det) : det;
}

Rational resultant(const QPolynomial& p, const QPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return Rational(0);
    const int m = p.degree(), n = q.degree();
    if (m == 0) return pow_rat(p.leading(), n);
    if (n == 0) return pow_rat(q.leading(), m);
    Rational cp, cq;
    std::vector<Integer> P = to_primitive_integer(p, &cp);
    std::vector<Integer> Q = to_primitive_integer(q, &cq);
    // Res(c*P, d*Q) = c^n d^m Res(P, Q)
    std::vector<std::vector<Integer>> syl(static_cast<size_t>(m + n),
                                          std::vector<Integer>(static_cast<size_t>(m + n), Integer(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) syl[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = P[static_cast<size_t>(m - i)];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            syl[static_cast<size_t>(n + r)][static_cast<size_t>(r + i)] = Q[static_cast<size_t>(n - i)];
    Integer det = bareiss_det(std::move(syl));
    return Rational(det) * pow_rat(cp, n) * pow_rat(cq, m);
}

// Evaluation-interpolation for resultants that eliminate y. The resultant in
// x has degree at most deg(p)*deg(q); evaluating x at enough rationals turns
// each sample into a scalar resultant.
QPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const size_t n = xs.size();
    // Newton form
    std::vector<Rational> dd = ys;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n; i-- > j;) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    QPolynomial r = QPolynomial::constant(dd[n - 1]);
    for (size_t i = n - 1; i-- > 0;) {
        QPolynomial lin({-xs[i], Rational(1)});
        r = r * lin + QPolynomial::constant(dd[i]);
    }
    return r;
}

QPolynomial resultant_add(const QPolynomial& p, const QPolynomial& q) {
    const int m = p.degree(), n = q.degree();
    if (m < 1 || n < 1) throw DomainError("resultant_add needs positive degrees");
    const int D = m * n;
    std::vector<Rational> xs, ys;
    xs.reserve(static_cast<size_t>(D) + 1);
    for (long t = 0; static_cast<int>(xs.size()) <= D; ++t) {
        Rational xv(t % 2 == 0 ? t / 2 : -(t / 2 + 1));
        // q(x - y) as polynomial in y at fixed x
        QPolynomial qy;
        {
            // substitute y -> xv - y
            QPolynomial sub({xv, Rational(-1)});
            qy = q.compose(sub);
        }
        if (qy.degree() != n) continue; // cannot happen (lead is ±lc(q)), kept defensive
        xs.push_back(xv);
        ys.push_back(resultant(p, qy));
    }
    return interpolate(xs, ys);
}

QPolynomial resultant_mul(const QPolynomial& p, const QPolynomial& q) {
    const int m = p.degree(), n = q.degree();
    if (m < 1 || n < 1) throw DomainError("resultant_mul needs positive degrees");
    if (q[0] == 0) throw DomainError("resultant_mul needs q(0) != 0");
    const int D = m * n;
    std::vector<Rational> xs, ys;
    for (long t = 0; static_cast<int>(xs.size()) <= D; ++t) {
        Rational xv(t % 2 == 0 ? t / 2 : -(t / 2 + 1));
        // y^n q(x/y) = sum_j q_j x^j y^(n-j), at fixed x a polynomial in y
        std::vector<Rational> qc(static_cast<size_t>(n) + 1, Rational(0));
        Rational xp(1);
        for (int j = 0; j <= n; ++j) {
            qc[static_cast<size_t>(n - j)] = q[j] * xp;
            xp *= xv;
        }
        QPolynomial qy{std::move(qc)};
        if (qy.degree() != n) continue;
        xs.push_back(xv);
        ys.push_back(resultant(p, qy));
    }
    return interpolate(xs, ys);
}

// ---------------------------------------------------------------------------
// Sturm sequences and isolation

SturmSequence::SturmSequence(const QPolynomial& p) {
    if (p.is_zero()) throw DomainError("Sturm sequence of zero polynomial");
    QPolynomial f = squarefree_part(p);
    seq_.push_back(f);
    if (f.degree() == 0) return;
    seq_.push_back(f.derivative());
    while (seq_.back().degree() > 0) {
        auto [q, r] = seq_[seq_.size() - 2].divrem(seq_.back());
        (void)q;
        if (r.is_zero()) break; // squarefree input: only at the end, gcd is constant
        // normalize by positive content to keep numbers small; sign preserved
        Rational cont;
        std::vector<Integer> z = to_primitive_integer(r, &cont);
        QPolynomial rn = from_integer_coeffs(z);
        if (sign(cont) < 0) rn = -rn;
        seq_.push_back(-rn);
    }
}

static int count_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int SturmSequence::variations_at(const Rational& x) const {
    std::vector<int> s;
    s.reserve(seq_.size());
    for (const auto& p : seq_) s.push_back(p.sign_at(x));
    return count_variations(s);
}

int SturmSequence::variations_at_neg_inf() const {
    std::vector<int> s;
    for (const auto& p : seq_) {
        int d = p.degree();
        int ls = sign(p.leading());
        s.push_back(d % 2 == 0 ? ls : -ls);
    }
    return count_variations(s);
}

int SturmSequence::variations_at_pos_inf() const {
    std::vector<int> s;
    for (const auto& p : seq_) s.push_back(sign(p.leading()));
    return count_variations(s);
}

int SturmSequence::count_half_open(const Rational& a, const Rational& b) const {
    if (!(a < b)) throw DomainError("count_half_open needs a < b");
    return variations_at(a) - variations_at(b);
}

int SturmSequence::count_open(const Rational& a, const Rational& b) const {
    if (!(a < b)) throw DomainError("count_open needs a < b");
    int n = variations_at(a) - variations_at(b);
    if (seq_.front().sign_at(b) == 0) --n; // drop b itself from (a, b]
    return n;
}

int SturmSequence::count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

Rational root_bound(const QPolynomial& p) {
    if (p.is_zero() || p.degree() == 0) return Rational(1);
    Rational m(0);
    const Rational& lc = p.leading();
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = abs(p[i] / lc);
        if (a > m) m = a;
    }
    return m + 1;
}

std::vector<IsolatingInterval> isolate_real_roots(const QPolynomial& p) {
    if (p.is_zero()) throw DomainError("root isolation of zero polynomial");
    std::vector<IsolatingInterval> out;
    if (p.degree() == 0) return out;
    SturmSequence st(p);
    const QPolynomial& f = st.squarefree();
    if (f.degree() == 0) return out;
    Rational B = root_bound(f);
    // queue of open intervals whose endpoints are not roots
    struct Item {
        Rational lo, hi;
        int count;
    };
    std::vector<Item> stack;
    {
        Rational lo = -B, hi = B;
        // endpoints beyond the root bound are never roots
        int c = st.count_open(lo, hi);
        if (c > 0) stack.push_back({lo, hi, c});
    }
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.count == 1) {
            out.push_back({it.lo, it.hi});
            continue;
        }
        // pick a split point that is not itself a root; roots are finite so
        // one of these fractions works
        Rational mid;
        bool found = false;
        for (long den : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
            mid = it.lo + (it.hi - it.lo) / Rational(den);
            if (f.sign_at(mid) != 0) {
                found = true;
                break;
            }
        }
        if (!found) throw DomainError("could not find non-root split point");
        int cl = st.count_open(it.lo, mid);
        int cr = it.count - cl;
        if (cl > 0) stack.push_back({it.lo, mid, cl});
        if (cr > 0) stack.push_back({mid, it.hi, cr});
    }
    std::sort(out.begin(), out.end(), [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
    return out;
}

QPolynomial inverse_mod(const QPolynomial& a, const QPolynomial& m) {
    // extended euclid, tracking only the coefficient of a
    QPolynomial r0 = m, r1 = a.divrem(m).second;
    QPolynomial u0, u1({Rational(1)});
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        QPolynomial u2 = u0 - q * u1;
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u2;
    }
    if (r0.degree() != 0) throw DomainError("inverse_mod: inputs are not coprime");
    return (u0 / r0[0]).divrem(m).second;
}

std::pair<Rational, Rational> eval_interval(const QPolynomial& p, const Rational& lo, const Rational& hi) {
    if (lo > hi) throw DomainError("eval_interval: empty interval");
    // interval Horner: [a,b] <- c_k + x*[a,b] with x = [lo,hi]
    Rational a(0), b(0);
    for (int k = p.degree(); k >= 0; --k) {
        // products of the four endpoint combinations
        Rational p1 = a * lo, p2 = a * hi, p3 = b * lo, p4 = b * hi;
        Rational na = std::min(std::min(p1, p2), std::min(p3, p4));
        Rational nb = std::max(std::max(p1, p2), std::max(p3, p4));
        a = na + p[k];
        b = nb + p[k];
    }
    return {a, b};
}

} // namespace mordell
