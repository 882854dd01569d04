#include "mordell/factor.hpp"

#include <algorithm>

#include "mordell/errors.hpp"

// Factorization over Q: squarefree split (Yun), then for each squarefree part
// a factorization modulo one prime chosen larger than twice the coefficient
// bound of any true factor, so integer factors are read off by symmetric
// reduction during subset recombination. No Hensel lifting needed at these
// degrees.

namespace mordell {
namespace {

using ZP = std::vector<Integer>; // ascending coefficients, reduced mod p

struct ModCtx {
    Integer p;

    Integer norm(Integer a) const {
        a %= p;
        if (a < 0) a += p;
        return a;
    }
    Integer inv(const Integer& a) const {
        Integer r;
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
            throw DomainError("not invertible mod p");
        return r;
    }
};

void trim(ZP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZP& a) { return static_cast<int>(a.size()) - 1; }

ZP reduce(const std::vector<Integer>& f, const ModCtx& m) {
    ZP r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = m.norm(f[i]);
    trim(r);
    return r;
}

ZP mul(const ZP& a, const ZP& b, const ModCtx& m) {
    if (a.empty() || b.empty()) return {};
    ZP r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = m.norm(r[i + j] + a[i] * b[j]);
    trim(r);
    return r;
}

// remainder of a mod b, b monic
ZP rem(ZP a, const ZP& b, const ModCtx& m) {
    const int db = deg(b);
    while (deg(a) >= db) {
        Integer c = a.back();
        int k = deg(a) - db;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(i + k)] = m.norm(a[static_cast<size_t>(i + k)] - c * b[static_cast<size_t>(i)]);
        trim(a);
    }
    return a;
}

// quotient of a by b, both mod p, b monic, division exact or not (remainder ignored)
ZP quo(ZP a, const ZP& b, const ModCtx& m) {
    const int db = deg(b);
    if (deg(a) < db) return {};
    ZP q(static_cast<size_t>(deg(a) - db) + 1, Integer(0));
    while (deg(a) >= db) {
        Integer c = a.back();
        int k = deg(a) - db;
        q[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(i + k)] = m.norm(a[static_cast<size_t>(i + k)] - c * b[static_cast<size_t>(i)]);
        trim(a);
    }
    trim(q);
    return q;
}

ZP make_monic(ZP a, const ModCtx& m) {
    if (a.empty()) return a;
    Integer iv = m.inv(a.back());
    for (auto& c : a) c = m.norm(c * iv);
    return a;
}

ZP gcd_mod(ZP a, ZP b, const ModCtx& m) {
    a = make_monic(std::move(a), m);
    b = make_monic(std::move(b), m);
    while (!b.empty()) {
        ZP r = rem(a, b, m);
        a = std::move(b);
        b = make_monic(std::move(r), m);
    }
    return a;
}

ZP powmod(ZP base, Integer e, const ZP& f, const ModCtx& m) {
    ZP r = {Integer(1)};
    base = rem(std::move(base), f, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = rem(mul(r, base, m), f, m);
        e >>= 1;
        if (e > 0) base = rem(mul(base, base, m), f, m);
    }
    return r;
}

ZP derivative_mod(const ZP& a, const ModCtx& m) {
    if (a.size() < 2) return {};
    ZP r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = m.norm(a[i] * Integer(static_cast<long>(i)));
    trim(r);
    return r;
}

// deterministic pseudo-random coefficients for the equal-degree splitter
struct SplitRng {
    Integer state = 88172645463325252L;
    Integer next(const Integer& p) {
        state = (state * 6364136223846793005L + 1442695040888963407L) % (p > 0 ? p : Integer(1));
        if (state < 0) state += p;
        return state;
    }
};

void equal_degree_split(const ZP& g, int d, const ModCtx& m, SplitRng& rng, std::vector<ZP>& out) {
    if (deg(g) == d) {
        out.push_back(g);
        return;
    }
    // exponent (p^d - 1) / 2
    Integer e;
    mpz_pow_ui(e.get_mpz_t(), m.p.get_mpz_t(), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    for (int tries = 0; tries < 200; ++tries) {
        ZP r(static_cast<size_t>(deg(g)), Integer(0));
        for (auto& c : r) c = rng.next(m.p);
        trim(r);
        if (r.empty()) continue;
        ZP h = powmod(r, e, g, m);
        // h - 1
        if (h.empty())
            h = {m.norm(Integer(-1))};
        else
            h[0] = m.norm(h[0] - 1);
        trim(h);
        if (h.empty()) continue;
        ZP t = gcd_mod(h, g, m);
        if (deg(t) > 0 && deg(t) < deg(g)) {
            equal_degree_split(t, d, m, rng, out);
            equal_degree_split(quo(g, t, m), d, m, rng, out);
            return;
        }
    }
    throw DomainError("equal-degree splitting failed to converge");
}

// full factorization of monic squarefree f mod p into monic irreducibles
std::vector<ZP> factor_mod_p(ZP f, const ModCtx& m) {
    std::vector<ZP> out;
    SplitRng rng;
    ZP x = {Integer(0), Integer(1)};
    ZP h = x; // x^(p^d) mod f, lifted one Frobenius power per round
    int d = 0;
    while (deg(f) > 0) {
        ++d;
        if (2 * d > deg(f)) {
            out.push_back(f); // what remains is irreducible
            break;
        }
        h = powmod(h, m.p, f, m);
        // gcd(h - x, f) collects all irreducible factors of degree d
        ZP hx = h;
        if (hx.size() < 2) hx.resize(2, Integer(0));
        hx[1] = m.norm(hx[1] - 1);
        trim(hx);
        // gcd(0, f) = f: everything left splits into degree-d factors
        ZP g = hx.empty() ? f : gcd_mod(hx, f, m);
        if (deg(g) > 0) {
            equal_degree_split(g, d, m, rng, out);
            f = quo(f, g, m);
            h = rem(h, f, m);
        }
    }
    return out;
}

// coefficient bound: any factor of f (times lc) has coefficients below this
Integer factor_bound(const std::vector<Integer>& f) {
    Integer s = 0;
    for (const auto& c : f) s += c * c;
    Integer b = isqrt(s) + 1;
    Integer two_n = 1;
    mpz_mul_2exp(two_n.get_mpz_t(), two_n.get_mpz_t(), f.size());
    Integer L = f.back() > 0 ? f.back() : Integer(-f.back());
    return two_n * b * L;
}

Integer symmetric(const Integer& a, const Integer& p) {
    Integer r = a % p;
    if (r < 0) r += p;
    if (2 * r > p) r -= p;
    return r;
}

// trial division over Z (inputs primitive); returns quotient if divisible
bool try_divide(const std::vector<Integer>& f, const std::vector<Integer>& g, std::vector<Integer>& q) {
    QPolynomial F = from_integer_coeffs(f), G = from_integer_coeffs(g);
    auto [Q, R] = F.divrem(G);
    if (!R.is_zero()) return false;
    q.clear();
    for (int i = 0; i <= Q.degree(); ++i) {
        const Rational& c = Q[i];
        if (c.get_den() != 1) return false;
        q.push_back(c.get_num());
    }
    return true;
}

// factor a primitive squarefree integer polynomial into primitive irreducibles
std::vector<std::vector<Integer>> factor_squarefree_z(std::vector<Integer> f) {
    std::vector<std::vector<Integer>> out;
    // peel roots at zero
    size_t k = 0;
    while (k < f.size() && f[k] == 0) ++k;
    if (k > 0) {
        f.erase(f.begin(), f.begin() + static_cast<long>(k));
        for (size_t i = 0; i < k; ++i) out.push_back({Integer(0), Integer(1)});
    }
    if (deg(f) <= 0) return out;
    if (deg(f) == 1) {
        out.push_back(f);
        return out;
    }

    // prime choice: beyond the recombination bound, not dividing lc, image squarefree
    ModCtx m;
    {
        Integer p0 = 2 * factor_bound(f) + 1;
        if (p0 < 1009) p0 = 1009;
        mpz_nextprime(m.p.get_mpz_t(), p0.get_mpz_t());
        for (;;) {
            if (f.back() % m.p != 0) {
                ZP fp = reduce(f, m);
                ZP d = derivative_mod(fp, m);
                if (!d.empty() && deg(gcd_mod(fp, d, m)) == 0) break;
            }
            Integer q = m.p;
            mpz_nextprime(m.p.get_mpz_t(), q.get_mpz_t());
        }
    }

    std::vector<ZP> modular = factor_mod_p(make_monic(reduce(f, m), m), m);
    if (modular.size() == 1) {
        out.push_back(f);
        return out;
    }

    // Zassenhaus recombination by subset size
    std::vector<int> live(modular.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = static_cast<int>(i);
    std::vector<Integer> rest = f;

    auto subset_candidate = [&](const std::vector<int>& idx) {
        ZP prod = {rest.back() % m.p < 0 ? m.norm(rest.back()) : m.norm(rest.back())};
        for (int i : idx) prod = mul(prod, modular[static_cast<size_t>(i)], m);
        std::vector<Integer> g(prod.size());
        for (size_t i = 0; i < prod.size(); ++i) g[i] = symmetric(prod[i], m.p);
        while (!g.empty() && g.back() == 0) g.pop_back();
        // primitive part
        Integer cg = 0;
        for (const auto& c : g) cg = gcd(cg, c);
        if (cg > 1)
            for (auto& c : g) c /= cg;
        if (!g.empty() && g.back() < 0)
            for (auto& c : g) c = -c;
        return g;
    };

    size_t sz = 1;
    while (2 * sz <= live.size()) {
        // iterate over size-sz subsets of live indices
        std::vector<size_t> pos(sz);
        for (size_t i = 0; i < sz; ++i) pos[i] = i;
        bool found = false;
        for (;;) {
            std::vector<int> idx(sz);
            for (size_t i = 0; i < sz; ++i) idx[i] = live[pos[i]];
            std::vector<Integer> g = subset_candidate(idx);
            std::vector<Integer> q;
            if (deg(g) > 0 && try_divide(rest, g, q)) {
                out.push_back(g);
                rest = q;
                std::vector<int> nl;
                for (int v : live)
                    if (std::find(idx.begin(), idx.end(), v) == idx.end()) nl.push_back(v);
                live = std::move(nl);
                found = true;
                break;
            }
            // next combination
            size_t i = sz;
            while (i-- > 0) {
                if (pos[i] + (sz - i) < live.size()) {
                    ++pos[i];
                    for (size_t j = i + 1; j < sz; ++j) pos[j] = pos[j - 1] + 1;
                    break;
                }
                if (i == 0) {
                    i = SIZE_MAX;
                    break;
                }
            }
            if (i == SIZE_MAX) break;
        }
        if (!found) ++sz;
    }
    if (deg(rest) > 0) out.push_back(rest);
    return out;
}

} // namespace

std::vector<std::pair<QPolynomial, int>> factor_over_q(const QPolynomial& p) {
    if (p.is_zero()) throw InvalidInputError("cannot factor the zero polynomial");
    std::vector<std::pair<QPolynomial, int>> out;
    if (p.degree() == 0) return out;
    for (const auto& [sf, mult] : squarefree_decomposition(p)) {
        std::vector<Integer> z = to_primitive_integer(sf);
        for (auto& f : factor_squarefree_z(std::move(z))) out.emplace_back(from_integer_coeffs(f).monic(), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i) {
            if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
        }
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible(const QPolynomial& p) {
    if (p.is_zero() || p.degree() == 0) return false;
    if (p.degree() == 1) return true;
    auto f = factor_over_q(p);
    return f.size() == 1 && f[0].second == 1;
}

} // namespace mordell
