#include "mordell/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "mordell/errors.hpp"

namespace mordell {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct reduced {
    std::vector<std::vector<double>> cols;
    std::vector<std::vector<long long>> u; // u[j]: original coefficients of reduced column j
};

// textbook lll on doubles; only the traversal order depends on it, so a
// numeric stall is acceptable and the guard just stops early
reduced lll(std::vector<std::vector<double>> cols) {
    const size_t n = cols.size();
    std::vector<std::vector<long long>> u(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i) u[i][i] = 1;
    std::vector<std::vector<double>> bs(n);
    std::vector<std::vector<double>> mu(n, std::vector<double>(n, 0.0));
    std::vector<double> bn(n, 0.0);
    auto gs = [&]() {
        for (size_t i = 0; i < n; ++i) {
            bs[i] = cols[i];
            for (size_t j = 0; j < i; ++j) {
                mu[i][j] = bn[j] > 1e-300 ? dot(cols[i], bs[j]) / bn[j] : 0.0;
                for (size_t k = 0; k < n; ++k) bs[i][k] -= mu[i][j] * bs[j][k];
            }
            bn[i] = dot(bs[i], bs[i]);
        }
    };
    gs();
    size_t k = 1, guard = 0;
    while (k < n && ++guard < 20000) {
        for (size_t j = k; j-- > 0;) {
            if (std::fabs(mu[k][j]) > 0.5) {
                long long q = llround(mu[k][j]);
                for (size_t i = 0; i < n; ++i) {
                    cols[k][i] -= static_cast<double>(q) * cols[j][i];
                    u[k][i] -= q * u[j][i];
                }
                gs();
            }
        }
        if (bn[k] >= (0.99 - mu[k][k - 1] * mu[k][k - 1]) * bn[k - 1]) {
            ++k;
        } else {
            std::swap(cols[k], cols[k - 1]);
            std::swap(u[k], u[k - 1]);
            gs();
            if (k > 1) --k;
        }
    }
    return {std::move(cols), std::move(u)};
}

// all y with quadratic form value <= r2, one per +- pair, zero excluded
std::vector<std::vector<long long>> fp_enum(const std::vector<std::vector<double>>& cols, double r2, size_t budget) {
    const size_t n = cols.size();
    std::vector<std::vector<double>> q(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) q[i][j] = dot(cols[i], cols[j]);
    for (size_t i = 0; i < n; ++i) {
        if (q[i][i] <= 1e-14) throw DomainError("degenerate basis in box enumeration");
        for (size_t j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for (size_t k = i + 1; k < n; ++k)
            for (size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }

    std::vector<std::vector<long long>> out;
    std::vector<long long> y(n, 0);
    std::vector<double> t(n, 0.0), uoff(n, 0.0);
    size_t nodes = 0;

    // iterative depth-first walk from the last level down
    std::vector<long long> hi_at(n, 0);
    auto bounds = [&](size_t lvl, double rem) {
        double off = 0.0;
        for (size_t j = lvl + 1; j < n; ++j) off += q[lvl][j] * static_cast<double>(y[j]);
        uoff[lvl] = off;
        double z = std::sqrt(std::max(0.0, rem / q[lvl][lvl])) + 1e-9;
        return std::pair<long long, long long>(static_cast<long long>(std::ceil(-z - off - 1e-9)),
                                               static_cast<long long>(std::floor(z - off + 1e-9)));
    };

    size_t lvl = n - 1;
    t[lvl] = r2;
    auto [lo0, hi0] = bounds(lvl, t[lvl]);
    hi_at[lvl] = hi0;
    y[lvl] = lo0;
    while (true) {
        if (y[lvl] > hi_at[lvl]) {
            // exhausted this level, go up
            if (lvl == n - 1) break;
            ++lvl;
            ++y[lvl];
            continue;
        }
        if (++nodes > budget) throw BudgetError("box enumeration budget exceeded");
        double term = static_cast<double>(y[lvl]) + uoff[lvl];
        double rem = t[lvl] - q[lvl][lvl] * term * term;
        if (rem < -1e-9) {
            ++y[lvl];
            continue;
        }
        if (lvl == 0) {
            // canonical representative: last nonzero coordinate positive
            bool zero = true;
            int last = -1;
            for (size_t i = n; i-- > 0;) {
                if (y[i] != 0) {
                    last = static_cast<int>(i);
                    zero = false;
                    break;
                }
            }
            if (!zero && y[static_cast<size_t>(last)] > 0) out.push_back(y);
            ++y[lvl];
            continue;
        }
        --lvl;
        t[lvl] = std::max(0.0, rem);
        auto [lo, hi] = bounds(lvl, t[lvl]);
        hi_at[lvl] = hi;
        y[lvl] = lo;
    }
    return out;
}

enum class Rel { below, on, above };

Rel rel_of_sign(int s) { return s < 0 ? Rel::below : (s == 0 ? Rel::on : Rel::above); }

struct Classifier {
    const Lattice& lat;
    const SymmetricBox& box;
    const RMatrix* mat = nullptr; // set for explicit algebraic bases
    long two_n = 0;

    // |row image of c| versus the row half width, exactly
    Rel classify(const std::vector<long long>& c, const AlgebraElement* beta,
                 std::vector<std::optional<FieldElement>>& pow_cache, int row) const {
        const RealAlgebraic& hw = box.half_width(row);
        if (lat.rational_basis()) {
            const QMatrix& q = *lat.rational_basis();
            Rational v(0);
            for (size_t j = 0; j < c.size(); ++j)
                if (c[j] != 0) v += Rational(static_cast<long>(c[j])) * q[static_cast<size_t>(row)][j];
            v = abs(v);
            if (hw.is_rational()) return rel_of_sign(sign(v - hw.rational_value()));
            return rel_of_sign(RealAlgebraic(v).compare(hw));
        }
        if (lat.origin()) {
            const auto& org = *lat.origin();
            const auto& [comp, emb] = org.algebra->hom_table()[static_cast<size_t>(row)];
            const FieldElement& part = beta->part(comp);
            if (part.is_zero()) return Rel::below;
            if (hw.is_rational()) {
                // |scale * sigma(part)| vs a  <=>  sigma(part^{2n}) vs gram_det * a^{2n}
                auto& cached = pow_cache[static_cast<size_t>(comp)];
                if (!cached) cached = part.pow(two_n);
                Rational rhs = org.gram_det * pow_rat(hw.rational_value(), two_n);
                FieldElement diff = *cached - part.field()->element(rhs);
                return rel_of_sign(diff.is_zero() ? 0 : diff.sign_at(emb));
            }
            Rational w = Rational(1, 1024);
            for (int round = 0; round < 5; ++round) {
                auto [slo, shi] = org.scale.enclosure(w);
                auto [vlo, vhi] = part.value_interval(emb, w);
                Rational p1 = slo * vlo, p2 = slo * vhi, p3 = shi * vlo, p4 = shi * vhi;
                Rational plo = std::min(std::min(p1, p2), std::min(p3, p4));
                Rational phi = std::max(std::max(p1, p2), std::max(p3, p4));
                Rational alo = sign(plo) >= 0 ? plo : (sign(phi) <= 0 ? -phi : Rational(0));
                Rational ahi = std::max(abs(plo), abs(phi));
                auto [hlo, hhi] = hw.enclosure(w);
                if (ahi < hlo) return Rel::below;
                if (alo > hhi) return Rel::above;
                w /= 1024;
            }
            auto& cached = pow_cache[static_cast<size_t>(comp)];
            if (!cached) cached = part.pow(two_n);
            RealAlgebraic lhs = cached->value(emb);
            RealAlgebraic rhs = hw.pow(static_cast<int>(two_n)) * RealAlgebraic(org.gram_det);
            return rel_of_sign(lhs.compare(rhs));
        }
        // explicit algebraic basis
        Rational w = Rational(1, 1024);
        for (int round = 0; round < 5; ++round) {
            Rational lo(0), hi(0);
            for (size_t j = 0; j < c.size(); ++j) {
                if (c[j] == 0) continue;
                auto [elo, ehi] = (*mat)[static_cast<size_t>(row)][j].enclosure(w);
                Rational cq(static_cast<long>(c[j]));
                if (c[j] > 0) {
                    lo += cq * elo;
                    hi += cq * ehi;
                } else {
                    lo += cq * ehi;
                    hi += cq * elo;
                }
            }
            Rational alo = sign(lo) >= 0 ? lo : (sign(hi) <= 0 ? -hi : Rational(0));
            Rational ahi = std::max(abs(lo), abs(hi));
            auto [hlo, hhi] = hw.enclosure(w);
            if (ahi < hlo) return Rel::below;
            if (alo > hhi) return Rel::above;
            w /= 1024;
        }
        RealAlgebraic img(Rational(0));
        for (size_t j = 0; j < c.size(); ++j) {
            if (c[j] == 0) continue;
            img = img + (*mat)[static_cast<size_t>(row)][j] * RealAlgebraic(Rational(static_cast<long>(c[j])));
        }
        return rel_of_sign(img.abs().compare(hw));
    }
};

} // namespace

std::vector<std::vector<long long>> ellipsoid_candidates(const std::vector<std::vector<double>>& basis,
                                                         double radius, size_t budget) {
    const size_t n = basis.size();
    // column view of the generators
    std::vector<std::vector<double>> cols(n, std::vector<double>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) cols[j][i] = basis[i][j];
    reduced red = lll(std::move(cols));
    double r2 = radius * radius * (1.0 + 1e-7) + 1e-7;
    auto ys = fp_enum(red.cols, r2, budget);
    std::vector<std::vector<long long>> out;
    out.reserve(ys.size());
    for (const auto& y : ys) {
        std::vector<long long> c(n, 0);
        for (size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            for (size_t i = 0; i < n; ++i) c[i] += y[j] * red.u[j][i];
        }
        // canonicalize in original coefficients: first nonzero positive
        for (size_t i = 0; i < n; ++i) {
            if (c[i] == 0) continue;
            if (c[i] < 0)
                for (size_t k = 0; k < n; ++k) c[k] = -c[k];
            break;
        }
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LatticePointSet enumerate_in_box(const Lattice& lat, const SymmetricBox& box, bool open, size_t max_points) {
    if (box.n() != lat.n()) throw InvalidInputError("box dimension mismatch");
    // candidate generation works in the box metric: scaling row i by 1/a_i turns the
    // box into the unit cube, so a radius sqrt(n) ball covers it with bounded excess
    // even for very eccentric boxes.
    auto scaled = lat.approx_basis();
    for (size_t i = 0; i < scaled.size(); ++i) {
        double a = box.half_width(static_cast<int>(i)).approx();
        for (auto& v : scaled[i]) v /= a;
    }
    double radius = std::sqrt(static_cast<double>(lat.n())) * (1.0 + 1e-7) + 1e-9;
    auto cands = ellipsoid_candidates(scaled, radius, 4000000);

    Classifier cls{lat, box};
    RMatrix matcopy;
    if (!lat.rational_basis() && !lat.origin()) {
        matcopy = lat.basis_matrix();
        cls.mat = &matcopy;
    }
    cls.two_n = 2L * lat.n();

    const int ncomp = lat.origin() ? lat.origin()->algebra->num_components() : 0;
    LatticePointSet result;
    for (const auto& c : cands) {
        std::optional<AlgebraElement> beta;
        if (lat.origin()) beta = origin_combination(lat, c);
        std::vector<std::optional<FieldElement>> pow_cache(static_cast<size_t>(ncomp));
        bool ok = true;
        std::vector<int> tight;
        for (int row = 0; row < lat.n() && ok; ++row) {
            Rel r = cls.classify(c, beta ? &*beta : nullptr, pow_cache, row);
            if (r == Rel::above || (r == Rel::on && open)) ok = false;
            else if (r == Rel::on) tight.push_back(row);
        }
        if (!ok) continue;
        LatticePoint p{c, lat.image(c), tight};
        LatticePoint m;
        m.coeffs.reserve(c.size());
        for (long long x : c) m.coeffs.push_back(-x);
        m.image.reserve(p.image.size());
        for (const auto& v : p.image) m.image.push_back(-v);
        m.tight_rows = tight;
        result.push_back(std::move(p));
        result.push_back(std::move(m));
        if (result.size() >= max_points) break;
    }
    std::sort(result.begin(), result.end(), [](const LatticePoint& a, const LatticePoint& b) { return a.coeffs < b.coeffs; });
    if (result.size() > max_points) result.resize(max_points);
    return result;
}

} // namespace mordell
