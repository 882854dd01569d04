#include "mordell/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mordell/errors.hpp"

namespace mordell {

namespace {

Rational total_trace(const AlgebraElement& a) {
    Rational t(0);
    for (int j = 0; j < a.algebra()->num_components(); ++j) t += a.part(j).trace();
    return t;
}

// exact determinant by gaussian elimination; entries stay in the field the
// inputs generate, so degrees do not blow up
RealAlgebraic rdet(RMatrix m) {
    const size_t n = m.size();
    RealAlgebraic det(Rational(1));
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c].sign() == 0) ++p;
        if (p == n) return RealAlgebraic(Rational(0));
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det = det * m[c][c];
        RealAlgebraic inv = m[c][c].inverse();
        for (size_t r = c + 1; r < n; ++r) {
            if (m[r][c].sign() == 0) continue;
            RealAlgebraic f = m[r][c] * inv;
            for (size_t k = c + 1; k < n; ++k) m[r][k] = m[r][k] - f * m[c][k];
            m[r][c] = RealAlgebraic(Rational(0));
        }
    }
    return det;
}

std::vector<std::vector<Integer>> hnf_rows(std::vector<std::vector<Integer>> rows, size_t cols) {
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        // clear column c below row r with euclidean steps
        while (true) {
            size_t piv = rows.size();
            for (size_t i = r; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (piv == rows.size() || cmp(abs(rows[i][c]), abs(rows[piv][c])) < 0)) piv = i;
            if (piv == rows.size()) break;
            std::swap(rows[r], rows[piv]);
            bool clear = true;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Integer q = floor_div(rows[i][c], rows[r][c]);
                for (size_t k = 0; k < cols; ++k) rows[i][k] -= q * rows[r][k];
                if (rows[i][c] != 0) clear = false;
            }
            if (clear) break;
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0)
            for (size_t k = 0; k < cols; ++k) rows[r][k] = -rows[r][k];
        // reduce entries above the pivot
        for (size_t i = 0; i < r; ++i) {
            if (rows[i][c] == 0) continue;
            Integer q = floor_div(rows[i][c], rows[r][c]);
            for (size_t k = 0; k < cols; ++k) rows[i][k] -= q * rows[r][k];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::vector<Integer> to_int_row(const std::vector<long long>& v) {
    std::vector<Integer> out;
    out.reserve(v.size());
    for (long long x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

std::vector<std::vector<long long>> to_ll(const std::vector<std::vector<Integer>>& rows) {
    std::vector<std::vector<long long>> out;
    for (const auto& row : rows) {
        std::vector<long long> r;
        for (const auto& x : row) {
            if (!x.fits_slong_p()) throw DomainError("split coefficients exceed machine range");
            r.push_back(x.get_si());
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

void Lattice::detect_rational() {
    QMatrix q(static_cast<size_t>(n_), QVector(static_cast<size_t>(n_)));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            RealAlgebraic e = entry(i, j);
            if (!e.is_rational()) return;
            q[static_cast<size_t>(i)][static_cast<size_t>(j)] = e.rational_value();
        }
    rational_ = std::move(q);
}

Lattice Lattice::from_basis(RMatrix basis) {
    const size_t n = basis.size();
    if (n == 0) throw InvalidInputError("lattice needs a nonempty basis");
    for (const auto& row : basis)
        if (row.size() != n) throw InvalidInputError("lattice basis must be square");
    Lattice lat;
    lat.n_ = static_cast<int>(n);
    lat.matrix_ = std::move(basis);
    lat.detect_rational();
    if (lat.rational_) {
        QMatrix m = *lat.rational_;
        Rational d = det(m);
        if (sign(d) == 0) throw InvalidInputError("lattice basis is singular");
        lat.covolume_ = RealAlgebraic(abs(d));
    } else {
        RealAlgebraic d = rdet(*lat.matrix_);
        if (d.sign() == 0) throw InvalidInputError("lattice basis is singular");
        lat.covolume_ = d.abs();
    }
    return lat;
}

RealAlgebraic Lattice::entry(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw InvalidInputError("lattice entry out of range");
    if (matrix_) return (*matrix_)[static_cast<size_t>(i)][static_cast<size_t>(j)];
    const auto& [comp, emb] = origin_->algebra->hom_table()[static_cast<size_t>(i)];
    RealAlgebraic v = origin_->l_basis[static_cast<size_t>(j)].part(comp).value(emb);
    return origin_->scale * v;
}

RMatrix Lattice::basis_matrix() const {
    if (matrix_) return *matrix_;
    RMatrix m(static_cast<size_t>(n_), RVector(static_cast<size_t>(n_)));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = entry(i, j);
    return m;
}

RVector Lattice::image(const std::vector<long long>& coeffs) const {
    if (coeffs.size() != static_cast<size_t>(n_)) throw InvalidInputError("coefficient count mismatch");
    RVector out(static_cast<size_t>(n_), RealAlgebraic(Rational(0)));
    if (rational_) {
        for (int i = 0; i < n_; ++i) {
            Rational s(0);
            for (int j = 0; j < n_; ++j) s += Rational(static_cast<long>(coeffs[static_cast<size_t>(j)])) * (*rational_)[static_cast<size_t>(i)][static_cast<size_t>(j)];
            out[static_cast<size_t>(i)] = RealAlgebraic(s);
        }
        return out;
    }
    if (origin_) {
        AlgebraElement beta = origin_combination(*this, coeffs);
        for (int i = 0; i < n_; ++i) {
            const auto& [comp, emb] = origin_->algebra->hom_table()[static_cast<size_t>(i)];
            out[static_cast<size_t>(i)] = origin_->scale * beta.part(comp).value(emb);
        }
        return out;
    }
    for (int i = 0; i < n_; ++i) {
        RealAlgebraic s(Rational(0));
        for (int j = 0; j < n_; ++j) {
            long long c = coeffs[static_cast<size_t>(j)];
            if (c == 0) continue;
            s = s + (*matrix_)[static_cast<size_t>(i)][static_cast<size_t>(j)] * RealAlgebraic(Rational(static_cast<long>(c)));
        }
        out[static_cast<size_t>(i)] = s;
    }
    return out;
}

std::vector<std::vector<double>> Lattice::approx_basis() const {
    std::vector<std::vector<double>> m(static_cast<size_t>(n_), std::vector<double>(static_cast<size_t>(n_)));
    const Rational w = Rational(1) / Rational(Integer(1) << 48);
    if (origin_) {
        double s = origin_->scale.approx();
        for (int j = 0; j < n_; ++j)
            for (int i = 0; i < n_; ++i) {
                const auto& [comp, emb] = origin_->algebra->hom_table()[static_cast<size_t>(i)];
                auto [lo, hi] = origin_->l_basis[static_cast<size_t>(j)].part(comp).value_interval(emb, w);
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = s * to_double((lo + hi) / 2);
            }
        return m;
    }
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = (*matrix_)[static_cast<size_t>(i)][static_cast<size_t>(j)].approx();
    return m;
}

Lattice construct_lattice(const AlgebraPtr& algebra, const std::vector<AlgebraElement>& l_basis) {
    if (!algebra) throw InvalidInputError("construct_lattice needs an algebra");
    const int n = algebra->dim();
    if (l_basis.size() != static_cast<size_t>(n)) throw InvalidInputError("module basis size must match the algebra dimension");
    QMatrix coords;
    for (const auto& a : l_basis) {
        if (a.algebra().get() != algebra.get()) throw InvalidInputError("module basis element from a different algebra");
        coords.push_back(a.coords());
    }
    if (rank(coords) != static_cast<size_t>(n)) throw InvalidInputError("module basis is linearly dependent");

    QMatrix gram(static_cast<size_t>(n), QVector(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rational t = total_trace(l_basis[static_cast<size_t>(i)] * l_basis[static_cast<size_t>(j)]);
            gram[static_cast<size_t>(i)][static_cast<size_t>(j)] = t;
            gram[static_cast<size_t>(j)][static_cast<size_t>(i)] = t;
        }
    Rational g = det(gram);
    if (sign(g) <= 0) throw DomainError("trace form gram of an independent basis must be positive definite");

    Lattice lat;
    lat.n_ = n;
    lat.origin_ = LatticeOrigin{algebra, l_basis, RealAlgebraic(g).inverse().nth_root(2 * n), g};
    lat.covolume_ = RealAlgebraic(Rational(1)); // scale cancels |det V| exactly
    lat.detect_rational();
    return lat;
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    const int n = a.n() + b.n();
    RMatrix m(static_cast<size_t>(n), RVector(static_cast<size_t>(n), RealAlgebraic(Rational(0))));
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = a.entry(i, j);
    for (int i = 0; i < b.n(); ++i)
        for (int j = 0; j < b.n(); ++j) m[static_cast<size_t>(a.n() + i)][static_cast<size_t>(a.n() + j)] = b.entry(i, j);
    Lattice lat;
    lat.n_ = n;
    lat.matrix_ = std::move(m);
    lat.covolume_ = a.covolume() * b.covolume();
    lat.detect_rational();
    return lat;
}

Lattice apply_diagonal(const Lattice& lat, const RVector& diag) {
    if (diag.size() != static_cast<size_t>(lat.n())) throw InvalidInputError("diagonal size mismatch");
    RealAlgebraic prod(Rational(1));
    for (const auto& d : diag) {
        if (d.sign() <= 0) throw DomainError("diagonal entries must be positive");
        prod = prod * d;
    }
    if (prod != RealAlgebraic(Rational(1))) throw DomainError("diagonal determinant must be one");
    RMatrix m(static_cast<size_t>(lat.n()), RVector(static_cast<size_t>(lat.n())));
    for (int i = 0; i < lat.n(); ++i)
        for (int j = 0; j < lat.n(); ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = diag[static_cast<size_t>(i)] * lat.entry(i, j);
    Lattice out;
    out.n_ = lat.n();
    out.matrix_ = std::move(m);
    out.covolume_ = lat.covolume();
    out.detect_rational();
    return out;
}

AlgebraElement origin_combination(const Lattice& lat, const std::vector<long long>& coeffs) {
    if (!lat.origin()) throw InvalidInputError("lattice has no symbolic origin");
    const auto& org = *lat.origin();
    if (coeffs.size() != org.l_basis.size()) throw InvalidInputError("coefficient count mismatch");
    AlgebraElement acc = org.algebra->zero();
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        acc = acc + org.l_basis[j] * Rational(static_cast<long>(coeffs[j]));
    }
    return acc;
}

SymmetricBox::SymmetricBox(RVector half_widths) : a_(std::move(half_widths)) {
    if (a_.empty()) throw InvalidInputError("box needs at least one half width");
    for (const auto& a : a_)
        if (a.sign() <= 0) throw InvalidInputError("box half widths must be positive");
}

RealAlgebraic SymmetricBox::volume() const {
    RealAlgebraic v(Rational(1));
    for (const auto& a : a_) v = v * a;
    Rational two_n = pow_rat(Rational(2), static_cast<long>(a_.size()));
    return v * RealAlgebraic(two_n);
}

std::optional<LatticeSplit> is_decomposable(const Lattice& lat, int search_radius) {
    const int n = lat.n();
    if (n > 12) throw UnsupportedError("decomposability search supports dimension at most 12");
    if (search_radius < 1) throw InvalidInputError("search radius must be positive");
    if (n < 2) return std::nullopt;

    double total = std::pow(2.0 * search_radius + 1.0, n);
    if (total > 8e6) throw BudgetError("decomposability search radius too large for this dimension");

    // support masks of all candidate vectors, canonical sign only
    std::map<unsigned, std::vector<std::vector<long long>>> by_mask;
    std::vector<long long> c(static_cast<size_t>(n), -search_radius);
    const unsigned full = (1u << n) - 1u;
    while (true) {
        bool zero = true, canonical = true;
        for (int i = 0; i < n && canonical; ++i) {
            if (c[static_cast<size_t>(i)] != 0) {
                canonical = c[static_cast<size_t>(i)] > 0;
                zero = false;
                break;
            }
        }
        if (!zero && canonical) {
            unsigned mask = 0;
            if (lat.rational_basis()) {
                const QMatrix& q = *lat.rational_basis();
                for (int i = 0; i < n; ++i) {
                    Rational s(0);
                    for (int j = 0; j < n; ++j) s += Rational(static_cast<long>(c[static_cast<size_t>(j)])) * q[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    if (sign(s) != 0) mask |= 1u << i;
                }
            } else if (lat.origin()) {
                AlgebraElement beta = origin_combination(lat, c);
                const auto& table = lat.origin()->algebra->hom_table();
                for (int i = 0; i < n; ++i)
                    if (!beta.part(table[static_cast<size_t>(i)].first).is_zero()) mask |= 1u << i;
            } else {
                RVector img = lat.image(c);
                for (int i = 0; i < n; ++i)
                    if (img[static_cast<size_t>(i)].sign() != 0) mask |= 1u << i;
            }
            if (mask != full) by_mask[mask].push_back(c);
        }
        int k = n - 1;
        while (k >= 0 && c[static_cast<size_t>(k)] == search_radius) {
            c[static_cast<size_t>(k)] = -search_radius;
            --k;
        }
        if (k < 0) break;
        ++c[static_cast<size_t>(k)];
    }
    if (by_mask.empty()) return std::nullopt;

    auto collect = [&](unsigned s) {
        std::vector<std::vector<long long>> vecs;
        for (const auto& [mask, list] : by_mask)
            if ((mask & ~s) == 0)
                for (const auto& v : list) vecs.push_back(v);
        return vecs;
    };
    auto qrank = [&](const std::vector<std::vector<long long>>& vecs) {
        QMatrix m;
        for (const auto& v : vecs) {
            QVector row;
            for (long long x : v) row.emplace_back(static_cast<long>(x));
            m.push_back(std::move(row));
        }
        return m.empty() ? size_t{0} : rank(m);
    };

    // subsets containing row 0, smallest first; complements cover the rest
    std::vector<unsigned> subsets;
    for (unsigned s = 1; s < full; ++s)
        if (s & 1u) subsets.push_back(s);
    std::sort(subsets.begin(), subsets.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    for (unsigned s : subsets) {
        auto part = collect(s), rest = collect(full & ~s);
        if (part.empty() || rest.empty()) continue;
        size_t rs = qrank(part), rc = qrank(rest);
        if (rs + rc != static_cast<size_t>(n)) continue;
        // the union must generate the whole coefficient lattice
        std::vector<std::vector<Integer>> all;
        for (const auto& v : part) all.push_back(to_int_row(v));
        for (const auto& v : rest) all.push_back(to_int_row(v));
        auto h = hnf_rows(std::move(all), static_cast<size_t>(n));
        if (h.size() != static_cast<size_t>(n)) continue;
        bool unimodular = true;
        for (size_t i = 0; i < h.size() && unimodular; ++i) unimodular = h[i][i] == 1;
        if (!unimodular) continue;

        LatticeSplit split;
        for (int i = 0; i < n; ++i)
            if (s & (1u << i)) split.rows.push_back(i);
        std::vector<std::vector<Integer>> pi, ri;
        for (const auto& v : part) pi.push_back(to_int_row(v));
        for (const auto& v : rest) ri.push_back(to_int_row(v));
        split.part_coeffs = to_ll(hnf_rows(std::move(pi), static_cast<size_t>(n)));
        split.complement_coeffs = to_ll(hnf_rows(std::move(ri), static_cast<size_t>(n)));
        return split;
    }
    return std::nullopt;
}

} // namespace mordell
