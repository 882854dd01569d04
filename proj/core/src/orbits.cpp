#include "mordell/orbits.hpp"

#include <map>
#include <utility>

#include "mordell/errors.hpp"
#include "mordell/tower.hpp"

namespace mordell {

namespace {

// rational constraint rows on algebra coordinates from sigma_i(a) = sigma_j(a),
// expanded over a common field of the hom value differences
QMatrix pair_rows_symbolic(const EtaleAlgebra& a, int i, int j) {
    const int dim = a.dim();
    std::vector<RealAlgebraic> vals;
    std::vector<size_t> cols;
    for (int k = 0; k < dim; ++k) {
        AlgebraElement b = a.basis_element(k);
        RealAlgebraic d = hom_value(b, i) - hom_value(b, j);
        if (d.sign() != 0) {
            vals.push_back(std::move(d));
            cols.push_back(static_cast<size_t>(k));
        }
    }
    QMatrix rows;
    if (vals.empty()) return rows;
    std::vector<FieldElement> reps;
    EmbeddedField ef = common_field(vals, &reps);
    for (int m = 0; m < ef.degree(); ++m) {
        QVector row(static_cast<size_t>(dim), Rational(0));
        bool nonzero = false;
        for (size_t t = 0; t < cols.size(); ++t) {
            const auto& c = reps[t].coords();
            if (m < static_cast<int>(c.size()) && sign(c[static_cast<size_t>(m)]) != 0) {
                row[cols[t]] = c[static_cast<size_t>(m)];
                nonzero = true;
            }
        }
        if (nonzero) rows.push_back(std::move(row));
    }
    return rows;
}

struct SymbolicCtx {
    const Lattice& lat;
    QMatrix lbasis_inv; // inverse of the column matrix of module basis coordinates
    std::map<std::pair<int, int>, QMatrix> pair_cache;

    explicit SymbolicCtx(const Lattice& l) : lat(l) {
        const auto& org = *lat.origin();
        const size_t n = org.l_basis.size();
        QMatrix b(n, QVector(n));
        for (size_t j = 0; j < n; ++j) {
            QVector c = org.l_basis[j].coords();
            for (size_t i = 0; i < n; ++i) b[i][j] = c[i];
        }
        auto inv = inverse(b);
        if (!inv) throw DomainError("module basis coordinates are singular");
        lbasis_inv = std::move(*inv);
    }

    const QMatrix& pair_rows(int i, int j) {
        if (i > j) std::swap(i, j);
        auto it = pair_cache.find({i, j});
        if (it != pair_cache.end()) return it->second;
        return pair_cache.emplace(std::make_pair(i, j), pair_rows_symbolic(*lat.origin()->algebra, i, j)).first->second;
    }

    std::vector<QVector> kernel_for(const Partition& p) {
        const int dim = lat.origin()->algebra->dim();
        QMatrix sys;
        for (const auto& blk : p.blocks())
            for (size_t t = 1; t < blk.size(); ++t)
                for (const auto& row : pair_rows(blk[t - 1], blk[t])) sys.push_back(row);
        if (sys.empty()) {
            std::vector<QVector> full;
            for (int k = 0; k < dim; ++k) {
                QVector e(static_cast<size_t>(dim), Rational(0));
                e[static_cast<size_t>(k)] = 1;
                full.push_back(std::move(e));
            }
            return full;
        }
        return kernel_basis(sys);
    }
};

Partition induced_from_diags(int n, const std::vector<RVector>& diags) {
    std::vector<int> labels(static_cast<size_t>(n), -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        if (labels[static_cast<size_t>(i)] >= 0) continue;
        labels[static_cast<size_t>(i)] = next;
        for (int j = i + 1; j < n; ++j) {
            if (labels[static_cast<size_t>(j)] >= 0) continue;
            bool eq = true;
            for (const auto& d : diags)
                if (d[static_cast<size_t>(i)] != d[static_cast<size_t>(j)]) {
                    eq = false;
                    break;
                }
            if (eq) labels[static_cast<size_t>(j)] = next;
        }
        ++next;
    }
    return Partition::from_labels(labels);
}

AssociatedAlgebra finish(Partition p, std::vector<QMatrix> qb, std::vector<RVector> diags,
                         std::vector<AlgebraElement> elems) {
    WedderburnDecomposition dec = wedderburn(qb);
    bool isf = is_field(dec);
    Partition ind = induced_from_diags(p.n(), diags);
    return AssociatedAlgebra{std::move(p),  static_cast<int>(qb.size()), std::move(qb), std::move(diags),
                             std::move(elems), std::move(dec), isf, std::move(ind)};
}

AssociatedAlgebra finish_symbolic(SymbolicCtx& ctx, const Partition& p, std::vector<QVector> kernel) {
    const int n = ctx.lat.n();
    const auto& org = *ctx.lat.origin();
    std::vector<AlgebraElement> elems;
    std::vector<QMatrix> qb;
    std::vector<RVector> diags;
    for (auto& x : kernel) {
        AlgebraElement e = org.algebra->from_coords(x);
        RVector d;
        for (int i = 0; i < n; ++i) d.push_back(hom_value(e, i));
        QMatrix q(static_cast<size_t>(n), QVector(static_cast<size_t>(n), Rational(0)));
        for (int j = 0; j < n; ++j) {
            QVector col = mat_vec(ctx.lbasis_inv, (e * org.l_basis[static_cast<size_t>(j)]).coords());
            for (int r = 0; r < n; ++r) q[static_cast<size_t>(r)][static_cast<size_t>(j)] = col[static_cast<size_t>(r)];
        }
        elems.push_back(std::move(e));
        qb.push_back(std::move(q));
        diags.push_back(std::move(d));
    }
    return finish(p, std::move(qb), std::move(diags), std::move(elems));
}

// no origin: express the entries in one field and solve m q = t m with q
// rational and t diagonal, constant on blocks, valued in that field
AssociatedAlgebra associated_ambient(const Lattice& lat, const Partition& p) {
    const int n = lat.n();
    RMatrix m = lat.basis_matrix();
    // the conditions only see the rational span, so normalizing by one entry
    // is free; it cancels a covolume scale that need not be totally real
    RealAlgebraic unit(Rational(1));
    bool have = false;
    for (size_t i = 0; i < m.size() && !have; ++i)
        for (size_t j = 0; j < m[i].size() && !have; ++j)
            if (m[i][j].sign() != 0) {
                unit = m[i][j].inverse();
                have = true;
            }
    std::vector<RealAlgebraic> vals;
    for (const auto& row : m)
        for (const auto& e : row) vals.push_back(e * unit);
    std::vector<FieldElement> reps;
    EmbeddedField ef = common_field(vals, &reps);
    const int deg = ef.degree();
    const FieldPtr& k = ef.field();
    auto rep = [&](int i, int j) -> const FieldElement& { return reps[static_cast<size_t>(i * n + j)]; };

    std::vector<FieldElement> genpow;
    genpow.push_back(k->element(Rational(1)));
    if (deg > 1) {
        std::vector<Rational> g(static_cast<size_t>(deg), Rational(0));
        g[1] = 1;
        FieldElement gen = k->element(g);
        for (int d = 1; d < deg; ++d) genpow.push_back(genpow.back() * gen);
    }

    const int nb = p.num_blocks();
    const int unknowns = n * n + nb * deg;
    auto q_index = [&](int r, int c) { return static_cast<size_t>(r * n + c); };
    auto t_index = [&](int b, int d) { return static_cast<size_t>(n * n + b * deg + d); };

    QMatrix sys;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<FieldElement> tcoef;
            for (int d = 0; d < deg; ++d) tcoef.push_back(genpow[static_cast<size_t>(d)] * rep(i, j));
            for (int mc = 0; mc < deg; ++mc) {
                QVector row(static_cast<size_t>(unknowns), Rational(0));
                bool nonzero = false;
                for (int kk = 0; kk < n; ++kk) {
                    const Rational& c = rep(i, kk).coords()[static_cast<size_t>(mc)];
                    if (sign(c) != 0) {
                        row[q_index(kk, j)] = c;
                        nonzero = true;
                    }
                }
                const int b = p.block_of(i);
                for (int d = 0; d < deg; ++d) {
                    const Rational& c = tcoef[static_cast<size_t>(d)].coords()[static_cast<size_t>(mc)];
                    if (sign(c) != 0) {
                        row[t_index(b, d)] = -c;
                        nonzero = true;
                    }
                }
                if (nonzero) sys.push_back(std::move(row));
            }
        }

    std::vector<QVector> kernel = kernel_basis(sys);
    std::vector<QMatrix> qb;
    std::vector<RVector> diags;
    for (const auto& x : kernel) {
        QMatrix q(static_cast<size_t>(n), QVector(static_cast<size_t>(n)));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) q[static_cast<size_t>(r)][static_cast<size_t>(c)] = x[q_index(r, c)];
        RVector d;
        for (int i = 0; i < n; ++i) {
            const int b = p.block_of(i);
            std::vector<Rational> tc(static_cast<size_t>(deg));
            for (int dd = 0; dd < deg; ++dd) tc[static_cast<size_t>(dd)] = x[t_index(b, dd)];
            d.push_back(ef.value(k->element(std::move(tc))));
        }
        qb.push_back(std::move(q));
        diags.push_back(std::move(d));
    }
    return finish(p, std::move(qb), std::move(diags), {});
}

size_t rank_real(RMatrix m) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    size_t rk = 0;
    for (size_t c = 0; c < cols && rk < rows; ++c) {
        size_t piv = rk;
        while (piv < rows && m[piv][c].sign() == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rk]);
        RealAlgebraic inv = m[rk][c].inverse();
        for (size_t r = rk + 1; r < rows; ++r) {
            if (m[r][c].sign() == 0) continue;
            RealAlgebraic f = m[r][c] * inv;
            for (size_t kk = c; kk < cols; ++kk) m[r][kk] = m[r][kk] - f * m[rk][kk];
        }
        ++rk;
    }
    return rk;
}

size_t rank_field(std::vector<std::vector<FieldElement>> m) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    size_t rk = 0;
    for (size_t c = 0; c < cols && rk < rows; ++c) {
        size_t piv = rk;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rk]);
        FieldElement inv = m[rk][c].inverse();
        for (size_t r = rk + 1; r < rows; ++r) {
            if (m[r][c].is_zero()) continue;
            FieldElement f = m[r][c] * inv;
            for (size_t kk = c; kk < cols; ++kk) m[r][kk] = m[r][kk] - f * m[rk][kk];
        }
        ++rk;
    }
    return rk;
}

// rank of the block rows of the hom value matrix of the given elements;
// when the block sits inside one embedding of one abstract field the rank
// is computed there, otherwise on real algebraic entries
size_t block_rank(const Lattice& lat, const std::vector<int>& block, const std::vector<AlgebraElement>& elems) {
    const auto& alg = *lat.origin()->algebra;
    const auto& table = alg.hom_table();
    bool one_embedding = true;
    const int e0 = table[static_cast<size_t>(block[0])].second;
    const auto* f0 = alg.component(table[static_cast<size_t>(block[0])].first).get();
    for (int i : block) {
        const auto& [c, e] = table[static_cast<size_t>(i)];
        if (e != e0 || alg.component(c).get() != f0) one_embedding = false;
    }
    if (one_embedding) {
        std::vector<std::vector<FieldElement>> m;
        for (int i : block) {
            std::vector<FieldElement> row;
            for (const auto& el : elems) row.push_back(el.part(table[static_cast<size_t>(i)].first));
            m.push_back(std::move(row));
        }
        return rank_field(std::move(m));
    }
    RMatrix m;
    for (int i : block) {
        RVector row;
        for (const auto& el : elems) row.push_back(hom_value(el, i));
        m.push_back(std::move(row));
    }
    return rank_real(std::move(m));
}

QVector flatten(const QMatrix& m) {
    QVector v;
    for (const auto& row : m)
        for (const auto& x : row) v.push_back(x);
    return v;
}

} // namespace

std::string orbit_class_name(OrbitClass c) {
    switch (c) {
        case OrbitClass::not_closed: return "NOT_CLOSED";
        case OrbitClass::closed_infinite_volume: return "CLOSED_INFINITE_VOLUME";
        case OrbitClass::finite_volume: return "FINITE_VOLUME";
    }
    throw InvalidInputError("unknown orbit class");
}

AssociatedAlgebra associated_algebra(const Lattice& lat, const Partition& p) {
    if (p.n() != lat.n()) throw InvalidInputError("partition size must match the lattice dimension");
    if (lat.origin()) {
        SymbolicCtx ctx(lat);
        return finish_symbolic(ctx, p, ctx.kernel_for(p));
    }
    return associated_ambient(lat, p);
}

OrbitReport classify_orbit(const Lattice& lat, const Partition& p) {
    AssociatedAlgebra alg = associated_algebra(lat, p);
    OrbitClass cls = alg.dim_q < p.num_blocks()
                         ? OrbitClass::not_closed
                         : (alg.is_field ? OrbitClass::finite_volume : OrbitClass::closed_infinite_volume);
    return {cls, std::move(alg)};
}

std::vector<OrbitReport> all_closed_orbits(const Lattice& lat) {
    if (!lat.origin()) throw UnsupportedError("orbit survey needs a lattice with a symbolic origin");
    const int n = lat.n();
    if (n > 10) throw UnsupportedError("orbit survey supports dimension at most 10");
    SymbolicCtx ctx(lat);
    std::vector<OrbitReport> out;
    for (const Partition& p : all_partitions(n)) {
        auto kernel = ctx.kernel_for(p);
        if (static_cast<int>(kernel.size()) != p.num_blocks()) continue;
        AssociatedAlgebra alg = finish_symbolic(ctx, p, std::move(kernel));
        OrbitClass cls = alg.is_field ? OrbitClass::finite_volume : OrbitClass::closed_infinite_volume;
        out.push_back({cls, std::move(alg)});
    }
    return out;
}

Partition tilde_partition(const AssociatedAlgebra& a) {
    if (a.dim_q != a.partition.num_blocks())
        throw DomainError("coarsened partition is defined for closed orbits only");
    const int n = a.partition.n();
    // express each idempotent in the basis, then read its diagonal
    QMatrix sys;
    for (const auto& q : a.q_basis) sys.push_back(flatten(q));
    sys = transpose(sys);
    std::vector<int> labels(static_cast<size_t>(n), -1);
    for (size_t c = 0; c < a.decomposition.idempotents.size(); ++c) {
        auto x = solve(sys, flatten(a.decomposition.idempotents[c]));
        if (!x) throw DomainError("idempotent does not lie in the algebra span");
        for (int i = 0; i < n; ++i) {
            RealAlgebraic d(Rational(0));
            for (size_t kk = 0; kk < x->size(); ++kk)
                d = d + RealAlgebraic((*x)[kk]) * a.diagonals[kk][static_cast<size_t>(i)];
            if (d == RealAlgebraic(Rational(1))) {
                if (labels[static_cast<size_t>(i)] >= 0) throw DomainError("idempotent diagonals overlap");
                labels[static_cast<size_t>(i)] = static_cast<int>(c);
            } else if (d != RealAlgebraic(Rational(0))) {
                throw DomainError("idempotent diagonal is not an indicator");
            }
        }
    }
    for (int l : labels)
        if (l < 0) throw DomainError("idempotent diagonals do not cover all coordinates");
    return Partition::from_labels(labels);
}

bool kernel_lemma_check(const Lattice& lat, const Partition& p, int block1, int block2,
                        const std::vector<std::vector<long long>>& vectors) {
    if (!lat.origin()) throw UnsupportedError("kernel rank comparison needs a lattice with a symbolic origin");
    if (block1 < 0 || block1 >= p.num_blocks() || block2 < 0 || block2 >= p.num_blocks())
        throw InvalidInputError("block index out of range");
    OrbitReport rep = classify_orbit(lat, p);
    if (rep.cls == OrbitClass::not_closed)
        throw DomainError("kernel rank comparison needs a closed orbit");
    Partition tp = tilde_partition(rep.algebra);
    if (!tp.same_block(p.block(block1)[0], p.block(block2)[0]))
        throw DomainError("blocks lie in different coarsened blocks");
    std::vector<AlgebraElement> elems;
    for (const auto& v : vectors) elems.push_back(origin_combination(lat, v));
    if (elems.empty()) return true;
    return block_rank(lat, p.block(block1), elems) == block_rank(lat, p.block(block2), elems);
}

bool subalgebra_roundtrip_check(const Lattice& lat, const std::vector<AlgebraElement>& span_b) {
    if (!lat.origin()) throw UnsupportedError("subalgebra roundtrip needs a lattice with a symbolic origin");
    if (span_b.empty()) throw InvalidInputError("subalgebra span must be nonempty");
    const auto& alg = lat.origin()->algebra;
    for (const auto& el : span_b)
        if (el.algebra().get() != alg.get()) throw InvalidInputError("span element from a different algebra");
    const int n = lat.n();
    std::vector<RVector> hv;
    for (const auto& el : span_b) hv.push_back(hom_values(el));
    Partition pb = induced_from_diags(n, hv);
    AssociatedAlgebra a2 = associated_algebra(lat, pb);
    QMatrix mb, ma;
    for (const auto& el : span_b) mb.push_back(el.coords());
    for (const auto& el : a2.elements) ma.push_back(el.coords());
    rref(mb);
    rref(ma);
    auto strip = [](QMatrix& m) {
        while (!m.empty()) {
            bool zero = true;
            for (const auto& x : m.back())
                if (sign(x) != 0) zero = false;
            if (!zero) break;
            m.pop_back();
        }
    };
    strip(mb);
    strip(ma);
    return mb == ma;
}

} // namespace mordell
