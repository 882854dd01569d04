#include "mordell/wedderburn.hpp"

#include "mordell/errors.hpp"
#include "mordell/factor.hpp"

namespace mordell {

namespace {

QVector flatten(const QMatrix& m) {
    QVector v;
    for (const auto& row : m)
        for (const auto& x : row) v.push_back(x);
    return v;
}

Rational trace_of(const QMatrix& m) {
    Rational t(0);
    for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

} // namespace

WedderburnDecomposition wedderburn(const std::vector<QMatrix>& matrices) {
    if (matrices.empty()) throw InvalidInputError("wedderburn needs at least one matrix");
    const size_t n = matrices.size() ? matrices[0].size() : 0;
    if (n == 0) throw InvalidInputError("wedderburn needs nonempty matrices");
    for (const auto& m : matrices) {
        if (m.size() != n) throw InvalidInputError("wedderburn matrices must share one square size");
        for (const auto& row : m)
            if (row.size() != n) throw InvalidInputError("wedderburn matrices must be square");
    }

    WedderburnDecomposition out;
    out.ambient_n = static_cast<int>(n);

    // keep a maximal independent subset, in input order
    QMatrix span_rows;
    for (const auto& m : matrices) {
        QMatrix probe = span_rows;
        probe.push_back(flatten(m));
        if (rank(probe) > span_rows.size()) {
            span_rows = std::move(probe);
            out.basis.push_back(m);
        }
    }
    const size_t dim = out.basis.size();

    // columns of sys are the flattened basis vectors; expressing a product in the
    // span is one linear solve against them
    QMatrix sys(n * n, QVector(dim, Rational(0)));
    for (size_t k = 0; k < dim; ++k) {
        QVector f = flatten(out.basis[k]);
        for (size_t r = 0; r < f.size(); ++r) sys[r][k] = f[r];
    }
    auto express = [&](const QMatrix& m) { return solve(sys, flatten(m)); };

    // structure constants; closure and commutativity checked on the way
    std::vector<std::vector<QVector>> sc(dim, std::vector<QVector>(dim));
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = i; j < dim; ++j) {
            QMatrix p = mat_mul(out.basis[i], out.basis[j]);
            if (p != mat_mul(out.basis[j], out.basis[i])) throw NotAnAlgebraError("span is not commutative");
            auto c = express(p);
            if (!c) throw NotAnAlgebraError("span is not closed under multiplication");
            sc[i][j] = *c;
            sc[j][i] = *c;
        }
    }
    auto mul_coords = [&](const QVector& x, const QVector& y) {
        QVector z(dim, Rational(0));
        for (size_t i = 0; i < dim; ++i) {
            if (x[i] == 0) continue;
            for (size_t j = 0; j < dim; ++j) {
                if (y[j] == 0) continue;
                const QVector& s = sc[i][j];
                for (size_t k = 0; k < dim; ++k) z[k] += x[i] * y[j] * s[k];
            }
        }
        return z;
    };
    auto to_matrix = [&](const QVector& c) {
        QMatrix m(n, QVector(n, Rational(0)));
        for (size_t k = 0; k < dim; ++k) {
            if (c[k] == 0) continue;
            for (size_t r = 0; r < n; ++r)
                for (size_t cc = 0; cc < n; ++cc) m[r][cc] += c[k] * out.basis[k][r][cc];
        }
        return m;
    };

    // trace form degeneracy detects nilpotents: az stays nilpotent for commuting a, z,
    // so a nonzero nilpotent is a radical vector of the form
    QMatrix gram(dim, QVector(dim));
    std::vector<Rational> basis_tr(dim);
    for (size_t k = 0; k < dim; ++k) basis_tr[k] = trace_of(out.basis[k]);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            Rational t(0);
            for (size_t k = 0; k < dim; ++k) t += sc[i][j][k] * basis_tr[k];
            gram[i][j] = t;
        }
    if (det(gram) == 0) throw NotSemisimpleError("trace form is degenerate, span contains nilpotents");

    // unit inside the span: e * b_i = b_i for every i
    QMatrix usys(dim * dim, QVector(dim, Rational(0)));
    QVector urhs(dim * dim, Rational(0));
    for (size_t i = 0; i < dim; ++i) {
        for (size_t r = 0; r < dim; ++r) {
            for (size_t k = 0; k < dim; ++k) usys[i * dim + r][k] = sc[k][i][r];
            urhs[i * dim + r] = (r == i) ? Rational(1) : Rational(0);
        }
    }
    auto ucoords = solve(usys, urhs);
    if (!ucoords) throw NotSemisimpleError("span has no unit element");
    out.unit = to_matrix(*ucoords);

    // deterministic sweep for a generator: weights t^k until the minimal polynomial
    // of g acting on the algebra reaches full degree
    QVector gc;
    QPolynomial mu;
    for (long t = 1; t <= 512 && mu.is_zero(); ++t) {
        QVector cand(dim);
        Rational w(1);
        for (size_t k = 0; k < dim; ++k) {
            cand[k] = w;
            w *= Rational(t);
        }
        // powers of the candidate, starting at the unit
        std::vector<QVector> pw{*ucoords};
        QMatrix stacked;
        stacked.push_back(*ucoords);
        for (size_t d = 1; d <= dim; ++d) {
            pw.push_back(mul_coords(cand, pw.back()));
            auto dep = solve(transpose(stacked), pw.back());
            if (dep) {
                if (d < dim) break; // not a generator, next weight
                std::vector<Rational> coeffs(d + 1, Rational(0));
                for (size_t k = 0; k < d; ++k) coeffs[k] = -(*dep)[k];
                coeffs[d] = Rational(1);
                mu = QPolynomial(coeffs);
                gc = cand;
                break;
            }
            stacked.push_back(pw.back());
        }
    }
    if (mu.is_zero()) throw DomainError("generator sweep exhausted");
    out.generator = to_matrix(gc);
    out.generator_minpoly = mu;
    if (gcd(mu, mu.derivative()).degree() != 0) throw NotSemisimpleError("generator minimal polynomial is not squarefree");

    // split along the factors; idempotents by chinese remaindering
    QVector unit_sum(dim, Rational(0));
    for (const auto& [f, mult] : factor_over_q(mu)) {
        if (mult != 1) throw NotSemisimpleError("generator minimal polynomial has a repeated factor");
        if (isolate_real_roots(f).size() != static_cast<size_t>(f.degree()))
            throw UnsupportedError("component field is not totally real: " + f.str());
        out.components.push_back(f.degree() == 1 ? NumberFieldR::rationals() : NumberFieldR::create(f));
        QPolynomial h = mu.exact_div(f);
        QPolynomial w = (inverse_mod(h, f) * h).divrem(mu).second;
        // evaluate w at the generator inside the algebra, horner in coordinates
        QVector acc(dim, Rational(0));
        for (int k = w.degree(); k >= 0; --k) {
            acc = mul_coords(acc, gc);
            for (size_t r = 0; r < dim; ++r) acc[r] += w[k] * (*ucoords)[r];
        }
        out.idempotents.push_back(to_matrix(acc));
        for (size_t r = 0; r < dim; ++r) unit_sum[r] += acc[r];
    }
    if (unit_sum != *ucoords) throw DomainError("idempotents do not sum to the unit");
    return out;
}

bool is_field(const WedderburnDecomposition& d) {
    return d.components.size() == 1;
}

} // namespace mordell
