#include "mordell/linalg.hpp"

#include "mordell/errors.hpp"

namespace mordell {

QMatrix identity_matrix(size_t n) {
    QMatrix m(n, QVector(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
    if (a.empty() || b.empty()) return {};
    size_t n = a.size(), k = b.size(), p = b[0].size();
    if (a[0].size() != k) throw DomainError("mat_mul: shape mismatch");
    QMatrix c(n, QVector(p, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < p; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

QVector mat_vec(const QMatrix& a, const QVector& v) {
    QVector r(a.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != v.size()) throw DomainError("mat_vec: shape mismatch");
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    }
    return r;
}

QMatrix transpose(const QMatrix& a) {
    if (a.empty()) return {};
    QMatrix t(a[0].size(), QVector(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

std::vector<size_t> rref(QMatrix& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // pick the entry with largest numerator-denominator size last; any
        // nonzero pivot is exact, so just take the first
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rational inv = Rational(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(QMatrix m) { return rref(m).size(); }

Rational det(QMatrix m) {
    size_t n = m.size();
    if (n == 0) return Rational(1);
    if (m[0].size() != n) throw DomainError("det: not square");
    Rational d(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != c) {
            std::swap(m[c], m[piv]);
            d = -d;
        }
        d *= m[c][c];
        Rational inv = Rational(1) / m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
    if (m.empty()) return {};
    QMatrix w = m;
    std::vector<size_t> pivots = rref(w);
    size_t cols = m[0].size();
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<QVector> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVector v(cols, Rational(0));
        v[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
    if (m.size() != b.size()) throw DomainError("solve: shape mismatch");
    if (m.empty()) return QVector{};
    size_t cols = m[0].size();
    QMatrix aug = m;
    for (size_t i = 0; i < m.size(); ++i) aug[i].push_back(b[i]);
    std::vector<size_t> pivots = rref(aug);
    // inconsistent iff a pivot lands in the appended column
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    QVector x(cols, Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
    size_t n = m.size();
    if (n == 0) return QMatrix{};
    if (m[0].size() != n) throw DomainError("inverse: not square");
    QMatrix aug = m;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Rational(1) : Rational(0));
    }
    std::vector<size_t> pivots = rref(aug);
    // singular iff some pivot escapes into the appended identity block
    if (pivots.size() != n || pivots.back() >= n) return std::nullopt;
    QMatrix inv(n, QVector(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

} // namespace mordell
