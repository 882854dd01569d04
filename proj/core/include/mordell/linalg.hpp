#pragma once

#include <optional>
#include <vector>

#include "mordell/rational.hpp"

namespace mordell {

// Dense rational matrices, stored row-major. Sizes here are tiny (dims up to
// a few dozen), so plain fraction arithmetic with pivoting is fine.
using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;

QMatrix identity_matrix(size_t n);
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
QVector mat_vec(const QMatrix& a, const QVector& v);
QMatrix transpose(const QMatrix& a);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<size_t> rref(QMatrix& m);

size_t rank(QMatrix m);

Rational det(QMatrix m);

// Basis of the right kernel {x : m x = 0}.
std::vector<QVector> kernel_basis(const QMatrix& m);

// Solve m x = b; empty optional when inconsistent. For underdetermined
// systems returns one solution (free variables set to zero).
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

// Inverse of a square matrix; empty optional when singular.
std::optional<QMatrix> inverse(const QMatrix& m);

} // namespace mordell
