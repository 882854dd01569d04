#pragma once

#include <utility>
#include <vector>

#include "mordell/polynomial.hpp"

namespace mordell {

// Factorization of p over Q into monic irreducible factors with
// multiplicities; the leading coefficient is dropped (it is recoverable from
// p). Throws InvalidInputError on the zero polynomial.
std::vector<std::pair<QPolynomial, int>> factor_over_q(const QPolynomial& p);

bool is_irreducible(const QPolynomial& p);

} // namespace mordell
