#include "mordell/lp.hpp"

#include "mordell/errors.hpp"

namespace mordell {

// Feasibility of  sum_k l_k p_k = 0,  sum_k l_k = 1,  l >= 0  via phase one:
// minimize the total of one artificial variable per row. The tableau keeps
// reduced costs in an extra row; at optimum the objective value is zero
// exactly when the hull contains the origin, and otherwise the dual
// multipliers read off the artificial columns give a strict separator.
HullCertificate zero_in_convex_hull(const std::vector<std::vector<RealAlgebraic>>& points) {
    const size_t m = points.size();
    if (m == 0) return {};
    const size_t d = points[0].size();
    for (const auto& p : points)
        if (p.size() != d) throw InvalidInputError("hull points must share one dimension");

    const size_t rows = d + 1;     // d zero-sum rows plus the weight-sum row
    const size_t cols = m + rows;  // one column per point, then the artificials
    std::vector<std::vector<RealAlgebraic>> t(rows + 1, std::vector<RealAlgebraic>(cols + 1));
    for (size_t r = 0; r < d; ++r)
        for (size_t k = 0; k < m; ++k) t[r][k] = points[k][r];
    for (size_t k = 0; k < m; ++k) t[d][k] = RealAlgebraic(1);
    for (size_t r = 0; r < rows; ++r) t[r][m + r] = RealAlgebraic(1);
    t[d][cols] = RealAlgebraic(1); // rhs: only the weight-sum row is nonzero

    // reduced costs for the all-artificial basis; artificial columns start at
    // zero, the stored rhs entry is minus the objective value
    const size_t obj = rows;
    for (size_t j = 0; j < m; ++j) {
        RealAlgebraic s(0);
        for (size_t r = 0; r < rows; ++r) s = s + t[r][j];
        t[obj][j] = -s;
    }
    t[obj][cols] = RealAlgebraic(-1);

    std::vector<size_t> basis(rows);
    for (size_t r = 0; r < rows; ++r) basis[r] = m + r;

    long pivots = 0;
    for (;;) {
        if (++pivots > 200000) throw BudgetError("hull feasibility pivot budget exceeded");
        size_t enter = cols;
        for (size_t j = 0; j < cols; ++j)
            if (t[obj][j].sign() < 0) { enter = j; break; }
        if (enter == cols) break;

        // ratio test; ties go to the smallest basis index (Bland)
        size_t leave = rows;
        for (size_t r = 0; r < rows; ++r) {
            if (t[r][enter].sign() <= 0) continue;
            if (leave == rows) { leave = r; continue; }
            int c = (t[r][cols] * t[leave][enter]).compare(t[leave][cols] * t[r][enter]);
            if (c < 0 || (c == 0 && basis[r] < basis[leave])) leave = r;
        }
        if (leave == rows) throw DomainError("phase one turned unbounded");

        RealAlgebraic piv = t[leave][enter];
        for (size_t j = 0; j <= cols; ++j) t[leave][j] = t[leave][j] / piv;
        for (size_t r = 0; r <= rows; ++r) {
            if (r == leave) continue;
            RealAlgebraic f = t[r][enter];
            if (f.sign() == 0) continue;
            for (size_t j = 0; j <= cols; ++j) t[r][j] = t[r][j] - f * t[leave][j];
        }
        basis[leave] = enter;
    }

    HullCertificate out;
    if (t[obj][cols].sign() == 0) {
        out.contains = true;
        out.coefficients.assign(m, RealAlgebraic(0));
        for (size_t r = 0; r < rows; ++r)
            if (basis[r] < m) out.coefficients[basis[r]] = t[r][cols];
    } else {
        // y_r = 1 - reduced cost of artificial r; optimality gives
        // y . (p_k, 1) <= 0 for every k while the last entry of y stays
        // positive, so -y restricted to the first d rows separates strictly
        out.functional.assign(d, RealAlgebraic(0));
        for (size_t r = 0; r < d; ++r) out.functional[r] = t[obj][m + r] - RealAlgebraic(1);
    }
    return out;
}

} // namespace mordell
