#include "ocp/simplex.hpp"

#include <cassert>
#include <cstddef>

#include "ocp/errors.hpp"

namespace ocp {

namespace {

// sign of a/p - c/q for positive p, q
int cmp_ratio(const Rational& a, const Rational& p, const Rational& c, const Rational& q) {
    return cmp(a * q, c * p);
}

}  // namespace

bool rational_feasible(const std::vector<RationalVector>& rows, const RationalVector& rhs) {
    const std::size_t m = rows.size();
    if (m == 0) return true;
    const std::size_t n = rows[0].size();
    if (rhs.size() != m) throw Error("feasibility system has mismatched dimensions");

    // Tableau [A | I | b] with one artificial per row; rows flipped so b >= 0.
    const std::size_t cols = n + m;
    std::vector<RationalVector> t(m, RationalVector(cols, Rational(0)));
    RationalVector b(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != n) throw Error("feasibility system has ragged rows");
        const bool flip = rhs[i] < 0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-rows[i][j]) : rows[i][j];
        t[i][n + i] = flip ? -1 : 1;
        b[i] = flip ? Rational(-rhs[i]) : rhs[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Minimize the artificial total with Bland's least-index rule; the
    // objective is bounded below by zero, so this always terminates at
    // an optimum and never detects unboundedness.
    while (true) {
        Rational objective = 0;
        RationalVector price(cols, Rational(0));
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] < n) continue;
            objective += b[i];
            for (std::size_t j = 0; j < cols; ++j) price[j] += t[i][j];
        }
        if (objective == 0) return true;

        std::size_t entering = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            const int artificial_cost = j >= n ? 1 : 0;
            if (price[j] > artificial_cost) {
                entering = j;
                break;
            }
        }
        if (entering == cols) return false;  // optimal with leftover artificial value

        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][entering] <= 0) continue;
            if (leave == m) {
                leave = i;
                continue;
            }
            const int cmp = cmp_ratio(b[i], t[i][entering], b[leave], t[leave][entering]);
            if (cmp < 0 || (cmp == 0 && basis[i] < basis[leave])) leave = i;
        }
        assert(leave < m);  // bounded objective guarantees a pivot row

        const Rational pivot = t[leave][entering];
        for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= pivot;
        b[leave] /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][entering] == 0) continue;
            const Rational factor = t[i][entering];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= factor * t[leave][j];
            b[i] -= factor * b[leave];
        }
        basis[leave] = entering;
    }
}

}  // namespace ocp
