#include "okv/lp.hpp"

namespace okv {

namespace {

// Phase-1 simplex on the tableau of A x = b, x >= 0 with one artificial
// variable per row.  Bland's rule, so termination is unconditional.
bool phase1(QMat& a, QVec& b) {
    size_t m = a.size();
    if (m == 0) return true;
    size_t n = a[0].size();
    for (size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
            b[i] = -b[i];
            for (Rat& x : a[i]) x = -x;
        }
    }
    // Tableau columns: n structural + m artificial.  basis[i] = column basic
    // in row i; starts as the artificial i.
    size_t total = n + m;
    QMat t(m, QVec(total, Rat(0)));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
    }
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = n + i;
    // Reduced costs for min sum(artificials): z_j - c_j = sum over rows of
    // artificial-basic coefficients.
    QVec cost(total, Rat(0));
    Rat objective = 0;
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < total; ++j) cost[j] += t[i][j];
        objective += b[i];
    }
    for (size_t j = n; j < total; ++j) cost[j] -= 1; // c_j = 1 on artificials

    while (true) {
        // Bland: first improving column.
        size_t enter = total;
        for (size_t j = 0; j < total; ++j) {
            if (cost[j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter == total) break;
        // Ratio test with Bland tie-break on basis index.
        size_t leave = m;
        Rat best;
        for (size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = b[i] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == m) return false; // unbounded phase-1: cannot happen
        Rat piv = t[leave][enter];
        for (Rat& x : t[leave]) x /= piv;
        b[leave] /= piv;
        for (size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (size_t j = 0; j < total; ++j) t[i][j] -= f * t[leave][j];
            b[i] -= f * b[leave];
        }
        Rat fc = cost[enter];
        for (size_t j = 0; j < total; ++j) cost[j] -= fc * t[leave][j];
        objective -= fc * b[leave];
        basis[leave] = enter;
    }
    return objective == 0;
}

} // namespace

bool lp_feasible_eq_nonneg(QMat a, QVec b) { return phase1(a, b); }

bool lp_feasible(const LinearSystem& sys) {
    size_t n = 0;
    if (!sys.le_lhs.empty()) n = sys.le_lhs[0].size();
    if (!sys.eq_lhs.empty()) n = std::max(n, sys.eq_lhs[0].size());
    size_t m_le = sys.le_lhs.size(), m_eq = sys.eq_lhs.size();
    // Free x split as u - w, one slack per inequality.
    size_t cols = 2 * n + m_le;
    QMat a(m_le + m_eq, QVec(cols, Rat(0)));
    QVec b(m_le + m_eq);
    for (size_t i = 0; i < m_le; ++i) {
        for (size_t j = 0; j < n; ++j) {
            a[i][j] = sys.le_lhs[i][j];
            a[i][n + j] = -sys.le_lhs[i][j];
        }
        a[i][2 * n + i] = 1;
        b[i] = sys.le_rhs[i];
    }
    for (size_t i = 0; i < m_eq; ++i) {
        for (size_t j = 0; j < n; ++j) {
            a[m_le + i][j] = sys.eq_lhs[i][j];
            a[m_le + i][n + j] = -sys.eq_lhs[i][j];
        }
        b[m_le + i] = sys.eq_rhs[i];
    }
    return lp_feasible_eq_nonneg(std::move(a), std::move(b));
}

} // namespace okv
