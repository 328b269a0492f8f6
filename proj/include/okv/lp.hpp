#ifndef OKV_LP_HPP
#define OKV_LP_HPP

#include "okv/linalg.hpp"

namespace okv {

// A linear system over free variables: le_lhs x <= le_rhs and eq_lhs x == eq_rhs.
struct LinearSystem {
    QMat le_lhs;
    QVec le_rhs;
    QMat eq_lhs;
    QVec eq_rhs;
};

// Exact feasibility test (phase-1 simplex, Bland's rule).
bool lp_feasible(const LinearSystem& sys);

// Feasibility of { x >= 0 : A x = b }.
bool lp_feasible_eq_nonneg(QMat a, QVec b);

} // namespace okv

#endif
