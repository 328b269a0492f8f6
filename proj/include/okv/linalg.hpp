#ifndef OKV_LINALG_HPP
#define OKV_LINALG_HPP

#include <optional>
#include <vector>

#include "okv/core.hpp"

namespace okv {

// Point/vector in Q^n.
using QVec = std::vector<Rat>;
// Dense matrix, row major.
using QMat = std::vector<QVec>;
// Lattice vector in Z^n.
using ZVec = std::vector<Int>;

Rat dot(const QVec& a, const QVec& b);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec mul(const Rat& t, const QVec& a);
bool is_zero(const QVec& a);
Rat sq_norm(const QVec& a);

QVec to_qvec(const ZVec& a);
// Fails (nullopt) when some entry is non-integral.
std::optional<ZVec> to_zvec(const QVec& a);

// Clears denominators and divides by the content; the sign is normalized so
// that the first nonzero entry is positive.  Zero vectors stay zero.
ZVec primitive(const QVec& a);
// Same scaling but keeps the orientation of the input.
ZVec primitive_signed(const QVec& a);

ZVec cross3(const ZVec& a, const ZVec& b);

Rat det(QMat a);               // square
int rank(QMat a);              // destroys its copy
// Solves A x = b for square A; nullopt when singular.
std::optional<QVec> solve_square(QMat a, QVec b);
// Any solution of A x = b (A is m x n, m <= n typical); nullopt if inconsistent.
std::optional<QVec> solve_any(QMat a, QVec b);
// Basis of { x : A x = 0 }.
QMat nullspace(const QMat& a);

// Affine coordinate chart of a point family: points[i] = origin + sum_j
// coords[i][j] * basis[j] with dim(basis) = affine dimension.
struct AffineChart {
    QVec origin;
    QMat basis;              // rows are independent direction vectors
    QMat coords;             // per input point
    int affine_dim() const { return static_cast<int>(basis.size()); }
    // Coordinates of an arbitrary point of the affine hull; nullopt if p is
    // not in the hull.
    std::optional<QVec> coords_of(const QVec& p) const;
    QVec lift(const QVec& c) const; // origin + basis^T c
};

AffineChart affine_chart(const std::vector<QVec>& points);

} // namespace okv

#endif
