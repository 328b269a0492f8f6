#include "okv/linalg.hpp"

#include <algorithm>

namespace okv {

Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec add(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("add: size mismatch");
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec sub(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("sub: size mismatch");
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec mul(const Rat& t, const QVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
    return r;
}

bool is_zero(const QVec& a) {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

Rat sq_norm(const QVec& a) { return dot(a, a); }

QVec to_qvec(const ZVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
    return r;
}

std::optional<ZVec> to_zvec(const QVec& a) {
    ZVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (den(a[i]) != 1) return std::nullopt;
        r[i] = num(a[i]);
    }
    return r;
}

ZVec primitive_signed(const QVec& a) {
    Int lcm_den = 1;
    for (const Rat& x : a) lcm_den = boost::multiprecision::lcm(lcm_den, den(x));
    ZVec z(a.size());
    Int g = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        z[i] = num(a[i]) * (lcm_den / den(a[i]));
        g = boost::multiprecision::gcd(g, z[i]);
    }
    if (g == 0) return z;
    for (Int& x : z) x /= g;
    return z;
}

ZVec primitive(const QVec& a) {
    ZVec z = primitive_signed(a);
    for (size_t i = 0; i < z.size(); ++i) {
        if (z[i] == 0) continue;
        if (z[i] < 0)
            for (Int& x : z) x = -x;
        break;
    }
    return z;
}

ZVec cross3(const ZVec& a, const ZVec& b) {
    if (a.size() != 3 || b.size() != 3) throw DimensionMismatch("cross3");
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

namespace {

// Fraction-free style Gaussian elimination; returns pivot columns and leaves
// `a` in row echelon form.  `b`, when non-null, is carried along.
std::vector<int> echelon(QMat& a, QMat* b) {
    std::vector<int> pivots;
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        if (b) std::swap((*b)[p], (*b)[r]);
        Rat inv = Rat(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        if (b)
            for (Rat& x : (*b)[r]) x *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            if (b)
                for (size_t j = 0; j < (*b)[i].size(); ++j)
                    (*b)[i][j] -= f * (*b)[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

} // namespace

Rat det(QMat a) {
    size_t n = a.size();
    Rat d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        Rat inv = Rat(1) / a[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] * inv;
            for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return d;
}

int rank(QMat a) {
    if (a.empty()) return 0;
    return static_cast<int>(echelon(a, nullptr).size());
}

std::optional<QVec> solve_square(QMat a, QVec b) {
    size_t n = a.size();
    QMat rhs(n);
    for (size_t i = 0; i < n; ++i) rhs[i] = {b[i]};
    auto pivots = echelon(a, &rhs);
    if (pivots.size() != n) return std::nullopt;
    QVec x(n);
    for (size_t i = 0; i < n; ++i) x[pivots[i]] = rhs[i][0];
    return x;
}

std::optional<QVec> solve_any(QMat a, QVec b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    QMat rhs(rows);
    for (size_t i = 0; i < rows; ++i) rhs[i] = {b[i]};
    auto pivots = echelon(a, &rhs);
    // Inconsistent when a zero row has nonzero rhs.
    for (size_t i = pivots.size(); i < rows; ++i)
        if (rhs[i][0] != 0) return std::nullopt;
    QVec x(cols, Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rhs[i][0];
    return x;
}

QMat nullspace(const QMat& a) {
    if (a.empty()) return {};
    QMat m = a;
    size_t cols = m[0].size();
    auto pivots = echelon(m, nullptr);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    QMat basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        QVec v(cols, Rat(0));
        v[free_c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

AffineChart affine_chart(const std::vector<QVec>& points) {
    if (points.empty()) throw EmptyHull("affine_chart: no points");
    AffineChart chart;
    chart.origin = points[0];
    // Greedy independent set of difference vectors.
    QMat rows;
    for (size_t i = 1; i < points.size(); ++i) {
        QVec d = sub(points[i], chart.origin);
        if (is_zero(d)) continue;
        rows.push_back(d);
        if (rank(rows) < static_cast<int>(rows.size()))
            rows.pop_back();
    }
    chart.basis = rows;
    chart.coords.reserve(points.size());
    for (const QVec& p : points) {
        auto c = chart.coords_of(p);
        if (!c) throw Error("affine_chart: internal inconsistency");
        chart.coords.push_back(*c);
    }
    return chart;
}

std::optional<QVec> AffineChart::coords_of(const QVec& p) const {
    size_t d = basis.size();
    if (d == 0) return sub(p, origin) == QVec(origin.size(), Rat(0))
                           ? std::optional<QVec>(QVec{})
                           : std::nullopt;
    // Solve basis^T c = p - origin (tall system, consistent iff p in hull).
    size_t n = origin.size();
    QMat a(n, QVec(d));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < d; ++j) a[i][j] = basis[j][i];
    return solve_any(std::move(a), sub(p, origin));
}

QVec AffineChart::lift(const QVec& c) const {
    QVec p = origin;
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < p.size(); ++i) p[i] += c[j] * basis[j][i];
    return p;
}

} // namespace okv
