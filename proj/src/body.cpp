#include "okv/body.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "geom_detail.hpp"

namespace okv {

namespace detail {

std::vector<QVec> dedupe_sorted(std::vector<QVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

namespace {

int turn(const QVec& o, const QVec& a, const QVec& b) {
    Rat c = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    return sgn(c);
}

} // namespace

std::vector<QVec> chain_hull_2d(std::vector<QVec> pts) {
    pts = dedupe_sorted(std::move(pts));
    size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<QVec> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && turn(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = n - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && turn(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

std::vector<Halfspace> facet_scan(const std::vector<QVec>& pts, int d) {
    std::set<Halfspace> out;
    size_t m = pts.size();
    if (d == 1) {
        // Facets of a segment: two endpoints.
        QVec lo = pts[0], hi = pts[0];
        for (const QVec& p : pts) {
            if (p < lo) lo = p;
            if (hi < p) hi = p;
        }
        out.insert({QVec{Rat(1)}, hi[0]});
        out.insert({QVec{Rat(-1)}, -lo[0]});
        return {out.begin(), out.end()};
    }
    if (d == 2) {
        auto cyc = chain_hull_2d(pts);
        for (size_t i = 0; i < cyc.size(); ++i) {
            const QVec& a = cyc[i];
            const QVec& b = cyc[(i + 1) % cyc.size()];
            // Outward normal of a CCW edge.
            QVec nrm{b[1] - a[1], a[0] - b[0]};
            ZVec pz = primitive_signed(nrm);
            QVec n = to_qvec(pz);
            out.insert({n, dot(n, a)});
        }
        return {out.begin(), out.end()};
    }
    // Generic scan over d-subsets spanning a hyperplane.
    std::vector<size_t> idx(d);
    std::vector<bool> mask(m, false);
    std::fill(mask.end() - d, mask.end(), true);
    std::sort(mask.begin(), mask.end());
    // iterate combinations via std::prev_permutation on a descending mask
    std::vector<size_t> comb(d);
    std::vector<bool> sel(m, false);
    for (size_t i = 0; i < static_cast<size_t>(d); ++i) sel[i] = true;
    // manual combination enumeration
    std::vector<size_t> c(d);
    for (int i = 0; i < d; ++i) c[i] = i;
    while (true) {
        QMat diffs;
        for (int i = 1; i < d; ++i) diffs.push_back(sub(pts[c[i]], pts[c[0]]));
        QMat ns = nullspace(diffs);
        if (ns.size() == 1) {
            ZVec pz = primitive_signed(ns[0]);
            QVec n = to_qvec(pz);
            Rat b = dot(n, pts[c[0]]);
            bool above = false, below = false;
            for (const QVec& p : pts) {
                int s = sgn(Rat(dot(n, p) - b));
                if (s > 0) above = true;
                if (s < 0) below = true;
                if (above && below) break;
            }
            if (!above) out.insert({n, b});
            if (!below) {
                QVec neg = mul(Rat(-1), n);
                out.insert({neg, -b});
            }
        }
        // next combination
        int i = d - 1;
        while (i >= 0 && c[i] == m - d + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < d; ++j) c[j] = c[j - 1] + 1;
    }
    return {out.begin(), out.end()};
}

std::vector<QVec> extreme_points_fulldim(const std::vector<QVec>& pts, int d,
                                         const std::vector<Halfspace>& facets) {
    std::vector<QVec> verts;
    for (const QVec& p : pts) {
        QMat tight;
        for (const Halfspace& h : facets)
            if (dot(h.normal, p) == h.offset) tight.push_back(h.normal);
        if (static_cast<int>(tight.size()) >= d && rank(tight) == d)
            verts.push_back(p);
    }
    return dedupe_sorted(std::move(verts));
}

std::vector<std::vector<QVec>> triangulate_fulldim(const std::vector<QVec>& verts, int d) {
    if (d == 0) return {};
    if (d == 1) {
        QVec lo = verts[0], hi = verts[0];
        for (const QVec& p : verts) {
            if (p < lo) lo = p;
            if (hi < p) hi = p;
        }
        return {{lo, hi}};
    }
    if (d == 2) {
        auto cyc = chain_hull_2d(verts);
        std::vector<std::vector<QVec>> tris;
        for (size_t i = 1; i + 1 < cyc.size(); ++i)
            tris.push_back({cyc[0], cyc[i], cyc[i + 1]});
        return tris;
    }
    if (verts.size() == static_cast<size_t>(d) + 1) return {verts};
    auto facets = facet_scan(verts, d);
    QVec apex = *std::min_element(verts.begin(), verts.end());
    std::vector<std::vector<QVec>> out;
    for (const Halfspace& f : facets) {
        if (dot(f.normal, apex) == f.offset) continue;
        std::vector<QVec> face;
        for (const QVec& p : verts)
            if (dot(f.normal, p) == f.offset) face.push_back(p);
        // Work in facet coordinates, recurse one dimension down.
        AffineChart chart = affine_chart(face);
        std::vector<std::vector<QVec>> sub =
            triangulate_fulldim(chart.coords, chart.affine_dim());
        for (auto& s : sub) {
            std::vector<QVec> simplex{apex};
            for (const QVec& c : s) simplex.push_back(chart.lift(c));
            out.push_back(std::move(simplex));
        }
    }
    return out;
}

} // namespace detail

ConvexBody ConvexBody::from_extreme_points(int dim, std::vector<QVec> extreme) {
    if (extreme.empty()) throw EmptyHull("from_extreme_points: no points");
    for (const QVec& p : extreme)
        if (static_cast<int>(p.size()) != dim)
            throw DimensionMismatch("from_extreme_points: wrong coordinate count");
    ConvexBody b;
    b.dim_ = dim;
    b.verts_ = detail::dedupe_sorted(std::move(extreme));
    return b;
}

int ConvexBody::affine_dim() const {
    if (!affine_dim_cache_) {
        QMat rows;
        for (size_t i = 1; i < verts_.size(); ++i)
            rows.push_back(sub(verts_[i], verts_[0]));
        affine_dim_cache_ = rows.empty() ? 0 : rank(rows);
    }
    return *affine_dim_cache_;
}

const ConvexBody::FacetData& ConvexBody::facets() const {
    if (facet_cache_) return *facet_cache_;
    FacetData data;
    AffineChart chart = affine_chart(verts_);
    int d = chart.affine_dim();
    // Affine-hull equalities from the orthogonal complement of the basis.
    if (d < dim_) {
        QMat b = chart.basis;
        QMat comp = b.empty() ? QMat() : nullspace(b);
        if (b.empty()) {
            comp.clear();
            for (int i = 0; i < dim_; ++i) {
                QVec e(dim_, Rat(0));
                e[i] = 1;
                comp.push_back(e);
            }
        }
        for (const QVec& w : comp) {
            QVec n = to_qvec(primitive(w));
            data.equalities.push_back({n, dot(n, chart.origin)});
        }
        std::sort(data.equalities.begin(), data.equalities.end());
    }
    if (d > 0) {
        auto coord_facets = detail::facet_scan(chart.coords, d);
        size_t n = static_cast<size_t>(dim_);
        for (const Halfspace& f : coord_facets) {
            // Lift: find ambient u with <u, basis_j> = normal_j.
            QMat a(d, QVec(n));
            for (int i = 0; i < d; ++i)
                for (size_t j = 0; j < n; ++j) a[i][j] = chart.basis[i][j];
            auto u = solve_any(std::move(a), f.normal);
            if (!u) throw Error("facets: lift failed");
            QVec lifted = *u;
            Rat off = f.offset + dot(lifted, chart.origin);
            ZVec pz = primitive_signed(lifted);
            // keep scale consistent between normal and offset
            Rat scale_num = 0;
            for (size_t j = 0; j < n; ++j)
                if (lifted[j] != 0) {
                    scale_num = Rat(pz[j]) / lifted[j];
                    break;
                }
            QVec nrm = to_qvec(pz);
            data.inequalities.push_back({nrm, off * scale_num});
        }
        std::sort(data.inequalities.begin(), data.inequalities.end());
    }
    facet_cache_ = std::move(data);
    return *facet_cache_;
}

bool ConvexBody::contains(const QVec& x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw DimensionMismatch("contains: wrong coordinate count");
    const FacetData& f = facets();
    for (const Halfspace& e : f.equalities)
        if (dot(e.normal, x) != e.offset) return false;
    for (const Halfspace& h : f.inequalities)
        if (dot(h.normal, x) > h.offset) return false;
    // A single point has no facet rows at all.
    if (f.inequalities.empty() && verts_.size() == 1) return x == verts_[0];
    return true;
}

QVec ConvexBody::relative_interior_point() const {
    QVec c(dim_, Rat(0));
    for (const QVec& v : verts_) c = add(c, v);
    return mul(Rat(1, static_cast<int>(verts_.size())), c);
}

void ConvexBody::prime_facets(FacetData data) const {
    std::sort(data.inequalities.begin(), data.inequalities.end());
    std::sort(data.equalities.begin(), data.equalities.end());
    facet_cache_ = std::move(data);
}

} // namespace okv
