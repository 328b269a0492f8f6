#ifndef OKV_BODY_HPP
#define OKV_BODY_HPP

#include <optional>
#include <vector>

#include "okv/linalg.hpp"

namespace okv {

// Closed halfspace <normal, x> <= offset.  Normals of canonical facet data
// are primitive integer vectors (stored as rationals with denominator 1).
struct Halfspace {
    QVec normal;
    Rat offset;

    bool operator==(const Halfspace& o) const {
        return normal == o.normal && offset == o.offset;
    }
    bool operator<(const Halfspace& o) const {
        if (normal != o.normal) return normal < o.normal;
        return offset < o.offset;
    }
};

// Plain H-representation; may describe an unbounded or empty region.
struct HalfspaceSystem {
    std::vector<Halfspace> rows;

    int dim() const { return rows.empty() ? 0 : static_cast<int>(rows[0].normal.size()); }
};

// Rational polytope in canonical V-representation: the vertex list is the
// minimal (extreme) point set in lexicographic order.  Values are immutable;
// the H-representation and a few derived quantities are cached lazily.
class ConvexBody {
  public:
    struct FacetData {
        std::vector<Halfspace> inequalities; // facets, valid within the affine hull
        std::vector<Halfspace> equalities;   // affine hull as <n,x> == offset
    };

    // Trusted constructor: `extreme` must consist of extreme points only
    // (duplicates are fine, they are removed here).  Use hull() otherwise.
    static ConvexBody from_extreme_points(int dim, std::vector<QVec> extreme);

    int dim() const { return dim_; }
    const std::vector<QVec>& vertices() const { return verts_; }
    int affine_dim() const;

    const FacetData& facets() const;
    bool contains(const QVec& x) const;

    // A rational point in the relative interior (vertex average).
    QVec relative_interior_point() const;

    bool operator==(const ConvexBody& o) const {
        return dim_ == o.dim_ && verts_ == o.verts_;
    }
    bool operator!=(const ConvexBody& o) const { return !(*this == o); }

    // Used by operations that compute facet data as a by-product.
    void prime_facets(FacetData data) const;

  private:
    ConvexBody() = default;

    int dim_ = 0;
    std::vector<QVec> verts_;
    mutable std::optional<FacetData> facet_cache_;
    mutable std::optional<int> affine_dim_cache_;
    mutable std::optional<Rat> volume_cache_;

    friend Rat volume(const ConvexBody&);
};

} // namespace okv

#endif
