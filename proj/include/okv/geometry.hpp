#ifndef OKV_GEOMETRY_HPP
#define OKV_GEOMETRY_HPP

#include "okv/body.hpp"

namespace okv {

// Convex hull with canonical output.  Throws EmptyHull / DimensionMismatch.
ConvexBody hull(const std::vector<QVec>& points);

// Exact Lebesgue volume; 0 for lower-dimensional bodies.
Rat volume(const ConvexBody& body);

// Simplices given as (affine_dim+1) vertex tuples; empty for points.
std::vector<std::vector<QVec>> triangulate(const ConvexBody& body);

// Volume-weighted barycenter; requires positive volume.
QVec centroid(const ConvexBody& body);

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b);

ConvexBody scale_body(const ConvexBody& body, const Rat& t);

ConvexBody translate(const ConvexBody& body, const QVec& shift);

// Exact intersection; nullopt encodes the empty set.
std::optional<ConvexBody> intersect(const ConvexBody& body, const HalfspaceSystem& sys);
std::optional<ConvexBody> intersect(const ConvexBody& a, const ConvexBody& b);

// Vertex enumeration of a bounded nonempty H-representation.
// Throws Unbounded / EmptyLinearSystem.
ConvexBody body_from_halfspaces(const HalfspaceSystem& sys);

// Symmetric multilinear polarization of the volume; bodies.size() must equal
// the ambient dimension.
Rat mixed_volume(const std::vector<ConvexBody>& bodies);

struct HausdorffResult {
    double approx = 0.0;     // sqrt of the certified bound, in double
    Rat certified_sq;        // exact max over vertices of squared distances
};

HausdorffResult hausdorff_distance(const ConvexBody& a, const ConvexBody& b);

// Exact squared Euclidean distance from a point to a body.
Rat sq_dist_point_body(const QVec& p, const ConvexBody& body);

// All points of body ∩ (Z/k)^n in lexicographic order.
std::vector<QVec> lattice_points(const ConvexBody& body, const Int& k);
std::vector<QVec> lattice_points_serial(const ConvexBody& body, const Int& k);

// Inner parallel body at distance delta, with facet norms replaced by
// certified rational upper bounds; nullopt when infeasible.
std::optional<ConvexBody> inner_body(const ConvexBody& body, const Rat& delta);

Rat support(const ConvexBody& body, const QVec& direction);
bool subset(const ConvexBody& inner, const ConvexBody& outer);

} // namespace okv

#endif
