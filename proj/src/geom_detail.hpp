#ifndef OKV_GEOM_DETAIL_HPP
#define OKV_GEOM_DETAIL_HPP

#include <algorithm>
#include <set>

#include "okv/body.hpp"

namespace okv::detail {

// Counterclockwise hull of 2-D points (Andrew's monotone chain); collinear
// points are dropped, so the result is the minimal vertex cycle.
std::vector<QVec> chain_hull_2d(std::vector<QVec> pts);

// Facets of a full-dimensional point set in R^d as halfspaces with primitive
// integer normals.  Exhaustive hyperplane scan; meant for desk-scale inputs.
std::vector<Halfspace> facet_scan(const std::vector<QVec>& pts, int d);

// Extreme points of a full-dimensional point set, via facet tightness rank.
std::vector<QVec> extreme_points_fulldim(const std::vector<QVec>& pts, int d,
                                         const std::vector<Halfspace>& facets);

// Simplices (as vertex tuples) of a full-dimensional polytope given by its
// vertex set in R^d.
std::vector<std::vector<QVec>> triangulate_fulldim(const std::vector<QVec>& verts, int d);

std::vector<QVec> dedupe_sorted(std::vector<QVec> pts);

} // namespace okv::detail

#endif
