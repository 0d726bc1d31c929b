#pragma once

#include <vector>

#include "ddc/geom/types.hpp"

namespace ddc::geom {

/// Region union of two overlapping contours. Throws NotOverlapping when
/// polygons_overlap(a, b) is false.
Contour polygon_union(const Contour& a, const Contour& b);

/// Area of the intersection of the two regions (zero when disjoint).
double intersection_area(const Contour& a, const Contour& b);

/// Outward offset of the region by `distance` (round joins approximated by
/// chords, so the result never reaches beyond the exact offset). Holes
/// narrower than the distance close up.
std::vector<Contour> offset(const Contour& c, double distance, int points_per_circle = 32);

}  // namespace ddc::geom
