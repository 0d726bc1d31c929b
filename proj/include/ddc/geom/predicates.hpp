#pragma once

#include "ddc/geom/types.hpp"

namespace ddc::geom {

// Exact-sign predicates. A floating-point filter answers almost every query;
// inputs that fall inside the error bound are re-evaluated in rational
// arithmetic, so the returned sign is always the sign of the true determinant.

/// +1 if c lies left of the directed line a->b (counter-clockwise turn),
/// -1 if right, 0 if the three points are collinear.
int orient(const Point& a, const Point& b, const Point& c);

/// +1 if d lies strictly inside the circumcircle of the counter-clockwise
/// triangle (a, b, c), -1 if strictly outside, 0 if cocircular.
/// The sign flips for a clockwise triangle.
int incircle(const Point& a, const Point& b, const Point& c, const Point& d);

/// True if p lies on the closed segment [a, b].
bool on_segment(const Point& a, const Point& b, const Point& p);

enum class SegmentRelation {
    Disjoint,
    Crossing,   // interiors cross at a single point
    Touching,   // share a single point that is an endpoint of at least one segment
    Collinear,  // overlap along a sub-segment of positive length
};

SegmentRelation classify_segments(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace ddc::geom
