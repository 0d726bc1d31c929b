#pragma once

#include <cstddef>
#include <span>

#include "ddc/geom/types.hpp"

namespace ddc::geom {

double signed_area(const Ring& ring);

/// Net area of the contour: outer area minus hole areas.
double area(const Contour& c);

BoundingBox bounding_box(const Contour& c);

enum class Location { Outside, Boundary, Inside };

Location locate_in_ring(const Point& p, const Ring& ring);
Location locate(const Point& p, const Contour& c);

/// Boundary points count as inside.
bool point_in_contour(const Point& p, const Contour& c);

/// Distance from p to the nearest edge of any ring.
double distance_to_boundary(const Point& p, const Contour& c);

double distance_to_segment(const Point& p, const Point& a, const Point& b);

/// True if the closed regions share interior area or a boundary stretch of
/// positive length. Regions that meet only at isolated points do not overlap.
bool polygons_overlap(const Contour& a, const Contour& b);

/// Number of intersecting edge pairs between the two contours.
std::size_t count_edge_intersections(const Contour& a, const Contour& b);

/// Rings have >= 3 vertices, no ring self-intersects, rings do not cross each
/// other, the outer ring is counter-clockwise and holes clockwise.
bool is_valid(const Contour& c);

/// Rectangle of the given half-thickness around the segment spanned by the
/// points (a square when all points coincide). Used for clusters too thin to
/// triangulate; the points must be collinear.
Contour thin_contour(std::span<const Point> points, double half_thickness);

Contour make_rectangle(double x0, double y0, double x1, double y1);

}  // namespace ddc::geom
