#pragma once

#include <span>

#include "ddc/geom/delaunay.hpp"
#include "ddc/geom/types.hpp"

namespace ddc::geom {

inline constexpr double kDefaultHullFactor = 1.6;

/// Mean length over the distinct edges of the triangulation.
double mean_edge_length(const Triangulation& tri);

/// Chi-shape of a triangulation. Boundary edges at least `length_threshold`
/// long are removed longest first, taking their triangle with them, as long as
/// the triangle's third vertex is not already on a boundary. Interior
/// triangles whose edges are all that long open a hole under the same rule.
/// With an infinite threshold the result is the convex hull.
Contour chi_shape(const Triangulation& tri, double length_threshold);

/// Throws DegenerateInput for fewer than three distinct or collinear points.
Contour concave_hull(std::span<const Point> points, double length_threshold);

/// concave_hull with threshold = factor * mean Delaunay edge length.
Contour concave_hull_relative(std::span<const Point> points, double factor = kDefaultHullFactor);

}  // namespace ddc::geom
