#pragma once

#include "ddc/geom/types.hpp"

namespace ddc::geom {

/// Reduces the vertex count of a valid contour without ever shrinking its
/// region: chords cut across reflex stretches, runs of vertices are replaced
/// by the meeting point of the neighbouring edge extensions, and holes are
/// filled. Every point the region gains lies within `tolerance` of the input
/// boundary and no edge ever crosses another, so the result is valid and
/// contains the input region.
Contour simplify_outward(const Contour& c, double tolerance);

}  // namespace ddc::geom
