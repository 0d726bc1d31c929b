#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ddc/geom/types.hpp"

namespace ddc::geom {

inline constexpr std::int32_t kNoEdge = -1;

/// Half-edge Delaunay triangulation. Triangle t owns half-edges 3t, 3t+1,
/// 3t+2; half-edge e starts at vertex triangles[e] and ends at
/// triangles[next_half_edge(e)]. Triangles are counter-clockwise.
struct Triangulation {
    std::vector<Point> vertices;
    std::vector<std::int32_t> triangles;
    std::vector<std::int32_t> half_edges;  // opposite half-edge or kNoEdge on the hull

    std::size_t triangle_count() const { return triangles.size() / 3; }
    std::array<std::int32_t, 3> triangle(std::size_t t) const {
        return {triangles[3 * t], triangles[3 * t + 1], triangles[3 * t + 2]};
    }
    /// Convex hull edges as (from, to) vertex pairs, counter-clockwise.
    std::vector<std::array<std::int32_t, 2>> boundary_edges() const;
};

inline std::int32_t next_half_edge(std::int32_t e) { return e % 3 == 2 ? e - 2 : e + 1; }
inline std::int32_t prev_half_edge(std::int32_t e) { return e % 3 == 0 ? e + 2 : e - 1; }

/// Removes points closer than `tolerance` (per coordinate) to an earlier kept
/// point, preserving first-occurrence order.
std::vector<Point> deduplicate(std::span<const Point> points, double tolerance = 1e-9);

/// Triangulates the deduplicated input. Throws DegenerateInput when fewer than
/// three distinct points remain or all of them are collinear.
Triangulation delaunay(std::span<const Point> points);

}  // namespace ddc::geom
