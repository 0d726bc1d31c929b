#pragma once

#include <cstddef>
#include <vector>

namespace ddc::geom {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

// Closed vertex loop, stored without repeating the first vertex.
using Ring = std::vector<Point>;

struct BoundingBox {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;

    bool intersects(const BoundingBox& o) const {
        return min_x <= o.max_x && o.min_x <= max_x && min_y <= o.max_y && o.min_y <= max_y;
    }
    bool contains(const Point& p) const {
        return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
    }
    double diagonal() const;
};

BoundingBox bounding_box(const std::vector<Point>& points);

/// Boundary of one cluster: rings[0] is the outer boundary (counter-clockwise,
/// positive signed area), any further rings are holes (clockwise).
struct Contour {
    std::vector<Ring> rings;

    std::size_t vertex_count() const {
        std::size_t n = 0;
        for (const auto& r : rings) n += r.size();
        return n;
    }
    const Ring& outer() const { return rings.front(); }
    bool empty() const { return rings.empty(); }

    friend bool operator==(const Contour&, const Contour&) = default;
};

}  // namespace ddc::geom
