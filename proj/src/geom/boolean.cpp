#include "ddc/geom/boolean.hpp"

#include <algorithm>
#include <vector>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>

#include "ddc/errors.hpp"
#include "ddc/geom/polygon.hpp"

namespace bg = boost::geometry;

namespace ddc::geom {

namespace {

using BgPoint = bg::model::d2::point_xy<double>;
using BgPolygon = bg::model::polygon<BgPoint, false /*ccw*/, true /*closed*/>;
using BgMulti = bg::model::multi_polygon<BgPolygon>;

// Boost's counter-clockwise polygons want holes clockwise, which is our
// convention as well.
void append_ring(const Ring& ring, std::vector<BgPoint>& out) {
    out.reserve(ring.size() + 1);
    for (const auto& p : ring) out.emplace_back(p.x, p.y);
    out.emplace_back(ring.front().x, ring.front().y);
}

BgPolygon to_boost(const Contour& c) {
    BgPolygon poly;
    append_ring(c.outer(), poly.outer());
    for (std::size_t i = 1; i < c.rings.size(); ++i) {
        poly.inners().emplace_back();
        append_ring(c.rings[i], poly.inners().back());
    }
    return poly;
}

template <typename BgRing>
Ring from_boost(const BgRing& r) {
    Ring ring;
    ring.reserve(r.size());
    for (const auto& p : r) ring.push_back({p.x(), p.y()});
    if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
    // Drop consecutive repeats Boost occasionally leaves behind.
    ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
    while (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
    return ring;
}

Contour from_boost(const BgPolygon& poly) {
    Contour c;
    c.rings.push_back(from_boost(poly.outer()));
    for (const auto& inner : poly.inners()) {
        Ring h = from_boost(inner);
        if (h.size() >= 3) c.rings.push_back(std::move(h));
    }
    return c;
}

}  // namespace

Contour polygon_union(const Contour& a, const Contour& b) {
    if (!polygons_overlap(a, b)) throw NotOverlapping("polygon_union: contours do not overlap");
    BgMulti out;
    bg::union_(to_boost(a), to_boost(b), out);
    if (out.size() != 1) throw GeometryError("polygon_union: result is not a single region");
    Contour c = from_boost(out.front());
    if (c.outer().size() < 3) throw GeometryError("polygon_union: degenerate result");
    return c;
}

double intersection_area(const Contour& a, const Contour& b) {
    if (a.empty() || b.empty()) return 0.0;
    if (!bounding_box(a).intersects(bounding_box(b))) return 0.0;
    BgMulti out;
    bg::intersection(to_boost(a), to_boost(b), out);
    return bg::area(out);
}

std::vector<Contour> offset(const Contour& c, double distance, int points_per_circle) {
    namespace bs = bg::strategy::buffer;
    BgMulti out;
    bg::buffer(to_boost(c), out, bs::distance_symmetric<double>(distance), bs::side_straight(),
               bs::join_round(static_cast<std::size_t>(points_per_circle)), bs::end_flat(),
               bs::point_circle(static_cast<std::size_t>(points_per_circle)));
    std::vector<Contour> result;
    for (const auto& poly : out) {
        Contour r = from_boost(poly);
        if (r.outer().size() >= 3) result.push_back(std::move(r));
    }
    return result;
}

}  // namespace ddc::geom
