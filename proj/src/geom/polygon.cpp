#include "ddc/geom/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ddc/geom/predicates.hpp"

namespace ddc::geom {

double BoundingBox::diagonal() const { return std::hypot(max_x - min_x, max_y - min_y); }

BoundingBox bounding_box(const std::vector<Point>& points) {
    BoundingBox box{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
                    -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const auto& p : points) {
        box.min_x = std::min(box.min_x, p.x);
        box.min_y = std::min(box.min_y, p.y);
        box.max_x = std::max(box.max_x, p.x);
        box.max_y = std::max(box.max_y, p.y);
    }
    return box;
}

BoundingBox bounding_box(const Contour& c) {
    if (c.empty()) return {};
    return bounding_box(c.outer());
}

double signed_area(const Ring& ring) {
    const std::size_t n = ring.size();
    if (n < 3) return 0.0;
    // Shoelace relative to the first vertex to limit cancellation.
    const Point& o = ring[0];
    double twice = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double ax = ring[i].x - o.x, ay = ring[i].y - o.y;
        const double bx = ring[i + 1].x - o.x, by = ring[i + 1].y - o.y;
        twice += ax * by - ay * bx;
    }
    return 0.5 * twice;
}

double area(const Contour& c) {
    double a = 0.0;
    for (std::size_t i = 0; i < c.rings.size(); ++i) {
        const double s = std::abs(signed_area(c.rings[i]));
        a += i == 0 ? s : -s;
    }
    return a;
}

Location locate_in_ring(const Point& p, const Ring& ring) {
    const std::size_t n = ring.size();
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = ring[j];
        const Point& b = ring[i];
        if (on_segment(a, b, p)) return Location::Boundary;
        if (a.y <= p.y) {
            if (b.y > p.y && orient(a, b, p) > 0) inside = !inside;
        } else if (b.y <= p.y && orient(a, b, p) < 0) {
            inside = !inside;
        }
    }
    return inside ? Location::Inside : Location::Outside;
}

Location locate(const Point& p, const Contour& c) {
    if (c.empty()) return Location::Outside;
    const Location outer = locate_in_ring(p, c.outer());
    if (outer != Location::Inside) return outer;
    for (std::size_t i = 1; i < c.rings.size(); ++i) {
        const Location h = locate_in_ring(p, c.rings[i]);
        if (h == Location::Boundary) return Location::Boundary;
        if (h == Location::Inside) return Location::Outside;
    }
    return Location::Inside;
}

bool point_in_contour(const Point& p, const Contour& c) { return locate(p, c) != Location::Outside; }

double distance_to_segment(const Point& p, const Point& a, const Point& b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

double distance_to_boundary(const Point& p, const Contour& c) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& ring : c.rings) {
        for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
            best = std::min(best, distance_to_segment(p, ring[j], ring[i]));
        }
    }
    return best;
}

namespace {

struct Edge {
    Point a;
    Point b;
    BoundingBox box;
};

std::vector<Edge> edges_of(const Contour& c) {
    std::vector<Edge> out;
    out.reserve(c.vertex_count());
    for (const auto& ring : c.rings) {
        for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
            const Point& a = ring[j];
            const Point& b = ring[i];
            out.push_back({a, b,
                           {std::min(a.x, b.x), std::min(a.y, b.y), std::max(a.x, b.x), std::max(a.y, b.y)}});
        }
    }
    // Sweep order for the pairwise scans below.
    std::sort(out.begin(), out.end(), [](const Edge& l, const Edge& r) { return l.box.min_x < r.box.min_x; });
    return out;
}

// Calls fn(ea, eb) for every pair of edges with intersecting bounding boxes;
// stops early when fn returns true.
template <typename Fn>
bool for_each_candidate_pair(const std::vector<Edge>& ea, const std::vector<Edge>& eb, Fn&& fn) {
    for (const auto& e : ea) {
        for (std::size_t k = 0; k < eb.size() && eb[k].box.min_x <= e.box.max_x; ++k) {
            if (!e.box.intersects(eb[k].box)) continue;
            if (fn(e, eb[k])) return true;
        }
    }
    return false;
}

bool strictly_inside_at(const Edge& e, const Contour& other) {
    const Point mid{0.5 * (e.a.x + e.b.x), 0.5 * (e.a.y + e.b.y)};
    const Location loc = locate(mid, other);
    if (loc == Location::Inside) return true;
    if (loc == Location::Boundary) {
        for (double t : {0.25, 0.75}) {
            const Point q{e.a.x + t * (e.b.x - e.a.x), e.a.y + t * (e.b.y - e.a.y)};
            if (locate(q, other) == Location::Inside) return true;
        }
    }
    return false;
}

}  // namespace

bool polygons_overlap(const Contour& a, const Contour& b) {
    if (a.empty() || b.empty()) return false;
    if (!bounding_box(a).intersects(bounding_box(b))) return false;

    const auto ea = edges_of(a);
    const auto eb = edges_of(b);
    const bool boundary_hit = for_each_candidate_pair(ea, eb, [](const Edge& x, const Edge& y) {
        const auto rel = classify_segments(x.a, x.b, y.a, y.b);
        return rel == SegmentRelation::Crossing || rel == SegmentRelation::Collinear;
    });
    if (boundary_hit) return true;

    // Boundaries meet at isolated points at most, so each edge piece lies
    // entirely inside or outside the other region.
    for (const auto& ring : a.rings)
        for (const auto& v : ring)
            if (locate(v, b) == Location::Inside) return true;
    for (const auto& ring : b.rings)
        for (const auto& v : ring)
            if (locate(v, a) == Location::Inside) return true;
    for (const auto& e : ea)
        if (strictly_inside_at(e, b)) return true;
    for (const auto& e : eb)
        if (strictly_inside_at(e, a)) return true;
    return false;
}

std::size_t count_edge_intersections(const Contour& a, const Contour& b) {
    if (a.empty() || b.empty()) return 0;
    if (!bounding_box(a).intersects(bounding_box(b))) return 0;
    const auto ea = edges_of(a);
    const auto eb = edges_of(b);
    std::size_t count = 0;
    for_each_candidate_pair(ea, eb, [&count](const Edge& x, const Edge& y) {
        if (classify_segments(x.a, x.b, y.a, y.b) != SegmentRelation::Disjoint) ++count;
        return false;
    });
    return count;
}

bool is_valid(const Contour& c) {
    if (c.empty()) return false;
    for (const auto& ring : c.rings)
        if (ring.size() < 3) return false;
    if (signed_area(c.outer()) <= 0.0) return false;
    for (std::size_t i = 1; i < c.rings.size(); ++i) {
        if (signed_area(c.rings[i]) >= 0.0) return false;
        bool some_inside = false;
        for (const auto& v : c.rings[i]) {
            const auto loc = locate_in_ring(v, c.outer());
            if (loc == Location::Outside) return false;
            if (loc == Location::Inside) some_inside = true;
        }
        if (!some_inside) return false;
    }

    struct Indexed {
        Point a, b;
        std::size_t ring, index, ring_size;
    };
    std::vector<Indexed> all;
    for (std::size_t r = 0; r < c.rings.size(); ++r) {
        const auto& ring = c.rings[r];
        for (std::size_t i = 0; i < ring.size(); ++i) {
            all.push_back({ring[i], ring[(i + 1) % ring.size()], r, i, ring.size()});
        }
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const auto& e = all[i];
            const auto& f = all[j];
            const auto rel = classify_segments(e.a, e.b, f.a, f.b);
            if (rel == SegmentRelation::Disjoint) continue;
            if (rel == SegmentRelation::Crossing || rel == SegmentRelation::Collinear) return false;
            if (e.ring != f.ring) continue;  // rings may touch at a point
            const bool adjacent = (e.index + 1) % e.ring_size == f.index || (f.index + 1) % f.ring_size == e.index;
            if (!adjacent) return false;
        }
    }
    return true;
}

Contour make_rectangle(double x0, double y0, double x1, double y1) {
    return Contour{{Ring{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}}};
}

Contour thin_contour(std::span<const Point> points, double half_thickness) {
    Point lo = points.front();
    Point hi = points.front();
    auto less = [](const Point& l, const Point& r) { return l.x < r.x || (l.x == r.x && l.y < r.y); };
    for (const auto& p : points) {
        if (less(p, lo)) lo = p;
        if (less(hi, p)) hi = p;
    }
    double ux = hi.x - lo.x, uy = hi.y - lo.y;
    const double len = std::hypot(ux, uy);
    if (len > 0.0) {
        ux /= len;
        uy /= len;
    } else {
        ux = 1.0;
        uy = 0.0;
    }
    const double h = half_thickness;
    const double nx = -uy, ny = ux;
    Ring ring{
        {lo.x - h * ux - h * nx, lo.y - h * uy - h * ny},
        {hi.x + h * ux - h * nx, hi.y + h * uy - h * ny},
        {hi.x + h * ux + h * nx, hi.y + h * uy + h * ny},
        {lo.x - h * ux + h * nx, lo.y - h * uy + h * ny},
    };
    return Contour{{std::move(ring)}};
}

}  // namespace ddc::geom
