// Sweep-hull Delaunay triangulation in the style of the delaunator library:
// points are inserted in order of distance from the seed circumcenter, each
// new point is connected to the visible part of the convex hull and the new
// triangles are legalized by edge flips. Orientation and in-circle tests use
// the exact predicates so the result is a true Delaunay triangulation.

#include "ddc/geom/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "ddc/errors.hpp"
#include "ddc/geom/predicates.hpp"

namespace ddc::geom {

std::vector<std::array<std::int32_t, 2>> Triangulation::boundary_edges() const {
    std::vector<std::array<std::int32_t, 2>> out;
    for (std::size_t e = 0; e < half_edges.size(); ++e) {
        if (half_edges[e] == kNoEdge) {
            out.push_back({triangles[e], triangles[next_half_edge(static_cast<std::int32_t>(e))]});
        }
    }
    return out;
}

std::vector<Point> deduplicate(std::span<const Point> points, double tolerance) {
    struct CellHash {
        std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& c) const {
            return std::hash<std::int64_t>{}(c.first * 73856093LL ^ c.second * 19349663LL);
        }
    };
    std::unordered_map<std::pair<std::int64_t, std::int64_t>, std::vector<std::size_t>, CellHash> grid;
    std::vector<Point> kept;
    kept.reserve(points.size());
    const double cell = tolerance > 0.0 ? tolerance : std::numeric_limits<double>::min();
    for (const auto& p : points) {
        const auto cx = static_cast<std::int64_t>(std::floor(p.x / cell));
        const auto cy = static_cast<std::int64_t>(std::floor(p.y / cell));
        bool duplicate = false;
        for (std::int64_t dx = -1; dx <= 1 && !duplicate; ++dx) {
            for (std::int64_t dy = -1; dy <= 1 && !duplicate; ++dy) {
                auto it = grid.find({cx + dx, cy + dy});
                if (it == grid.end()) continue;
                for (std::size_t k : it->second) {
                    if (std::abs(kept[k].x - p.x) <= tolerance && std::abs(kept[k].y - p.y) <= tolerance) {
                        duplicate = true;
                        break;
                    }
                }
            }
        }
        if (duplicate) continue;
        grid[{cx, cy}].push_back(kept.size());
        kept.push_back(p);
    }
    return kept;
}

namespace {

double dist2(const Point& a, const Point& b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

double circumradius2(const Point& a, const Point& b, const Point& c) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double ex = c.x - a.x, ey = c.y - a.y;
    const double bl = dx * dx + dy * dy;
    const double cl = ex * ex + ey * ey;
    const double d = 0.5 / (dx * ey - dy * ex);
    const double x = (ey * bl - dy * cl) * d;
    const double y = (dx * cl - ex * bl) * d;
    return x * x + y * y;
}

Point circumcenter(const Point& a, const Point& b, const Point& c) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double ex = c.x - a.x, ey = c.y - a.y;
    const double bl = dx * dx + dy * dy;
    const double cl = ex * ex + ey * ey;
    const double d = 0.5 / (dx * ey - dy * ex);
    return {a.x + (ey * bl - dy * cl) * d, a.y + (dx * cl - ex * bl) * d};
}

// Monotone in the angle of (dx, dy); range [0, 1).
double pseudo_angle(double dx, double dy) {
    const double p = dx / (std::abs(dx) + std::abs(dy));
    return (dy > 0.0 ? 3.0 - p : 1.0 + p) / 4.0;
}

class Sweep {
public:
    explicit Sweep(const std::vector<Point>& pts) : pts_(pts) {}

    void run();

    std::vector<std::int32_t> triangles;
    std::vector<std::int32_t> half_edges;

private:
    std::size_t hash_key(const Point& p) const {
        const double a = pseudo_angle(p.x - center_.x, p.y - center_.y);
        return static_cast<std::size_t>(std::floor(a * static_cast<double>(hash_size_))) % hash_size_;
    }
    void link(std::int32_t a, std::int32_t b) {
        half_edges[static_cast<std::size_t>(a)] = b;
        if (b != kNoEdge) half_edges[static_cast<std::size_t>(b)] = a;
    }
    std::int32_t add_triangle(std::int32_t i0, std::int32_t i1, std::int32_t i2, std::int32_t a, std::int32_t b,
                              std::int32_t c) {
        const auto t = static_cast<std::int32_t>(triangles.size());
        triangles.push_back(i0);
        triangles.push_back(i1);
        triangles.push_back(i2);
        half_edges.resize(triangles.size(), kNoEdge);
        link(t, a);
        link(t + 1, b);
        link(t + 2, c);
        return t;
    }
    std::int32_t legalize(std::int32_t a);

    const std::vector<Point>& pts_;
    Point center_{};
    std::size_t hash_size_ = 0;
    std::int32_t hull_start_ = 0;
    std::vector<std::int32_t> hull_prev_, hull_next_, hull_tri_, hull_hash_;
    std::vector<std::int32_t> edge_stack_;
};

// Triangles are built clockwise here (the orientation delaunator uses); the
// caller flips them afterwards.
std::int32_t Sweep::legalize(std::int32_t a) {
    std::size_t depth = 0;
    std::int32_t ar = 0;
    edge_stack_.clear();
    while (true) {
        const std::int32_t b = half_edges[static_cast<std::size_t>(a)];
        const std::int32_t a0 = a - a % 3;
        ar = a0 + (a + 2) % 3;
        if (b == kNoEdge) {
            if (depth == 0) break;
            a = edge_stack_[--depth];
            continue;
        }
        const std::int32_t b0 = b - b % 3;
        const std::int32_t al = a0 + (a + 1) % 3;
        const std::int32_t bl = b0 + (b + 2) % 3;
        const std::int32_t p0 = triangles[static_cast<std::size_t>(ar)];
        const std::int32_t pr = triangles[static_cast<std::size_t>(a)];
        const std::int32_t pl = triangles[static_cast<std::size_t>(al)];
        const std::int32_t p1 = triangles[static_cast<std::size_t>(bl)];

        const bool illegal = incircle(pts_[static_cast<std::size_t>(p0)], pts_[static_cast<std::size_t>(pr)],
                                      pts_[static_cast<std::size_t>(pl)], pts_[static_cast<std::size_t>(p1)]) < 0;
        if (illegal) {
            triangles[static_cast<std::size_t>(a)] = p1;
            triangles[static_cast<std::size_t>(b)] = p0;
            const std::int32_t hbl = half_edges[static_cast<std::size_t>(bl)];
            if (hbl == kNoEdge) {
                // Edge swapped on the other side of the hull; fix the reference.
                std::int32_t e = hull_start_;
                do {
                    if (hull_tri_[static_cast<std::size_t>(e)] == bl) {
                        hull_tri_[static_cast<std::size_t>(e)] = a;
                        break;
                    }
                    e = hull_prev_[static_cast<std::size_t>(e)];
                } while (e != hull_start_);
            }
            link(a, hbl);
            link(b, half_edges[static_cast<std::size_t>(ar)]);
            link(ar, bl);
            const std::int32_t br = b0 + (b + 1) % 3;
            if (depth < edge_stack_.size()) {
                edge_stack_[depth] = br;
            } else {
                edge_stack_.push_back(br);
            }
            ++depth;
        } else {
            if (depth == 0) break;
            a = edge_stack_[--depth];
        }
    }
    return ar;
}

void Sweep::run() {
    const std::size_t n = pts_.size();
    const BoundingBox box = bounding_box(pts_);
    const Point mid{(box.min_x + box.max_x) / 2.0, (box.min_y + box.max_y) / 2.0};

    std::size_t i0 = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double d = dist2(mid, pts_[i]);
        if (d < best) {
            best = d;
            i0 = i;
        }
    }
    std::size_t i1 = n;
    best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        if (i == i0) continue;
        const double d = dist2(pts_[i0], pts_[i]);
        if (d < best && d > 0.0) {
            best = d;
            i1 = i;
        }
    }
    if (i1 == n) throw DegenerateInput("fewer than three distinct points");

    std::size_t i2 = n;
    double min_radius = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        if (i == i0 || i == i1) continue;
        if (orient(pts_[i0], pts_[i1], pts_[i]) == 0) continue;
        double r = circumradius2(pts_[i0], pts_[i1], pts_[i]);
        if (!std::isfinite(r)) r = std::numeric_limits<double>::max();
        if (i2 == n || r < min_radius) {
            min_radius = r;
            i2 = i;
        }
    }
    if (i2 == n) throw DegenerateInput("all points are collinear");

    if (orient(pts_[i0], pts_[i1], pts_[i2]) > 0) std::swap(i1, i2);
    center_ = circumcenter(pts_[i0], pts_[i1], pts_[i2]);

    std::vector<double> dists(n);
    for (std::size_t i = 0; i < n; ++i) dists[i] = dist2(pts_[i], center_);
    std::vector<std::int32_t> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(), [&](std::int32_t l, std::int32_t r) {
        const double dl = dists[static_cast<std::size_t>(l)], dr = dists[static_cast<std::size_t>(r)];
        return dl < dr || (dl == dr && l < r);
    });

    hash_size_ = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    hull_prev_.assign(n, 0);
    hull_next_.assign(n, 0);
    hull_tri_.assign(n, 0);
    hull_hash_.assign(hash_size_, kNoEdge);

    const auto s0 = static_cast<std::int32_t>(i0);
    const auto s1 = static_cast<std::int32_t>(i1);
    const auto s2 = static_cast<std::int32_t>(i2);
    hull_start_ = s0;
    hull_next_[i0] = hull_prev_[i2] = s1;
    hull_next_[i1] = hull_prev_[i0] = s2;
    hull_next_[i2] = hull_prev_[i1] = s0;
    hull_tri_[i0] = 0;
    hull_tri_[i1] = 1;
    hull_tri_[i2] = 2;
    hull_hash_[hash_key(pts_[i0])] = s0;
    hull_hash_[hash_key(pts_[i1])] = s1;
    hull_hash_[hash_key(pts_[i2])] = s2;

    triangles.reserve(n > 2 ? 3 * (2 * n - 5) : 3);
    half_edges.reserve(triangles.capacity());
    add_triangle(s0, s1, s2, kNoEdge, kNoEdge, kNoEdge);

    auto P = [this](std::int32_t i) -> const Point& { return pts_[static_cast<std::size_t>(i)]; };

    for (const std::int32_t i : ids) {
        if (i == s0 || i == s1 || i == s2) continue;
        const Point& p = P(i);

        std::int32_t start = 0;
        const std::size_t key = hash_key(p);
        for (std::size_t j = 0; j < hash_size_; ++j) {
            start = hull_hash_[(key + j) % hash_size_];
            if (start != kNoEdge && start != hull_next_[static_cast<std::size_t>(start)]) break;
        }
        start = hull_prev_[static_cast<std::size_t>(start)];
        std::int32_t e = start;
        std::int32_t q = 0;
        while (q = hull_next_[static_cast<std::size_t>(e)], orient(p, P(e), P(q)) <= 0) {
            e = q;
            if (e == start) {
                e = kNoEdge;
                break;
            }
        }
        if (e == kNoEdge) throw GeometryError("delaunay: no visible hull edge for inserted point");

        std::int32_t t = add_triangle(e, i, hull_next_[static_cast<std::size_t>(e)], kNoEdge, kNoEdge,
                                      hull_tri_[static_cast<std::size_t>(e)]);
        hull_tri_[static_cast<std::size_t>(i)] = legalize(t + 2);
        hull_tri_[static_cast<std::size_t>(e)] = t;

        std::int32_t nx = hull_next_[static_cast<std::size_t>(e)];
        while (q = hull_next_[static_cast<std::size_t>(nx)], orient(p, P(nx), P(q)) > 0) {
            t = add_triangle(nx, i, q, hull_tri_[static_cast<std::size_t>(i)], kNoEdge,
                             hull_tri_[static_cast<std::size_t>(nx)]);
            hull_tri_[static_cast<std::size_t>(i)] = legalize(t + 2);
            hull_next_[static_cast<std::size_t>(nx)] = nx;  // removed from hull
            nx = q;
        }

        if (e == start) {
            while (q = hull_prev_[static_cast<std::size_t>(e)], orient(p, P(q), P(e)) > 0) {
                t = add_triangle(q, i, e, kNoEdge, hull_tri_[static_cast<std::size_t>(e)],
                                 hull_tri_[static_cast<std::size_t>(q)]);
                legalize(t + 2);
                hull_tri_[static_cast<std::size_t>(q)] = t;
                hull_next_[static_cast<std::size_t>(e)] = e;
                e = q;
            }
        }

        hull_start_ = hull_prev_[static_cast<std::size_t>(i)] = e;
        hull_next_[static_cast<std::size_t>(e)] = hull_prev_[static_cast<std::size_t>(nx)] = i;
        hull_next_[static_cast<std::size_t>(i)] = nx;

        hull_hash_[hash_key(p)] = i;
        hull_hash_[hash_key(P(e))] = e;
    }
}

}  // namespace

Triangulation delaunay(std::span<const Point> points) {
    Triangulation tri;
    tri.vertices = deduplicate(points);
    if (tri.vertices.size() < 3) throw DegenerateInput("fewer than three distinct points");

    Sweep sweep(tri.vertices);
    sweep.run();

    // Reverse every triangle (v0, v1, v2) -> (v0, v2, v1) to make it
    // counter-clockwise and remap half-edge indices accordingly.
    static constexpr std::int32_t kRemap[3] = {2, 1, 0};
    const std::size_t m = sweep.triangles.size();
    tri.triangles.resize(m);
    tri.half_edges.assign(m, kNoEdge);
    for (std::size_t t = 0; t < m; t += 3) {
        tri.triangles[t] = sweep.triangles[t];
        tri.triangles[t + 1] = sweep.triangles[t + 2];
        tri.triangles[t + 2] = sweep.triangles[t + 1];
        for (std::size_t k = 0; k < 3; ++k) {
            const std::int32_t opp = sweep.half_edges[t + k];
            const auto local = static_cast<std::size_t>(kRemap[k]);
            tri.half_edges[t + local] = opp == kNoEdge ? kNoEdge : (opp - opp % 3) + kRemap[opp % 3];
        }
    }
    return tri;
}

}  // namespace ddc::geom
