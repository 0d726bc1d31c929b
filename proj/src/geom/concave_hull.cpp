#include "ddc/geom/concave_hull.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <unordered_map>

#include "ddc/errors.hpp"
#include "ddc/geom/polygon.hpp"

namespace ddc::geom {

namespace {

double edge_length(const Triangulation& tri, std::int32_t e) {
    const Point& a = tri.vertices[static_cast<std::size_t>(tri.triangles[static_cast<std::size_t>(e)])];
    const Point& b = tri.vertices[static_cast<std::size_t>(tri.triangles[static_cast<std::size_t>(next_half_edge(e))])];
    return std::hypot(b.x - a.x, b.y - a.y);
}

// Queue item: a boundary half-edge keyed by its length, or a hole seed
// triangle keyed by its shortest edge.
struct Candidate {
    double key;
    std::int32_t lo;  // vertex pair of the keying edge, for stable ordering
    std::int32_t hi;
    bool is_triangle;
    std::int32_t id;  // half-edge or triangle index
};

struct CandidateLess {
    bool operator()(const Candidate& l, const Candidate& r) const {
        if (l.key != r.key) return l.key < r.key;
        if (l.lo != r.lo) return l.lo > r.lo;
        if (l.hi != r.hi) return l.hi > r.hi;
        if (l.is_triangle != r.is_triangle) return l.is_triangle;
        return l.id > r.id;
    }
};

}  // namespace

double mean_edge_length(const Triangulation& tri) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t e = 0; e < tri.half_edges.size(); ++e) {
        const auto twin = tri.half_edges[e];
        if (twin != kNoEdge && twin < static_cast<std::int32_t>(e)) continue;
        sum += edge_length(tri, static_cast<std::int32_t>(e));
        ++count;
    }
    return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

Contour chi_shape(const Triangulation& tri, double length_threshold) {
    if (!(length_threshold > 0.0)) throw GeometryError("chi_shape: length threshold must be positive");
    const std::size_t nt = tri.triangle_count();
    const std::size_t nv = tri.vertices.size();
    std::vector<char> alive(nt, 1);
    std::vector<char> on_boundary(nv, 0);

    auto tri_of = [](std::int32_t e) { return static_cast<std::size_t>(e / 3); };
    auto vertex = [&tri](std::int32_t e) { return tri.triangles[static_cast<std::size_t>(e)]; };
    auto is_boundary = [&](std::int32_t e) {
        if (!alive[tri_of(e)]) return false;
        const auto twin = tri.half_edges[static_cast<std::size_t>(e)];
        return twin == kNoEdge || !alive[tri_of(twin)];
    };

    std::priority_queue<Candidate, std::vector<Candidate>, CandidateLess> queue;
    auto push_edge = [&](std::int32_t e) {
        const double len = edge_length(tri, e);
        if (!(len >= length_threshold)) return;
        const auto a = vertex(e), b = vertex(next_half_edge(e));
        queue.push({len, std::min(a, b), std::max(a, b), false, e});
    };

    for (std::size_t e = 0; e < tri.half_edges.size(); ++e) {
        if (tri.half_edges[e] != kNoEdge) continue;
        on_boundary[static_cast<std::size_t>(vertex(static_cast<std::int32_t>(e)))] = 1;
        push_edge(static_cast<std::int32_t>(e));
    }
    for (std::size_t t = 0; t < nt; ++t) {
        double shortest = std::numeric_limits<double>::infinity();
        std::int32_t key_edge = 0;
        for (std::int32_t k = 0; k < 3; ++k) {
            const auto e = static_cast<std::int32_t>(3 * t) + k;
            const double len = edge_length(tri, e);
            if (len < shortest) {
                shortest = len;
                key_edge = e;
            }
        }
        if (!(shortest >= length_threshold)) continue;
        const auto a = vertex(key_edge), b = vertex(next_half_edge(key_edge));
        queue.push({shortest, std::min(a, b), std::max(a, b), true, static_cast<std::int32_t>(t)});
    }

    while (!queue.empty()) {
        const Candidate c = queue.top();
        queue.pop();
        if (c.is_triangle) {
            const auto t = static_cast<std::size_t>(c.id);
            if (!alive[t]) continue;
            const auto [v0, v1, v2] = tri.triangle(t);
            if (on_boundary[static_cast<std::size_t>(v0)] || on_boundary[static_cast<std::size_t>(v1)] ||
                on_boundary[static_cast<std::size_t>(v2)])
                continue;
            alive[t] = 0;
            for (const auto v : {v0, v1, v2}) on_boundary[static_cast<std::size_t>(v)] = 1;
            // The hole's edges now bound the neighbouring triangles.
            for (std::int32_t k = 0; k < 3; ++k) {
                const auto twin = tri.half_edges[3 * t + static_cast<std::size_t>(k)];
                if (twin != kNoEdge && alive[tri_of(twin)]) push_edge(twin);
            }
            continue;
        }
        const std::int32_t e = c.id;
        if (!is_boundary(e)) continue;
        const std::int32_t apex = vertex(prev_half_edge(e));
        if (on_boundary[static_cast<std::size_t>(apex)]) continue;
        alive[tri_of(e)] = 0;
        on_boundary[static_cast<std::size_t>(apex)] = 1;
        for (const auto f : {next_half_edge(e), prev_half_edge(e)}) {
            const auto twin = tri.half_edges[static_cast<std::size_t>(f)];
            if (twin != kNoEdge && alive[tri_of(twin)]) push_edge(twin);
        }
    }

    // Every boundary vertex has exactly one outgoing boundary half-edge.
    std::unordered_map<std::int32_t, std::int32_t> successor;
    for (std::size_t e = 0; e < tri.half_edges.size(); ++e) {
        const auto he = static_cast<std::int32_t>(e);
        if (!is_boundary(he)) continue;
        const auto [it, inserted] = successor.emplace(vertex(he), vertex(next_half_edge(he)));
        if (!inserted) throw GeometryError("chi_shape: boundary vertex visited twice");
    }
    std::vector<std::int32_t> starts;
    starts.reserve(successor.size());
    for (const auto& [v, w] : successor) starts.push_back(v);
    std::sort(starts.begin(), starts.end());

    Contour out;
    std::vector<Ring> holes;
    std::vector<char> used(nv, 0);
    for (const auto s : starts) {
        if (used[static_cast<std::size_t>(s)]) continue;
        Ring ring;
        std::int32_t v = s;
        do {
            used[static_cast<std::size_t>(v)] = 1;
            ring.push_back(tri.vertices[static_cast<std::size_t>(v)]);
            v = successor.at(v);
        } while (v != s);
        if (signed_area(ring) > 0.0) {
            if (!out.rings.empty()) throw GeometryError("chi_shape: more than one outer ring");
            out.rings.push_back(std::move(ring));
        } else {
            holes.push_back(std::move(ring));
        }
    }
    if (out.rings.empty()) throw GeometryError("chi_shape: no outer ring");
    for (auto& h : holes) out.rings.push_back(std::move(h));
    return out;
}

Contour concave_hull(std::span<const Point> points, double length_threshold) {
    return chi_shape(delaunay(points), length_threshold);
}

Contour concave_hull_relative(std::span<const Point> points, double factor) {
    const Triangulation tri = delaunay(points);
    return chi_shape(tri, factor * mean_edge_length(tri));
}

}  // namespace ddc::geom
