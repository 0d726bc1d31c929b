#pragma once

// Independent reference implementations used only by the tests. They are
// deliberately naive: plain doubles, brute force, no shared code with the
// library under test.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <map>
#include <random>
#include <vector>

#include "ddc/geom/types.hpp"

namespace oracle {

using ddc::geom::Contour;
using ddc::geom::Point;
using ddc::geom::Ring;

inline double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain, counter-clockwise, collinear points dropped.
inline Ring convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    Ring h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

inline double ring_area(const Ring& r) {
    double a = 0.0;
    for (std::size_t i = 0, j = r.size() - 1; i < r.size(); j = i++) a += r[j].x * r[i].y - r[i].x * r[j].y;
    return 0.5 * a;
}

inline bool in_ring(const Point& p, const Ring& r) {
    bool in = false;
    for (std::size_t i = 0, j = r.size() - 1; i < r.size(); j = i++) {
        if ((r[i].y > p.y) != (r[j].y > p.y)) {
            const double x = r[j].x + (p.y - r[j].y) * (r[i].x - r[j].x) / (r[i].y - r[j].y);
            if (p.x < x) in = !in;
        }
    }
    return in;
}

// Even-odd membership; meaningless for points on the boundary.
inline bool inside(const Point& p, const Contour& c) {
    bool in = false;
    for (const auto& r : c.rings)
        if (in_ring(p, r)) in = !in;
    return in;
}

inline double seg_dist(const Point& p, const Point& a, const Point& b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double l2 = dx * dx + dy * dy;
    double t = l2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / l2 : 0.0;
    t = std::max(0.0, std::min(1.0, t));
    const double ex = a.x + t * dx - p.x, ey = a.y + t * dy - p.y;
    return std::sqrt(ex * ex + ey * ey);
}

inline double boundary_dist(const Point& p, const Contour& c) {
    double best = 1e300;
    for (const auto& r : c.rings)
        for (std::size_t i = 0, j = r.size() - 1; i < r.size(); j = i++) best = std::min(best, seg_dist(p, r[j], r[i]));
    return best;
}

struct Box {
    double x0, y0, x1, y1;
};

inline Box box_of(const std::vector<Contour>& cs) {
    Box b{1e300, 1e300, -1e300, -1e300};
    for (const auto& c : cs)
        for (const auto& r : c.rings)
            for (const auto& p : r) {
                b.x0 = std::min(b.x0, p.x);
                b.y0 = std::min(b.y0, p.y);
                b.x1 = std::max(b.x1, p.x);
                b.y1 = std::max(b.y1, p.y);
            }
    return b;
}

inline std::vector<Point> uniform_samples(const Box& b, std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(b.x0, b.x1), uy(b.y0, b.y1);
    std::vector<Point> out(n);
    for (auto& p : out) p = {ux(rng), uy(rng)};
    return out;
}

// Monte-Carlo area of the set described by `member` inside box b.
template <typename Member>
double mc_area(const Box& b, std::size_t n, unsigned seed, Member&& member) {
    std::size_t hits = 0;
    for (const auto& p : uniform_samples(b, n, seed))
        if (member(p)) ++hits;
    return (b.x1 - b.x0) * (b.y1 - b.y0) * static_cast<double>(hits) / static_cast<double>(n);
}

// Textbook DBSCAN with a brute-force neighbour scan. Label -1 is noise.
inline std::vector<int> naive_dbscan(const std::vector<Point>& pts, double eps, int min_pts) {
    const std::size_t n = pts.size();
    auto neighbours = [&](std::size_t i) {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < n; ++j) {
            const double dx = pts[i].x - pts[j].x, dy = pts[i].y - pts[j].y;
            if (dx * dx + dy * dy <= eps * eps) out.push_back(j);
        }
        return out;
    };
    constexpr int unvisited = -2, noise = -1;
    std::vector<int> label(n, unvisited);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (label[i] != unvisited) continue;
        auto nb = neighbours(i);
        if (static_cast<int>(nb.size()) < min_pts) {
            label[i] = noise;
            continue;
        }
        const int c = next++;
        label[i] = c;
        std::deque<std::size_t> queue(nb.begin(), nb.end());
        while (!queue.empty()) {
            const std::size_t q = queue.front();
            queue.pop_front();
            if (label[q] == noise) label[q] = c;
            if (label[q] != unvisited) continue;
            label[q] = c;
            auto qn = neighbours(q);
            if (static_cast<int>(qn.size()) >= min_pts) queue.insert(queue.end(), qn.begin(), qn.end());
        }
    }
    return label;
}

// Same partition into clusters, noise (-1) matched to noise, ids free.
inline bool same_up_to_renaming(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    std::map<int, int> ab, ba;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i] < 0) != (b[i] < 0)) return false;
        if (a[i] < 0) continue;
        auto [x, fresh_x] = ab.emplace(a[i], b[i]);
        auto [y, fresh_y] = ba.emplace(b[i], a[i]);
        if (x->second != b[i] || y->second != a[i]) return false;
    }
    return true;
}

// Adjusted Rand index from the four pair counts, O(n^2).
inline double pair_count_ari(const std::vector<int>& u, const std::vector<int>& v) {
    double a = 0, b = 0, c = 0, d = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            const bool su = u[i] == u[j], sv = v[i] == v[j];
            if (su && sv) ++a;
            else if (su) ++b;
            else if (sv) ++c;
            else ++d;
        }
    const double den = (a + b) * (b + d) + (a + c) * (c + d);
    return den == 0 ? 1.0 : 2.0 * (a * d - b * c) / den;
}

}  // namespace oracle
