#include "ddc/geom/simplify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <cstdint>
#include <vector>

#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>

#include "ddc/geom/boolean.hpp"
#include "ddc/geom/polygon.hpp"
#include "ddc/geom/predicates.hpp"

namespace ddc::geom {

namespace {

namespace bg = boost::geometry;
namespace bgi = boost::geometry::index;

// Circular doubly linked vertex lists, one per ring. Each live vertex stands
// for the run [lo, hi] of original vertices it replaced (lo == hi for an
// untouched original vertex); the original chain under a current edge (a, b)
// is a.hi .. b.lo.
struct Node {
    Point p;
    int prev = -1;
    int next = -1;
    int lo = 0;
    int hi = 0;
    int ring = 0;
    bool alive = true;
    unsigned version = 0;
};

struct RingState {
    Ring original;
    int head = -1;
    int size = 0;
    bool alive = true;
    bool is_hole = false;
};

enum class OpKind { Bridge, Collapse, FillHole };

struct Op {
    double cost;
    OpKind kind;
    int node;      // start of the bridge, first vertex of the collapsed run, or a vertex of the hole
    int span = 0;  // net number of vertices removed
    Point q;       // new vertex for Collapse
    std::vector<std::pair<int, unsigned>> stamps;  // vertices the op depends on
};

using Segments = std::vector<std::pair<Point, Point>>;

bool inside_loop(const Point& p, const std::vector<Point>& loop) {
    bool in = false;
    for (std::size_t i = 0, j = loop.size() - 1; i < loop.size(); j = i++) {
        const Point& a = loop[j];
        const Point& b = loop[i];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x) in = !in;
        }
    }
    return in;
}

double distance_to(const Point& p, const Segments& segs) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [a, b] : segs) best = std::min(best, distance_to_segment(p, a, b));
    return best;
}

class Simplifier {
public:
    // Growth is measured on samples `step_` apart. Distance to a fixed set is
    // 1-Lipschitz, so a sampled bound of limit_ keeps the true one under tol.
    Simplifier(const Contour& c, double tol) : step_(tol / 6.0), limit_(tol - 0.71 * step_) {
        for (std::size_t r = 0; r < c.rings.size(); ++r) {
            RingState rs;
            rs.original = c.rings[r];
            rs.is_hole = r > 0;
            const int n = static_cast<int>(rs.original.size());
            const int base = static_cast<int>(nodes_.size());
            for (int i = 0; i < n; ++i) {
                Node nd;
                nd.p = rs.original[static_cast<std::size_t>(i)];
                nd.prev = base + (i + n - 1) % n;
                nd.next = base + (i + 1) % n;
                nd.lo = nd.hi = i;
                nd.ring = static_cast<int>(r);
                nodes_.push_back(nd);
            }
            rs.head = base;
            rs.size = n;
            rings_.push_back(std::move(rs));
        }
    }

    void run() {
        // Rounds: evaluate every candidate, then apply the compatible ones,
        // largest reduction and smallest growth first.
        while (true) {
            std::vector<Op> ops = collect();
            std::sort(ops.begin(), ops.end(), [](const Op& l, const Op& r) {
                if (l.span != r.span) return l.span > r.span;
                if (l.cost != r.cost) return l.cost < r.cost;
                if (l.node != r.node) return l.node < r.node;
                return l.kind < r.kind;
            });
            bool applied = false;
            for (const auto& op : ops) {
                if (!current(op)) continue;
                if (apply(op)) applied = true;
            }
            if (!applied) return;
        }
    }

    Contour result() const {
        Contour out;
        for (const auto& rs : rings_) {
            if (!rs.alive) continue;
            Ring ring;
            int v = rs.head;
            do {
                ring.push_back(node(v).p);
                v = node(v).next;
            } while (v != rs.head);
            out.rings.push_back(std::move(ring));
        }
        return out;
    }

private:
    static constexpr int kMaxRun = 48;

    Node& node(int i) { return nodes_[static_cast<std::size_t>(i)]; }
    const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }

    // Original edges from vertex lo forward to vertex hi; the whole ring
    // when lo == hi.
    Segments chain(int ring, int lo, int hi) const {
        const Ring& orig = rings_[static_cast<std::size_t>(ring)].original;
        const int n = static_cast<int>(orig.size());
        int count = (hi - lo + n) % n;
        if (count == 0) count = n;
        Segments segs;
        segs.reserve(static_cast<std::size_t>(count));
        for (int k = 0; k < count; ++k) {
            const int i = (lo + k) % n;
            segs.push_back({orig[static_cast<std::size_t>(i)], orig[static_cast<std::size_t>((i + 1) % n)]});
        }
        return segs;
    }

    // Largest distance from the original chain to the new edges `path`.
    double path_growth(const std::vector<Point>& path, const Segments& segs) const {
        double worst = 0.0;
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            const Point& a = path[k];
            const Point& b = path[k + 1];
            const int steps = std::max(1, static_cast<int>(std::ceil(std::hypot(b.x - a.x, b.y - a.y) / step_)));
            for (int s = 0; s <= steps; ++s) {
                const double t = static_cast<double>(s) / steps;
                worst = std::max(worst, distance_to({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}, segs));
                if (worst > limit_) return worst;
            }
        }
        return worst;
    }

    // Largest distance from the original chain to grid points inside the
    // pocket `loop` that the operation adds to the region.
    double pocket_growth(const std::vector<Point>& loop, const Segments& segs) const {
        double x0 = loop[0].x, x1 = x0, y0 = loop[0].y, y1 = y0;
        for (const auto& p : loop) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
        double worst = 0.0;
        for (double y = y0 + 0.5 * step_; y < y1; y += step_) {
            for (double x = x0 + 0.5 * step_; x < x1; x += step_) {
                const Point p{x, y};
                if (!inside_loop(p, loop)) continue;
                worst = std::max(worst, distance_to(p, segs));
                if (worst > limit_) return worst;
            }
        }
        return worst;
    }

    // Chord u -> x over the vertices strictly between, which must all lie on
    // the inner (left) side. Longest acceptable chord wins.
    std::optional<Op> bridge(int iu) const {
        const Node& u = node(iu);
        const int size = rings_[static_cast<std::size_t>(u.ring)].size;
        std::vector<int> between{u.next};
        std::vector<std::pair<int, double>> candidates;  // end vertex, growth along the chord
        int ix = node(u.next).next;
        for (int k = 1; k <= kMaxRun && size - k >= 3; ++k) {
            const Node& x = node(ix);
            bool inner = true;
            for (const int w : between) {
                if (orient(u.p, x.p, node(w).p) < 0) {
                    inner = false;
                    break;
                }
            }
            if (inner) {
                const double g = path_growth({u.p, x.p}, chain(u.ring, u.hi, x.lo));
                if (g > limit_) break;
                candidates.push_back({ix, g});
            }
            between.push_back(ix);
            ix = x.next;
        }
        for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
            const int jx = it->first;
            std::vector<Point> loop{u.p};
            Op op{0.0, OpKind::Bridge, iu, 0, {}, {{iu, u.version}}};
            for (int w = u.next; w != jx; w = node(w).next) {
                loop.push_back(node(w).p);
                op.stamps.push_back({w, node(w).version});
                ++op.span;
            }
            loop.push_back(node(jx).p);
            op.stamps.push_back({jx, node(jx).version});
            const double g = pocket_growth(loop, chain(u.ring, u.hi, node(jx).lo));
            if (g > limit_) continue;
            op.cost = std::max(g, it->second);
            return op;
        }
        return std::nullopt;
    }

    // Intersection of the ray from a through b (beyond b) with the ray from
    // d through c (beyond c), outside the chord (b, c). Nudged outward so
    // that b and c stay on the closed inner side of the new edges despite
    // rounding.
    static std::optional<Point> apex(const Point& a, const Point& b, const Point& c, const Point& d) {
        const double d1x = b.x - a.x, d1y = b.y - a.y;
        const double d2x = c.x - d.x, d2y = c.y - d.y;
        const double cross = d1x * d2y - d1y * d2x;
        if (cross == 0.0) return std::nullopt;
        const double ex = c.x - b.x, ey = c.y - b.y;
        const double s = (ex * d2y - ey * d2x) / cross;
        const double r = (ex * d1y - ey * d1x) / cross;
        if (!(s > 0.0) || !(r > 0.0)) return std::nullopt;
        Point q{b.x + s * d1x, b.y + s * d1y};
        if (!std::isfinite(q.x) || !std::isfinite(q.y)) return std::nullopt;
        if (orient(b, c, q) >= 0) return std::nullopt;
        const Point m{0.5 * (b.x + c.x), 0.5 * (b.y + c.y)};
        double step = 1e-12;
        for (int tries = 0; orient(a, q, b) < 0 || orient(q, d, c) < 0; ++tries) {
            if (tries == 40) return std::nullopt;
            q = {q.x + step * (q.x - m.x), q.y + step * (q.y - m.y)};
            step *= 4.0;
        }
        return q;
    }

    // Replaces the run v1..vk (k >= 2) between u and x by a single vertex q
    // such that the whole run lies on the inner side of u -> q -> x. Longest
    // run wins.
    std::optional<Op> collapse(int v) const {
        const Node& first = node(v);
        const int size = rings_[static_cast<std::size_t>(first.ring)].size;
        const Node& u = node(first.prev);
        std::vector<int> run{v};
        std::optional<Op> best;
        for (int k = 2; k <= kMaxRun && size - k + 1 >= 3; ++k) {
            const int ilast = node(run.back()).next;
            if (ilast == first.prev) break;
            run.push_back(ilast);
            const Node& last = node(ilast);
            if (last.next == first.prev) break;
            const Node& x = node(last.next);
            // The tightest new vertex sits where the outermost rays from u
            // and from x through the run meet.
            int wu = run.front();
            int wx = run.back();
            for (const int w : run) {
                if (orient(u.p, node(wu).p, node(w).p) < 0) wu = w;
                if (orient(node(wx).p, x.p, node(w).p) < 0) wx = w;
            }
            const auto q = wu == wx ? std::optional<Point>(node(wu).p) : apex(u.p, node(wu).p, node(wx).p, x.p);
            if (!q) continue;
            bool inner = true;
            for (const int w : run) {
                if (orient(u.p, *q, node(w).p) < 0 || orient(*q, x.p, node(w).p) < 0) {
                    inner = false;
                    break;
                }
            }
            if (!inner) continue;
            const auto segs = chain(first.ring, u.hi, x.lo);
            const double g = path_growth({u.p, *q, x.p}, segs);
            if (g > limit_) {
                if (best) break;
                continue;
            }
            std::vector<Point> loop{u.p};
            for (const int w : run) loop.push_back(node(w).p);
            loop.push_back(x.p);
            loop.push_back(*q);
            const double h = pocket_growth(loop, segs);
            if (h > limit_) continue;
            Op op{std::max(g, h), OpKind::Collapse, v, k - 1, *q, {{first.prev, u.version}, {last.next, x.version}}};
            for (const int w : run) op.stamps.push_back({w, node(w).version});
            best = std::move(op);
        }
        return best;
    }

    std::optional<Op> fill_hole(int ring) const {
        const RingState& rs = rings_[static_cast<std::size_t>(ring)];
        if (!rs.is_hole || !rs.alive) return std::nullopt;
        std::vector<Point> loop;
        Op op{0.0, OpKind::FillHole, rs.head, rs.size, {}, {}};
        int v = rs.head;
        do {
            loop.push_back(node(v).p);
            op.stamps.push_back({v, node(v).version});
            v = node(v).next;
        } while (v != rs.head);
        const double g = pocket_growth(loop, chain(ring, 0, 0));
        if (g > limit_) return std::nullopt;
        op.cost = g;
        return op;
    }

    std::vector<Op> collect() const {
        std::vector<Op> ops;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (!nodes_[i].alive) continue;
            const int v = static_cast<int>(i);
            if (auto op = bridge(v)) ops.push_back(std::move(*op));
            if (auto op = collapse(v)) ops.push_back(std::move(*op));
        }
        for (std::size_t r = 0; r < rings_.size(); ++r) {
            if (auto op = fill_hole(static_cast<int>(r))) ops.push_back(std::move(*op));
        }
        return ops;
    }

    bool current(const Op& op) const {
        for (const auto& [v, ver] : op.stamps) {
            if (!node(v).alive || node(v).version != ver) return false;
        }
        return true;
    }

    struct Segment {
        Point a, b;
        int ia, ib;  // node ids of the endpoints, -1 for a vertex not yet created
    };

    // New segments may only meet the remaining edges at shared endpoints.
    bool clear_of_others(const std::vector<Segment>& segs, const std::vector<int>& removed_edge_starts) const {
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            const Node& n = nodes_[i];
            if (!n.alive) continue;
            const int a = static_cast<int>(i);
            if (std::find(removed_edge_starts.begin(), removed_edge_starts.end(), a) != removed_edge_starts.end())
                continue;
            const int b = n.next;
            for (const auto& s : segs) {
                const auto rel = classify_segments(s.a, s.b, n.p, node(b).p);
                if (rel == SegmentRelation::Disjoint) continue;
                if (rel != SegmentRelation::Touching) return false;
                const bool shared = (s.ia >= 0 && (s.ia == a || s.ia == b)) || (s.ib >= 0 && (s.ib == a || s.ib == b));
                if (!shared) return false;
            }
        }
        for (std::size_t i = 0; i < segs.size(); ++i)
            for (std::size_t j = i + 1; j < segs.size(); ++j)
                if (classify_segments(segs[i].a, segs[i].b, segs[j].a, segs[j].b) == SegmentRelation::Collinear)
                    return false;
        return true;
    }

    void unlink(int v) {
        Node& n = node(v);
        node(n.prev).next = n.next;
        node(n.next).prev = n.prev;
        n.alive = false;
        RingState& rs = rings_[static_cast<std::size_t>(n.ring)];
        if (rs.head == v) rs.head = n.next;
        --rs.size;
    }

    void touch(int v) {
        for (const int w : {node(v).prev, v, node(v).next}) ++node(w).version;
    }

    bool apply(const Op& op) {
        switch (op.kind) {
            case OpKind::Bridge: {
                const int u = op.node;
                std::vector<int> removed_starts{u};
                int x = node(u).next;
                for (int k = 0; k < op.span; ++k) {
                    removed_starts.push_back(x);
                    x = node(x).next;
                }
                if (!clear_of_others({{node(u).p, node(x).p, u, x}}, removed_starts)) return false;
                for (int k = 0; k < op.span; ++k) unlink(node(u).next);
                touch(u);
                touch(x);
                return true;
            }
            case OpKind::Collapse: {
                const int v = op.node;
                const int u = node(v).prev;
                std::vector<int> removed_starts{u, v};
                int last = v;
                for (int k = 0; k < op.span; ++k) {
                    last = node(last).next;
                    removed_starts.push_back(last);
                }
                const int x = node(last).next;
                if (!clear_of_others({{node(u).p, op.q, u, -1}, {op.q, node(x).p, -1, x}}, removed_starts))
                    return false;
                // v becomes q and absorbs the runs of the vertices after it.
                Node& nv = node(v);
                nv.p = op.q;
                nv.hi = node(last).hi;
                for (int k = 0; k < op.span; ++k) unlink(node(v).next);
                touch(v);
                touch(u);
                touch(x);
                return true;
            }
            case OpKind::FillHole: {
                RingState& rs = rings_[static_cast<std::size_t>(node(op.node).ring)];
                int v = rs.head;
                do {
                    node(v).alive = false;
                    v = node(v).next;
                } while (v != rs.head);
                rs.alive = false;
                rs.size = 0;
                return true;
            }
        }
        return false;
    }

    double step_;
    double limit_;
    std::vector<Node> nodes_;
    std::vector<RingState> rings_;
};

// Fewest-vertex rings squeezed between the region and its offset `band`.
// The outer ring picks its vertices from the band's outer ring; each hole
// that survives the offset picks them from the region's matching hole, and
// the other holes are filled. Chords may not touch either boundary away
// from their own endpoints and must run between the two.
class Shortcutter {
public:
    Shortcutter(const Contour& region, const Contour& band) : region_(region), band_(band) {
        std::vector<Entry> entries;
        auto add = [&](const Ring& ring) {
            const auto n = static_cast<std::uint32_t>(ring.size());
            const auto r = static_cast<std::uint32_t>(rings_.size());
            rings_.push_back(&ring);
            for (std::uint32_t k = 0; k < n; ++k) {
                const Point& a = ring[k];
                const Point& b = ring[(k + 1) % n];
                entries.push_back({Box({std::min(a.x, b.x), std::min(a.y, b.y)}, {std::max(a.x, b.x), std::max(a.y, b.y)}),
                                   {r, k}});
            }
        };
        for (const auto& ring : band_.rings) add(ring);
        for (const auto& ring : region_.rings) add(ring);
        index_ = Tree(entries);
    }

    std::optional<Contour> run() const {
        Contour out;
        auto outer = shortest_ring(band_.outer(), region_.outer().front());
        if (!outer) return std::nullopt;
        out.rings.push_back(std::move(*outer));
        for (std::size_t h = 1; h < band_.rings.size(); ++h) {
            const Ring* source = nullptr;
            for (std::size_t k = 1; k < region_.rings.size() && !source; ++k) {
                if (locate_in_ring(band_.rings[h].front(), region_.rings[k]) == Location::Inside)
                    source = &region_.rings[k];
            }
            if (!source) return std::nullopt;
            auto ring = shortest_ring(*source, band_.rings[h].front());
            if (!ring) return std::nullopt;
            out.rings.push_back(std::move(*ring));
        }
        return out;
    }

private:
    using BoxPoint = bg::model::point<double, 2, bg::cs::cartesian>;
    using Box = bg::model::box<BoxPoint>;
    using Entry = std::pair<Box, std::pair<std::uint32_t, std::uint32_t>>;  // ring, edge start
    using Tree = bgi::rtree<Entry, bgi::rstar<16>>;

    static constexpr int kLookAhead = 12;
    static constexpr int kStarts = 8;

    // `keep` is a point of the boundary the ring has to enclose (or, for a
    // hole, keep out); the chord must not cut it off together with the arc.
    bool chord_ok(const Ring& own, std::size_t i, std::size_t j, const Point& keep) const {
        const Point& a = own[i];
        const Point& b = own[j];
        const Box query({std::min(a.x, b.x), std::min(a.y, b.y)}, {std::max(a.x, b.x), std::max(a.y, b.y)});
        for (auto it = index_.qbegin(bgi::intersects(query)); it != index_.qend(); ++it) {
            const auto [r, k] = it->second;
            const Ring& ring = *rings_[r];
            const std::size_t k1 = (k + 1) % ring.size();
            if (&ring == &own && (k == i || k == j || k1 == i || k1 == j)) continue;
            if (classify_segments(a, b, ring[k], ring[k1]) != SegmentRelation::Disjoint) return false;
        }
        const Point mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
        if (locate(mid, band_) == Location::Outside || locate(mid, region_) == Location::Inside) return false;
        std::vector<Point> pocket;
        for (std::size_t k = i;; k = (k + 1) % own.size()) {
            pocket.push_back(own[k]);
            if (k == j) break;
        }
        return !inside_loop(keep, pocket);
    }

    // Two picks close the ring degenerately; add a middle vertex of one of
    // the two arcs when both of its chords are acceptable.
    std::vector<std::size_t> split_longer_arc(const Ring& ring, std::size_t a, std::size_t b, const Point& keep) const {
        const std::size_t n = ring.size();
        const std::size_t arc1 = b - a;
        const std::size_t arc2 = a + n - b;
        std::vector<std::vector<std::size_t>> tries;
        if (arc1 >= 2) tries.push_back({a, a + arc1 / 2, b});
        if (arc2 >= 2) tries.push_back({a, b, b + arc2 / 2});
        if (arc1 < arc2) std::reverse(tries.begin(), tries.end());
        for (const auto& t : tries) {
            bool ok = true;
            for (std::size_t k = 0; k < 3 && ok; ++k) {
                const std::size_t i = t[k] % n, j = t[(k + 1) % 3] % n;
                if ((j + n - i) % n != 1) ok = chord_ok(ring, i, j, keep);
            }
            if (ok) return t;
        }
        return {};
    }

    std::optional<Ring> shortest_ring(const Ring& ring, const Point& keep) const {
        const std::size_t n = ring.size();
        std::optional<std::vector<std::size_t>> best;
        const std::size_t starts = std::min<std::size_t>(n, kStarts);
        for (std::size_t s = 0; s < starts; ++s) {
            const std::size_t start = s * n / starts;
            std::vector<std::size_t> picked{start};
            std::size_t cur = start;
            while (true) {
                std::size_t reach = cur + 1;
                int misses = 0;
                const std::size_t last = cur == start ? start + n - 1 : start + n;
                for (std::size_t t = cur + 2; t <= last; ++t) {
                    if (chord_ok(ring, cur % n, t % n, keep)) {
                        reach = t;
                        misses = 0;
                    } else if (++misses > kLookAhead) {
                        break;
                    }
                }
                if (reach == start + n) break;
                picked.push_back(reach);
                cur = reach;
                if (best && picked.size() >= best->size()) break;
            }
            if (picked.size() == 2) picked = split_longer_arc(ring, picked[0], picked[1], keep);
            if (picked.size() >= 3 && (!best || picked.size() < best->size())) best = std::move(picked);
        }
        if (!best) return std::nullopt;
        Ring out;
        for (const auto i : *best) out.push_back(ring[i % n]);
        return out;
    }

    const Contour& region_;
    const Contour& band_;
    std::vector<const Ring*> rings_;
    Tree index_;
};

bool contains_boundary(const Contour& outer, const Contour& inner) {
    for (const auto& ring : inner.rings)
        for (const auto& p : ring)
            if (!point_in_contour(p, outer)) return false;
    return true;
}

}  // namespace

Contour simplify_outward(const Contour& c, double tolerance) {
    if (c.empty() || !(tolerance > 0.0)) return c;
    // Stay a hair inside the offset so rounding cannot push growth past the
    // tolerance.
    const auto band = offset(c, 0.99 * tolerance);
    if (band.size() == 1) {
        const auto s = Shortcutter(c, band.front()).run();
        if (s && s->vertex_count() < c.vertex_count() && is_valid(*s) && contains_boundary(*s, c)) return *s;
    }
    Simplifier s(c, tolerance);
    s.run();
    return s.result();
}

}  // namespace ddc::geom
