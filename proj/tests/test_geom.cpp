#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ddc/errors.hpp"
#include "ddc/geom/boolean.hpp"
#include "ddc/geom/concave_hull.hpp"
#include "ddc/geom/delaunay.hpp"
#include "ddc/geom/polygon.hpp"
#include "ddc/geom/predicates.hpp"
#include "ddc/geom/simplify.hpp"
#include "oracles.hpp"

using namespace ddc::geom;

namespace {

std::vector<Point> random_points(std::size_t n, unsigned seed, double size = 100.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, size);
    std::vector<Point> pts(n);
    for (auto& p : pts) p = {u(rng), u(rng)};
    return pts;
}

std::vector<Point> crescent(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, std::numbers::pi);
    std::uniform_real_distribution<double> rad(8.0, 10.0);
    std::vector<Point> pts(n);
    for (auto& p : pts) {
        const double a = ang(rng), r = rad(rng);
        p = {r * std::cos(a), r * std::sin(a)};
    }
    return pts;
}

// Star-shaped simple polygon around (cx, cy).
Contour star(double cx, double cy, double r, std::size_t k, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> jitter(0.4, 1.0);
    Ring ring;
    for (std::size_t i = 0; i < k; ++i) {
        const double a = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.5 * jitter(rng)) / static_cast<double>(k);
        const double rr = r * jitter(rng);
        ring.push_back({cx + rr * std::cos(a), cy + rr * std::sin(a)});
    }
    return Contour{{ring}};
}

Contour square(double x, double y, double s = 1.0) { return make_rectangle(x, y, x + s, y + s); }

double circumradius_check(const Point& a, const Point& b, const Point& c, Point& center) {
    const double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    const double a2 = a.x * a.x + a.y * a.y, b2 = b.x * b.x + b.y * b.y, c2 = c.x * c.x + c.y * c.y;
    center = {(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
              (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
    return std::hypot(a.x - center.x, a.y - center.y);
}

void check_triangulation(const Triangulation& t) {
    const auto hull = oracle::convex_hull(t.vertices);
    REQUIRE(t.boundary_edges().size() >= hull.size());
    // Euler: a triangulation of n points with h hull vertices (collinear ones
    // included) has 2n - 2 - h triangles.
    CHECK(t.triangle_count() == 2 * t.vertices.size() - 2 - t.boundary_edges().size());
    for (std::size_t i = 0; i < t.triangle_count(); ++i) {
        const auto [a, b, c] = t.triangle(i);
        const Point &pa = t.vertices[a], &pb = t.vertices[b], &pc = t.vertices[c];
        REQUIRE(orient(pa, pb, pc) > 0);
        Point center;
        const double r = circumradius_check(pa, pb, pc, center);
        for (std::size_t k = 0; k < t.vertices.size(); ++k) {
            const double d = std::hypot(t.vertices[k].x - center.x, t.vertices[k].y - center.y);
            REQUIRE(d >= r * (1.0 - 1e-9));
        }
    }
    for (std::size_t e = 0; e < t.half_edges.size(); ++e) {
        const auto twin = t.half_edges[e];
        if (twin == kNoEdge) continue;
        REQUIRE(t.half_edges[static_cast<std::size_t>(twin)] == static_cast<std::int32_t>(e));
        REQUIRE(t.triangles[e] == t.triangles[static_cast<std::size_t>(next_half_edge(twin))]);
    }
}

}  // namespace

TEST_CASE("orient and incircle signs") {
    CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(orient({0, 0}, {0, 1}, {1, 0}) == -1);
    CHECK(orient({0, 0}, {1, 1}, {2, 2}) == 0);
    // Nearly collinear: the naive determinant is pure rounding noise here.
    CHECK(orient({0.5, 0.5}, {12.0, 12.0}, {24.0, 24.0}) == 0);
    CHECK(orient({0.1, 0.1}, {0.3, 0.3}, {0.7, 0.7000000000000001}) == 1);
    CHECK(incircle({0, 0}, {1, 0}, {0, 1}, {0.5, 0.5}) == 1);
    CHECK(incircle({0, 0}, {1, 0}, {0, 1}, {1, 1}) == 0);
    CHECK(incircle({0, 0}, {1, 0}, {0, 1}, {2, 2}) == -1);
}

TEST_CASE("segment classification") {
    CHECK(classify_segments({0, 0}, {2, 2}, {0, 2}, {2, 0}) == SegmentRelation::Crossing);
    CHECK(classify_segments({0, 0}, {1, 0}, {1, 0}, {2, 1}) == SegmentRelation::Touching);
    CHECK(classify_segments({0, 0}, {2, 0}, {1, 0}, {1, 1}) == SegmentRelation::Touching);
    CHECK(classify_segments({0, 0}, {2, 0}, {1, 0}, {3, 0}) == SegmentRelation::Collinear);
    CHECK(classify_segments({0, 0}, {1, 0}, {1, 0}, {3, 0}) == SegmentRelation::Touching);
    CHECK(classify_segments({0, 0}, {1, 0}, {2, 0}, {3, 0}) == SegmentRelation::Disjoint);
    CHECK(classify_segments({0, 0}, {1, 0}, {0, 1}, {1, 1}) == SegmentRelation::Disjoint);
}

TEST_CASE("delaunay: minimal and square inputs") {
    const std::vector<Point> tri{{0, 0}, {1, 0}, {0, 1}};
    const auto t = delaunay(tri);
    CHECK(t.triangle_count() == 1);
    CHECK(t.boundary_edges().size() == 3);

    const std::vector<Point> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const auto s = delaunay(sq);
    CHECK(s.triangle_count() == 2);
    CHECK(s.boundary_edges().size() == 4);
    // Cocircular corners: either diagonal is Delaunay; the fourth corner must
    // be on, not inside, each circumcircle.
    check_triangulation(s);
}

TEST_CASE("delaunay: degenerate inputs") {
    CHECK_THROWS_AS(delaunay(std::vector<Point>{{0, 0}, {0, 0}, {1, 1}}), ddc::DegenerateInput);
    CHECK_THROWS_AS(delaunay(std::vector<Point>{{0, 0}, {1, 1}, {2, 2}, {3, 3}}), ddc::DegenerateInput);
    CHECK_THROWS_AS(delaunay(std::vector<Point>{{1, 1}}), ddc::DegenerateInput);
    CHECK_THROWS_AS(delaunay(std::vector<Point>{}), ddc::DegenerateInput);
}

TEST_CASE("delaunay: deduplication") {
    const std::vector<Point> pts{{0, 0}, {1, 0}, {0, 1}, {1e-12, 0}, {1, 0}};
    const auto d = deduplicate(pts);
    CHECK(d.size() == 3);
    CHECK(delaunay(pts).vertices.size() == 3);
}

TEST_CASE("delaunay: empty circumcircle on random sets") {
    for (unsigned seed = 1; seed <= 20; ++seed) {
        const auto pts = random_points(50 + 10 * seed, seed);
        check_triangulation(delaunay(pts));
    }
}

TEST_CASE("delaunay: integer grid with many cocircular points") {
    std::vector<Point> pts;
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 9; ++j) pts.push_back({static_cast<double>(i), static_cast<double>(j)});
    std::shuffle(pts.begin(), pts.end(), std::mt19937_64(5));
    const auto t = delaunay(pts);
    check_triangulation(t);
    CHECK(t.triangle_count() == 2 * 11 * 8);
}

TEST_CASE("delaunay: deterministic for fixed ordering") {
    const auto pts = random_points(500, 77);
    const auto a = delaunay(pts);
    const auto b = delaunay(pts);
    CHECK(a.triangles == b.triangles);
    CHECK(a.half_edges == b.half_edges);
}

TEST_CASE("concave hull: convex case") {
    const std::vector<Point> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const auto c = concave_hull(sq, std::numeric_limits<double>::infinity());
    REQUIRE(c.rings.size() == 1);
    CHECK(c.vertex_count() == 4);
    CHECK(area(c) == doctest::Approx(1.0));
    CHECK_THROWS_AS(concave_hull(sq, 0.0), ddc::GeometryError);
}

TEST_CASE("concave hull: crescent is non-convex and contains every point") {
    const auto pts = crescent(200, 9);
    const auto tri = delaunay(pts);
    std::vector<double> lens;
    for (std::size_t e = 0; e < tri.half_edges.size(); ++e) {
        const auto& a = tri.vertices[tri.triangles[e]];
        const auto& b = tri.vertices[tri.triangles[next_half_edge(static_cast<std::int32_t>(e))]];
        lens.push_back(std::hypot(a.x - b.x, a.y - b.y));
    }
    std::nth_element(lens.begin(), lens.begin() + lens.size() / 2, lens.end());
    const double median = lens[lens.size() / 2];
    const auto c = concave_hull(pts, 1.5 * median);
    CHECK(is_valid(c));
    for (const auto& p : pts) REQUIRE(point_in_contour(p, c));
    const double hull_area = oracle::ring_area(oracle::convex_hull(pts));
    CHECK(area(c) < hull_area);
    CHECK(area(c) < 0.8 * hull_area);
}

TEST_CASE("concave hull: two blobs with a large threshold give one polygon") {
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Point> pts;
    for (int i = 0; i < 150; ++i) pts.push_back({g(rng), g(rng)});
    for (int i = 0; i < 150; ++i) pts.push_back({10.0 + g(rng), g(rng)});
    const auto c = concave_hull(pts, 1e6);
    CHECK(c.rings.size() == 1);
    for (const auto& p : pts) CHECK(point_in_contour(p, c));
}

TEST_CASE("concave hull: infinite threshold equals convex hull area") {
    for (unsigned seed = 1; seed <= 10; ++seed) {
        const auto pts = random_points(300, 100 + seed);
        const auto c = concave_hull(pts, std::numeric_limits<double>::infinity());
        const double expected = oracle::ring_area(oracle::convex_hull(pts));
        CHECK(std::abs(area(c) - expected) <= 1e-9 * expected);
    }
}

TEST_CASE("concave hull: hole around an empty interior") {
    // Dense annulus: the empty middle becomes a hole, not a notch.
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi), rad(6.0, 10.0);
    std::vector<Point> pts;
    for (int i = 0; i < 1500; ++i) {
        const double a = ang(rng), r = rad(rng);
        pts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    const auto c = concave_hull_relative(pts);
    CHECK(is_valid(c));
    CHECK(c.rings.size() >= 2);
    CHECK_FALSE(point_in_contour({0.0, 0.0}, c));
    for (const auto& p : pts) REQUIRE(point_in_contour(p, c));
}

TEST_CASE("concave hull: containment and monotonicity over thresholds") {
    for (unsigned seed = 1; seed <= 10; ++seed) {
        auto pts = crescent(150, seed);
        const auto more = random_points(60, seed + 1000, 20.0);
        for (const auto& p : more) pts.push_back({p.x - 10.0, p.y - 25.0});
        const auto tri = delaunay(pts);
        const double mean = mean_edge_length(tri);
        double previous = 0.0;
        for (double k : {0.8, 1.2, 1.6, 2.5, 4.0, 1e9}) {
            const auto c = chi_shape(tri, k * mean);
            REQUIRE(is_valid(c));
            for (const auto& p : pts) REQUIRE(point_in_contour(p, c));
            const double a = area(c);
            CHECK(a >= previous - 1e-9 * a);
            previous = a;
        }
    }
}

TEST_CASE("point in contour") {
    const auto sq = square(0, 0);
    CHECK(point_in_contour({0.5, 0.5}, sq));
    CHECK_FALSE(point_in_contour({10, 10}, sq));
    CHECK(point_in_contour({0, 0}, sq));
    CHECK(point_in_contour({1, 0.5}, sq));
    Contour holed = make_rectangle(0, 0, 10, 10);
    holed.rings.push_back(Ring{{4, 4}, {4, 6}, {6, 6}, {6, 4}});
    REQUIRE(is_valid(holed));
    CHECK_FALSE(point_in_contour({5, 5}, holed));
    CHECK(point_in_contour({4, 5}, holed));
    CHECK(point_in_contour({2, 2}, holed));
    CHECK(area(holed) == doctest::Approx(96.0));
}

TEST_CASE("polygons overlap") {
    CHECK(polygons_overlap(square(0, 0), square(0, 0)));
    CHECK_FALSE(polygons_overlap(square(0, 0), square(5, 5)));
    CHECK(polygons_overlap(square(0, 0), square(0.5, 0.5)));
    CHECK(polygons_overlap(square(0, 0, 10), square(2, 2)));
    CHECK(polygons_overlap(square(2, 2), square(0, 0, 10)));
    // Shared edge counts, a shared corner does not.
    CHECK(polygons_overlap(square(0, 0), square(1, 0)));
    CHECK_FALSE(polygons_overlap(square(0, 0), square(1, 1)));
    // A square sitting inside a hole does not overlap the holed region.
    Contour holed = make_rectangle(0, 0, 10, 10);
    holed.rings.push_back(Ring{{3, 3}, {3, 7}, {7, 7}, {7, 3}});
    CHECK_FALSE(polygons_overlap(holed, square(4, 4)));
    CHECK(polygons_overlap(holed, square(2, 4, 2)));
}

TEST_CASE("polygons overlap agrees with a sampling oracle") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> off(-3.0, 3.0);
    for (int i = 0; i < 60; ++i) {
        const auto a = star(0, 0, 2.0, 12, rng);
        const auto b = star(off(rng), off(rng), 2.0, 12, rng);
        const bool expected_any = [&] {
            for (const auto& p : oracle::uniform_samples({-6, -6, 6, 6}, 20000, 3 + i))
                if (oracle::inside(p, a) && oracle::inside(p, b)) return true;
            return false;
        }();
        const bool got = polygons_overlap(a, b);
        CHECK(got == polygons_overlap(b, a));
        // Sampling only sees overlaps of noticeable area.
        if (expected_any) CHECK(got);
    }
}

TEST_CASE("polygon union: spec examples") {
    const auto a = square(0, 0);
    const auto same = polygon_union(a, a);
    CHECK(area(same) == doctest::Approx(1.0));

    const auto shifted = polygon_union(a, square(0.5, 0));
    CHECK(area(shifted) == doctest::Approx(1.5));
    const oracle::Box box{-0.5, -0.5, 2.0, 1.5};
    const double mc = oracle::mc_area(box, 200000, 5, [&](const Point& p) { return oracle::inside(p, shifted); });
    CHECK(std::abs(mc - 1.5) < 0.015);

    const auto big = square(0, 0, 10);
    const auto absorbed = polygon_union(big, square(2, 2));
    CHECK(area(absorbed) == doctest::Approx(100.0));

    CHECK_THROWS_AS(polygon_union(a, square(5, 5)), ddc::NotOverlapping);
}

TEST_CASE("polygon union: membership equivalence and area bounds") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> off(-2.5, 2.5);
    int checked = 0;
    for (int i = 0; i < 40; ++i) {
        const auto a = star(0, 0, 2.0, 20, rng);
        const auto b = star(off(rng), off(rng), 2.0, 20, rng);
        if (!polygons_overlap(a, b)) continue;
        ++checked;
        const auto u = polygon_union(a, b);
        REQUIRE(is_valid(u));
        const auto ub = polygon_union(b, a);
        CHECK(area(u) <= area(a) + area(b) + 1e-9);
        CHECK(area(u) >= std::max(area(a), area(b)) - 1e-9);
        CHECK(std::abs(area(u) - area(ub)) < 1e-9);
        for (const auto& p : oracle::uniform_samples(oracle::box_of({a, b}), 10000, 17 + i)) {
            if (oracle::boundary_dist(p, a) < 1e-7 || oracle::boundary_dist(p, b) < 1e-7 ||
                oracle::boundary_dist(p, u) < 1e-7)
                continue;
            REQUIRE(oracle::inside(p, u) == (oracle::inside(p, a) || oracle::inside(p, b)));
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("intersection area") {
    CHECK(intersection_area(square(0, 0), square(0.5, 0)) == doctest::Approx(0.5));
    CHECK(intersection_area(square(0, 0), square(5, 5)) == 0.0);
}

TEST_CASE("validity checks") {
    CHECK(is_valid(square(0, 0)));
    CHECK_FALSE(is_valid(Contour{{Ring{{0, 0}, {0, 1}, {1, 1}, {1, 0}}}}));  // clockwise outer
    CHECK_FALSE(is_valid(Contour{{Ring{{0, 0}, {1, 1}, {1, 0}, {0, 1}}}}));  // bow tie
    CHECK_FALSE(is_valid(Contour{{Ring{{0, 0}, {1, 0}}}}));
}

TEST_CASE("thin contour around collinear points") {
    const std::vector<Point> pts{{0, 0}, {1, 1}, {2, 2}};
    const auto c = thin_contour(pts, 1e-3);
    CHECK(is_valid(c));
    for (const auto& p : pts) CHECK(point_in_contour(p, c));
    const std::vector<Point> single{{3, 4}};
    const auto s = thin_contour(single, 1e-3);
    CHECK(is_valid(s));
    CHECK(point_in_contour({3, 4}, s));
    CHECK(area(s) == doctest::Approx(4e-6));
}

TEST_CASE("simplify outward: grows, stays close and reduces vertices") {
    for (unsigned seed = 1; seed <= 10; ++seed) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> g(0.0, 5.0);
        std::vector<Point> pts;
        for (int i = 0; i < 800; ++i) pts.push_back({g(rng), g(rng)});
        const auto hull = concave_hull_relative(pts);
        const double tol = 1.0;
        const auto s = simplify_outward(hull, tol);
        REQUIRE(is_valid(s));
        CHECK(s.vertex_count() * 5 < hull.vertex_count() * 3);
        for (const auto& p : pts) REQUIRE(point_in_contour(p, s));
        for (const auto& ring : s.rings)
            for (const auto& v : ring) CHECK(distance_to_boundary(v, hull) <= tol * (1.0 + 1e-9));
        CHECK(area(s) >= area(hull));
    }
}

TEST_CASE("simplify outward: annulus keeps its hole") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi), rad(14.0, 18.0);
    std::vector<Point> pts;
    for (int i = 0; i < 1600; ++i) {
        const double a = ang(rng), r = rad(rng);
        pts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    const auto s = simplify_outward(concave_hull_relative(pts), 2.5);
    REQUIRE(is_valid(s));
    CHECK(s.rings.size() >= 2);
    CHECK_FALSE(point_in_contour({0, 0}, s));
    for (const auto& p : pts) REQUIRE(point_in_contour(p, s));
    CHECK(s.vertex_count() < 60);
}

TEST_CASE("offset: square grows by the distance, never beyond") {
    const auto sq = make_rectangle(0, 0, 2, 2);
    const auto grown = offset(sq, 1.0);
    REQUIRE(grown.size() == 1);
    REQUIRE(is_valid(grown[0]));
    // Exact offset area is 4 + 8 + pi; chords make it slightly smaller.
    const double exact = 12.0 + std::numbers::pi;
    CHECK(area(grown[0]) <= exact);
    CHECK(area(grown[0]) >= exact * 0.99);
    for (const auto& v : grown[0].outer()) CHECK(distance_to_boundary(v, sq) <= 1.0 + 1e-9);
    CHECK(point_in_contour({-0.99, 1.0}, grown[0]));

    // A hole narrower than twice the distance closes.
    Contour frame{{make_rectangle(0, 0, 10, 10).outer(), {{4, 4}, {4, 6}, {6, 6}, {6, 4}}}};
    REQUIRE(is_valid(frame));
    const auto closed = offset(frame, 1.5);
    REQUIRE(closed.size() == 1);
    CHECK(closed[0].rings.size() == 1);
    const auto open = offset(frame, 0.5);
    CHECK(open[0].rings.size() == 2);
}

TEST_CASE("simplify outward: small inputs are left alone or stay valid") {
    const auto tri = Contour{{{{0, 0}, {1, 0}, {0, 1}}}};
    const auto s = simplify_outward(tri, 0.5);
    REQUIRE(is_valid(s));
    CHECK(s.vertex_count() <= 3);
    for (const auto& v : tri.outer()) CHECK(point_in_contour(v, s));
    CHECK(simplify_outward(tri, 0.0) == tri);

    // Zig-zag edge: shallow teeth vanish under a tolerance above their depth.
    Ring zig{{0, 0}, {10, 0}, {10, 5}};
    for (int i = 9; i >= 1; --i) zig.push_back({static_cast<double>(i), 5.0 + 0.2 * (i % 2)});
    zig.push_back({0, 5});
    const Contour comb{{zig}};
    REQUIRE(is_valid(comb));
    const auto flat = simplify_outward(comb, 0.5);
    REQUIRE(is_valid(flat));
    CHECK(flat.vertex_count() < comb.vertex_count());
    for (const auto& v : zig) CHECK(point_in_contour(v, flat));
}
