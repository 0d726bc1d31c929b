#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ddc/data/generate.hpp"
#include "ddc/data/partition.hpp"
#include "ddc/errors.hpp"
#include "ddc/geom/boolean.hpp"
#include "ddc/geom/polygon.hpp"
#include "ddc/merge/merge.hpp"
#include "ddc/merge/merge_tree.hpp"
#include "oracles.hpp"

using namespace ddc;
using geom::Contour;
using geom::make_rectangle;

namespace {

Contour square(double x, double y) { return make_rectangle(x, y, x + 1, y + 1); }

std::vector<Contour> regions(const merge::GlobalModel& g) {
    std::vector<Contour> out;
    for (const auto& c : g.clusters) out.push_back(c.contour);
    return out;
}

// Membership in the union of `a` equals membership in the union of `b` at
// random points, skipping points within 1e-7 of any edge.
bool same_region(const std::vector<Contour>& a, const std::vector<Contour>& b, std::size_t samples = 10000) {
    auto all = a;
    all.insert(all.end(), b.begin(), b.end());
    if (all.empty()) return true;
    auto box = oracle::box_of(all);
    for (const auto& p : oracle::uniform_samples(box, samples, 17)) {
        bool near = false;
        for (const auto& c : all) near = near || oracle::boundary_dist(p, c) < 1e-7;
        if (near) continue;
        const auto in = [&](const std::vector<Contour>& cs) {
            return std::any_of(cs.begin(), cs.end(), [&](const Contour& c) { return oracle::inside(p, c); });
        };
        if (in(a) != in(b)) return false;
    }
    return true;
}

std::vector<cluster::LocalModel> d1_models(int k) {
    const auto ds = data::generate("d1-like", 10000, 1);
    const auto frags = data::partition(ds, data::parse_partition("equal(" + std::to_string(k) + ")"), 1);
    std::vector<cluster::LocalModel> out;
    for (std::size_t i = 0; i < frags.size(); ++i)
        out.push_back(cluster::build_local_model(static_cast<int>(i) + 1, frags[i], data::calibrated_params("d1-like")));
    return out;
}

std::vector<int> ids(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return v;
}

}  // namespace

TEST_CASE("merge tree: spec examples") {
    const auto t8 = merge::build_merge_tree(ids(8), 2);
    CHECK(t8.height == 3);
    REQUIRE(t8.levels.size() == 3);
    CHECK(t8.levels[0].size() == 1);
    CHECK(t8.levels[1].size() == 2);
    CHECK(t8.levels[2].size() == 4);
    CHECK(t8.root == 1);

    const auto t1 = merge::build_merge_tree({42}, 3);
    CHECK(t1.height == 0);
    CHECK(t1.root == 42);

    const auto t7 = merge::build_merge_tree(ids(7), 2);
    const auto& bottom = t7.levels.back();
    REQUIRE(bottom.size() == 4);
    for (std::size_t g = 0; g < 3; ++g) CHECK(bottom[g].members.size() == 2);
    CHECK(bottom[3].members == std::vector<int>{7});
}

TEST_CASE("merge tree: structure invariants") {
    for (int n = 1; n <= 40; ++n) {
        for (int d = 2; d <= 5; ++d) {
            const auto t = merge::build_merge_tree(ids(n), d);
            CHECK(t.height == static_cast<int>(std::ceil(std::log(n) / std::log(d) - 1e-12)));
            std::vector<int> participants = ids(n);
            for (int L = t.height - 1; L >= 0; --L) {
                std::vector<int> seen, leaders;
                for (const auto& g : t.levels[static_cast<std::size_t>(L)]) {
                    CHECK(g.members.size() <= static_cast<std::size_t>(d));
                    CHECK(std::find(g.members.begin(), g.members.end(), g.leader) != g.members.end());
                    seen.insert(seen.end(), g.members.begin(), g.members.end());
                    leaders.push_back(g.leader);
                }
                std::sort(seen.begin(), seen.end());
                CHECK(seen == participants);
                participants = leaders;
                std::sort(participants.begin(), participants.end());
            }
            CHECK(participants == std::vector<int>{t.root});
        }
    }
}

TEST_CASE("merge tree: fastest election and errors") {
    const std::vector<double> speed{0.5, 2.0, 1.0, 3.0, 1.0};
    const auto t = merge::build_merge_tree(ids(5), 2, merge::Election::Fastest,
                                           [&](int id) { return speed[static_cast<std::size_t>(id - 1)]; });
    CHECK(t.levels.back()[0].leader == 2);
    CHECK(t.levels.back()[1].leader == 4);
    CHECK(t.root == 4);
    CHECK_THROWS_AS(merge::build_merge_tree({}, 2), ConfigError);
    CHECK_THROWS_AS(merge::build_merge_tree(ids(3), 1), ConfigError);
    CHECK(merge::parse_election("fastest") == merge::Election::Fastest);
    CHECK_THROWS_AS(merge::parse_election("oldest"), ConfigError);
}

TEST_CASE("merge contour sets: spec examples") {
    const auto a = merge::merge_contour_sets(std::vector<std::vector<Contour>>{{square(0, 0)}, {square(0, 0)}});
    REQUIRE(a.size() == 1);
    CHECK(geom::area(a[0]) == doctest::Approx(1.0));

    const auto b = merge::merge_contour_sets(std::vector<std::vector<Contour>>{{square(0, 0)}, {square(5, 5)}});
    REQUIRE(b.size() == 2);
    CHECK(b[0] == square(0, 0));
    CHECK(b[1] == square(5, 5));

    // A overlaps B, B overlaps C, A does not touch C.
    const std::vector<std::vector<Contour>> chain{{square(0, 0)}, {square(0.5, 0)}, {square(1.0, 0)}};
    REQUIRE_FALSE(geom::polygons_overlap(square(0, 0), square(1.0, 0)) == false);
    const std::vector<std::vector<Contour>> gap_chain{{square(0, 0)}, {square(0.9, 0)}, {square(1.8, 0)}};
    for (const auto& sets : {chain, gap_chain}) {
        const auto c = merge::merge_contour_sets(sets);
        REQUIRE(c.size() == 1);
        CHECK(same_region(c, {sets[0][0], sets[1][0], sets[2][0]}));
    }
}

TEST_CASE("merge contour sets: disjoint, conserving and order independent") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 20), s(0.5, 3);
    for (int round = 0; round < 20; ++round) {
        std::vector<std::vector<Contour>> sets(4);
        std::vector<Contour> flat;
        for (auto& set : sets)
            for (int k = 0; k < 5; ++k) {
                const double x = u(rng), y = u(rng);
                set.push_back(make_rectangle(x, y, x + s(rng), y + s(rng)));
                flat.push_back(set.back());
            }
        const auto merged = merge::merge_contour_sets(sets);
        for (std::size_t i = 0; i < merged.size(); ++i) {
            CHECK(geom::is_valid(merged[i]));
            for (std::size_t j = i + 1; j < merged.size(); ++j) CHECK_FALSE(geom::polygons_overlap(merged[i], merged[j]));
        }
        CHECK(same_region(merged, flat, 4000));

        auto shuffled = sets;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (auto& set : shuffled) std::shuffle(set.begin(), set.end(), rng);
        CHECK(same_region(merge::merge_contour_sets(shuffled), merged, 4000));
    }
}

TEST_CASE("merge: provenance and global ids") {
    merge::ContourSet a{{square(0, 0), {{2, 0}}}, {square(10, 10), {{2, 1}}}};
    merge::ContourSet b{{square(0.5, 0.5), {{1, 3}}}};
    const auto gm = merge::finalize(merge::merge_contour_sets(std::vector<merge::ContourSet>{a, b}));
    REQUIRE(gm.clusters.size() == 2);
    CHECK(gm.clusters[0].gid == 0);
    CHECK(gm.clusters[0].provenance == std::vector<merge::Provenance>{{1, 3}, {2, 0}});
    CHECK(gm.clusters[1].provenance == std::vector<merge::Provenance>{{2, 1}});
    CHECK(merge::count_intersections(a, b) == 2);
}

TEST_CASE("run phase 2: single node passes its contours through") {
    const auto models = d1_models(1);
    const auto gm = merge::run_phase2(models, merge::build_merge_tree({1}, 2));
    REQUIRE(gm.clusters.size() == models[0].clusters.size());
    for (std::size_t k = 0; k < gm.clusters.size(); ++k) CHECK(gm.clusters[k].contour == models[0].clusters[k].contour);
}

TEST_CASE("run phase 2: four quadrants of a ring give one cluster") {
    const auto ring = data::generate("ring", 4000, 3);
    const auto params = data::calibrated_params("ring");
    const auto box = geom::bounding_box(ring);
    const double cx = 0.5 * (box.min_x + box.max_x), cy = 0.5 * (box.min_y + box.max_y);
    // Quadrants widened by eps so neighbouring fragments share a seam.
    std::vector<data::PointSet> quads(4);
    for (const auto& p : ring) {
        const double m = params.eps;
        if (p.x >= cx - m && p.y >= cy - m) quads[0].push_back(p);
        if (p.x <= cx + m && p.y >= cy - m) quads[1].push_back(p);
        if (p.x <= cx + m && p.y <= cy + m) quads[2].push_back(p);
        if (p.x >= cx - m && p.y <= cy + m) quads[3].push_back(p);
    }
    // Raw chi-shapes; a looser threshold than the default keeps the dense
    // band free of pinhole holes that would differ between the two runs.
    cluster::HullOptions raw;
    raw.simplify_tolerance = 0.0;
    raw.factor = 2.5;
    std::vector<cluster::LocalModel> models;
    for (int q = 0; q < 4; ++q) models.push_back(cluster::build_local_model(q + 1, quads[static_cast<std::size_t>(q)], params, raw));
    const auto gm = merge::run_phase2(models, merge::build_merge_tree(ids(4), 2));
    REQUIRE(gm.clusters.size() == 1);
    CHECK(gm.clusters[0].provenance.size() == 4);

    const auto whole = cluster::build_local_model(0, ring, params, raw);
    REQUIRE(whole.clusters.size() == 1);
    const auto& a = gm.clusters[0].contour;
    const auto& b = whole.clusters[0].contour;
    const double sym = geom::area(a) + geom::area(b) - 2.0 * geom::intersection_area(a, b);
    CHECK(sym / geom::area(b) <= 0.02);
    CHECK(a.rings.size() == 2);  // the ring keeps its hole
}

TEST_CASE("run phase 2: hierarchy invariance over tree degrees") {
    const auto models = d1_models(8);
    std::vector<merge::ContourSet> leaves;
    for (const auto& m : models) leaves.push_back(merge::tag(m));
    const auto flat = regions(merge::finalize(merge::merge_contour_sets(leaves)));
    for (const int d : {2, 3, 4, 8}) {
        const auto gm = merge::run_phase2(models, merge::build_merge_tree(ids(8), d));
        CHECK(same_region(regions(gm), flat));
        for (std::size_t i = 0; i < gm.clusters.size(); ++i)
            for (std::size_t j = i + 1; j < gm.clusters.size(); ++j)
                CHECK_FALSE(geom::polygons_overlap(gm.clusters[i].contour, gm.clusters[j].contour));
    }
    auto reversed = models;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(same_region(regions(merge::run_phase2(reversed, merge::build_merge_tree(ids(8), 2))), flat));
}
