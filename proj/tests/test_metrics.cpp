#include <doctest.h>

#include <random>
#include <sstream>

#include "ddc/cluster/dbscan.hpp"
#include "ddc/data/partition.hpp"
#include "ddc/errors.hpp"
#include "ddc/geom/polygon.hpp"
#include "ddc/metrics/metrics.hpp"
#include "ddc/presets/presets.hpp"
#include "ddc/runtime/engine.hpp"
#include "oracles.hpp"

using namespace ddc;

TEST_CASE("speedup") {
    const auto r = metrics::speedup(15841, 1761, 8);
    CHECK(r.alpha == doctest::Approx(8.9955).epsilon(1e-4));
    CHECK(r.super_linear);
    const auto flat = metrics::speedup(100, 100, 4);
    CHECK(flat.alpha == 1.0);
    CHECK_FALSE(flat.super_linear);
    CHECK_FALSE(metrics::speedup(400, 100, 4).super_linear);
    CHECK_THROWS_AS(metrics::speedup(0, 10, 2), InvalidTime);
    CHECK_THROWS_AS(metrics::speedup(10, -1, 2), InvalidTime);
}

TEST_CASE("speedup: quadratic clustering cost alone gives m squared") {
    runtime::ScenarioConfig c;
    c.dataset.shape = "d1-like";
    c.cost = runtime::CostModel::pure_n2();
    c.partition = data::parse_partition("equal(1)");
    const double t1 = runtime::simulate(c, runtime::CommMode::Sync, c.cost).ledger.total_exec_ms;
    for (const int m : {2, 4, 8}) {
        c.partition = data::parse_partition("equal(" + std::to_string(m) + ")");
        const double tp = runtime::simulate(c, runtime::CommMode::Sync, c.cost).ledger.total_exec_ms;
        CHECK(metrics::speedup(t1, tp, m).alpha == doctest::Approx(m * m).epsilon(0.01));
    }
}

TEST_CASE("exchange ratio") {
    cluster::LocalModel a;
    a.n = 5000;
    a.clusters.push_back({0, 3000, geom::make_rectangle(0, 0, 1, 1)});
    cluster::LocalModel b;
    b.n = 5000;
    b.clusters.push_back({0, 4000, geom::make_rectangle(5, 5, 6, 6)});
    b.clusters.push_back({1, 500, geom::make_rectangle(8, 8, 9, 9)});
    // 12 vertices for 10000 points.
    CHECK(metrics::exchange_ratio({a, b}) == doctest::Approx(0.0012));

    cluster::LocalModel noise;
    noise.n = 100;
    noise.noise = 100;
    CHECK(metrics::exchange_ratio({noise}) == 0.0);
    CHECK(metrics::exchange_ratio({}) == 0.0);
}

TEST_CASE("assign global labels") {
    merge::GlobalModel gm;
    gm.clusters.push_back({0, geom::make_rectangle(0, 0, 2, 2), {{1, 0}}});
    gm.clusters.push_back({1, geom::make_rectangle(10, 0, 12, 2), {{2, 0}}});
    const data::PointSet pts{{1, 1}, {11, 1}, {5, 5}, {2, 1}, {0, 0}};
    CHECK(metrics::assign_global_labels(pts, gm) == std::vector<int>{0, 1, cluster::kNoise, 0, 0});
    CHECK(metrics::assign_global_labels(pts, {}) == std::vector<int>(5, cluster::kNoise));
}

TEST_CASE("adjusted rand index agrees with the pair-count formula") {
    CHECK(metrics::adjusted_rand_index({0, 0, 1, 1}, {5, 5, 7, 7}) == doctest::Approx(1.0));
    CHECK(metrics::adjusted_rand_index({0, 0, 1, 1}, {0, 1, 0, 1}) == doctest::Approx(-0.5));
    CHECK_THROWS_AS(metrics::adjusted_rand_index({0, 1}, {0}), Error);

    std::mt19937_64 rng(4);
    for (int round = 0; round < 30; ++round) {
        std::uniform_int_distribution<int> len(2, 300), ka(1, 6), kb(1, 6);
        const int n = len(rng);
        std::uniform_int_distribution<int> la(-1, ka(rng) - 1), lb(-1, kb(rng) - 1);
        std::vector<int> u(n), v(n);
        for (int i = 0; i < n; ++i) {
            u[i] = la(rng);
            v[i] = rng() % 4 == 0 ? lb(rng) : u[i];
        }
        const double want = oracle::pair_count_ari(u, v);
        const double got = metrics::adjusted_rand_index(u, v);
        CHECK(got == doctest::Approx(want).epsilon(1e-9));
        CHECK(got <= 1.0 + 1e-12);
    }
}

TEST_CASE("scalability sweep") {
    auto base = presets::preset("sweep-d1").scenario;
    const auto ds = data::generate("d1-like", data::default_size("d1-like"), 1);

    const auto one = metrics::scalability_sweep(ds, {4}, presets::calibrated_cost(), runtime::CommMode::Sync, base);
    REQUIRE(one.rows.size() == 1);
    CHECK(one.optimal_m == 4);

    const auto s =
        metrics::scalability_sweep(ds, {1, 2, 4, 8, 16}, presets::calibrated_cost(), runtime::CommMode::Sync, base);
    REQUIRE(s.rows.size() == 5);
    CHECK(s.rows[0].phase2_ms == 0.0);
    for (std::size_t i = 1; i < s.rows.size(); ++i) {
        CHECK(s.rows[i].phase1_ms < s.rows[i - 1].phase1_ms);
        CHECK(s.rows[i].phase2_ms >= s.rows[i - 1].phase2_ms);
        CHECK(s.rows[i].total_ms == doctest::Approx(s.rows[i].phase1_ms + s.rows[i].phase2_ms));
    }
    int best = s.rows[0].m;
    double least = s.rows[0].total_ms;
    for (const auto& r : s.rows)
        if (r.total_ms < least) least = r.total_ms, best = r.m;
    CHECK(s.optimal_m == best);

    std::ostringstream os;
    metrics::write_sweep_csv(os, one);
    CHECK(os.str().rfind("m,phase1_ms,phase2_ms,total_ms\n4,", 0) == 0);
    CHECK_THROWS_AS(metrics::scalability_sweep(ds, {}, presets::calibrated_cost(), runtime::CommMode::Sync, base), ConfigError);
}

TEST_CASE("quality: distributed result matches the sequential clustering") {
    runtime::ScenarioConfig c;
    c.dataset.shape = "d1-like";
    c.dataset.n = 4000;
    c.partition = data::parse_partition("equal(4)");
    const auto p = runtime::prepare(c);
    const auto r = runtime::simulate(c, p, runtime::CommMode::Async, presets::calibrated_cost());
    const auto labels = cluster::dbscan(p.dataset, p.params);
    const auto ref = cluster::build_local_model(0, p.dataset, p.params);
    const auto q = metrics::quality(p.dataset, r.global, labels, ref);
    CHECK(q.ari >= 0.95);
    CHECK(q.sym_diff.size() == ref.clusters.size());
    for (const double d : q.sym_diff) CHECK(d <= q.worst_sym_diff);
}
