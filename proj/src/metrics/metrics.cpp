#include "ddc/metrics/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <map>

#include "ddc/errors.hpp"
#include "ddc/geom/boolean.hpp"
#include "ddc/geom/polygon.hpp"
#include "ddc/runtime/engine.hpp"

namespace ddc::metrics {

SpeedupReport speedup(double t1_ms, double tp_ms, int p) {
    if (!(t1_ms > 0.0) || !(tp_ms > 0.0)) throw InvalidTime("speedup needs positive times");
    if (p < 1) throw InvalidTime("speedup needs at least one node");
    SpeedupReport r{t1_ms, tp_ms, p, t1_ms / tp_ms, false};
    r.super_linear = r.alpha > p;
    return r;
}

double exchange_ratio(const std::vector<cluster::LocalModel>& models) {
    std::size_t w = 0, n = 0;
    for (const auto& m : models) {
        w += m.vertex_count();
        n += m.n;
    }
    return n ? static_cast<double>(w) / static_cast<double>(n) : 0.0;
}

std::vector<int> assign_global_labels(const data::PointSet& ds, const merge::GlobalModel& gm) {
    std::vector<geom::BoundingBox> boxes;
    for (const auto& c : gm.clusters) boxes.push_back(geom::bounding_box(c.contour));
    std::vector<int> labels(ds.size(), cluster::kNoise);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t k = 0; k < gm.clusters.size(); ++k) {
            if (!boxes[k].contains(ds[i]) || !geom::point_in_contour(ds[i], gm.clusters[k].contour)) continue;
            labels[i] = gm.clusters[k].gid;
            break;
        }
    }
    return labels;
}

double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw Error("labelings differ in length");
    const auto pairs = [](double x) { return x * (x - 1.0) / 2.0; };
    std::map<std::pair<int, int>, double> joint;
    std::map<int, double> ra, rb;
    for (std::size_t i = 0; i < a.size(); ++i) {
        joint[{a[i], b[i]}] += 1.0;
        ra[a[i]] += 1.0;
        rb[b[i]] += 1.0;
    }
    double index = 0.0, sa = 0.0, sb = 0.0;
    for (const auto& [k, v] : joint) index += pairs(v);
    for (const auto& [k, v] : ra) sa += pairs(v);
    for (const auto& [k, v] : rb) sb += pairs(v);
    const double total = pairs(static_cast<double>(a.size()));
    if (total == 0.0) return 1.0;
    const double expected = sa * sb / total;
    const double max_index = 0.5 * (sa + sb);
    // Both labelings trivial (one group each, or all singletons).
    if (max_index == expected) return 1.0;
    return (index - expected) / (max_index - expected);
}

QualityReport quality(const data::PointSet& ds, const merge::GlobalModel& gm, const std::vector<int>& reference_labels,
                      const cluster::LocalModel& reference) {
    QualityReport q;
    q.ari = adjusted_rand_index(assign_global_labels(ds, gm), reference_labels);
    for (const auto& rc : reference.clusters) {
        const double ref_area = geom::area(rc.contour);
        double best = 0.0, ratio = 1.0;
        for (const auto& g : gm.clusters) {
            const double common = geom::intersection_area(rc.contour, g.contour);
            if (common <= best) continue;
            best = common;
            ratio = (geom::area(g.contour) + ref_area - 2.0 * common) / ref_area;
        }
        q.sym_diff.push_back(ratio);
        q.worst_sym_diff = std::max(q.worst_sym_diff, ratio);
    }
    return q;
}

ScalabilitySweep scalability_sweep(const data::PointSet& ds, const std::vector<int>& node_counts,
                                   const runtime::CostModel& cost, runtime::CommMode comm,
                                   const runtime::ScenarioConfig& base) {
    if (node_counts.empty()) throw ConfigError("sweep needs at least one node count");
    ScalabilitySweep sweep;
    for (const int m : node_counts) {
        auto config = base;
        config.partition = data::PartitionSpec{};
        config.partition.kind = data::PartitionSpec::Kind::Equal;
        config.partition.k = m;
        config.partition.assignment = base.partition.assignment;
        config.nodes.clear();
        const auto p = runtime::prepare(config, ds);
        const auto r = runtime::simulate(config, p, comm, cost);
        double phase1 = 0.0;
        for (const auto& row : r.ledger.rows) phase1 = std::max(phase1, row.step1_ms);
        sweep.rows.push_back({m, phase1, r.ledger.total_exec_ms - phase1, r.ledger.total_exec_ms});
    }
    if (!sweep.rows.empty()) {
        const auto best = std::min_element(sweep.rows.begin(), sweep.rows.end(),
                                           [](const SweepRow& a, const SweepRow& b) { return a.total_ms < b.total_ms; });
        sweep.optimal_m = best->m;
    }
    return sweep;
}

void write_sweep_csv(std::ostream& os, const ScalabilitySweep& sweep) {
    os << "m,phase1_ms,phase2_ms,total_ms\n";
    char buf[128];
    for (const auto& r : sweep.rows) {
        std::snprintf(buf, sizeof buf, "%d,%.3f,%.3f,%.3f\n", r.m, r.phase1_ms, r.phase2_ms, r.total_ms);
        os << buf;
    }
}

}  // namespace ddc::metrics
