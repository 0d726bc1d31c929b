#include "ddc/presets/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "ddc/errors.hpp"

namespace ddc::presets {

Backend parse_backend(const std::string& name) {
    if (name == "sim") return Backend::Sim;
    if (name == "concurrent") return Backend::Concurrent;
    throw ConfigError("unknown backend: " + name);
}

std::string to_string(Backend b) { return b == Backend::Sim ? "sim" : "concurrent"; }

Outcome run_scenario(const runtime::ScenarioConfig& config, Backend backend, runtime::CommMode comm,
                     bool with_quality) {
    return run_scenario(config, runtime::prepare(config), backend, comm, with_quality);
}

Outcome run_scenario(const runtime::ScenarioConfig& config, const runtime::Prepared& p, Backend backend,
                     runtime::CommMode comm, bool with_quality) {
    Outcome o;
    o.run = backend == Backend::Sim ? runtime::simulate(config, p, comm, config.cost)
                                    : runtime::run_concurrent(config, p, comm);
    o.exchange_ratio = metrics::exchange_ratio(o.run.local);

    std::size_t fastest = 0;
    for (std::size_t i = 1; i < p.nodes.size(); ++i)
        if (p.nodes[i].speed > p.nodes[fastest].speed) fastest = i;
    o.t1_d_ms = o.run.ledger.rows[fastest].step1_ms;

    const auto t0 = std::chrono::steady_clock::now();
    const auto reference = cluster::build_local_model(0, p.dataset, p.params, config.hull);
    const double measured = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    double t1 = measured;
    if (backend == Backend::Sim) {
        const double n = static_cast<double>(reference.n);
        const double c = static_cast<double>(reference.clustered_points());
        t1 = (config.cost.k_cluster * n * n + (c > 1.0 ? config.cost.k_contour * c * std::log2(c) : 0.0)) /
             p.nodes[fastest].speed;
    }
    o.speedup = metrics::speedup(std::max(t1, 1e-9), std::max(o.run.ledger.total_exec_ms, 1e-9),
                                 static_cast<int>(p.nodes.size()));

    if (with_quality) {
        o.has_quality = true;
        o.quality = metrics::quality(p.dataset, o.run.global, cluster::dbscan(p.dataset, p.params), reference);
    }
    return o;
}

serialize::json metrics_json(const Outcome& o) {
    serialize::json j;
    j["exchange_ratio"] = o.exchange_ratio;
    j["transmitted_vertices"] = [&] {
        std::size_t w = 0;
        for (const auto& m : o.run.local) w += m.vertex_count();
        return w;
    }();
    j["messages"] = o.run.messages;
    j["payload_bytes"] = o.run.payload_bytes;
    j["global_clusters"] = o.run.global.clusters.size();
    j["total_exec_ms"] = o.run.ledger.total_exec_ms;
    j["speedup"] = {{"t1_ms", o.speedup.t1_ms},
                    {"tp_ms", o.speedup.tp_ms},
                    {"p", o.speedup.p},
                    {"alpha", o.speedup.alpha},
                    {"super_linear", o.speedup.super_linear}};
    j["t1_d_ms"] = o.t1_d_ms;
    if (o.has_quality) j["quality"] = {{"ari", o.quality.ari}, {"sym_diff", o.quality.sym_diff}};
    return j;
}

serialize::json sweep_json(const metrics::ScalabilitySweep& s) {
    serialize::json rows = serialize::json::array();
    for (const auto& r : s.rows)
        rows.push_back({{"m", r.m}, {"phase1_ms", r.phase1_ms}, {"phase2_ms", r.phase2_ms}, {"total_ms", r.total_ms}});
    return {{"rows", rows}, {"optimal_m", s.optimal_m}};
}

}  // namespace ddc::presets
