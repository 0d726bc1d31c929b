#include "ddc/runtime/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "ddc/data/point_io.hpp"
#include "ddc/errors.hpp"

namespace ddc::runtime {

CommMode parse_comm(const std::string& name) {
    if (name == "sync" || name == "SYNC") return CommMode::Sync;
    if (name == "async" || name == "ASYNC") return CommMode::Async;
    throw ConfigError("unknown comm mode: " + name);
}

std::string to_string(CommMode m) { return m == CommMode::Sync ? "sync" : "async"; }

void NodeProfile::validate() const {
    if (!(speed > 0.0) || !std::isfinite(speed)) throw ConfigError("node " + std::to_string(node_id) + ": speed must be positive");
    if (!(bandwidth > 0.0)) throw ConfigError("node " + std::to_string(node_id) + ": bandwidth must be positive");
    if (!(latency_ms >= 0.0)) throw ConfigError("node " + std::to_string(node_id) + ": latency must be >= 0");
}

CostModel CostModel::pure_n2() {
    CostModel c;
    c.k_contour = 0.0;
    c.k_merge = 0.0;
    c.payload_unit = 0.0;
    return c;
}

void CostModel::validate() const {
    for (const double k : {k_cluster, k_contour, k_merge, payload_unit})
        if (!(k >= 0.0) || !std::isfinite(k)) throw ConfigError("cost coefficients must be finite and >= 0");
}

Prepared prepare(const ScenarioConfig& config) {
    const auto& d = config.dataset;
    if (!d.path.empty()) return prepare(config, data::read_points(d.path));
    const std::size_t n = d.n ? d.n : data::default_size(d.shape);
    return prepare(config, data::generate(d.shape, n, d.seed));
}

Prepared prepare(const ScenarioConfig& config, data::PointSet dataset) {
    config.cost.validate();
    if (config.degree < 2) throw ConfigError("tree degree must be at least 2");

    Prepared p;
    p.dataset = std::move(dataset);
    if (config.dbscan) {
        p.params = *config.dbscan;
    } else {
        if (!config.dataset.path.empty()) throw ConfigError("a dataset file needs explicit dbscan parameters");
        p.params = data::calibrated_params(config.dataset.shape);
    }
    p.params.validate();

    auto spec = config.partition;
    if (spec.kind == data::PartitionSpec::Kind::CapacityProportional && spec.speeds.empty()) {
        if (config.nodes.empty()) throw ConfigError("capacity-proportional partition needs node profiles");
        for (const auto& n : config.nodes) spec.speeds.push_back(n.speed);
        spec.k = static_cast<int>(spec.speeds.size());
    }
    p.fragments = data::partition(p.dataset, spec, config.seed);

    p.nodes = config.nodes;
    if (p.nodes.empty()) {
        p.nodes.assign(p.fragments.size(), config.link);
        for (std::size_t i = 0; i < p.nodes.size(); ++i) p.nodes[i].node_id = static_cast<int>(i) + 1;
    }
    if (p.nodes.size() != p.fragments.size())
        throw ConfigError(std::to_string(p.nodes.size()) + " node profiles for " + std::to_string(p.fragments.size()) +
                          " fragments");
    std::vector<int> ids;
    for (const auto& n : p.nodes) {
        n.validate();
        ids.push_back(n.node_id);
    }
    auto sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ConfigError("duplicate node id");
    const auto speed_of = [&](int id) {
        for (const auto& n : p.nodes)
            if (n.node_id == id) return n.speed;
        return 0.0;
    };
    p.tree = merge::build_merge_tree(ids, config.degree, config.election, speed_of);
    return p;
}

}  // namespace ddc::runtime
