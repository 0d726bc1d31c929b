#include "ddc/presets/presets.hpp"

#include "ddc/errors.hpp"
#include "ddc/metrics/metrics.hpp"

namespace ddc::presets {

namespace {

// Relative machine speeds, from the clustering time each machine needed for
// its share of the 10,000-point dataset (quadratic cost, M1 = 1).
const std::vector<double> kMixedSpeeds{1.0, 1.254, 0.448, 1.158, 2.601, 2.914, 0.707, 2.393};
const std::vector<double> kFastSmallSpeeds{1.0, 1.546, 0.519, 1.093, 2.064, 1.943, 1.356, 1.796};
// The eighth machine's speed cannot be recovered from its run; assumed 1.
const std::vector<double> kSlowBigSpeeds{1.0, 0.985, 0.401, 0.656, 1.225, 1.343, 0.549, 1.0};

runtime::ScenarioConfig base(const std::string& name, const std::string& shape, const std::string& partition) {
    runtime::ScenarioConfig c;
    c.name = name;
    c.dataset.shape = shape;
    c.dataset.n = data::default_size(shape);
    c.dataset.seed = 1;
    c.partition = data::parse_partition(partition);
    c.link = calibrated_link();
    c.cost = calibrated_cost();
    c.degree = 2;
    c.seed = 1;
    return c;
}

void with_speeds(runtime::ScenarioConfig& c, const std::vector<double>& speeds) {
    c.nodes.clear();
    for (std::size_t i = 0; i < speeds.size(); ++i) {
        auto n = c.link;
        n.node_id = static_cast<int>(i) + 1;
        n.speed = speeds[i];
        c.nodes.push_back(n);
    }
}

}  // namespace

runtime::CostModel calibrated_cost() {
    runtime::CostModel c;
    c.k_cluster = 21270.0 / 1e8;
    c.k_contour = 1e-4;
    c.k_merge = 0.02;
    c.payload_unit = 16.0;
    return c;
}

runtime::NodeProfile calibrated_link() {
    runtime::NodeProfile n;
    n.latency_ms = 550.0;
    n.bandwidth = 1000.0;
    return n;
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"experiment-i", "experiment-ii", "experiment-iii", "experiment-iv",
                                                "speedup",      "sweep-d1",      "sweep-d2"};
    return names;
}

Preset preset(const std::string& name) {
    Preset p;
    p.name = name;
    if (name == "experiment-i") {
        p.description = "random fragments of 1500..10000 points per machine, mixed machine speeds";
        p.scenario = base(name, "d1-like", "random-range(1500,10000,8)");
        p.scenario.partition.overlap = data::Overlap::Independent;
        with_speeds(p.scenario, kMixedSpeeds);
    } else if (name == "experiment-ii") {
        p.description = "whole dataset on one machine, an eighth on each of the other seven";
        p.scenario = base(name, "d1-like", "one-big-rest-small(8)");
        with_speeds(p.scenario, kFastSmallSpeeds);
    } else if (name == "experiment-iii") {
        p.description = "whole dataset on seven machines, an eighth on the last";
        p.scenario = base(name, "d1-like", "seven-big-one-small(8)");
        with_speeds(p.scenario, kSlowBigSpeeds);
    } else if (name == "experiment-iv") {
        p.description = "fragments proportional to machine capacity, groups of four";
        p.scenario = base(name, "d1-like", "capacity-proportional");
        with_speeds(p.scenario, kSlowBigSpeeds);
        p.scenario.degree = 4;
    } else if (name == "speedup") {
        p.description = "eight equal fragments on eight reference machines";
        p.scenario = base(name, "d1-like", "equal(8)");
    } else if (name == "sweep-d1" || name == "sweep-d2") {
        const std::string shape = name == "sweep-d1" ? "d1-like" : "d2-like";
        p.description = "execution time against node count, equal fragments, " + shape;
        p.kind = Preset::Kind::Sweep;
        p.scenario = base(name, shape, "equal(1)");
        p.node_counts = metrics::kDefaultNodeCounts;
    } else {
        throw ConfigError("unknown preset: " + name);
    }
    return p;
}

}  // namespace ddc::presets
