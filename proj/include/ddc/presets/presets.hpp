#pragma once

#include <string>
#include <vector>

#include "ddc/runtime/scenario.hpp"

namespace ddc::presets {

/// Cost coefficients and link profile tuned so the simulated runs reproduce
/// the timing ratios of the reference experiments.
runtime::CostModel calibrated_cost();
runtime::NodeProfile calibrated_link();

struct Preset {
    enum class Kind { Scenario, Sweep };

    std::string name;
    std::string description;
    Kind kind = Kind::Scenario;
    runtime::ScenarioConfig scenario;  // for sweeps: dataset, parameters, cost, link
    std::vector<int> node_counts;      // sweeps only
};

/// experiment-i .. experiment-iv, speedup, sweep-d1, sweep-d2.
const std::vector<std::string>& preset_names();

/// Throws ConfigError for an unknown name.
Preset preset(const std::string& name);

}  // namespace ddc::presets
