#pragma once

#include <string>

#include "ddc/metrics/metrics.hpp"
#include "ddc/runtime/engine.hpp"
#include "ddc/serialize/json.hpp"

namespace ddc::presets {

enum class Backend { Sim, Concurrent };

Backend parse_backend(const std::string& name);
std::string to_string(Backend b);

struct Outcome {
    runtime::RunResult run;
    double exchange_ratio = 0.0;
    // Against the sequential run: the whole dataset on the fastest node
    // (cost model under sim, measured under concurrent).
    metrics::SpeedupReport speedup;
    double t1_d_ms = 0.0;  // phase 1 of the fastest node on its own fragment
    bool has_quality = false;
    metrics::QualityReport quality;
};

/// Runs one scenario and scores it. Quality needs a sequential clustering of
/// the whole dataset and can be skipped.
Outcome run_scenario(const runtime::ScenarioConfig& config, Backend backend, runtime::CommMode comm,
                     bool with_quality = true);
Outcome run_scenario(const runtime::ScenarioConfig& config, const runtime::Prepared& p, Backend backend,
                     runtime::CommMode comm, bool with_quality = true);

serialize::json metrics_json(const Outcome& o);
serialize::json sweep_json(const metrics::ScalabilitySweep& s);

}  // namespace ddc::presets
