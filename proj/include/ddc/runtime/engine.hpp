#pragma once

#include <cstddef>
#include <vector>

#include "ddc/cluster/local_model.hpp"
#include "ddc/merge/merge.hpp"
#include "ddc/runtime/ledger.hpp"
#include "ddc/runtime/scenario.hpp"

namespace ddc::runtime {

struct RunResult {
    std::vector<cluster::LocalModel> local;
    merge::GlobalModel global;
    TimingLedger ledger;
    std::size_t messages = 0;       // contour payloads sent between nodes
    std::size_t payload_bytes = 0;  // their size under the cost model's unit
};

/// Local models for every fragment (real clustering, no timing).
std::vector<cluster::LocalModel> build_local_models(const Prepared& p, const cluster::HullOptions& hull);

/// Virtual-clock run. Local models are computed for real; every duration
/// comes from the cost model. Bit-identical ledgers for identical inputs.
/// Throws ConfigError.
RunResult simulate(const ScenarioConfig& config, CommMode comm, const CostModel& cost);
RunResult simulate(const ScenarioConfig& config, const Prepared& p, CommMode comm, const CostModel& cost);

/// Timing half of simulate for local models already at hand.
RunResult simulate(const Prepared& p, std::vector<cluster::LocalModel> local, CommMode comm, const CostModel& cost);

/// One thread per node, contours exchanged as serialized messages, times
/// measured on the wall clock. Throws ConfigError.
RunResult run_concurrent(const ScenarioConfig& config, CommMode comm);
RunResult run_concurrent(const ScenarioConfig& config, const Prepared& p, CommMode comm);

}  // namespace ddc::runtime
