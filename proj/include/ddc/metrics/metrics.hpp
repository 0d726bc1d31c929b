#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "ddc/cluster/local_model.hpp"
#include "ddc/data/generate.hpp"
#include "ddc/merge/merge.hpp"
#include "ddc/runtime/scenario.hpp"

namespace ddc::metrics {

struct SpeedupReport {
    double t1_ms = 0.0;
    double tp_ms = 0.0;
    int p = 1;
    double alpha = 0.0;
    bool super_linear = false;  // alpha > p
};

/// alpha = t1 / tp. Throws InvalidTime for nonpositive times.
SpeedupReport speedup(double t1_ms, double tp_ms, int p);

/// Transmitted contour vertices over input points; 0 when nothing was
/// clustered.
double exchange_ratio(const std::vector<cluster::LocalModel>& models);

/// gid of the contour holding each point (boundary counts), cluster::kNoise
/// when none does.
std::vector<int> assign_global_labels(const data::PointSet& ds, const merge::GlobalModel& gm);

/// Noise is treated as one more label. Labelings must have equal length.
double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b);

struct QualityReport {
    double ari = 0.0;
    // Per reference cluster, |A xor B| / |B| against the best-matching global
    // contour (1 when nothing matches).
    std::vector<double> sym_diff;
    double worst_sym_diff = 0.0;
};

/// Compares a global model with the sequential result on the whole dataset.
QualityReport quality(const data::PointSet& ds, const merge::GlobalModel& gm, const std::vector<int>& reference_labels,
                      const cluster::LocalModel& reference);

struct SweepRow {
    int m = 1;
    double phase1_ms = 0.0;  // slowest node's phase 1
    double phase2_ms = 0.0;  // total minus phase 1
    double total_ms = 0.0;
};

struct ScalabilitySweep {
    std::vector<SweepRow> rows;
    int optimal_m = 1;  // smallest m with the least total
};

inline const std::vector<int> kDefaultNodeCounts{1, 2, 4, 8, 16, 32, 64};

/// Equal partitions of `ds` over m uniform nodes for every m, simulated.
/// `base` supplies dbscan/hull parameters, tree degree, link profile and
/// seed; its partition and node list are ignored.
ScalabilitySweep scalability_sweep(const data::PointSet& ds, const std::vector<int>& node_counts,
                                   const runtime::CostModel& cost, runtime::CommMode comm,
                                   const runtime::ScenarioConfig& base);

/// m,phase1_ms,phase2_ms,total_ms with three decimals.
void write_sweep_csv(std::ostream& os, const ScalabilitySweep& sweep);

}  // namespace ddc::metrics
