#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddc/cluster/dbscan.hpp"
#include "ddc/cluster/local_model.hpp"
#include "ddc/data/generate.hpp"
#include "ddc/data/partition.hpp"
#include "ddc/merge/merge_tree.hpp"

namespace ddc::runtime {

enum class CommMode { Sync, Async };

CommMode parse_comm(const std::string& name);
std::string to_string(CommMode m);

struct NodeProfile {
    int node_id = 0;
    double speed = 1.0;         // relative to the reference machine
    double latency_ms = 0.0;    // per message
    double bandwidth = 1e300;   // payload bytes per ms

    // Throws ConfigError.
    void validate() const;
};

// Times are in ms on a node of speed 1. Phase 1 costs
// k_cluster * n^2 + k_contour * c log2 c for n fragment points of which c are
// clustered; every payload a leader folds costs k_merge * (w log2 w + p)
// with w the vertices involved and p their edge intersections.
struct CostModel {
    double k_cluster = 21270.0 / 1e8;
    double k_contour = 1e-4;
    double k_merge = 0.0;
    double payload_unit = 16.0;  // bytes per contour vertex

    // Quadratic clustering term only, everything else free.
    static CostModel pure_n2();

    void validate() const;
};

// Either a generated scene or a CSV file.
struct DatasetRef {
    std::string shape = "d1-like";
    std::size_t n = 0;  // 0 = the shape's default size
    std::uint64_t seed = 1;
    std::string path;
};

struct ScenarioConfig {
    std::string name = "custom";
    DatasetRef dataset;
    data::PartitionSpec partition;
    std::vector<NodeProfile> nodes;  // one per fragment; empty = copies of `link`
    NodeProfile link;                // speed and link defaults for generated profiles
    std::optional<cluster::DbscanParams> dbscan;  // default: calibrated for the shape
    cluster::HullOptions hull;
    int degree = 2;
    merge::Election election = merge::Election::LowestId;
    CommMode comm = CommMode::Sync;
    CostModel cost;
    std::uint64_t seed = 1;
};

/// Everything a backend needs, resolved from a config.
struct Prepared {
    data::PointSet dataset;
    std::vector<data::PointSet> fragments;
    std::vector<NodeProfile> nodes;
    cluster::DbscanParams params;
    merge::MergeTree tree;
};

/// Loads or generates the dataset, partitions it and builds the merge tree.
/// Throws ConfigError (and SpecError, UnknownShape from the data layer).
Prepared prepare(const ScenarioConfig& config);

/// Same, for an already loaded dataset.
Prepared prepare(const ScenarioConfig& config, data::PointSet dataset);

}  // namespace ddc::runtime
