#pragma once

#include <span>
#include <vector>

#include "ddc/geom/types.hpp"

namespace ddc::cluster {

inline constexpr int kNoise = -1;

struct DbscanParams {
    double eps = 1.0;
    int min_pts = 4;  // neighbourhood size needed for a core point, the point itself included

    // Throws ConfigError.
    void validate() const;
};

/// Cluster id per point (0, 1, ... in discovery order) or kNoise. Points are
/// scanned in index order; a border point reachable from several clusters
/// joins the first one that reaches it.
std::vector<int> dbscan(std::span<const geom::Point> points, const DbscanParams& params);

/// Number of distinct non-noise labels.
int cluster_count(const std::vector<int>& labels);

}  // namespace ddc::cluster
