#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ddc/cluster/dbscan.hpp"
#include "ddc/geom/concave_hull.hpp"
#include "ddc/geom/types.hpp"

namespace ddc::cluster {

inline constexpr double kDefaultToleranceFactor = 1.25;

struct HullOptions {
    double factor = geom::kDefaultHullFactor;  // chi-shape threshold = factor * mean Delaunay edge
    double simplify_tolerance = -1.0;          // outward simplification bound; negative means
                                               // kDefaultToleranceFactor * dbscan eps
};

struct LocalCluster {
    int id = 0;
    std::size_t count = 0;
    geom::Contour contour;
};

struct LocalModel {
    int node_id = 0;
    std::size_t n = 0;
    std::size_t noise = 0;
    std::vector<LocalCluster> clusters;

    std::size_t clustered_points() const { return n - noise; }
    std::size_t vertex_count() const;
    double reduction_ratio() const;
};

/// Any labeling with kNoise for noise and 0..k-1 for clusters.
using Labeler = std::function<std::vector<int>(std::span<const geom::Point>)>;

/// Contour of one cluster's points. Clusters too small or too thin to
/// triangulate get a thin rectangle of half-thickness `degenerate_half_width`.
geom::Contour cluster_contour(std::span<const geom::Point> members, const HullOptions& hull, double tolerance,
                              double degenerate_half_width);

LocalModel build_local_model(int node_id, std::span<const geom::Point> points, const DbscanParams& params,
                             const HullOptions& hull = {});

LocalModel build_local_model(int node_id, std::span<const geom::Point> points, const Labeler& labeler,
                             const HullOptions& hull, double simplify_tolerance);

}  // namespace ddc::cluster
