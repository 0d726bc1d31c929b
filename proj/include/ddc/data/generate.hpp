#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ddc/cluster/dbscan.hpp"
#include "ddc/geom/types.hpp"

namespace ddc::data {

using PointSet = std::vector<geom::Point>;

/// gaussian-blob, ring, circle-disk, oval, crescent, nested, d1-like, d2-like.
const std::vector<std::string>& shape_names();

/// Size used when the caller does not give one (10,000 for d1-like, 30,000
/// for d2-like, 1,000 otherwise). Throws UnknownShape.
std::size_t default_size(const std::string& shape);

/// Deterministic for a fixed seed. Scenes live in the square [0, 100]^2.
/// Throws UnknownShape, or ConfigError when n == 0.
PointSet generate(const std::string& shape, std::size_t n, std::uint64_t seed);

/// DBSCAN parameters calibrated for each shape at its default size; they also
/// hold up on the 1/8 subsamples used by the eight-node scenarios.
cluster::DbscanParams calibrated_params(const std::string& shape);

/// Number of clusters the scene is built from.
int expected_clusters(const std::string& shape);

}  // namespace ddc::data
