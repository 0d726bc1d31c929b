#pragma once

#include <string>

#include "ddc/data/generate.hpp"

namespace ddc::data {

/// One "x,y" line per point, optional header line. Throws ConfigError when
/// the file cannot be read or a line does not parse.
PointSet read_points(const std::string& path);

void write_points(const std::string& path, const PointSet& points);

}  // namespace ddc::data
