#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ddc/data/generate.hpp"

namespace ddc::data {

enum class Assignment { Shuffle, SpatialTiles };

// Disjoint: no point goes to two nodes, except the explicit whole-dataset
// replicas of one-big-rest-small and seven-big-one-small. Independent: every
// node draws its own random subset, so fragments may share points.
enum class Overlap { Disjoint, Independent };

struct PartitionSpec {
    enum class Kind { Sizes, RandomRange, OneBigRestSmall, SevenBigOneSmall, CapacityProportional, Equal };

    Kind kind = Kind::Equal;
    int k = 1;
    std::vector<std::size_t> sizes;  // Sizes
    std::size_t lo = 0;              // RandomRange
    std::size_t hi = 0;
    std::vector<double> speeds;  // CapacityProportional
    Assignment assignment = Assignment::Shuffle;
    Overlap overlap = Overlap::Disjoint;
};

/// Accepts "equal(8)", "random-range(1500,10000,8)", "one-big-rest-small(8)",
/// "seven-big-one-small(8)", "capacity-proportional" (speeds supplied
/// separately) and explicit size lists "sizes(1500,2500,...)". Throws
/// SpecError.
PartitionSpec parse_partition(const std::string& text);

std::string to_string(const PartitionSpec& spec);

Assignment parse_assignment(const std::string& name);
std::string to_string(Assignment a);
Overlap parse_overlap(const std::string& name);
std::string to_string(Overlap o);

/// Sizes per node for a dataset of n points. Throws SpecError when a
/// disjoint spec needs more points than there are.
std::vector<std::size_t> fragment_sizes(const PartitionSpec& spec, std::size_t n, std::uint64_t seed);

/// Deterministic under the seed.
std::vector<PointSet> partition(const PointSet& ds, const PartitionSpec& spec, std::uint64_t seed);

}  // namespace ddc::data
