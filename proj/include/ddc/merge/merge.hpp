#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ddc/cluster/local_model.hpp"
#include "ddc/geom/types.hpp"
#include "ddc/merge/merge_tree.hpp"

namespace ddc::merge {

/// (node id, local cluster id) of a contour that went into a merged region.
using Provenance = std::pair<int, int>;

struct TaggedContour {
    geom::Contour contour;
    std::vector<Provenance> provenance;  // sorted, never empty
};

using ContourSet = std::vector<TaggedContour>;

ContourSet tag(const cluster::LocalModel& model);

std::size_t vertex_count(const ContourSet& set);

/// Edge intersections between the contours of `a` and those of `b`, summed
/// over all pairs whose bounding boxes meet.
std::size_t count_intersections(const ContourSet& a, const ContourSet& b);

/// Replaces every connected component of the overlap relation (over all
/// contours of all sets) by the union of its members. Output is sorted by
/// smallest provenance and does not depend on the order of the input.
ContourSet merge_contour_sets(const std::vector<ContourSet>& sets);

/// Untagged convenience form.
std::vector<geom::Contour> merge_contour_sets(const std::vector<std::vector<geom::Contour>>& sets);

struct GlobalCluster {
    int gid = 0;
    geom::Contour contour;
    std::vector<Provenance> provenance;
};

struct GlobalModel {
    std::vector<GlobalCluster> clusters;

    std::size_t vertex_count() const;
};

/// Global ids follow the order of smallest provenance.
GlobalModel finalize(ContourSet merged);

/// Runs the merge hierarchy level by level from the bottom: every group
/// leader merges the sets held by its members.
GlobalModel run_phase2(const std::vector<cluster::LocalModel>& models, const MergeTree& tree);

}  // namespace ddc::merge
