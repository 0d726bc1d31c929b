#include "ddc/cluster/local_model.hpp"

#include "ddc/errors.hpp"
#include "ddc/geom/polygon.hpp"
#include "ddc/geom/simplify.hpp"

namespace ddc::cluster {

std::size_t LocalModel::vertex_count() const {
    std::size_t w = 0;
    for (const auto& c : clusters) w += c.contour.vertex_count();
    return w;
}

double LocalModel::reduction_ratio() const {
    return n == 0 ? 0.0 : static_cast<double>(vertex_count()) / static_cast<double>(n);
}

geom::Contour cluster_contour(std::span<const geom::Point> members, const HullOptions& hull, double tolerance,
                              double degenerate_half_width) {
    try {
        geom::Contour c = geom::concave_hull_relative(members, hull.factor);
        if (tolerance > 0.0) c = geom::simplify_outward(c, tolerance);
        return c;
    } catch (const DegenerateInput&) {
        return geom::thin_contour(members, degenerate_half_width);
    }
}

LocalModel build_local_model(int node_id, std::span<const geom::Point> points, const Labeler& labeler,
                             const HullOptions& hull, double simplify_tolerance) {
    LocalModel model;
    model.node_id = node_id;
    model.n = points.size();
    const std::vector<int> labels = labeler(points);
    if (labels.size() != points.size()) throw Error("labeler returned the wrong number of labels");

    const int k = cluster_count(labels);
    std::vector<std::vector<geom::Point>> members(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == kNoise) {
            ++model.noise;
            continue;
        }
        members[static_cast<std::size_t>(labels[i])].push_back(points[i]);
    }

    double diameter = 0.0;
    if (!points.empty()) diameter = geom::bounding_box(std::vector<geom::Point>(points.begin(), points.end())).diagonal();
    const double half_width = diameter > 0.0 ? 1e-6 * diameter : 1e-6;

    for (int id = 0; id < k; ++id) {
        const auto& pts = members[static_cast<std::size_t>(id)];
        if (pts.empty()) continue;
        model.clusters.push_back({id, pts.size(), cluster_contour(pts, hull, simplify_tolerance, half_width)});
    }
    return model;
}

LocalModel build_local_model(int node_id, std::span<const geom::Point> points, const DbscanParams& params,
                             const HullOptions& hull) {
    params.validate();
    const double tolerance = hull.simplify_tolerance < 0.0 ? kDefaultToleranceFactor * params.eps : hull.simplify_tolerance;
    return build_local_model(
        node_id, points, [&params](std::span<const geom::Point> p) { return dbscan(p, params); }, hull, tolerance);
}

}  // namespace ddc::cluster
