#include "ddc/cluster/dbscan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "ddc/errors.hpp"

namespace ddc::cluster {

void DbscanParams::validate() const {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw ConfigError("dbscan: eps must be positive");
    if (min_pts < 1) throw ConfigError("dbscan: min_pts must be at least 1");
}

namespace {

constexpr int kUnvisited = -2;

// Uniform grid with cell size eps: the eps-neighbourhood of a point lies in
// its own cell and the eight around it.
class GridIndex {
public:
    GridIndex(std::span<const geom::Point> pts, double eps) : pts_(pts), eps_(eps), eps2_(eps * eps) {
        cells_.reserve(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) cells_[key(cell_of(pts[i].x), cell_of(pts[i].y))].push_back(i);
    }

    void neighbours(std::size_t i, std::vector<std::size_t>& out) const {
        out.clear();
        const geom::Point& p = pts_[i];
        const std::int64_t cx = cell_of(p.x), cy = cell_of(p.y);
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                auto it = cells_.find(key(cx + dx, cy + dy));
                if (it == cells_.end()) continue;
                for (std::size_t j : it->second) {
                    const double ex = pts_[j].x - p.x, ey = pts_[j].y - p.y;
                    if (ex * ex + ey * ey <= eps2_) out.push_back(j);
                }
            }
        }
    }

private:
    std::int64_t cell_of(double v) const { return static_cast<std::int64_t>(std::floor(v / eps_)); }
    static std::uint64_t key(std::int64_t cx, std::int64_t cy) {
        return (static_cast<std::uint64_t>(cx) << 32) ^ (static_cast<std::uint64_t>(cy) & 0xffffffffULL);
    }

    std::span<const geom::Point> pts_;
    double eps_;
    double eps2_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

}  // namespace

std::vector<int> dbscan(std::span<const geom::Point> points, const DbscanParams& params) {
    params.validate();
    const std::size_t n = points.size();
    std::vector<int> label(n, kUnvisited);
    if (n == 0) return label;

    const GridIndex index(points, params.eps);
    const auto min_pts = static_cast<std::size_t>(params.min_pts);
    std::vector<std::size_t> nb, seeds;
    int next_id = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (label[i] != kUnvisited) continue;
        index.neighbours(i, nb);
        if (nb.size() < min_pts) {
            label[i] = kNoise;  // may still become a border point later
            continue;
        }
        const int id = next_id++;
        label[i] = id;
        seeds.assign(nb.begin(), nb.end());
        for (std::size_t k = 0; k < seeds.size(); ++k) {
            const std::size_t q = seeds[k];
            if (label[q] == kNoise) label[q] = id;
            if (label[q] != kUnvisited) continue;
            label[q] = id;
            index.neighbours(q, nb);
            if (nb.size() < min_pts) continue;
            for (std::size_t j : nb)
                if (label[j] == kUnvisited || label[j] == kNoise) seeds.push_back(j);
        }
    }
    return label;
}

int cluster_count(const std::vector<int>& labels) {
    int top = -1;
    for (int l : labels) top = std::max(top, l);
    return top + 1;
}

}  // namespace ddc::cluster
