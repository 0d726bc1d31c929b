#include "ddc/data/generate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "ddc/errors.hpp"

namespace ddc::data {

namespace {

using geom::Point;
using Rng = std::mt19937_64;

// One scene component: a sampler plus its share of the points.
struct Component {
    double weight;
    std::function<Point(Rng&)> sample;
};

std::function<Point(Rng&)> uniform_region(double x0, double y0, double x1, double y1,
                                          std::function<bool(const Point&)> inside) {
    return [=](Rng& rng) {
        std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
        while (true) {
            const Point p{ux(rng), uy(rng)};
            if (inside(p)) return p;
        }
    };
}

Component disk(double cx, double cy, double r) {
    return {std::numbers::pi * r * r, uniform_region(cx - r, cy - r, cx + r, cy + r, [=](const Point& p) {
                return std::hypot(p.x - cx, p.y - cy) <= r;
            })};
}

Component ring(double cx, double cy, double r0, double r1) {
    return {std::numbers::pi * (r1 * r1 - r0 * r0), uniform_region(cx - r1, cy - r1, cx + r1, cy + r1, [=](const Point& p) {
                const double d = std::hypot(p.x - cx, p.y - cy);
                return d >= r0 && d <= r1;
            })};
}

Component oval(double cx, double cy, double a, double b) {
    return {std::numbers::pi * a * b, uniform_region(cx - a, cy - b, cx + a, cy + b, [=](const Point& p) {
                const double u = (p.x - cx) / a, v = (p.y - cy) / b;
                return u * u + v * v <= 1.0;
            })};
}

// Disk of radius r minus a disk of radius r_cut whose center is shifted by
// (dx, dy).
Component crescent(double cx, double cy, double r, double r_cut, double dx, double dy) {
    // Area by inclusion-exclusion of the two disks.
    const double d = std::hypot(dx, dy);
    double overlap = 0.0;
    if (d <= r - r_cut) {
        overlap = std::numbers::pi * r_cut * r_cut;
    } else if (d < r + r_cut) {
        const double a1 = std::acos((d * d + r * r - r_cut * r_cut) / (2 * d * r));
        const double a2 = std::acos((d * d + r_cut * r_cut - r * r) / (2 * d * r_cut));
        overlap = r * r * (a1 - std::sin(2 * a1) / 2) + r_cut * r_cut * (a2 - std::sin(2 * a2) / 2);
    }
    return {std::numbers::pi * r * r - overlap, uniform_region(cx - r, cy - r, cx + r, cy + r, [=](const Point& p) {
                return std::hypot(p.x - cx, p.y - cy) <= r && std::hypot(p.x - cx - dx, p.y - cy - dy) > r_cut;
            })};
}

// Truncated at 2.5 sigma so the blob has a finite footprint.
Component gaussian(double cx, double cy, double sigma, double weight) {
    return {weight, [=](Rng& rng) {
                std::normal_distribution<double> g(0.0, sigma);
                while (true) {
                    const double x = g(rng), y = g(rng);
                    if (x * x + y * y <= 6.25 * sigma * sigma) return Point{cx + x, cy + y};
                }
            }};
}

std::vector<Component> scene(const std::string& shape) {
    if (shape == "gaussian-blob") return {gaussian(50, 50, 5, 1.0)};
    if (shape == "ring") return {ring(50, 50, 14, 18)};
    if (shape == "circle-disk") return {disk(50, 50, 10)};
    if (shape == "oval") return {oval(50, 50, 18, 7)};
    if (shape == "crescent") return {crescent(50, 50, 13, 10, 4, 3)};
    if (shape == "nested") return {ring(50, 50, 14, 18), disk(50, 50, 6)};
    if (shape == "d1-like") {
        // Six clusters, one ring surrounding a disk.
        auto parts = std::vector<Component>{ring(30, 65, 14, 18),       disk(30, 65, 6),       oval(30, 20, 18, 7),
                                            crescent(72, 72, 13, 10, 4, 3), disk(90, 50, 5)};
        double uniform_area = 0.0;
        for (const auto& c : parts) uniform_area += c.weight;
        // The blob takes about 15% of the points.
        parts.push_back(gaussian(75, 25, 4, uniform_area * 0.15 / 0.85));
        return parts;
    }
    if (shape == "d2-like") {
        // 2 small circles, 1 big circle (a thick ring) and 2 ovals side by side.
        return {disk(15, 85, 6), disk(85, 85, 6), ring(50, 60, 17, 22), oval(30, 18, 16, 7), oval(70, 18, 16, 7)};
    }
    throw UnknownShape("unknown shape: " + shape);
}

// Largest-remainder split of n into parts proportional to the weights.
std::vector<std::size_t> apportion(std::size_t n, const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    std::vector<std::size_t> out(weights.size());
    std::vector<std::pair<double, std::size_t>> rem;
    std::size_t used = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double exact = static_cast<double>(n) * weights[i] / total;
        out[i] = static_cast<std::size_t>(std::floor(exact));
        used += out[i];
        rem.push_back({exact - static_cast<double>(out[i]), i});
    }
    std::stable_sort(rem.begin(), rem.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
    for (std::size_t k = 0; used < n; ++k, ++used) ++out[rem[k % rem.size()].second];
    return out;
}

}  // namespace

const std::vector<std::string>& shape_names() {
    static const std::vector<std::string> names{"gaussian-blob", "ring",   "circle-disk", "oval",
                                                "crescent",      "nested", "d1-like",     "d2-like"};
    return names;
}

std::size_t default_size(const std::string& shape) {
    scene(shape);  // validates the name
    if (shape == "d1-like") return 10000;
    if (shape == "d2-like") return 30000;
    return 1000;
}

PointSet generate(const std::string& shape, std::size_t n, std::uint64_t seed) {
    const auto parts = scene(shape);
    if (n == 0) throw ConfigError("generate: n must be positive");
    if (shape == "gaussian-blob" && n == 1) return {{50.0, 50.0}};

    std::vector<double> weights;
    for (const auto& c : parts) weights.push_back(c.weight);
    const auto counts = apportion(n, weights);

    Rng rng(seed);
    PointSet out;
    out.reserve(n);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t k = 0; k < counts[i]; ++k) out.push_back(parts[i].sample(rng));
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

cluster::DbscanParams calibrated_params(const std::string& shape) {
    scene(shape);
    if (shape == "d2-like") return {2.0, 4};
    return {2.5, 4};
}

int expected_clusters(const std::string& shape) { return static_cast<int>(scene(shape).size()); }

}  // namespace ddc::data
