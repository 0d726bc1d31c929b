#include "ddc/data/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <regex>
#include <sstream>

#include "ddc/errors.hpp"

namespace ddc::data {

namespace {

std::vector<std::size_t> parse_numbers(const std::string& args, const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
            if (used != item.size() || v < 0) throw SpecError("");
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw SpecError("bad number in partition spec: " + text);
        }
    }
    return out;
}

// Sizes plus which nodes receive a full replica of the dataset.
struct Plan {
    std::vector<std::size_t> sizes;
    std::vector<char> replica;
};

Plan plan(const PartitionSpec& spec, std::size_t n, std::mt19937_64& rng) {
    Plan p;
    const auto k = static_cast<std::size_t>(spec.k);
    using Kind = PartitionSpec::Kind;
    switch (spec.kind) {
        case Kind::Sizes:
            p.sizes = spec.sizes;
            break;
        case Kind::RandomRange: {
            if (spec.lo > spec.hi) throw SpecError("random-range: lo exceeds hi");
            std::uniform_int_distribution<std::size_t> dist(spec.lo, spec.hi);
            for (std::size_t i = 0; i < k; ++i) p.sizes.push_back(dist(rng));
            break;
        }
        case Kind::OneBigRestSmall:
            p.sizes.assign(k, n / k);
            p.sizes[0] = n;
            p.replica.assign(k, 0);
            p.replica[0] = 1;
            break;
        case Kind::SevenBigOneSmall:
            p.sizes.assign(k, n);
            p.sizes[k - 1] = n / k;
            p.replica.assign(k, 1);
            p.replica[k - 1] = 0;
            break;
        case Kind::CapacityProportional: {
            if (spec.speeds.empty()) throw SpecError("capacity-proportional needs node speeds");
            double total = 0.0;
            for (const double s : spec.speeds) {
                if (!(s > 0.0)) throw SpecError("capacity-proportional: speeds must be positive");
                total += s;
            }
            // Largest remainder, ties to the lower index.
            std::vector<std::pair<double, std::size_t>> rem;
            std::size_t assigned = 0;
            for (std::size_t i = 0; i < spec.speeds.size(); ++i) {
                const double exact = static_cast<double>(n) * spec.speeds[i] / total;
                const auto base = static_cast<std::size_t>(std::floor(exact));
                p.sizes.push_back(base);
                assigned += base;
                rem.push_back({exact - static_cast<double>(base), i});
            }
            std::stable_sort(rem.begin(), rem.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
            for (std::size_t r = 0; assigned < n && r < rem.size(); ++r, ++assigned) ++p.sizes[rem[r].second];
            break;
        }
        case Kind::Equal:
            p.sizes.assign(k, n / k);
            for (std::size_t i = 0; i < n % k; ++i) ++p.sizes[i];
            break;
    }
    if (p.replica.empty()) p.replica.assign(p.sizes.size(), 0);
    if (p.sizes.empty()) throw SpecError("partition spec yields no nodes");
    return p;
}

// Points grouped by grid tile (snake order over a ceil(sqrt(k)) square grid),
// random order inside each tile.
std::vector<std::size_t> tile_order(const PointSet& ds, std::size_t k, std::vector<std::size_t> order) {
    if (ds.empty()) return order;
    const auto box = geom::bounding_box(ds);
    const auto t = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(k))));
    const double w = std::max(box.max_x - box.min_x, 1e-12);
    const double h = std::max(box.max_y - box.min_y, 1e-12);
    auto tile = [&](std::size_t i) {
        const auto& p = ds[i];
        const auto cx = std::min(t - 1, static_cast<std::size_t>((p.x - box.min_x) / w * static_cast<double>(t)));
        const auto cy = std::min(t - 1, static_cast<std::size_t>((p.y - box.min_y) / h * static_cast<double>(t)));
        return cy * t + (cy % 2 == 0 ? cx : t - 1 - cx);
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return tile(a) < tile(b); });
    return order;
}

}  // namespace

PartitionSpec parse_partition(const std::string& text) {
    PartitionSpec spec;
    if (text == "capacity-proportional" || text == "capacity-proportional()") {
        spec.kind = PartitionSpec::Kind::CapacityProportional;
        return spec;
    }
    static const std::regex form(R"(\s*([a-z-]+)\s*\((.*)\)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, form)) throw SpecError("unrecognized partition spec: " + text);
    const std::string name = m[1];
    const auto args = parse_numbers(m[2], text);
    auto need = [&](std::size_t count) {
        if (args.size() != count) throw SpecError("wrong number of arguments in partition spec: " + text);
    };
    using Kind = PartitionSpec::Kind;
    if (name == "sizes") {
        if (args.empty()) throw SpecError("sizes() needs at least one size");
        spec.kind = Kind::Sizes;
        spec.sizes = args;
        spec.k = static_cast<int>(args.size());
        return spec;
    }
    if (name == "random-range") {
        need(3);
        spec.kind = Kind::RandomRange;
        spec.lo = args[0];
        spec.hi = args[1];
        spec.k = static_cast<int>(args[2]);
        if (spec.lo > spec.hi) throw SpecError("random-range: lo exceeds hi in " + text);
    } else if (name == "one-big-rest-small") {
        need(1);
        spec.kind = Kind::OneBigRestSmall;
        spec.k = static_cast<int>(args[0]);
    } else if (name == "seven-big-one-small") {
        need(1);
        spec.kind = Kind::SevenBigOneSmall;
        spec.k = static_cast<int>(args[0]);
    } else if (name == "equal") {
        need(1);
        spec.kind = Kind::Equal;
        spec.k = static_cast<int>(args[0]);
    } else {
        throw SpecError("unknown partition strategy: " + name);
    }
    if (spec.k < 1) throw SpecError("partition spec needs at least one node: " + text);
    return spec;
}

std::string to_string(const PartitionSpec& spec) {
    using Kind = PartitionSpec::Kind;
    std::ostringstream out;
    switch (spec.kind) {
        case Kind::Sizes:
            out << "sizes(";
            for (std::size_t i = 0; i < spec.sizes.size(); ++i) out << (i ? "," : "") << spec.sizes[i];
            out << ")";
            break;
        case Kind::RandomRange:
            out << "random-range(" << spec.lo << "," << spec.hi << "," << spec.k << ")";
            break;
        case Kind::OneBigRestSmall:
            out << "one-big-rest-small(" << spec.k << ")";
            break;
        case Kind::SevenBigOneSmall:
            out << "seven-big-one-small(" << spec.k << ")";
            break;
        case Kind::CapacityProportional:
            out << "capacity-proportional";
            break;
        case Kind::Equal:
            out << "equal(" << spec.k << ")";
            break;
    }
    return out.str();
}

Assignment parse_assignment(const std::string& name) {
    if (name == "shuffle") return Assignment::Shuffle;
    if (name == "spatial-tiles") return Assignment::SpatialTiles;
    throw SpecError("unknown assignment policy: " + name);
}

std::string to_string(Assignment a) { return a == Assignment::Shuffle ? "shuffle" : "spatial-tiles"; }

Overlap parse_overlap(const std::string& name) {
    if (name == "disjoint") return Overlap::Disjoint;
    if (name == "independent") return Overlap::Independent;
    throw SpecError("unknown overlap policy: " + name);
}

std::string to_string(Overlap o) { return o == Overlap::Disjoint ? "disjoint" : "independent"; }

std::vector<std::size_t> fragment_sizes(const PartitionSpec& spec, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return plan(spec, n, rng).sizes;
}

std::vector<PointSet> partition(const PointSet& ds, const PartitionSpec& spec, std::uint64_t seed) {
    const std::size_t n = ds.size();
    std::mt19937_64 rng(seed);
    const Plan p = plan(spec, n, rng);
    const std::size_t k = p.sizes.size();

    auto base_order = [&] {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        if (spec.assignment == Assignment::SpatialTiles) order = tile_order(ds, k, std::move(order));
        return order;
    };
    auto take = [&](const std::vector<std::size_t>& order, std::size_t from, std::size_t count) {
        PointSet f;
        f.reserve(count);
        for (std::size_t i = from; i < from + count; ++i) f.push_back(ds[order[i]]);
        return f;
    };

    std::vector<PointSet> out(k);
    if (spec.overlap == Overlap::Independent) {
        for (std::size_t i = 0; i < k; ++i) {
            if (p.sizes[i] > n) throw SpecError("fragment larger than the dataset");
            if (p.replica[i]) {
                out[i] = ds;
                continue;
            }
            // Spatial tiles keep a fragment contiguous: a window of the tile
            // order starting at a random offset.
            const auto order = base_order();
            std::size_t from = 0;
            if (spec.assignment == Assignment::SpatialTiles && n > p.sizes[i]) {
                from = std::uniform_int_distribution<std::size_t>(0, n - p.sizes[i])(rng);
            }
            out[i] = take(order, from, p.sizes[i]);
        }
        return out;
    }

    std::size_t needed = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (p.replica[i]) continue;
        needed += p.sizes[i];
    }
    if (needed > n) throw SpecError("fragment sizes exceed the dataset under the disjoint policy");
    const auto order = base_order();
    std::size_t next = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (p.replica[i]) {
            out[i] = ds;
            continue;
        }
        out[i] = take(order, next, p.sizes[i]);
        next += p.sizes[i];
    }
    return out;
}

}  // namespace ddc::data
