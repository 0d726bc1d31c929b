#include "ddc/merge/merge.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "ddc/errors.hpp"
#include "ddc/geom/boolean.hpp"
#include "ddc/geom/polygon.hpp"

namespace ddc::merge {

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

bool provenance_less(const TaggedContour& a, const TaggedContour& b) { return a.provenance < b.provenance; }

// Unions the members of one overlap component, growing the region from the
// member with the smallest provenance so that every step joins a contour
// overlapping what has been merged so far.
TaggedContour fold(const std::vector<const TaggedContour*>& members,
                   const std::vector<std::vector<std::size_t>>& adjacent) {
    const std::size_t n = members.size();
    TaggedContour acc = *members.front();
    std::vector<char> seen(n, 0);
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> frontier;
    seen[0] = 1;
    for (const auto j : adjacent[0]) {
        seen[j] = 1;
        frontier.push(j);
    }
    while (!frontier.empty()) {
        const std::size_t i = frontier.top();
        frontier.pop();
        acc.contour = geom::polygon_union(acc.contour, members[i]->contour);
        acc.provenance.insert(acc.provenance.end(), members[i]->provenance.begin(), members[i]->provenance.end());
        for (const auto j : adjacent[i]) {
            if (seen[j]) continue;
            seen[j] = 1;
            frontier.push(j);
        }
    }
    std::sort(acc.provenance.begin(), acc.provenance.end());
    acc.provenance.erase(std::unique(acc.provenance.begin(), acc.provenance.end()), acc.provenance.end());
    return acc;
}

}  // namespace

ContourSet tag(const cluster::LocalModel& model) {
    ContourSet out;
    out.reserve(model.clusters.size());
    for (const auto& c : model.clusters) out.push_back({c.contour, {{model.node_id, c.id}}});
    return out;
}

std::size_t vertex_count(const ContourSet& set) {
    std::size_t w = 0;
    for (const auto& t : set) w += t.contour.vertex_count();
    return w;
}

std::size_t count_intersections(const ContourSet& a, const ContourSet& b) {
    std::size_t p = 0;
    for (const auto& x : a) {
        const auto bx = geom::bounding_box(x.contour);
        for (const auto& y : b) {
            if (!bx.intersects(geom::bounding_box(y.contour))) continue;
            p += geom::count_edge_intersections(x.contour, y.contour);
        }
    }
    return p;
}

ContourSet merge_contour_sets(const std::vector<ContourSet>& sets) {
    std::vector<const TaggedContour*> all;
    for (const auto& s : sets)
        for (const auto& t : s) all.push_back(&t);
    // Canonical order makes the result independent of how the input was
    // arranged.
    std::stable_sort(all.begin(), all.end(),
                     [](const TaggedContour* a, const TaggedContour* b) { return provenance_less(*a, *b); });

    const std::size_t n = all.size();
    std::vector<geom::BoundingBox> boxes;
    boxes.reserve(n);
    for (const auto* t : all) boxes.push_back(geom::bounding_box(t->contour));

    DisjointSets ds(n);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!boxes[i].intersects(boxes[j])) continue;
            if (!geom::polygons_overlap(all[i]->contour, all[j]->contour)) continue;
            ds.unite(i, j);
            edges.push_back({i, j});
        }
    }

    std::map<std::size_t, std::vector<std::size_t>> components;
    for (std::size_t i = 0; i < n; ++i) components[ds.find(i)].push_back(i);

    ContourSet out;
    out.reserve(components.size());
    for (const auto& [root, idx] : components) {
        if (idx.size() == 1) {
            out.push_back(*all[idx.front()]);
            continue;
        }
        std::map<std::size_t, std::size_t> local;
        for (std::size_t k = 0; k < idx.size(); ++k) local[idx[k]] = k;
        std::vector<const TaggedContour*> members;
        for (const auto i : idx) members.push_back(all[i]);
        std::vector<std::vector<std::size_t>> adjacent(idx.size());
        for (const auto& [i, j] : edges) {
            if (ds.find(i) != root) continue;
            adjacent[local[i]].push_back(local[j]);
            adjacent[local[j]].push_back(local[i]);
        }
        out.push_back(fold(members, adjacent));
    }
    std::sort(out.begin(), out.end(), provenance_less);
    return out;
}

std::vector<geom::Contour> merge_contour_sets(const std::vector<std::vector<geom::Contour>>& sets) {
    std::vector<ContourSet> tagged;
    for (std::size_t s = 0; s < sets.size(); ++s) {
        ContourSet set;
        for (std::size_t k = 0; k < sets[s].size(); ++k)
            set.push_back({sets[s][k], {{static_cast<int>(s), static_cast<int>(k)}}});
        tagged.push_back(std::move(set));
    }
    std::vector<geom::Contour> out;
    for (auto& t : merge_contour_sets(tagged)) out.push_back(std::move(t.contour));
    return out;
}

std::size_t GlobalModel::vertex_count() const {
    std::size_t w = 0;
    for (const auto& c : clusters) w += c.contour.vertex_count();
    return w;
}

GlobalModel finalize(ContourSet merged) {
    std::sort(merged.begin(), merged.end(), provenance_less);
    GlobalModel gm;
    for (auto& t : merged) {
        gm.clusters.push_back({static_cast<int>(gm.clusters.size()), std::move(t.contour), std::move(t.provenance)});
    }
    return gm;
}

GlobalModel run_phase2(const std::vector<cluster::LocalModel>& models, const MergeTree& tree) {
    std::map<int, ContourSet> held;
    for (const auto& m : models) {
        if (!held.emplace(m.node_id, tag(m)).second) throw ConfigError("duplicate node id in local models");
    }
    for (int level = tree.height - 1; level >= 0; --level) {
        for (const auto& g : tree.levels[static_cast<std::size_t>(level)]) {
            std::vector<ContourSet> sets;
            for (const int m : g.members) {
                auto it = held.find(m);
                if (it == held.end()) throw ConfigError("merge tree names a node without a local model");
                sets.push_back(std::move(it->second));
                if (m != g.leader) held.erase(it);
            }
            held[g.leader] = merge_contour_sets(sets);
        }
    }
    auto root = held.find(tree.root);
    if (root == held.end()) throw ConfigError("merge tree root has no local model");
    return finalize(std::move(root->second));
}

}  // namespace ddc::merge
