#include "ddc/serialize/json.hpp"

#include <fstream>
#include <set>

#include "ddc/errors.hpp"

namespace ddc::serialize {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad ") + what + ": " + e.what());
    }
}

void only_keys(const json& j, const std::set<std::string>& allowed, const char* what) {
    if (!j.is_object()) throw ConfigError(std::string(what) + " must be a JSON object");
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw ConfigError(std::string("unknown ") + what + " field: " + k);
}

json provenance_json(const std::vector<merge::Provenance>& prov) {
    json out = json::array();
    for (const auto& [node, cid] : prov) out.push_back({node, cid});
    return out;
}

std::vector<merge::Provenance> provenance_from(const json& j) {
    std::vector<merge::Provenance> out;
    for (const auto& e : j) out.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return out;
}

runtime::NodeProfile node_from(const json& j, const runtime::NodeProfile& base) {
    only_keys(j, {"node_id", "speed", "latency_ms", "bandwidth"}, "node");
    auto n = base;
    n.node_id = j.value("node_id", n.node_id);
    n.speed = j.value("speed", n.speed);
    n.latency_ms = j.value("latency_ms", n.latency_ms);
    n.bandwidth = j.value("bandwidth", n.bandwidth);
    return n;
}

json node_json(const runtime::NodeProfile& n) {
    return {{"node_id", n.node_id}, {"speed", n.speed}, {"latency_ms", n.latency_ms}, {"bandwidth", n.bandwidth}};
}

}  // namespace

json to_json(const geom::Contour& c) {
    json rings = json::array();
    for (const auto& r : c.rings) {
        json ring = json::array();
        for (const auto& p : r) ring.push_back({p.x, p.y});
        rings.push_back(std::move(ring));
    }
    return {{"rings", std::move(rings)}};
}

geom::Contour contour_from_json(const json& j) {
    return guarded("contour", [&] {
        geom::Contour c;
        for (const auto& r : j.at("rings")) {
            geom::Ring ring;
            for (const auto& p : r) ring.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
            c.rings.push_back(std::move(ring));
        }
        return c;
    });
}

json to_json(const cluster::LocalModel& m) {
    json clusters = json::array();
    for (const auto& c : m.clusters) clusters.push_back({{"id", c.id}, {"count", c.count}, {"contour", to_json(c.contour)}});
    return {{"node_id", m.node_id}, {"n", m.n}, {"noise", m.noise}, {"clusters", std::move(clusters)}};
}

cluster::LocalModel local_model_from_json(const json& j) {
    return guarded("local model", [&] {
        cluster::LocalModel m;
        m.node_id = j.at("node_id").get<int>();
        m.n = j.at("n").get<std::size_t>();
        m.noise = j.at("noise").get<std::size_t>();
        for (const auto& c : j.at("clusters"))
            m.clusters.push_back({c.at("id").get<int>(), c.at("count").get<std::size_t>(), contour_from_json(c.at("contour"))});
        return m;
    });
}

json to_json(const merge::GlobalModel& g) {
    json clusters = json::array();
    for (const auto& c : g.clusters)
        clusters.push_back({{"gid", c.gid}, {"contour", to_json(c.contour)}, {"provenance", provenance_json(c.provenance)}});
    return {{"clusters", std::move(clusters)}};
}

merge::GlobalModel global_model_from_json(const json& j) {
    return guarded("global model", [&] {
        merge::GlobalModel g;
        for (const auto& c : j.at("clusters"))
            g.clusters.push_back({c.at("gid").get<int>(), contour_from_json(c.at("contour")), provenance_from(c.at("provenance"))});
        return g;
    });
}

json to_json(const merge::ContourSet& s) {
    json out = json::array();
    for (const auto& t : s) out.push_back({{"contour", to_json(t.contour)}, {"provenance", provenance_json(t.provenance)}});
    return out;
}

merge::ContourSet contour_set_from_json(const json& j) {
    return guarded("contour set", [&] {
        merge::ContourSet s;
        for (const auto& t : j) s.push_back({contour_from_json(t.at("contour")), provenance_from(t.at("provenance"))});
        return s;
    });
}

json to_json(const runtime::CostModel& c) {
    return {{"k_cluster", c.k_cluster}, {"k_contour", c.k_contour}, {"k_merge", c.k_merge}, {"payload_unit", c.payload_unit}};
}

json to_json(const runtime::ScenarioConfig& c) {
    json j;
    j["name"] = c.name;
    if (!c.dataset.path.empty()) {
        j["dataset"] = {{"path", c.dataset.path}};
    } else {
        j["dataset"] = {{"shape", c.dataset.shape}, {"n", c.dataset.n}, {"seed", c.dataset.seed}};
    }
    j["partition"] = data::to_string(c.partition);
    j["assignment"] = data::to_string(c.partition.assignment);
    j["overlap"] = data::to_string(c.partition.overlap);
    if (!c.nodes.empty()) {
        j["nodes"] = json::array();
        for (const auto& n : c.nodes) j["nodes"].push_back(node_json(n));
    }
    j["link"] = {{"speed", c.link.speed}, {"latency_ms", c.link.latency_ms}, {"bandwidth", c.link.bandwidth}};
    if (c.dbscan) j["dbscan"] = {{"eps", c.dbscan->eps}, {"min_pts", c.dbscan->min_pts}};
    j["hull"] = {{"factor", c.hull.factor}, {"simplify_tolerance", c.hull.simplify_tolerance}};
    j["degree"] = c.degree;
    j["election"] = merge::to_string(c.election);
    j["comm"] = runtime::to_string(c.comm);
    j["cost"] = to_json(c.cost);
    j["seed"] = c.seed;
    return j;
}

runtime::ScenarioConfig scenario_from_json(const json& j) {
    only_keys(j,
              {"name", "dataset", "partition", "assignment", "overlap", "nodes", "speeds", "link", "dbscan", "hull",
               "degree", "election", "comm", "cost", "seed"},
              "scenario");
    return guarded("scenario", [&] {
        runtime::ScenarioConfig c;
        c.name = j.value("name", c.name);
        if (j.contains("dataset")) {
            const auto& d = j.at("dataset");
            only_keys(d, {"shape", "n", "seed", "path"}, "dataset");
            c.dataset.shape = d.value("shape", c.dataset.shape);
            c.dataset.n = d.value("n", c.dataset.n);
            c.dataset.seed = d.value("seed", c.dataset.seed);
            c.dataset.path = d.value("path", c.dataset.path);
        }
        try {
            c.partition = data::parse_partition(j.value("partition", std::string("equal(8)")));
            c.partition.assignment = data::parse_assignment(j.value("assignment", std::string("shuffle")));
            c.partition.overlap = data::parse_overlap(j.value("overlap", std::string("disjoint")));
        } catch (const SpecError& e) {
            throw ConfigError(e.what());
        }
        if (j.contains("link")) {
            only_keys(j.at("link"), {"speed", "latency_ms", "bandwidth"}, "link");
            c.link = node_from(j.at("link"), c.link);
        }
        if (j.contains("nodes") && j.contains("speeds")) throw ConfigError("give either nodes or speeds, not both");
        if (j.contains("nodes")) {
            int id = 1;
            for (const auto& n : j.at("nodes")) {
                auto base = c.link;
                base.node_id = id++;
                c.nodes.push_back(node_from(n, base));
            }
        }
        if (j.contains("speeds")) {
            int id = 1;
            for (const auto& s : j.at("speeds")) {
                auto n = c.link;
                n.node_id = id++;
                n.speed = s.get<double>();
                c.nodes.push_back(n);
            }
        }
        if (j.contains("dbscan")) {
            const auto& d = j.at("dbscan");
            only_keys(d, {"eps", "min_pts"}, "dbscan");
            c.dbscan = cluster::DbscanParams{d.at("eps").get<double>(), d.at("min_pts").get<int>()};
        }
        if (j.contains("hull")) {
            const auto& h = j.at("hull");
            only_keys(h, {"factor", "simplify_tolerance"}, "hull");
            c.hull.factor = h.value("factor", c.hull.factor);
            c.hull.simplify_tolerance = h.value("simplify_tolerance", c.hull.simplify_tolerance);
        }
        c.degree = j.value("degree", c.degree);
        if (j.contains("election")) c.election = merge::parse_election(j.at("election").get<std::string>());
        if (j.contains("comm")) c.comm = runtime::parse_comm(j.at("comm").get<std::string>());
        if (j.contains("cost")) {
            const auto& k = j.at("cost");
            only_keys(k, {"k_cluster", "k_contour", "k_merge", "payload_unit"}, "cost");
            c.cost.k_cluster = k.value("k_cluster", c.cost.k_cluster);
            c.cost.k_contour = k.value("k_contour", c.cost.k_contour);
            c.cost.k_merge = k.value("k_merge", c.cost.k_merge);
            c.cost.payload_unit = k.value("payload_unit", c.cost.payload_unit);
        }
        c.seed = j.value("seed", c.seed);
        return c;
    });
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

}  // namespace ddc::serialize
