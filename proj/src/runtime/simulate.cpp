#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>
#include <tuple>

#include "ddc/errors.hpp"
#include "ddc/runtime/engine.hpp"

namespace ddc::runtime {

namespace {

double n_log_n(double w) { return w > 1.0 ? w * std::log2(w) : 0.0; }

// What one group does at one level, worked out once up front: the global
// result never depends on timing, only the schedule does.
struct GroupPlan {
    const merge::Group* group = nullptr;
    std::size_t leader_vertices = 0;
    std::vector<std::size_t> vertices;       // per member
    std::vector<std::size_t> intersections;  // per member, against the rest of the group
};

struct Plan {
    std::vector<std::vector<GroupPlan>> levels;  // same shape as the tree
    merge::ContourSet root;
};

Plan make_plan(const std::vector<cluster::LocalModel>& local, const merge::MergeTree& tree) {
    std::map<int, merge::ContourSet> held;
    for (const auto& m : local) held[m.node_id] = merge::tag(m);

    Plan plan;
    plan.levels.resize(tree.levels.size());
    for (int level = tree.height - 1; level >= 0; --level) {
        const auto L = static_cast<std::size_t>(level);
        for (const auto& g : tree.levels[L]) {
            GroupPlan gp;
            gp.group = &g;
            std::vector<merge::ContourSet> sets;
            for (const int m : g.members) {
                sets.push_back(std::move(held.at(m)));
                held.erase(m);
            }
            for (std::size_t i = 0; i < sets.size(); ++i) {
                gp.vertices.push_back(merge::vertex_count(sets[i]));
                merge::ContourSet rest;
                for (std::size_t j = 0; j < sets.size(); ++j)
                    if (j != i) rest.insert(rest.end(), sets[j].begin(), sets[j].end());
                gp.intersections.push_back(g.members.size() > 1 ? merge::count_intersections(sets[i], rest) : 0);
                if (g.members[i] == g.leader) gp.leader_vertices = gp.vertices.back();
            }
            held[g.leader] = g.members.size() > 1 ? merge::merge_contour_sets(sets) : std::move(sets.front());
            plan.levels[L].push_back(std::move(gp));
        }
    }
    plan.root = std::move(held.at(tree.root));
    return plan;
}

enum class Kind { Release, Arrive, FoldDone };

struct Event {
    double time;
    int node;
    std::uint64_t seq;
    Kind kind;
    int level;
    std::size_t group;
    std::size_t member;  // position in the group (Arrive)

    bool operator>(const Event& o) const {
        return std::tie(time, node, seq) > std::tie(o.time, o.node, o.seq);
    }
};

struct GroupState {
    bool leader_ready = false;
    bool busy = false;
    std::size_t done = 0;
    std::vector<std::pair<double, std::size_t>> pending;  // (arrival, member position)
};

class Simulation {
public:
    Simulation(const Prepared& p, const Plan& plan, CommMode comm, const CostModel& cost)
        : p_(p), plan_(plan), comm_(comm), cost_(cost) {
        for (std::size_t i = 0; i < p.nodes.size(); ++i) pos_[p.nodes[i].node_id] = i;
        for (std::size_t L = 0; L < plan.levels.size(); ++L) {
            states_.emplace_back(plan.levels[L].size());
            auto& where = group_of_.emplace_back();
            for (std::size_t g = 0; g < plan.levels[L].size(); ++g)
                for (const int m : plan.levels[L][g].group->members) where[m] = g;
        }
        end_.assign(p.nodes.size(), 0.0);
    }

    void run(const std::vector<double>& start) {
        const int bottom = static_cast<int>(plan_.levels.size()) - 1;
        for (std::size_t i = 0; i < start.size(); ++i) push({start[i], p_.nodes[i].node_id, 0, Kind::Release, bottom, 0, 0});
        while (!queue_.empty()) {
            const Event e = queue_.top();
            queue_.pop();
            touch(e.node, e.time);
            switch (e.kind) {
                case Kind::Release: release(e.node, e.level, e.time); break;
                case Kind::Arrive: arrive(e); break;
                case Kind::FoldDone: fold_done(e); break;
            }
        }
    }

    double end(std::size_t i) const { return end_[i]; }
    std::size_t messages = 0;
    std::size_t bytes = 0;

private:
    void push(Event e) {
        e.seq = seq_++;
        queue_.push(e);
    }

    void touch(int node, double t) {
        auto& e = end_[pos_.at(node)];
        e = std::max(e, t);
    }

    const NodeProfile& profile(int node) const { return p_.nodes[pos_.at(node)]; }

    void release(int node, int level, double t) {
        if (level < 0) return;  // the root has the global model
        const auto L = static_cast<std::size_t>(level);
        const std::size_t g = group_of_[L].at(node);
        const auto& gp = plan_.levels[L][g];
        const auto& members = gp.group->members;
        if (members.size() == 1) {
            release(node, level - 1, t);
            return;
        }
        if (node != gp.group->leader) {
            const std::size_t k = static_cast<std::size_t>(std::find(members.begin(), members.end(), node) - members.begin());
            const double payload = static_cast<double>(gp.vertices[k]) * cost_.payload_unit;
            const auto& link = profile(node);
            const double arrival = t + link.latency_ms + payload / link.bandwidth;
            ++messages;
            bytes += static_cast<std::size_t>(payload);
            touch(node, arrival);
            push({arrival, gp.group->leader, 0, Kind::Arrive, level, g, k});
            return;
        }
        states_[L][g].leader_ready = true;
        try_fold(level, g, t);
    }

    void arrive(const Event& e) {
        states_[static_cast<std::size_t>(e.level)][e.group].pending.push_back({e.time, e.member});
        try_fold(e.level, e.group, e.time);
    }

    void try_fold(int level, std::size_t g, double t) {
        const auto L = static_cast<std::size_t>(level);
        auto& s = states_[L][g];
        const auto& gp = plan_.levels[L][g];
        const std::size_t needed = gp.group->members.size() - 1;
        if (!s.leader_ready || s.busy || s.pending.empty()) return;
        // Synchronous leaders wait for the whole group and fold in member
        // order; asynchronous ones take whatever has arrived first.
        if (comm_ == CommMode::Sync && s.done + s.pending.size() < needed) return;
        auto it = comm_ == CommMode::Sync
                      ? std::min_element(s.pending.begin(), s.pending.end(),
                                         [](const auto& a, const auto& b) { return a.second < b.second; })
                      : std::min_element(s.pending.begin(), s.pending.end());
        const std::size_t k = it->second;
        s.pending.erase(it);
        s.busy = true;
        const double w = static_cast<double>(gp.leader_vertices + gp.vertices[k]);
        const double work = cost_.k_merge * (n_log_n(w) + static_cast<double>(gp.intersections[k]));
        const int leader = gp.group->leader;
        push({t + work / profile(leader).speed, leader, 0, Kind::FoldDone, level, g, k});
    }

    void fold_done(const Event& e) {
        const auto L = static_cast<std::size_t>(e.level);
        auto& s = states_[L][e.group];
        const auto& gp = plan_.levels[L][e.group];
        s.busy = false;
        if (++s.done == gp.group->members.size() - 1) {
            release(gp.group->leader, e.level - 1, e.time);
            return;
        }
        try_fold(e.level, e.group, e.time);
    }

    const Prepared& p_;
    const Plan& plan_;
    CommMode comm_;
    const CostModel& cost_;
    std::map<int, std::size_t> pos_;
    std::vector<std::map<int, std::size_t>> group_of_;
    std::vector<std::vector<GroupState>> states_;
    std::vector<double> end_;
    std::priority_queue<Event, std::vector<Event>, std::greater<>> queue_;
    std::uint64_t seq_ = 0;
};

}  // namespace

std::vector<cluster::LocalModel> build_local_models(const Prepared& p, const cluster::HullOptions& hull) {
    std::vector<cluster::LocalModel> out;
    out.reserve(p.fragments.size());
    for (std::size_t i = 0; i < p.fragments.size(); ++i)
        out.push_back(cluster::build_local_model(p.nodes[i].node_id, p.fragments[i], p.params, hull));
    return out;
}

RunResult simulate(const ScenarioConfig& config, CommMode comm, const CostModel& cost) {
    return simulate(config, prepare(config), comm, cost);
}

RunResult simulate(const ScenarioConfig& config, const Prepared& p, CommMode comm, const CostModel& cost) {
    return simulate(p, build_local_models(p, config.hull), comm, cost);
}

RunResult simulate(const Prepared& p, std::vector<cluster::LocalModel> local, CommMode comm, const CostModel& cost) {
    cost.validate();
    if (local.size() != p.nodes.size()) throw ConfigError("every node needs a fragment");
    for (const auto& n : p.nodes) n.validate();

    std::vector<double> step1;
    for (std::size_t i = 0; i < local.size(); ++i) {
        const double n = static_cast<double>(local[i].n);
        const double c = static_cast<double>(local[i].clustered_points());
        step1.push_back((cost.k_cluster * n * n + cost.k_contour * n_log_n(c)) / p.nodes[i].speed);
    }
    const double barrier = *std::max_element(step1.begin(), step1.end());

    const Plan plan = make_plan(local, p.tree);
    Simulation sim(p, plan, comm, cost);
    std::vector<double> start = step1;
    if (comm == CommMode::Sync) std::fill(start.begin(), start.end(), barrier);
    sim.run(start);

    RunResult r;
    for (std::size_t i = 0; i < local.size(); ++i) {
        LedgerRow row;
        row.node_id = p.nodes[i].node_id;
        row.ds_size = local[i].n;
        row.step1_ms = step1[i];
        row.idle_ms = comm == CommMode::Sync ? barrier - step1[i] : 0.0;
        row.total_ms = std::max(sim.end(i), step1[i] + row.idle_ms);
        row.step2_ms = row.total_ms - row.step1_ms - row.idle_ms;
        r.ledger.rows.push_back(row);
    }
    r.ledger.close();
    r.messages = sim.messages;
    r.payload_bytes = sim.bytes;
    r.global = merge::finalize(plan.root);
    r.local = std::move(local);
    return r;
}

}  // namespace ddc::runtime
