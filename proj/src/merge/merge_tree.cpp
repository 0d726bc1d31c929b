#include "ddc/merge/merge_tree.hpp"

#include <algorithm>

#include "ddc/errors.hpp"

namespace ddc::merge {

Election parse_election(const std::string& name) {
    if (name == "lowest-id") return Election::LowestId;
    if (name == "fastest") return Election::Fastest;
    throw ConfigError("unknown election policy: " + name);
}

std::string to_string(Election e) { return e == Election::Fastest ? "fastest" : "lowest-id"; }

namespace {

int elect(const std::vector<int>& members, Election election, const SpeedOf& speed_of) {
    int best = members.front();
    for (const int m : members) {
        if (election == Election::Fastest && speed_of) {
            const double sm = speed_of(m), sb = speed_of(best);
            if (sm > sb || (sm == sb && m < best)) best = m;
        } else if (m < best) {
            best = m;
        }
    }
    return best;
}

}  // namespace

MergeTree build_merge_tree(const std::vector<int>& node_ids, int degree, Election election, const SpeedOf& speed_of) {
    if (node_ids.empty()) throw ConfigError("merge tree needs at least one node");
    if (degree < 2) throw ConfigError("tree degree must be at least 2");
    MergeTree tree;
    tree.degree = degree;
    std::vector<std::vector<Group>> bottom_up;
    std::vector<int> participants = node_ids;
    while (participants.size() > 1) {
        std::vector<Group> level;
        std::vector<int> leaders;
        for (std::size_t i = 0; i < participants.size(); i += static_cast<std::size_t>(degree)) {
            Group g;
            const std::size_t end = std::min(participants.size(), i + static_cast<std::size_t>(degree));
            g.members.assign(participants.begin() + static_cast<std::ptrdiff_t>(i),
                             participants.begin() + static_cast<std::ptrdiff_t>(end));
            g.leader = elect(g.members, election, speed_of);
            leaders.push_back(g.leader);
            level.push_back(std::move(g));
        }
        bottom_up.push_back(std::move(level));
        participants = std::move(leaders);
    }
    tree.root = participants.front();
    tree.levels.assign(bottom_up.rbegin(), bottom_up.rend());
    tree.height = static_cast<int>(tree.levels.size());
    return tree;
}

}  // namespace ddc::merge
