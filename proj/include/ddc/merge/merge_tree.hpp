#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ddc::merge {

enum class Election { LowestId, Fastest };

Election parse_election(const std::string& name);
std::string to_string(Election e);

struct Group {
    std::vector<int> members;
    int leader = 0;
};

/// levels[0] is the root level (a single group); levels[height - 1] is the
/// bottom level holding every node. The participants of level L are the
/// leaders of level L + 1.
struct MergeTree {
    int degree = 2;
    int height = 0;
    std::vector<std::vector<Group>> levels;
    int root = 0;
};

/// Speed factor of a node, consulted by Election::Fastest.
using SpeedOf = std::function<double(int)>;

/// Groups are contiguous chunks of at most `degree` participants, re-chunked
/// at every level until one participant is left. Throws ConfigError for an
/// empty node list or degree < 2.
MergeTree build_merge_tree(const std::vector<int>& node_ids, int degree, Election election = Election::LowestId,
                           const SpeedOf& speed_of = {});

}  // namespace ddc::merge
