#include <barrier>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <exception>
#include <map>
#include <mutex>
#include <string>
#include <thread>

#include "ddc/errors.hpp"
#include "ddc/runtime/engine.hpp"
#include "ddc/serialize/json.hpp"

namespace ddc::runtime {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Message {
    int level = 0;
    int from = 0;
    std::string body;  // serialized ContourSet
};

class Mailbox {
public:
    void post(Message m) {
        {
            std::lock_guard lock(mu_);
            queue_.push_back(std::move(m));
        }
        cv_.notify_all();
    }

    // Oldest message for the given level, blocking until there is one.
    Message take(int level) {
        std::unique_lock lock(mu_);
        for (;;) {
            if (aborted_) throw Error("peer failed");
            for (auto it = queue_.begin(); it != queue_.end(); ++it) {
                if (it->level != level) continue;
                Message m = std::move(*it);
                queue_.erase(it);
                return m;
            }
            cv_.wait(lock);
        }
    }

    void abort() {
        {
            std::lock_guard lock(mu_);
            aborted_ = true;
        }
        cv_.notify_all();
    }

private:
    bool aborted_ = false;
    std::mutex mu_;
    std::condition_variable cv_;
    std::deque<Message> queue_;
};

}  // namespace

RunResult run_concurrent(const ScenarioConfig& config, CommMode comm) {
    return run_concurrent(config, prepare(config), comm);
}

RunResult run_concurrent(const ScenarioConfig& config, const Prepared& p, CommMode comm) {
    const std::size_t n = p.nodes.size();
    if (p.fragments.size() != n) throw ConfigError("every node needs a fragment");

    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) pos[p.nodes[i].node_id] = i;
    std::vector<std::map<int, const merge::Group*>> group_of(p.tree.levels.size());
    for (std::size_t L = 0; L < p.tree.levels.size(); ++L)
        for (const auto& g : p.tree.levels[L])
            for (const int m : g.members) group_of[L][m] = &g;

    std::vector<Mailbox> boxes(n);
    std::vector<cluster::LocalModel> local(n);
    std::vector<LedgerRow> rows(n);
    std::exception_ptr first_error;
    merge::ContourSet root_set;
    std::barrier sync_point(static_cast<std::ptrdiff_t>(n));
    std::mutex stats_mu;
    std::size_t messages = 0, bytes = 0;

    const auto t0 = Clock::now();
    auto worker = [&](std::size_t i) {
        const int id = p.nodes[i].node_id;
        bool arrived = false;
        try {
            local[i] = cluster::build_local_model(id, p.fragments[i], p.params, config.hull);
            rows[i].node_id = id;
            rows[i].ds_size = p.fragments[i].size();
            rows[i].step1_ms = ms_since(t0);
            if (comm == CommMode::Sync) {
                arrived = true;
                sync_point.arrive_and_wait();
                rows[i].idle_ms = ms_since(t0) - rows[i].step1_ms;
            }

            merge::ContourSet held = merge::tag(local[i]);
            for (int level = p.tree.height - 1; level >= 0; --level) {
                const auto& g = *group_of[static_cast<std::size_t>(level)].at(id);
                if (g.members.size() == 1) continue;
                if (g.leader != id) {
                    auto body = serialize::to_json(held).dump();
                    {
                        std::lock_guard lock(stats_mu);
                        ++messages;
                        bytes += body.size();
                    }
                    boxes[pos.at(g.leader)].post({level, id, std::move(body)});
                    held.clear();
                    break;
                }
                if (comm == CommMode::Sync) {
                    // Whole group first, then one merge in member order.
                    std::map<int, merge::ContourSet> got;
                    for (std::size_t k = 1; k < g.members.size(); ++k) {
                        auto m = boxes[i].take(level);
                        got[m.from] = serialize::contour_set_from_json(serialize::json::parse(m.body));
                    }
                    std::vector<merge::ContourSet> sets;
                    for (const int m : g.members) sets.push_back(m == id ? std::move(held) : std::move(got.at(m)));
                    held = merge::merge_contour_sets(sets);
                } else {
                    for (std::size_t k = 1; k < g.members.size(); ++k) {
                        auto m = boxes[i].take(level);
                        auto set = serialize::contour_set_from_json(serialize::json::parse(m.body));
                        held = merge::merge_contour_sets(std::vector<merge::ContourSet>{std::move(held), std::move(set)});
                    }
                }
            }
            if (id == p.tree.root) root_set = std::move(held);
        } catch (...) {
            {
                std::lock_guard lock(stats_mu);
                if (!first_error) first_error = std::current_exception();
            }
            // Keep the others from waiting forever on this node.
            if (comm == CommMode::Sync && !arrived) sync_point.arrive_and_drop();
            for (auto& b : boxes) b.abort();
        }
        rows[i].total_ms = ms_since(t0);
        rows[i].step2_ms = rows[i].total_ms - rows[i].step1_ms - rows[i].idle_ms;
    };

    std::vector<std::thread> threads;
    threads.reserve(n);
    for (std::size_t i = 0; i < n; ++i) threads.emplace_back(worker, i);
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);

    RunResult r;
    r.ledger.rows = std::move(rows);
    r.ledger.close();
    r.global = merge::finalize(std::move(root_set));
    r.local = std::move(local);
    r.messages = messages;
    r.payload_bytes = bytes;
    return r;
}

}  // namespace ddc::runtime
