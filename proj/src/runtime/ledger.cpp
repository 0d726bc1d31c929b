#include "ddc/runtime/ledger.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace ddc::runtime {

namespace {

std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

void TimingLedger::close() {
    total_exec_ms = 0.0;
    for (const auto& r : rows) total_exec_ms = std::max(total_exec_ms, r.total_ms);
}

void write_csv(std::ostream& os, const TimingLedger& ledger) {
    os << "node_id,ds_size,step1_ms,step2_ms,idle_ms,total_ms\n";
    for (const auto& r : ledger.rows) {
        os << r.node_id << ',' << r.ds_size << ',' << fixed3(r.step1_ms) << ',' << fixed3(r.step2_ms) << ','
           << fixed3(r.idle_ms) << ',' << fixed3(r.total_ms) << '\n';
    }
    os << "total_exec_ms," << fixed3(ledger.total_exec_ms) << '\n';
}

std::string to_csv(const TimingLedger& ledger) {
    std::ostringstream os;
    write_csv(os, ledger);
    return os.str();
}

}  // namespace ddc::runtime
