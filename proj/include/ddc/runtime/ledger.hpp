#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace ddc::runtime {

struct LedgerRow {
    int node_id = 0;
    std::size_t ds_size = 0;
    double step1_ms = 0.0;
    double step2_ms = 0.0;
    double idle_ms = 0.0;
    double total_ms = 0.0;
};

struct TimingLedger {
    std::vector<LedgerRow> rows;
    double total_exec_ms = 0.0;

    // Recomputes total_exec_ms as the largest node total.
    void close();
};

/// node_id,ds_size,step1_ms,step2_ms,idle_ms,total_ms with three decimals,
/// then a total_exec_ms footer row.
void write_csv(std::ostream& os, const TimingLedger& ledger);
std::string to_csv(const TimingLedger& ledger);

}  // namespace ddc::runtime
