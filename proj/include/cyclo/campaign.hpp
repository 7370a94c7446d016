#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <string>

#include "cyclo/records.hpp"
#include "cyclo/search.hpp"

namespace cyclo {

struct RangeSummary {
    std::size_t computed = 0;        // searched and appended this run
    std::size_t reused = 0;          // already present in the checkpoint
    std::size_t skipped_budget = 0;  // refused by the divisor budget this run
};

using ProgressFn = std::function<void(const RecordLine&)>;

/// Compute every uncomputed n in [lo, hi], appending one record per n to the
/// checkpoint file as it completes. An interrupted run loses at most the
/// in-flight n; reruns recompute nothing that was already recorded. A
/// budget-skipped entry is recomputed only when the current budget is larger
/// than the one it was skipped under.
inline RangeSummary run_range(std::uint64_t lo, std::uint64_t hi, Measure measure,
                              const SearchOptions& opts, const std::string& checkpoint_path,
                              const ProgressFn& progress = {}, const WarnFn& warn = {}) {
    if (lo == 0 || lo > hi) throw InputOutOfRange("run_range: need 1 <= lo <= hi");
    RecordMap have = load_records_file(checkpoint_path, nullptr, warn);

    // A crash can leave a partial final line without a newline; terminate it
    // so the next appended record starts on its own line.
    bool needs_newline = false;
    {
        std::ifstream probe(checkpoint_path, std::ios::binary);
        if (probe.is_open() && probe.seekg(-1, std::ios::end)) {
            char last = '\n';
            probe.get(last);
            needs_newline = last != '\n';
        }
    }

    std::ofstream out(checkpoint_path, std::ios::app);
    if (!out.is_open())
        throw Error("cannot open checkpoint file for append: " + checkpoint_path);
    if (needs_newline) out << '\n';

    RangeSummary summary;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        auto it = have.find({n, measure});
        if (it != have.end()) {
            const bool retry_with_bigger_budget =
                it->second.skipped() &&
                it->second.skip_budget.value_or(0) < opts.divisor_budget;
            if (!retry_with_bigger_budget) {
                ++summary.reused;
                continue;
            }
        }
        RecordLine rec;
        try {
            const SearchResult r = measure == Measure::Height ? compute_B(n, opts)
                                                              : compute_C(n, opts);
            rec = make_record(r);
            ++summary.computed;
        } catch (const BudgetExceeded& e) {
            rec = make_skip_record(n, measure, e.what(), opts.divisor_budget);
            ++summary.skipped_budget;
        }
        out << emit_record(rec) << '\n';
        out.flush();
        if (progress) progress(rec);
    }
    return summary;
}

}  // namespace cyclo
