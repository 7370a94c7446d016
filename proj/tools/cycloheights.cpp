// Command-line front end: exact B(n)/C(n) computation, range campaigns with
// resumable checkpoints, conjecture verification and table emission.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclo/campaign.hpp"
#include "cyclo/conjectures.hpp"
#include "cyclo/records.hpp"
#include "cyclo/report.hpp"
#include "cyclo/search.hpp"
#include "cyclo/selftest.hpp"
#include "cyclo/version.hpp"

namespace {

struct CommonFlags {
    std::string measure = "B";
    unsigned jobs = 1;
    std::size_t witness_cap = 16;
    bool no_closed_form = false;
    bool force_bigint = false;
    std::size_t budget = 28;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool with_measure = true) {
    if (with_measure)
        cmd->add_option("--measure", flags.measure, "B (height) or C (length)")
            ->check(CLI::IsMember({"B", "C"}));
    cmd->add_option("--jobs", flags.jobs, "worker threads for the subset search");
    cmd->add_option("--witness-cap", flags.witness_cap, "max stored witness subsets");
    cmd->add_flag("--no-closed-form", flags.no_closed_form,
                  "always search exhaustively, even when a proven formula applies");
    cmd->add_flag("--force-bigint", flags.force_bigint,
                  "run all coefficient arithmetic in the arbitrary-precision lane");
    cmd->add_option("--budget", flags.budget,
                    "refuse n with more divisors than this (default 28)");
}

cyclo::SearchOptions to_options(const CommonFlags& f) {
    cyclo::SearchOptions o;
    o.parallelism = f.jobs;
    o.witness_cap = f.witness_cap;
    o.allow_closed_form = !f.no_closed_form;
    o.force_bigint = f.force_bigint;
    o.divisor_budget = f.budget;
    return o;
}

cyclo::Measure to_measure(const std::string& m) {
    return m == "C" ? cyclo::Measure::Length : cyclo::Measure::Height;
}

void print_result(const cyclo::SearchResult& r) {
    std::cout << "n = " << r.n << " = " << cyclo::factor(r.n).to_string() << '\n';
    std::cout << cyclo::measure_name(r.measure) << "(" << r.n << ") = " << r.value << '\n';
    std::cout << "method = "
              << (r.method == cyclo::SearchMethod::ClosedForm ? "closed_form" : "exhaustive")
              << '\n';
    std::cout << "maximizing subsets = " << r.witness_total << " (showing "
              << r.witnesses.size() << ")\n";
    for (const auto& w : r.witnesses) {
        std::cout << "  {";
        for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? ", " : "") << w[i];
        std::cout << "}\n";
    }
    std::cout << "subsets evaluated = " << r.nodes_visited << '\n';
    std::cout << "escalated to bigint = " << (r.escalated ? "yes" : "no") << '\n';
    std::cout << "elapsed = " << r.elapsed_ms << " ms\n";
}

int emit_reports(const std::vector<cyclo::ConjectureReport>& reports, bool csv) {
    if (csv) {
        std::cout << cyclo::render_csv(cyclo::build_report_table(reports));
    } else if (reports.size() == 1) {
        std::cout << cyclo::render_report_detail(reports.front());
    } else {
        std::cout << cyclo::render_text(cyclo::build_report_table(reports));
    }
    std::size_t holds = 0, fails = 0, skipped = 0;
    for (const auto& r : reports) {
        switch (r.verdict) {
            case cyclo::Verdict::Holds: ++holds; break;
            case cyclo::Verdict::Fails: ++fails; break;
            case cyclo::Verdict::Skipped: ++skipped; break;
        }
    }
    if (!csv)
        std::cout << reports.size() << " checks: " << holds << " hold, " << fails
                  << " fail, " << skipped << " skipped\n";
    return fails == 0 ? 0 : 1;
}

int run_verify(const std::string& id_str, const std::vector<std::uint64_t>& params,
               std::optional<std::uint64_t> max_n, std::optional<std::uint64_t> point_n,
               const cyclo::SearchOptions& opts, bool csv) {
    using namespace cyclo;
    const auto id = parse_conjecture_id(id_str);
    if (!id) {
        std::cerr << "unknown conjecture id: " << id_str << '\n';
        return 2;
    }
    auto need = [&](std::size_t count, const char* usage) {
        if (params.size() != count)
            throw InputOutOfRange(std::string("expected parameters: ") + usage);
    };
    std::vector<ConjectureReport> reports;
    switch (*id) {
        case ConjectureId::P2Q2:
            if (max_n) {
                reports = scan_p2q2(*max_n, opts);
            } else {
                need(2, "<p> <q>  (or --max-n)");
                reports = {check_p2q2(params[0], params[1], opts)};
            }
            break;
        case ConjectureId::TWO_QB:
            if (max_n) {
                reports = scan_two_qb(*max_n, opts);
            } else {
                need(2, "<q> <b>  (or --max-n)");
                reports = {check_2qb(params[0], static_cast<std::uint32_t>(params[1]), opts)};
            }
            break;
        case ConjectureId::PQB_STRICT:
            if (max_n) {
                reports = scan_pqb_strict(*max_n, opts);
            } else {
                need(3, "<p> <q> <b>  (or --max-n)");
                reports = {check_pqb_strict(params[0], params[1],
                                            static_cast<std::uint32_t>(params[2]), opts)};
            }
            break;
        case ConjectureId::PQ_DIVISIBILITY:
            if (point_n) {
                reports = {check_pq_divisibility_point(*point_n, opts)};
            } else {
                need(3, "<p> <b> <q_max>  (or --n)");
                reports = {check_pq_divisibility(
                    params[0], static_cast<std::uint32_t>(params[1]), params[2], opts)};
            }
            break;
        case ConjectureId::PARITY_PRODUCTS:
            if (max_n) {
                reports = scan_parity_products(*max_n, opts);
            } else {
                need(1, "<n>  (or --max-n)");
                reports = {check_parity_products(params[0], opts)};
            }
            break;
        case ConjectureId::PQRB:
            if (max_n) {
                reports = scan_pqrb(*max_n, opts);
            } else {
                need(4, "<p> <q> <r> <b>  (or --max-n)");
                reports = {check_pqrb(params[0], params[1], params[2],
                                      static_cast<std::uint32_t>(params[3]), opts)};
            }
            break;
        case ConjectureId::FINITE_RANGE:
            need(4, "<p> <a> <b> <q_max>");
            reports = {finite_range_scan(params[0], static_cast<std::uint32_t>(params[1]),
                                         static_cast<std::uint32_t>(params[2]), params[3],
                                         opts)};
            break;
    }
    return emit_reports(reports, csv);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact maximal coefficient heights of divisors of x^n - 1"};
    app.set_version_flag("--version", cyclo::kToolVersion);
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "compute B(n) or C(n) for one n");
    std::uint64_t compute_n = 0;
    compute->add_option("n", compute_n, "the n in x^n - 1")->required();
    CommonFlags compute_flags;
    add_common_flags(compute, compute_flags);

    // range
    auto* range = app.add_subcommand("range", "compute a range with a resumable checkpoint");
    std::uint64_t range_lo = 0, range_hi = 0;
    std::string checkpoint;
    bool range_quiet = false;
    range->add_option("lo", range_lo)->required();
    range->add_option("hi", range_hi)->required();
    range->add_option("--checkpoint", checkpoint, "append-only record file")->required();
    range->add_flag("--quiet", range_quiet, "no per-n progress lines");
    CommonFlags range_flags;
    add_common_flags(range, range_flags);

    // verify
    auto* verify = app.add_subcommand("verify", "check a conjecture on given parameters");
    std::string verify_id;
    std::vector<std::uint64_t> verify_params;
    std::optional<std::uint64_t> verify_max_n, verify_point_n;
    bool verify_csv = false;
    verify->add_option("id", verify_id,
                       "P2Q2|TWO_QB|PQB_STRICT|PQ_DIVISIBILITY|PARITY_PRODUCTS|PQRB|FINITE_RANGE")
        ->required();
    verify->add_option("params", verify_params, "conjecture parameters");
    verify->add_option("--max-n", verify_max_n, "scan every applicable n up to this");
    verify->add_option("--n", verify_point_n, "single-n audit (PQ_DIVISIBILITY)");
    verify->add_flag("--csv", verify_csv);
    CommonFlags verify_flags;
    add_common_flags(verify, verify_flags, /*with_measure=*/false);

    // table
    auto* table = app.add_subcommand("table", "render a record file as a table");
    std::string table_input, table_shape;
    bool table_csv = false;
    table->add_option("--input", table_input, "record file")->required();
    table->add_option("--shape", table_shape, "filter: pq, p2q, pq2, p2q2, pqr, pqr2, ..., pk");
    table->add_flag("--csv", table_csv);

    // selftest
    auto* selftest = app.add_subcommand("selftest", "oracle-equivalence and identity suites");
    cyclo::SelftestOptions st;
    selftest->add_option("--max-n", st.oracle_max_n, "oracle-equivalence range");
    selftest->add_option("--identity-max", st.identity_max_n, "identity-suite range");
    selftest->add_option("--lemma-max", st.lemma_max, "prefix-product range");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            const auto opts = to_options(compute_flags);
            const auto m = to_measure(compute_flags.measure);
            const auto r = m == cyclo::Measure::Height ? cyclo::compute_B(compute_n, opts)
                                                       : cyclo::compute_C(compute_n, opts);
            print_result(r);
            return 0;
        }
        if (range->parsed()) {
            const auto opts = to_options(range_flags);
            const auto m = to_measure(range_flags.measure);
            cyclo::ProgressFn progress;
            if (!range_quiet)
                progress = [&](const cyclo::RecordLine& rec) {
                    if (rec.skipped())
                        std::cout << "n=" << rec.n << " skipped: "
                                  << rec.skip_reason.value_or("") << '\n';
                    else
                        std::cout << "n=" << rec.n << " "
                                  << cyclo::measure_name(rec.measure) << "="
                                  << *rec.value << '\n';
                };
            const auto summary =
                cyclo::run_range(range_lo, range_hi, m, opts, checkpoint, progress,
                                 [](const std::string& w) { std::cerr << "warning: " << w << '\n'; });
            std::cout << "computed " << summary.computed << ", reused " << summary.reused
                      << ", skipped (budget) " << summary.skipped_budget << '\n';
            return 0;
        }
        if (verify->parsed()) {
            return run_verify(verify_id, verify_params, verify_max_n, verify_point_n,
                              to_options(verify_flags), verify_csv);
        }
        if (table->parsed()) {
            cyclo::LoadStats stats;
            const auto records = cyclo::load_records_file(
                table_input, &stats,
                [](const std::string& w) { std::cerr << "warning: " << w << '\n'; });
            std::optional<cyclo::Shape> shape;
            if (!table_shape.empty()) shape = cyclo::parse_shape(table_shape);
            const auto t = cyclo::build_records_table(records, shape);
            std::cout << (table_csv ? cyclo::render_csv(t) : cyclo::render_text(t));
            return 0;
        }
        if (selftest->parsed()) {
            return cyclo::run_selftest(std::cout, st) ? 0 : 1;
        }
    } catch (const cyclo::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
