#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cyclo/errors.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/search.hpp"
#include "cyclo/version.hpp"

namespace cyclo {

inline constexpr int kRecordSchemaVersion = 1;

/// One persisted result: a line of JSON with named fields. Unknown fields
/// survive a parse/emit round trip. A record with no value is a first-class
/// "skipped" entry (reason and the budget it was skipped under are kept so
/// a rerun with a bigger budget can revisit it).
struct RecordLine {
    int schema_version = kRecordSchemaVersion;
    std::uint64_t n = 0;
    std::string factorization;
    Measure measure = Measure::Height;
    std::optional<std::uint64_t> value;
    std::optional<std::string> skip_reason;
    std::optional<std::uint64_t> skip_budget;
    std::uint64_t witness_count = 0;
    std::vector<Witness> witnesses;
    bool escalated = false;
    std::uint64_t nodes_visited = 0;
    std::uint64_t elapsed_ms = 0;
    std::string tool_version = kToolVersion;
    nlohmann::json extra = nlohmann::json::object();

    bool skipped() const { return !value.has_value(); }

    friend bool operator==(const RecordLine& a, const RecordLine& b) {
        return a.schema_version == b.schema_version && a.n == b.n &&
               a.factorization == b.factorization && a.measure == b.measure &&
               a.value == b.value && a.skip_reason == b.skip_reason &&
               a.skip_budget == b.skip_budget && a.witness_count == b.witness_count &&
               a.witnesses == b.witnesses && a.escalated == b.escalated &&
               a.nodes_visited == b.nodes_visited && a.elapsed_ms == b.elapsed_ms &&
               a.tool_version == b.tool_version && a.extra == b.extra;
    }
};

inline RecordLine make_record(const SearchResult& r) {
    RecordLine rec;
    rec.n = r.n;
    rec.factorization = factor(r.n).to_string();
    rec.measure = r.measure;
    rec.value = r.value;
    rec.witness_count = r.witness_total;
    rec.witnesses = r.witnesses;
    rec.escalated = r.escalated;
    rec.nodes_visited = r.nodes_visited;
    rec.elapsed_ms = static_cast<std::uint64_t>(r.elapsed_ms);
    return rec;
}

inline RecordLine make_skip_record(std::uint64_t n, Measure measure,
                                   const std::string& reason, std::uint64_t budget) {
    RecordLine rec;
    rec.n = n;
    rec.factorization = factor(n).to_string();
    rec.measure = measure;
    rec.skip_reason = reason;
    rec.skip_budget = budget;
    return rec;
}

/// One record as a single JSON line (no trailing newline).
inline std::string emit_record(const RecordLine& r) {
    nlohmann::json j = r.extra;
    j["schema_version"] = r.schema_version;
    j["n"] = r.n;
    j["factorization"] = r.factorization;
    j["measure"] = measure_name(r.measure);
    if (r.value)
        j["value"] = *r.value;
    else
        j.erase("value");
    if (r.skip_reason) {
        j["skip_reason"] = *r.skip_reason;
        j["skip_budget"] = r.skip_budget.value_or(0);
    } else {
        j.erase("skip_reason");
        j.erase("skip_budget");
    }
    j["witness_count"] = r.witness_count;
    j["witnesses"] = r.witnesses;
    j["escalated"] = r.escalated;
    j["nodes_visited"] = r.nodes_visited;
    j["elapsed_ms"] = r.elapsed_ms;
    j["tool_version"] = r.tool_version;
    return j.dump();
}

inline RecordLine parse_record(const std::string& line, std::size_t line_no = 0) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(line_no, "<json>", e.what());
    }
    if (!j.is_object()) throw ParseError(line_no, "<json>", "record is not an object");

    RecordLine r;
    auto take = [&](const char* field, auto& dst, bool required) {
        auto it = j.find(field);
        if (it == j.end()) {
            if (required) throw ParseError(line_no, field, "missing required field");
            return false;
        }
        try {
            dst = it->get<std::decay_t<decltype(dst)>>();
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(line_no, field, e.what());
        }
        j.erase(it);
        return true;
    };

    take("schema_version", r.schema_version, true);
    take("n", r.n, true);
    if (r.n == 0) throw ParseError(line_no, "n", "n must be >= 1");
    take("factorization", r.factorization, true);
    std::string measure;
    take("measure", measure, true);
    if (measure == "B")
        r.measure = Measure::Height;
    else if (measure == "C")
        r.measure = Measure::Length;
    else
        throw ParseError(line_no, "measure", "expected \"B\" or \"C\", got \"" + measure + "\"");
    std::uint64_t value = 0;
    if (take("value", value, false)) r.value = value;
    std::string reason;
    if (take("skip_reason", reason, false)) r.skip_reason = reason;
    std::uint64_t budget = 0;
    if (take("skip_budget", budget, false)) r.skip_budget = budget;
    take("witness_count", r.witness_count, false);
    take("witnesses", r.witnesses, false);
    take("escalated", r.escalated, false);
    take("nodes_visited", r.nodes_visited, false);
    take("elapsed_ms", r.elapsed_ms, false);
    take("tool_version", r.tool_version, false);
    r.extra = std::move(j);
    return r;
}

/// (n, measure) -> record; the key a checkpoint file deduplicates on.
using RecordKey = std::pair<std::uint64_t, Measure>;
using RecordMap = std::map<RecordKey, RecordLine>;

struct LoadStats {
    std::size_t lines = 0;
    std::size_t loaded = 0;
    std::size_t malformed = 0;
    std::size_t superseded = 0;
};

using WarnFn = std::function<void(const std::string&)>;

/// Load a record stream. Malformed lines (e.g. a partial final line after a
/// crash) are skipped with a warning; duplicate keys keep the later record.
inline RecordMap load_records(std::istream& in, LoadStats* stats = nullptr,
                              const WarnFn& warn = {}) {
    RecordMap map;
    LoadStats local;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        ++local.lines;
        if (line.empty()) continue;
        RecordLine rec;
        try {
            rec = parse_record(line, line_no);
        } catch (const ParseError& e) {
            ++local.malformed;
            if (warn) warn(std::string("skipping malformed record: ") + e.what());
            continue;
        }
        const RecordKey key{rec.n, rec.measure};
        auto [it, inserted] = map.insert_or_assign(key, std::move(rec));
        if (!inserted) {
            ++local.superseded;
            if (warn)
                warn("duplicate record for n=" + std::to_string(key.first) +
                     " measure=" + measure_name(key.second) + "; later record wins");
        }
        ++local.loaded;
    }
    if (stats) *stats = local;
    return map;
}

inline RecordMap load_records_file(const std::string& path, LoadStats* stats = nullptr,
                                   const WarnFn& warn = {}) {
    std::ifstream in(path);
    if (!in.is_open()) {
        if (stats) *stats = {};
        return {};
    }
    return load_records(in, stats, warn);
}

}  // namespace cyclo
