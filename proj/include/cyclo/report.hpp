#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cyclo/conjectures.hpp"
#include "cyclo/records.hpp"

namespace cyclo {

/// A factorization-shape pattern like "pq", "p2q2", "pqr2": letters p,q,r,s
/// stand for the ascending primes, digits give exponents (1 when omitted).
/// The literal "pk" matches any prime power.
struct Shape {
    bool prime_power = false;
    std::vector<std::uint32_t> exponents;

    bool matches(const Factorization& f) const {
        if (prime_power) return f.omega() == 1;
        if (f.omega() != exponents.size()) return false;
        for (std::size_t i = 0; i < exponents.size(); ++i)
            if (f.factors[i].exp != exponents[i]) return false;
        return true;
    }
};

inline Shape parse_shape(const std::string& s) {
    if (s == "pk") return Shape{true, {}};
    Shape shape;
    const std::string letters = "pqrs";
    std::size_t i = 0;
    while (i < s.size()) {
        const std::size_t pos = shape.exponents.size();
        if (pos >= letters.size() || s[i] != letters[pos])
            throw InputOutOfRange("bad shape '" + s +
                                  "': expected letters p,q,r,s in order, optional digits");
        ++i;
        std::uint32_t exp = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            exp = exp * 10 + (s[i] - '0');
            ++i;
        }
        shape.exponents.push_back(exp == 0 ? 1 : exp);
    }
    if (shape.exponents.empty())
        throw InputOutOfRange("bad shape '" + s + "': empty pattern");
    return shape;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Records as a table, optionally filtered by shape. With a shape filter the
/// table gains per-prime columns and, for the B measure, the closed-form
/// expected value wherever one exists.
inline Table build_records_table(const RecordMap& records,
                                 const std::optional<Shape>& shape = std::nullopt) {
    Table t;
    t.header = {"n", "factorization", "measure", "value"};
    std::size_t prime_cols = 0;
    if (shape && !shape->prime_power) {
        prime_cols = shape->exponents.size();
        const std::string letters = "pqrs";
        for (std::size_t i = 0; i < prime_cols; ++i)
            t.header.insert(t.header.begin() + 1 + i, std::string(1, letters[i]));
    }
    const bool expected_col = shape.has_value();
    if (expected_col) t.header.push_back("expected");
    t.header.insert(t.header.end(), {"witness_count", "nodes_visited", "elapsed_ms", "note"});

    for (const auto& [key, rec] : records) {
        const Factorization f = factor(rec.n);
        if (shape && !shape->matches(f)) continue;
        std::vector<std::string> row;
        row.push_back(std::to_string(rec.n));
        for (std::size_t i = 0; i < prime_cols; ++i)
            row.push_back(std::to_string(f.factors[i].prime));
        row.push_back(rec.factorization);
        row.push_back(measure_name(rec.measure));
        row.push_back(rec.value ? std::to_string(*rec.value) : "-");
        if (expected_col) {
            const auto kf = known_formula(rec.n);
            row.push_back(rec.measure == Measure::Height && kf
                              ? std::to_string(kf->value)
                              : "-");
        }
        row.push_back(std::to_string(rec.witness_count));
        row.push_back(std::to_string(rec.nodes_visited));
        row.push_back(std::to_string(rec.elapsed_ms));
        row.push_back(rec.skip_reason.value_or(""));
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline std::string format_evidence(const EvidenceItem& e) {
    std::ostringstream out;
    out << e.label << " = ";
    if (e.values.size() == 1) {
        out << e.values[0];
    } else {
        out << "{";
        for (std::size_t i = 0; i < e.values.size(); ++i)
            out << (i ? "," : "") << e.values[i];
        out << "}";
    }
    return out.str();
}

inline std::string format_params(const ConjectureReport& r) {
    std::ostringstream out;
    for (std::size_t i = 0; i < r.params.size(); ++i)
        out << (i ? " " : "") << r.params[i].first << "=" << r.params[i].second;
    return out.str();
}

inline Table build_report_table(const std::vector<ConjectureReport>& reports) {
    Table t;
    t.header = {"conjecture", "params", "verdict", "evidence", "note", "nodes", "elapsed_ms"};
    for (const auto& r : reports) {
        std::ostringstream ev;
        for (std::size_t i = 0; i < r.evidence.size(); ++i)
            ev << (i ? "; " : "") << format_evidence(r.evidence[i]);
        t.rows.push_back({conjecture_name(r.id), format_params(r), verdict_name(r.verdict),
                          ev.str(), r.note, std::to_string(r.nodes),
                          std::to_string(static_cast<std::uint64_t>(r.elapsed_ms))});
    }
    return t;
}

inline std::string render_text(const Table& t) {
    std::vector<std::size_t> width(t.header.size());
    for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
    for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    auto emit_row = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            out << row[c] << std::string(width[c] - row[c].size(), ' ');
        }
        out << '\n';
    };
    emit_row(t.header);
    for (const auto& row : t.rows) emit_row(row);
    return out.str();
}

inline std::string render_csv(const Table& t) {
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char ch : s) {
            if (ch == '"') q += '"';
            q += ch;
        }
        q += '"';
        return q;
    };
    std::ostringstream out;
    auto emit_row = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ",";
            out << quote(row[c]);
        }
        out << '\n';
    };
    emit_row(t.header);
    for (const auto& row : t.rows) emit_row(row);
    return out.str();
}

/// Full single-report rendering with one evidence line per item.
inline std::string render_report_detail(const ConjectureReport& r) {
    std::ostringstream out;
    out << conjecture_name(r.id) << " [" << format_params(r) << "]\n";
    out << "  verdict: " << verdict_name(r.verdict) << '\n';
    if (!r.note.empty()) out << "  note: " << r.note << '\n';
    for (const auto& e : r.evidence) out << "  " << format_evidence(e) << '\n';
    out << "  cost: " << r.nodes << " subsets, "
        << static_cast<std::uint64_t>(r.elapsed_ms) << " ms\n";
    return out.str();
}

}  // namespace cyclo
