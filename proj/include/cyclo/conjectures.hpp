#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/search.hpp"

namespace cyclo {

enum class ConjectureId {
    P2Q2,
    TWO_QB,
    PQB_STRICT,
    PQ_DIVISIBILITY,
    PARITY_PRODUCTS,
    PQRB,
    FINITE_RANGE,
};

inline const char* conjecture_name(ConjectureId id) {
    switch (id) {
        case ConjectureId::P2Q2: return "P2Q2";
        case ConjectureId::TWO_QB: return "TWO_QB";
        case ConjectureId::PQB_STRICT: return "PQB_STRICT";
        case ConjectureId::PQ_DIVISIBILITY: return "PQ_DIVISIBILITY";
        case ConjectureId::PARITY_PRODUCTS: return "PARITY_PRODUCTS";
        case ConjectureId::PQRB: return "PQRB";
        case ConjectureId::FINITE_RANGE: return "FINITE_RANGE";
    }
    return "?";
}

inline std::optional<ConjectureId> parse_conjecture_id(const std::string& s) {
    for (ConjectureId id :
         {ConjectureId::P2Q2, ConjectureId::TWO_QB, ConjectureId::PQB_STRICT,
          ConjectureId::PQ_DIVISIBILITY, ConjectureId::PARITY_PRODUCTS, ConjectureId::PQRB,
          ConjectureId::FINITE_RANGE})
        if (s == conjecture_name(id)) return id;
    return std::nullopt;
}

enum class Verdict { Holds, Fails, Skipped };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::Skipped: return "skipped";
    }
    return "?";
}

struct EvidenceItem {
    std::string label;
    std::vector<std::uint64_t> values;
};

struct ConjectureReport {
    ConjectureId id;
    std::vector<std::pair<std::string, std::string>> params;
    Verdict verdict = Verdict::Skipped;
    std::string note;
    std::vector<EvidenceItem> evidence;
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;

    bool failed() const { return verdict == Verdict::Fails; }
};

namespace detail {

/// Checkers never assume what they check: all B values come from exhaustive
/// search, with the closed-form shortcut disabled.
inline SearchOptions checker_opts(SearchOptions o) {
    o.allow_closed_form = false;
    return o;
}

inline std::uint64_t product_height(const std::vector<std::uint64_t>& ds) {
    IntPoly prod = IntPoly::one();
    for (std::uint64_t d : ds) prod = mul(prod, cyclotomic(d));
    return height(prod);
}

inline std::optional<std::uint64_t> checked_mul_u64(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
    if (r > kMaxInput) return std::nullopt;
    return static_cast<std::uint64_t>(r);
}

inline std::optional<std::uint64_t> checked_pow_u64(std::uint64_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        auto next = checked_mul_u64(r, base);
        if (!next) return std::nullopt;
        r = *next;
    }
    return r;
}

inline std::uint64_t require_n(std::optional<std::uint64_t> n, const char* what) {
    if (!n) throw InputOutOfRange(std::string(what) + ": n exceeds the input bound");
    return *n;
}

inline void add_param(ConjectureReport& r, const std::string& key, std::uint64_t value) {
    r.params.emplace_back(key, std::to_string(value));
}

inline void add_search_cost(ConjectureReport& r, const SearchResult& s) {
    r.nodes += s.nodes_visited;
    r.elapsed_ms += s.elapsed_ms;
}

}  // namespace detail

/// Conjecture: B(p^2 q^2) is the larger of H(Phi_p Phi_q Phi_{p^2 q} Phi_{p q^2})
/// and H(Phi_p Phi_q Phi_{p^2} Phi_{q^2}). Ties are allowed.
inline ConjectureReport check_p2q2(std::uint64_t p, std::uint64_t q,
                                   const SearchOptions& opts = {}) {
    if (!is_prime(p) || !is_prime(q) || p >= q)
        throw InputOutOfRange("check_p2q2: need primes p < q");
    ConjectureReport rep{ConjectureId::P2Q2};
    detail::add_param(rep, "p", p);
    detail::add_param(rep, "q", q);
    const std::uint64_t n =
        detail::require_n(detail::checked_pow_u64(p * q, 2), "check_p2q2");
    detail::add_param(rep, "n", n);

    const SearchResult sr = compute_B(n, detail::checker_opts(opts));
    detail::add_search_cost(rep, sr);
    const std::uint64_t h_mixed = detail::product_height({p, q, p * p * q, p * q * q});
    const std::uint64_t h_squares = detail::product_height({p, q, p * p, q * q});
    const std::uint64_t larger = std::max(h_mixed, h_squares);

    rep.evidence.push_back({"B(n)", {sr.value}});
    rep.evidence.push_back({"H(phi_p phi_q phi_p2q phi_pq2)", {h_mixed}});
    rep.evidence.push_back({"H(phi_p phi_q phi_p2 phi_q2)", {h_squares}});
    rep.evidence.push_back(
        {"matches (mixed, squares)", {sr.value == h_mixed, sr.value == h_squares}});
    rep.verdict = sr.value == larger ? Verdict::Holds : Verdict::Fails;
    if (rep.failed())
        rep.note = "B(n) exceeds both candidate products";
    return rep;
}

/// Conjecture (part 1): B(2 q^b) = 2 for odd prime q and b >= 1.
inline ConjectureReport check_2qb(std::uint64_t q, std::uint32_t b,
                                  const SearchOptions& opts = {}) {
    if (!is_prime(q) || q == 2) throw InputOutOfRange("check_2qb: q must be an odd prime");
    if (b == 0) throw InputOutOfRange("check_2qb: b must be >= 1");
    ConjectureReport rep{ConjectureId::TWO_QB};
    detail::add_param(rep, "q", q);
    detail::add_param(rep, "b", b);
    const std::uint64_t qb = detail::require_n(detail::checked_pow_u64(q, b), "check_2qb");
    const std::uint64_t n = detail::require_n(detail::checked_mul_u64(2, qb), "check_2qb");
    detail::add_param(rep, "n", n);

    const SearchResult sr = compute_B(n, detail::checker_opts(opts));
    detail::add_search_cost(rep, sr);
    rep.evidence.push_back({"B(n)", {sr.value}});
    rep.verdict = sr.value == 2 ? Verdict::Holds : Verdict::Fails;
    if (rep.failed()) rep.note = "B(2q^b) != 2";
    return rep;
}

/// Conjecture (part 2): B(p q^b) > p for odd primes p < q and b > 2.
inline ConjectureReport check_pqb_strict(std::uint64_t p, std::uint64_t q, std::uint32_t b,
                                         const SearchOptions& opts = {}) {
    if (!is_prime(p) || !is_prime(q) || p >= q || p == 2)
        throw InputOutOfRange("check_pqb_strict: need odd primes p < q");
    ConjectureReport rep{ConjectureId::PQB_STRICT};
    detail::add_param(rep, "p", p);
    detail::add_param(rep, "q", q);
    detail::add_param(rep, "b", b);
    if (b < 3) {
        rep.verdict = Verdict::Skipped;
        rep.note = "precondition b > 2 not met";
        return rep;
    }
    const std::uint64_t qb =
        detail::require_n(detail::checked_pow_u64(q, b), "check_pqb_strict");
    const std::uint64_t n =
        detail::require_n(detail::checked_mul_u64(p, qb), "check_pqb_strict");
    detail::add_param(rep, "n", n);

    const SearchResult sr = compute_B(n, detail::checker_opts(opts));
    detail::add_search_cost(rep, sr);
    rep.evidence.push_back({"B(n)", {sr.value}});
    rep.evidence.push_back({"p", {p}});
    rep.verdict = sr.value > p ? Verdict::Holds : Verdict::Fails;
    if (rep.failed()) rep.note = "B(pq^b) <= p";
    return rep;
}

/// Conjecture: for fixed odd prime p and fixed b, every B(p q^b) with prime
/// q > p is divisible by p. Scans q up to q_max.
inline ConjectureReport check_pq_divisibility(std::uint64_t p, std::uint32_t b,
                                              std::uint64_t q_max,
                                              const SearchOptions& opts = {}) {
    if (!is_prime(p) || p == 2)
        throw InputOutOfRange("check_pq_divisibility: p must be an odd prime");
    if (b == 0) throw InputOutOfRange("check_pq_divisibility: b must be >= 1");
    ConjectureReport rep{ConjectureId::PQ_DIVISIBILITY};
    detail::add_param(rep, "p", p);
    detail::add_param(rep, "b", b);
    detail::add_param(rep, "q_max", q_max);

    std::vector<std::uint64_t> qs, values;
    for (std::uint64_t q : primes_up_to(q_max)) {
        if (q <= p) continue;
        const std::uint64_t qb =
            detail::require_n(detail::checked_pow_u64(q, b), "check_pq_divisibility");
        const std::uint64_t n =
            detail::require_n(detail::checked_mul_u64(p, qb), "check_pq_divisibility");
        const SearchResult sr = compute_B(n, detail::checker_opts(opts));
        detail::add_search_cost(rep, sr);
        qs.push_back(q);
        values.push_back(sr.value);
    }
    if (qs.empty()) {
        rep.verdict = Verdict::Skipped;
        rep.note = "no primes q with p < q <= q_max";
        return rep;
    }
    rep.evidence.push_back({"q", qs});
    rep.evidence.push_back({"B(pq^b)", values});
    std::vector<std::uint64_t> distinct = values;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    rep.evidence.push_back({"distinct values", distinct});

    rep.verdict = Verdict::Holds;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] % p != 0) {
            rep.verdict = Verdict::Fails;
            rep.note = "B(" + std::to_string(p) + "*" + std::to_string(qs[i]) + "^" +
                       std::to_string(b) + ") = " + std::to_string(values[i]) +
                       " is not divisible by " + std::to_string(p);
            break;
        }
    }
    return rep;
}

/// Single-n audit of the same conjecture. Inputs that are not of the shape
/// p * q^b (odd p < q, exponent of p exactly 1) are rejected as out of
/// shape, never reported as a conjecture failure.
inline ConjectureReport check_pq_divisibility_point(std::uint64_t n,
                                                    const SearchOptions& opts = {}) {
    ConjectureReport rep{ConjectureId::PQ_DIVISIBILITY};
    detail::add_param(rep, "n", n);
    const Factorization f = factor(n);
    const bool shaped = f.omega() == 2 && f.factors[0].exp == 1 && f.factors[0].prime != 2;
    if (!shaped) {
        rep.verdict = Verdict::Skipped;
        rep.note = f.to_string() + " is not of shape p*q^b with odd p < q";
        return rep;
    }
    const std::uint64_t p = f.factors[0].prime;
    detail::add_param(rep, "p", p);
    detail::add_param(rep, "b", f.factors[1].exp);
    const SearchResult sr = compute_B(n, detail::checker_opts(opts));
    detail::add_search_cost(rep, sr);
    rep.evidence.push_back({"B(n)", {sr.value}});
    rep.evidence.push_back({"B(n) mod p", {sr.value % p}});
    rep.verdict = sr.value % p == 0 ? Verdict::Holds : Verdict::Fails;
    if (rep.failed())
        rep.note = "B(n) = " + std::to_string(sr.value) + " is not divisible by " +
                   std::to_string(p);
    return rep;
}

/// Conjecture: for squarefree n, B(n) equals the height of the product of
/// Phi_d over divisors with odd omega(d), or the one over even omega(d).
inline ConjectureReport check_parity_products(std::uint64_t n,
                                              const SearchOptions& opts = {}) {
    ConjectureReport rep{ConjectureId::PARITY_PRODUCTS};
    detail::add_param(rep, "n", n);
    const Factorization f = factor(n);
    if (!f.is_squarefree())
        throw NotSquarefree("check_parity_products: n = " + std::to_string(n) +
                            " is not squarefree");
    detail::add_param(rep, "t", f.omega());

    const SearchResult sr = compute_B(n, detail::checker_opts(opts));
    detail::add_search_cost(rep, sr);

    std::vector<std::uint64_t> odd_side, even_side;
    for (std::uint64_t d : divisors(f))
        (omega(d) % 2 == 1 ? odd_side : even_side).push_back(d);
    const std::uint64_t h_odd = detail::product_height(odd_side);
    const std::uint64_t h_even = detail::product_height(even_side);

    rep.evidence.push_back({"B(n)", {sr.value}});
    rep.evidence.push_back({"H(odd-omega product)", {h_odd}});
    rep.evidence.push_back({"H(even-omega product)", {h_even}});
    rep.evidence.push_back(
        {"matches (odd, even)", {sr.value == h_odd, sr.value == h_even}});
    if (!f.factors.empty()) {
        const std::uint64_t p_min = f.factors.front().prime;
        rep.evidence.push_back({"B(n) mod smallest prime", {sr.value % p_min}});
        if (sr.value % p_min != 0)
            rep.note = "B(n) = " + std::to_string(sr.value) + " is not divisible by " +
                       std::to_string(p_min);
    }
    rep.verdict =
        (sr.value == h_odd || sr.value == h_even) ? Verdict::Holds : Verdict::Fails;
    if (rep.failed()) rep.note = "B(n) matches neither parity product";
    return rep;
}

/// Conjecture: for p < q < r and b > 1, p divides B(p q r^b) and B(p q r^b) > p.
inline ConjectureReport check_pqrb(std::uint64_t p, std::uint64_t q, std::uint64_t r,
                                   std::uint32_t b, const SearchOptions& opts = {}) {
    if (!is_prime(p) || !is_prime(q) || !is_prime(r) || !(p < q && q < r))
        throw InputOutOfRange("check_pqrb: need primes p < q < r");
    ConjectureReport rep{ConjectureId::PQRB};
    detail::add_param(rep, "p", p);
    detail::add_param(rep, "q", q);
    detail::add_param(rep, "r", r);
    detail::add_param(rep, "b", b);
    if (b < 2) {
        rep.verdict = Verdict::Skipped;
        rep.note = "precondition b > 1 not met";
        return rep;
    }
    const std::uint64_t rb = detail::require_n(detail::checked_pow_u64(r, b), "check_pqrb");
    const std::uint64_t n = detail::require_n(
        detail::checked_mul_u64(p, detail::require_n(detail::checked_mul_u64(q, rb),
                                                     "check_pqrb")),
        "check_pqrb");
    detail::add_param(rep, "n", n);

    const SearchResult sr = compute_B(n, detail::checker_opts(opts));
    detail::add_search_cost(rep, sr);
    rep.evidence.push_back({"B(n)", {sr.value}});
    rep.evidence.push_back({"B(n) mod p", {sr.value % p}});
    rep.verdict =
        (sr.value % p == 0 && sr.value > p) ? Verdict::Holds : Verdict::Fails;
    if (rep.failed()) rep.note = "divisibility or strictness fails";
    return rep;
}

/// Scan supporting the finiteness theorem: B(p^a q^b) takes finitely many
/// values as q runs through the primes. The verdict is scan-consistency
/// (no new distinct value in the second half of the scan), never a proof.
inline ConjectureReport finite_range_scan(std::uint64_t p, std::uint32_t a, std::uint32_t b,
                                          std::uint64_t q_max,
                                          const SearchOptions& opts = {}) {
    if (!is_prime(p)) throw InputOutOfRange("finite_range_scan: p must be prime");
    if (a == 0 || b == 0) throw InputOutOfRange("finite_range_scan: a, b must be >= 1");
    ConjectureReport rep{ConjectureId::FINITE_RANGE};
    detail::add_param(rep, "p", p);
    detail::add_param(rep, "a", a);
    detail::add_param(rep, "b", b);
    detail::add_param(rep, "q_max", q_max);

    const std::uint64_t pa =
        detail::require_n(detail::checked_pow_u64(p, a), "finite_range_scan");
    std::vector<std::uint64_t> qs, values;
    std::vector<std::uint64_t> distinct;      // in order of first appearance
    std::size_t last_new_index = 0;
    for (std::uint64_t q : primes_up_to(q_max)) {
        if (q == p) continue;
        const std::uint64_t qb =
            detail::require_n(detail::checked_pow_u64(q, b), "finite_range_scan");
        const std::uint64_t n =
            detail::require_n(detail::checked_mul_u64(pa, qb), "finite_range_scan");
        const SearchResult sr = compute_B(n, detail::checker_opts(opts));
        detail::add_search_cost(rep, sr);
        qs.push_back(q);
        values.push_back(sr.value);
        if (std::find(distinct.begin(), distinct.end(), sr.value) == distinct.end()) {
            distinct.push_back(sr.value);
            last_new_index = values.size() - 1;
        }
    }
    if (qs.size() < 4) {
        rep.verdict = Verdict::Skipped;
        rep.note = "too few primes scanned to judge stabilization";
        return rep;
    }
    rep.evidence.push_back({"q", qs});
    rep.evidence.push_back({"B(p^a q^b)", values});
    std::vector<std::uint64_t> sorted_distinct = distinct;
    std::sort(sorted_distinct.begin(), sorted_distinct.end());
    rep.evidence.push_back({"distinct values", sorted_distinct});
    rep.evidence.push_back({"last new value at q", {qs[last_new_index]}});

    if (last_new_index < (qs.size() + 1) / 2) {
        rep.verdict = Verdict::Holds;
        rep.note = "scan-consistent (not a proof)";
    } else {
        rep.verdict = Verdict::Skipped;
        rep.note = "distinct values still appearing in the scan tail; inconclusive";
    }
    return rep;
}

// ---- range scans over whole parameter families ----

namespace detail {

inline std::uint64_t isqrt_u64(std::uint64_t n) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

/// p * q^b, or nullopt past max_n.
inline std::optional<std::uint64_t> shape_n(std::uint64_t p, std::uint64_t q,
                                            std::uint32_t b, std::uint64_t max_n) {
    auto qb = checked_pow_u64(q, b);
    if (!qb) return std::nullopt;
    auto n = checked_mul_u64(p, *qb);
    if (!n || *n > max_n) return std::nullopt;
    return n;
}

}  // namespace detail

/// All pairs p < q with (pq)^2 <= max_n.
inline std::vector<ConjectureReport> scan_p2q2(std::uint64_t max_n,
                                               const SearchOptions& opts = {}) {
    std::vector<ConjectureReport> reps;
    const std::uint64_t pq_max = detail::isqrt_u64(max_n);
    const auto ps = primes_up_to(pq_max);
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size() && ps[i] * ps[j] <= pq_max; ++j)
            reps.push_back(check_p2q2(ps[i], ps[j], opts));
    return reps;
}

/// All odd primes q and b >= 1 with 2 q^b <= max_n.
inline std::vector<ConjectureReport> scan_two_qb(std::uint64_t max_n,
                                                 const SearchOptions& opts = {}) {
    std::vector<ConjectureReport> reps;
    for (std::uint64_t q : primes_up_to(max_n / 2)) {
        if (q == 2) continue;
        for (std::uint32_t b = 1; detail::shape_n(2, q, b, max_n); ++b)
            reps.push_back(check_2qb(q, b, opts));
    }
    return reps;
}

/// All odd primes p < q and b >= 3 with p q^b <= max_n.
inline std::vector<ConjectureReport> scan_pqb_strict(std::uint64_t max_n,
                                                     const SearchOptions& opts = {}) {
    std::vector<ConjectureReport> reps;
    const auto ps = primes_up_to(max_n);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (ps[i] == 2) continue;
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            if (!detail::shape_n(ps[i], ps[j], 3, max_n)) break;
            for (std::uint32_t b = 3; detail::shape_n(ps[i], ps[j], b, max_n); ++b)
                reps.push_back(check_pqb_strict(ps[i], ps[j], b, opts));
        }
    }
    return reps;
}

/// All squarefree n <= max_n.
inline std::vector<ConjectureReport> scan_parity_products(std::uint64_t max_n,
                                                          const SearchOptions& opts = {}) {
    std::vector<ConjectureReport> reps;
    for (std::uint64_t n = 1; n <= max_n; ++n)
        if (factor(n).is_squarefree()) reps.push_back(check_parity_products(n, opts));
    return reps;
}

/// All p < q < r and b >= 2 with p q r^b <= max_n.
inline std::vector<ConjectureReport> scan_pqrb(std::uint64_t max_n,
                                               const SearchOptions& opts = {}) {
    std::vector<ConjectureReport> reps;
    const auto ps = primes_up_to(max_n);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            const auto pq = detail::checked_mul_u64(ps[i], ps[j]);
            if (!pq || j + 1 >= ps.size() || !detail::shape_n(*pq, ps[j + 1], 2, max_n))
                break;
            for (std::size_t l = j + 1; l < ps.size(); ++l) {
                if (!detail::shape_n(*pq, ps[l], 2, max_n)) break;
                for (std::uint32_t b = 2; detail::shape_n(*pq, ps[l], b, max_n); ++b)
                    reps.push_back(check_pqrb(ps[i], ps[j], ps[l], b, opts));
            }
        }
        if (i + 2 < ps.size()) {
            const auto pq = detail::checked_mul_u64(ps[i], ps[i + 1]);
            if (!pq || !detail::shape_n(*pq, ps[i + 2], 2, max_n)) break;
        }
    }
    return reps;
}

inline bool all_reports_pass(const std::vector<ConjectureReport>& reps) {
    return std::none_of(reps.begin(), reps.end(),
                        [](const ConjectureReport& r) { return r.failed(); });
}

}  // namespace cyclo
