#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/intpoly.hpp"
#include "cyclo/numtheory.hpp"

namespace cyclo {

struct SearchOptions {
    unsigned parallelism = 1;
    std::size_t witness_cap = 16;
    bool allow_closed_form = true;
    bool force_bigint = false;
    std::size_t divisor_budget = 28;
    std::size_t karatsuba_threshold = kDefaultKaratsubaThreshold;
};

enum class SearchMethod { ClosedForm, Exhaustive };

/// A maximizing subset, reported as an ascending list of divisors of n.
using Witness = std::vector<std::uint64_t>;

struct SearchResult {
    std::uint64_t n = 0;
    Measure measure = Measure::Height;
    std::uint64_t value = 0;
    std::vector<Witness> witnesses;   // lexicographically smallest, capped
    std::uint64_t witness_total = 0;  // full count of maximizing subsets
    std::uint64_t nodes_visited = 0;  // subsets evaluated
    bool escalated = false;           // some product needed arbitrary precision
    double elapsed_ms = 0.0;
    SearchMethod method = SearchMethod::Exhaustive;
};

struct KnownFormula {
    std::uint64_t value;
    std::string formula;
    Witness witness;  // a subset achieving the value, from the formula's construction
};

/// The proven closed forms: B(1), B(p^k)=1, B(pq)=min{p,q} and
/// B(p^2 q)=min{p^2, q} (either prime may carry the square).
inline std::optional<KnownFormula> known_formula(std::uint64_t n) {
    if (n == 0) throw InputOutOfRange("known_formula: n must be >= 1");
    const Factorization f = factor(n);
    if (f.factors.empty()) return KnownFormula{1, "B(1)=1", {1}};
    if (f.omega() == 1) {
        Witness w;
        std::uint64_t pe = 1;
        for (std::uint32_t e = 0; e < f.factors[0].exp; ++e) {
            pe *= f.factors[0].prime;
            w.push_back(pe);
        }
        return KnownFormula{1, "B(p^k)=1", std::move(w)};
    }
    if (f.omega() != 2) return std::nullopt;
    const auto& f0 = f.factors[0];
    const auto& f1 = f.factors[1];
    if (f0.exp == 1 && f1.exp == 1)
        return KnownFormula{std::min(f0.prime, f1.prime), "B(pq)=min{p,q}",
                            {f0.prime, f1.prime}};
    const bool sq0 = f0.exp == 2 && f1.exp == 1;
    const bool sq1 = f0.exp == 1 && f1.exp == 2;
    if (sq0 || sq1) {
        const std::uint64_t s = sq0 ? f0.prime : f1.prime;  // squared prime
        const std::uint64_t u = sq0 ? f1.prime : f0.prime;
        Witness w{s, s * s, u};
        std::sort(w.begin(), w.end());
        return KnownFormula{std::min(s * s, u), "B(p^2q)=min{p^2,q}", std::move(w)};
    }
    return std::nullopt;
}

/// min{p^a, q^b} when n = p^a q^b with exactly two distinct primes.
inline std::optional<std::uint64_t> lower_bound_pq(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    const Factorization f = factor(n);
    if (f.omega() != 2) return std::nullopt;
    auto pow_of = [](const PrimePower& pp) {
        std::uint64_t v = 1;
        for (std::uint32_t e = 0; e < pp.exp; ++e) v *= pp.prime;
        return v;
    };
    return std::min(pow_of(f.factors[0]), pow_of(f.factors[1]));
}

struct SubsetMaxResult {
    std::uint64_t value = 0;
    std::vector<Witness> witnesses;
    std::uint64_t witness_total = 0;
    std::uint64_t nodes = 0;
    bool escalated = false;
};

namespace detail {

/// Keeps the lexicographically smallest `cap` witnesses seen so far.
class WitnessSet {
  public:
    explicit WitnessSet(std::size_t cap) : cap_(cap) {}

    void insert(Witness w) {
        if (cap_ == 0) return;
        set_.insert(std::move(w));
        if (set_.size() > cap_) set_.erase(std::prev(set_.end()));
    }

    void merge(const WitnessSet& other) {
        for (const auto& w : other.set_) insert(w);
    }

    void clear() { set_.clear(); }

    std::vector<Witness> sorted() const { return {set_.begin(), set_.end()}; }

  private:
    std::size_t cap_;
    std::set<Witness> set_;
};

struct TaskAccum {
    std::uint64_t best = 0;
    WitnessSet witnesses;
    std::uint64_t total = 0;
    std::uint64_t leaves = 0;
    bool escalated = false;

    explicit TaskAccum(std::size_t cap) : witnesses(cap) {}

    /// make_witness is only invoked when the leaf ties or beats the best,
    /// so the common losing leaf costs nothing beyond the compare.
    template <typename WitnessFn>
    void leaf(std::uint64_t meas, WitnessFn&& make_witness) {
        ++leaves;
        if (meas < best) return;
        if (meas > best) {
            best = meas;
            witnesses.clear();
            total = 0;
        }
        ++total;
        witnesses.insert(make_witness());
    }
};

/// One DFS subtree: include/exclude branching over branch-ordered divisors,
/// sharing each prefix product through per-level buffers.
class SubtreeWalker {
  public:
    SubtreeWalker(const std::vector<IntPoly>& phis, const std::vector<std::uint64_t>& divs,
                  Measure measure, std::size_t threshold, bool force_bigint,
                  TaskAccum& accum)
        : phis_(phis), divs_(divs), measure_(measure), threshold_(threshold),
          accum_(accum), bufs_(phis.size() + 1) {
        root_ = IntPoly::one();
        if (force_bigint) root_.force_bigint();
        included_.reserve(phis.size());
    }

    /// Walk the subtree under the prefix encoded by the low `prefix_len` bits
    /// of `prefix` (bit i set = divisor i included).
    void run(std::uint64_t prefix, std::size_t prefix_len) {
        const IntPoly* cur = &root_;
        std::uint64_t meas = 1;  // height and length of the constant 1
        for (std::size_t i = 0; i < prefix_len; ++i) {
            if (!(prefix >> i & 1)) continue;
            auto out = PolyKernels::mul_into(bufs_[i + 1], *cur, phis_[i], measure_,
                                             threshold_);
            accum_.escalated |= out.escalated;
            cur = &bufs_[i + 1];
            meas = out.measure;
            included_.push_back(i);
        }
        descend(prefix_len, cur, meas);
        included_.clear();
    }

  private:
    void descend(std::size_t level, const IntPoly* cur, std::uint64_t meas) {
        const auto lazy_witness = [this] { return witness(); };
        if (level == phis_.size()) {
            accum_.leaf(meas, lazy_witness);
            return;
        }
        descend(level + 1, cur, meas);
        included_.push_back(level);
        if (level + 1 == phis_.size()) {
            // this include-edge lands on a leaf: measure without materializing
            std::uint64_t leaf_meas;
            if (auto sm = PolyKernels::streamed_measure(*cur, meas, phis_[level], measure_)) {
                leaf_meas = *sm;
            } else {
                auto out = PolyKernels::mul_into(bufs_[level + 1], *cur, phis_[level],
                                                 measure_, threshold_);
                accum_.escalated |= out.escalated;
                leaf_meas = out.measure;
            }
            accum_.leaf(leaf_meas, lazy_witness);
        } else {
            PolyKernels::Outcome out;
            if (auto fused = PolyKernels::fused_mul_into(bufs_[level + 1], *cur, meas,
                                                         phis_[level], measure_)) {
                out = *fused;
            } else {
                out = PolyKernels::mul_into(bufs_[level + 1], *cur, phis_[level], measure_,
                                            threshold_);
                accum_.escalated |= out.escalated;
            }
            descend(level + 1, &bufs_[level + 1], out.measure);
        }
        included_.pop_back();
    }

    Witness witness() const {
        Witness w;
        w.reserve(included_.size());
        for (std::size_t i : included_) w.push_back(divs_[i]);
        std::sort(w.begin(), w.end());
        return w;
    }

    const std::vector<IntPoly>& phis_;
    const std::vector<std::uint64_t>& divs_;
    Measure measure_;
    std::size_t threshold_;
    TaskAccum& accum_;
    std::vector<IntPoly> bufs_;
    std::vector<std::size_t> included_;
    IntPoly root_;
};

inline std::vector<std::size_t> branch_order(const std::vector<std::uint64_t>& divisor_list) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> keyed;  // (phi, d)
    keyed.reserve(divisor_list.size());
    for (std::uint64_t d : divisor_list) keyed.emplace_back(euler_phi(d), d);
    std::vector<std::size_t> order(divisor_list.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (keyed[x].first != keyed[y].first) return keyed[x].first > keyed[y].first;
        return keyed[x].second < keyed[y].second;
    });
    return order;
}

}  // namespace detail

/// Exact maximum of the measure over all 2^k subset products of cyclotomic
/// polynomials of the given divisors. Results (value, witnesses, counts) are
/// identical to the naive enumerator and independent of parallelism.
inline SubsetMaxResult subset_max(const std::vector<std::uint64_t>& divisor_list,
                                  Measure measure, const SearchOptions& opts = {}) {
    const std::size_t k = divisor_list.size();
    if (k == 0 || k > 33)
        throw InputOutOfRange("subset_max: divisor list size out of range");

    // Expensive large-degree multiplications happen near the root, shared by
    // whole subtrees; cheap ones near the leaves.
    const std::vector<std::size_t> order = detail::branch_order(divisor_list);
    std::vector<std::uint64_t> divs(k);
    std::vector<IntPoly> phis(k);
    for (std::size_t i = 0; i < k; ++i) {
        divs[i] = divisor_list[order[i]];
        phis[i] = cyclotomic(divs[i]);
        if (opts.force_bigint) phis[i].force_bigint();
    }

    const unsigned par = std::max(1u, opts.parallelism);
    const std::size_t split_levels =
        std::min<std::size_t>(par <= 1 ? 0 : std::bit_width(par - 1), k);
    const std::size_t task_count = std::size_t(1) << split_levels;

    std::vector<detail::TaskAccum> results;
    results.reserve(task_count);
    for (std::size_t t = 0; t < task_count; ++t) results.emplace_back(opts.witness_cap);

    auto run_task = [&](std::size_t t) {
        detail::SubtreeWalker walker(phis, divs, measure, opts.karatsuba_threshold,
                                     opts.force_bigint, results[t]);
        walker.run(t, split_levels);
    };

    if (task_count == 1) {
        run_task(0);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(par);
        std::vector<std::thread> workers;
        workers.reserve(par);
        for (unsigned w = 0; w < par; ++w) {
            workers.emplace_back([&, w] {
                try {
                    for (std::size_t t; (t = next.fetch_add(1)) < task_count;) run_task(t);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& th : workers) th.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    SubsetMaxResult out;
    detail::WitnessSet merged(opts.witness_cap);
    for (const auto& r : results) {
        out.nodes += r.leaves;
        out.escalated |= r.escalated;
        if (r.total == 0) continue;
        if (r.best > out.value) {
            out.value = r.best;
            merged.clear();
            out.witness_total = 0;
        }
        if (r.best == out.value) {
            merged.merge(r.witnesses);
            out.witness_total += r.total;
        }
    }
    out.witnesses = merged.sorted();
    return out;
}

/// Literal power-set enumeration, recomputing every subset product from
/// scratch. The independent oracle for subset_max.
inline SubsetMaxResult naive_subset_max(const std::vector<std::uint64_t>& divisor_list,
                                        Measure measure, const SearchOptions& opts = {}) {
    const std::size_t k = divisor_list.size();
    if (k == 0 || k > 26)
        throw InputOutOfRange("naive_subset_max: divisor list size out of range");
    std::vector<IntPoly> phis(k);
    for (std::size_t i = 0; i < k; ++i) {
        phis[i] = cyclotomic(divisor_list[i]);
        if (opts.force_bigint) phis[i].force_bigint();
    }
    detail::TaskAccum accum(opts.witness_cap);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
        IntPoly product = IntPoly::one();
        if (opts.force_bigint) product.force_bigint();
        Witness w;
        for (std::size_t i = 0; i < k; ++i) {
            if (!(mask >> i & 1)) continue;
            product = mul(product, phis[i], opts.karatsuba_threshold);
            w.push_back(divisor_list[i]);
        }
        accum.escalated |= product.is_bigint() && !opts.force_bigint;
        std::sort(w.begin(), w.end());
        accum.leaf(measure_of(product, measure), [&] { return w; });
    }
    SubsetMaxResult out;
    out.value = accum.best;
    out.witnesses = accum.witnesses.sorted();
    out.witness_total = accum.total;
    out.nodes = accum.leaves;
    out.escalated = accum.escalated;
    return out;
}

namespace detail {

inline SearchResult compute_measure(std::uint64_t n, Measure measure,
                                    const SearchOptions& opts) {
    if (n == 0 || n > kMaxInput)
        throw InputOutOfRange("compute: n must be in [1, 2^63-1]");
    const auto t0 = std::chrono::steady_clock::now();
    SearchResult res;
    res.n = n;
    res.measure = measure;

    // Closed forms are only known for the height measure.
    if (measure == Measure::Height && opts.allow_closed_form && n > 1) {
        if (auto kf = known_formula(n)) {
            res.value = kf->value;
            res.witnesses = {kf->witness};
            res.witness_total = 1;
            res.method = SearchMethod::ClosedForm;
            res.elapsed_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
            return res;
        }
    }

    const Factorization f = factor(n);
    const std::uint64_t tau = f.tau();
    if (tau > opts.divisor_budget)
        throw BudgetExceeded(n, static_cast<std::size_t>(tau), opts.divisor_budget);
    SubsetMaxResult sm = subset_max(divisors(f), measure, opts);
    res.value = sm.value;
    res.witnesses = std::move(sm.witnesses);
    res.witness_total = sm.witness_total;
    res.nodes_visited = sm.nodes;
    res.escalated = sm.escalated;
    res.method = SearchMethod::Exhaustive;
    res.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return res;
}

}  // namespace detail

/// B(n): the largest coefficient height over all divisors of x^n - 1.
inline SearchResult compute_B(std::uint64_t n, const SearchOptions& opts = {}) {
    return detail::compute_measure(n, Measure::Height, opts);
}

/// C(n): the largest coefficient length over all divisors of x^n - 1.
/// No closed forms are assumed.
inline SearchResult compute_C(std::uint64_t n, const SearchOptions& opts = {}) {
    return detail::compute_measure(n, Measure::Length, opts);
}

}  // namespace cyclo
