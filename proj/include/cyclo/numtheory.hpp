#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "cyclo/errors.hpp"

namespace cyclo {

/// Largest accepted input for the arithmetic functions.
inline constexpr std::uint64_t kMaxInput = static_cast<std::uint64_t>(INT64_MAX);

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exp;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes; empty for n = 1.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;

    std::size_t omega() const { return factors.size(); }

    std::uint64_t tau() const {
        std::uint64_t t = 1;
        for (const auto& f : factors) t *= f.exp + 1;
        return t;
    }

    std::uint64_t phi() const {
        std::uint64_t r = 1;
        for (const auto& f : factors) {
            r *= f.prime - 1;
            for (std::uint32_t e = 1; e < f.exp; ++e) r *= f.prime;
        }
        return r;
    }

    int mobius() const {
        for (const auto& f : factors)
            if (f.exp > 1) return 0;
        return factors.size() % 2 == 0 ? 1 : -1;
    }

    std::uint64_t radical() const {
        std::uint64_t r = 1;
        for (const auto& f : factors) r *= f.prime;
        return r;
    }

    bool is_squarefree() const { return mobius() != 0; }

    /// Canonical form, e.g. "3*31*1009" or "7^2*83^2"; "1" for n = 1.
    std::string to_string() const {
        if (factors.empty()) return "1";
        std::ostringstream out;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out << "*";
            out << factors[i].prime;
            if (factors[i].exp > 1) out << "^" << factors[i].exp;
        }
        return out.str();
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Complete prime factorization by deterministic trial division.
inline Factorization factor(std::uint64_t n, std::uint64_t bound = kMaxInput) {
    if (n == 0) throw InputOutOfRange("factor: n must be >= 1");
    if (n > bound)
        throw InputOutOfRange("factor: n=" + std::to_string(n) + " exceeds bound " +
                              std::to_string(bound));
    Factorization f;
    f.n = n;
    auto strip = [&](std::uint64_t p) {
        if (n % p != 0) return;
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (std::uint64_t d = 5; d <= n / d;) {
        strip(d);
        d += 2;
        if (d > n / d) break;
        strip(d);
        d += 4;
    }
    if (n > 1) f.factors.push_back({n, 1});
    return f;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d <= n / d; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

/// All divisors of n in ascending order; count = prod(exp_i + 1).
inline std::vector<std::uint64_t> divisors(const Factorization& f) {
    std::vector<std::uint64_t> ds{1};
    for (const auto& pp : f.factors) {
        const std::size_t base = ds.size();
        std::uint64_t pe = 1;
        for (std::uint32_t e = 1; e <= pp.exp; ++e) {
            pe *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) { return divisors(factor(n)); }

inline std::uint64_t euler_phi(std::uint64_t n) { return factor(n).phi(); }

inline int mobius(std::uint64_t n) { return factor(n).mobius(); }

inline std::size_t omega(std::uint64_t n) { return factor(n).omega(); }

inline std::uint64_t radical(std::uint64_t n) { return factor(n).radical(); }

/// Primes <= limit via a sieve; used by the conjecture range scans.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> ps;
    if (limit < 2) return ps;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        ps.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return ps;
}

}  // namespace cyclo
