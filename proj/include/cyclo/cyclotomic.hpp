#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>

#include "cyclo/intpoly.hpp"
#include "cyclo/numtheory.hpp"

namespace cyclo {

/// Bounded memo for squarefree cyclotomic polynomials, keyed by n. The cap
/// counts stored coefficients; once full, new entries are computed but not
/// retained (desk-scale runs never reach the cap, but it must exist).
class CyclotomicCache {
  public:
    static CyclotomicCache& instance() {
        static CyclotomicCache cache;
        return cache;
    }

    std::shared_ptr<const IntPoly> lookup(std::uint64_t n) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = entries_.find(n);
        return it == entries_.end() ? nullptr : it->second;
    }

    void insert(std::uint64_t n, std::shared_ptr<const IntPoly> poly) {
        std::lock_guard<std::mutex> lock(mu_);
        if (entries_.contains(n)) return;
        if (stored_coeffs_ + poly->size() > coeff_cap_) return;
        stored_coeffs_ += poly->size();
        entries_.emplace(n, std::move(poly));
    }

    void set_coeff_cap(std::size_t cap) {
        std::lock_guard<std::mutex> lock(mu_);
        coeff_cap_ = cap;
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mu_);
        entries_.clear();
        stored_coeffs_ = 0;
    }

    std::size_t stored_coeffs() const {
        std::lock_guard<std::mutex> lock(mu_);
        return stored_coeffs_;
    }

  private:
    mutable std::mutex mu_;
    std::map<std::uint64_t, std::shared_ptr<const IntPoly>> entries_;
    std::size_t stored_coeffs_ = 0;
    std::size_t coeff_cap_ = std::size_t(1) << 25;  // ~32M coefficients
};

namespace detail {

/// Phi_r for squarefree r: start from x^r - 1 and divide out Phi_d for every
/// proper divisor d in increasing order. `memo(d)` supplies sub-polynomials.
template <typename Memo>
IntPoly build_squarefree_cyclotomic(std::uint64_t r, Memo&& memo) {
    IntPoly poly = IntPoly::x_pow_minus_one(r);
    for (std::uint64_t d : divisors(r)) {
        if (d == r) continue;
        poly = exact_div(poly, memo(d));
    }
    return poly;
}

inline std::shared_ptr<const IntPoly> cyclotomic_squarefree_cached(std::uint64_t r) {
    auto& cache = CyclotomicCache::instance();
    if (auto hit = cache.lookup(r)) return hit;
    auto built = std::make_shared<const IntPoly>(build_squarefree_cyclotomic(
        r, [](std::uint64_t d) { return *cyclotomic_squarefree_cached(d); }));
    cache.insert(r, built);
    return built;
}

}  // namespace detail

/// The exact nth cyclotomic polynomial; degree euler_phi(n).
/// Built as Phi_rad(n) inflated by n / rad(n).
inline IntPoly cyclotomic(std::uint64_t n) {
    if (n == 0) throw InputOutOfRange("cyclotomic: n must be >= 1");
    const std::uint64_t r = radical(n);
    auto base = detail::cyclotomic_squarefree_cached(r);
    return n == r ? *base : inflate(*base, n / r);
}

/// cyclotomic(n) computed with no shared cache; for cross-checking only.
inline IntPoly cyclotomic_uncached(std::uint64_t n) {
    if (n == 0) throw InputOutOfRange("cyclotomic: n must be >= 1");
    const std::uint64_t r = radical(n);
    struct Rec {
        static IntPoly squarefree(std::uint64_t d) {
            return detail::build_squarefree_cyclotomic(
                d, [](std::uint64_t e) { return squarefree(e); });
        }
    };
    IntPoly base = Rec::squarefree(r);
    return n == r ? std::move(base) : inflate(base, n / r);
}

/// A(n): the height of the nth cyclotomic polynomial.
inline std::uint64_t cyclotomic_height(std::uint64_t n) { return height(cyclotomic(n)); }

/// True iff Phi_p * Phi_{p^2} * ... * Phi_{p^k} is the all-ones polynomial
/// of length p^k.
inline bool prefix_product_check(std::uint64_t p, std::uint32_t k) {
    if (!is_prime(p)) throw InputOutOfRange("prefix_product_check: p must be prime");
    if (k == 0) throw InputOutOfRange("prefix_product_check: k must be >= 1");
    IntPoly product = IntPoly::one();
    std::uint64_t pk = 1;
    for (std::uint32_t i = 1; i <= k; ++i) {
        pk *= p;
        product = mul(product, cyclotomic(pk));
    }
    if (product.is_zero() || product.degree() != pk - 1) return false;
    for (std::size_t i = 0; i < pk; ++i)
        if (product.coeff(i) != 1) return false;
    return true;
}

}  // namespace cyclo
