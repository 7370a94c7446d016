#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/bigint.hpp"
#include "cyclo/errors.hpp"

namespace cyclo {

/// Which coefficient summary a search maximizes.
enum class Measure { Height, Length };

inline const char* measure_name(Measure m) { return m == Measure::Height ? "B" : "C"; }

inline constexpr std::size_t kDefaultKaratsubaThreshold = 512;

/// Dense univariate polynomial over Z, coefficients stored low to high.
///
/// Coefficients live in a machine-word vector while every value fits in
/// int64; any operation that would overflow redoes itself in the BigInt
/// lane. The two representations compare equal whenever the values are
/// equal. The zero polynomial is the empty sequence.
class IntPoly {
  public:
    IntPoly() = default;

    IntPoly(std::initializer_list<std::int64_t> coeffs) : small_(coeffs) { trim(); }

    static IntPoly from_coeffs(std::vector<std::int64_t> coeffs) {
        IntPoly p;
        p.small_ = std::move(coeffs);
        p.trim();
        return p;
    }

    static IntPoly from_coeffs(std::vector<BigInt> coeffs) {
        IntPoly p;
        p.big_lane_ = true;
        p.big_ = std::move(coeffs);
        p.trim();
        return p;
    }

    static IntPoly one() { return IntPoly{1}; }

    /// x^n - 1 for n >= 1.
    static IntPoly x_pow_minus_one(std::uint64_t n) {
        if (n == 0) throw InputOutOfRange("x_pow_minus_one: n must be >= 1");
        std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
        c.front() = -1;
        c.back() = 1;
        return from_coeffs(std::move(c));
    }

    bool is_zero() const { return size() == 0; }

    /// Number of stored coefficients: degree + 1, or 0 for the zero polynomial.
    std::size_t size() const { return big_lane_ ? big_.size() : small_.size(); }

    /// Undefined for the zero polynomial.
    std::size_t degree() const {
        assert(!is_zero());
        return size() - 1;
    }

    /// Coefficient of x^i; 0 beyond the degree.
    BigInt coeff(std::size_t i) const {
        if (i >= size()) return 0;
        return big_lane_ ? big_[i] : BigInt(small_[i]);
    }

    /// True when the polynomial sits in the arbitrary-precision lane
    /// (either escalated by an overflow or forced by the caller).
    bool is_bigint() const { return big_lane_; }

    /// Convert to the arbitrary-precision lane in place; values unchanged.
    void force_bigint() {
        if (big_lane_) return;
        big_.assign(small_.begin(), small_.end());
        small_.clear();
        small_.shrink_to_fit();
        big_lane_ = true;
    }

    const std::vector<std::int64_t>& small_coeffs() const {
        assert(!big_lane_);
        return small_;
    }

    const std::vector<BigInt>& big_coeffs() const {
        assert(big_lane_);
        return big_;
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) {
        if (a.size() != b.size()) return false;
        if (a.big_lane_ == b.big_lane_)
            return a.big_lane_ ? a.big_ == b.big_ : a.small_ == b.small_;
        const IntPoly& big = a.big_lane_ ? a : b;
        const IntPoly& small = a.big_lane_ ? b : a;
        for (std::size_t i = 0; i < small.small_.size(); ++i)
            if (big.big_[i] != small.small_[i]) return false;
        return true;
    }

    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    /// Human-readable form, highest power first, e.g. "x^4 - x^2 + 1".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = size(); i-- > 0;) {
            BigInt c = coeff(i);
            if (c == 0) continue;
            const bool neg = c < 0;
            if (first) {
                if (neg) out << "-";
                first = false;
            } else {
                out << (neg ? " - " : " + ");
            }
            BigInt mag = neg ? BigInt(-c) : c;
            if (mag != 1 || i == 0) out << mag.str();
            if (i >= 1) {
                out << "x";
                if (i >= 2) out << "^" << i;
            }
        }
        return out.str();
    }

  private:
    friend struct PolyKernels;

    void trim() {
        if (big_lane_) {
            while (!big_.empty() && big_.back() == 0) big_.pop_back();
        } else {
            while (!small_.empty() && small_.back() == 0) small_.pop_back();
        }
    }

    std::vector<std::int64_t> small_;
    std::vector<BigInt> big_;
    bool big_lane_ = false;
};

namespace detail {

template <typename C, bool Checked>
struct CoeffOps {
    static void acc(C& out, const C& x) {
        if constexpr (Checked)
            out = checked_add(out, x);
        else
            out += x;
    }
    static void dec(C& out, const C& x) {
        if constexpr (Checked)
            out = checked_sub(out, x);
        else
            out -= x;
    }
    static void acc_mul(C& out, const C& a, const C& b) {
        if constexpr (Checked)
            out = checked_add(out, checked_mul(a, b));
        else
            out += a * b;
    }
    static C add(const C& a, const C& b) {
        if constexpr (Checked)
            return checked_add(a, b);
        else
            return a + b;
    }
};

/// dst += a * b (schoolbook). dst must have size na+nb-1 and not alias a or b.
template <typename C, bool Checked>
void schoolbook_acc(C* dst, const C* a, std::size_t na, const C* b, std::size_t nb) {
    using Ops = CoeffOps<C, Checked>;
    for (std::size_t j = 0; j < nb; ++j) {
        const C& bj = b[j];
        if (bj == 0) continue;
        C* out = dst + j;
        if (bj == 1) {
            for (std::size_t i = 0; i < na; ++i) Ops::acc(out[i], a[i]);
        } else if (bj == -1) {
            for (std::size_t i = 0; i < na; ++i) Ops::dec(out[i], a[i]);
        } else {
            for (std::size_t i = 0; i < na; ++i) Ops::acc_mul(out[i], a[i], bj);
        }
    }
}

/// dst += a * b, splitting recursively (Karatsuba above the threshold).
/// Requires na >= nb >= 1 and dst of size na+nb-1, no aliasing.
template <typename C, bool Checked>
void mul_rec(C* dst, const C* a, std::size_t na, const C* b, std::size_t nb,
             std::size_t threshold) {
    using Ops = CoeffOps<C, Checked>;
    if (na < nb) {
        std::swap(a, b);
        std::swap(na, nb);
    }
    if (nb <= threshold) {
        schoolbook_acc<C, Checked>(dst, a, na, b, nb);
        return;
    }
    const std::size_t m = (na + 1) / 2;
    if (nb <= m) {
        // b only reaches the low half of a: two independent block products.
        mul_rec<C, Checked>(dst, a, m, b, nb, threshold);
        mul_rec<C, Checked>(dst + m, a + m, na - m, b, nb, threshold);
        return;
    }
    const std::size_t na1 = na - m;  // 1 <= na1 <= m
    const std::size_t nb1 = nb - m;  // 1 <= nb1 <= m
    std::vector<C> z0(2 * m - 1, C(0));
    mul_rec<C, Checked>(z0.data(), a, m, b, m, threshold);
    std::vector<C> z2(na1 + nb1 - 1, C(0));
    mul_rec<C, Checked>(z2.data(), a + m, na1, b + m, nb1, threshold);
    std::vector<C> sa(m), sb(m);
    for (std::size_t i = 0; i < m; ++i)
        sa[i] = i < na1 ? Ops::add(a[i], a[m + i]) : a[i];
    for (std::size_t i = 0; i < m; ++i)
        sb[i] = i < nb1 ? Ops::add(b[i], b[m + i]) : b[i];
    std::vector<C> z1(2 * m - 1, C(0));
    mul_rec<C, Checked>(z1.data(), sa.data(), m, sb.data(), m, threshold);

    for (std::size_t i = 0; i < z0.size(); ++i) {
        Ops::acc(dst[i], z0[i]);
        Ops::dec(dst[m + i], z0[i]);
    }
    for (std::size_t i = 0; i < z2.size(); ++i) {
        Ops::acc(dst[2 * m + i], z2[i]);
        Ops::dec(dst[m + i], z2[i]);
    }
    for (std::size_t i = 0; i < z1.size(); ++i) Ops::acc(dst[m + i], z1[i]);
}

struct ScanInfo {
    std::uint64_t height = 0;        // max |c|
    unsigned __int128 length = 0;    // sum |c|
    std::size_t nonzero = 0;
    bool units_only = true;          // every coefficient in {-1, 0, 1}
};

inline ScanInfo scan(const std::int64_t* c, std::size_t n) {
    ScanInfo s;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t mag = abs_u64(c[i]);
        if (mag == 0) continue;
        ++s.nonzero;
        if (mag > 1) s.units_only = false;
        if (mag > s.height) s.height = mag;
        s.length += mag;
    }
    return s;
}

/// Number of halvings Karatsuba needs before the short side fits the
/// threshold; bounds the growth of intermediate operand heights.
inline unsigned karatsuba_levels(std::size_t nb, std::size_t threshold) {
    unsigned levels = 0;
    while (nb > threshold) {
        nb = (nb + 1) / 2;
        ++levels;
    }
    return levels;
}

/// dst = a * b in the machine-word lane; false when the product must escalate.
/// a and b must be nonzero and must not alias dst.
inline bool try_mul_small(std::vector<std::int64_t>& dst,
                          const std::vector<std::int64_t>& a,
                          const std::vector<std::int64_t>& b,
                          std::size_t threshold) {
    const std::int64_t* pa = a.data();
    const std::int64_t* pb = b.data();
    std::size_t na = a.size(), nb = b.size();
    if (na < nb) {
        std::swap(pa, pb);
        std::swap(na, nb);
    }
    const ScanInfo sa = scan(pa, na);
    const ScanInfo sb = scan(pb, nb);
    dst.assign(na + nb - 1, 0);

    // When Phi-like short operands are mostly zeros with unit coefficients,
    // per-pass add/sub beats Karatsuba despite the larger asymptotic count.
    const bool sparse_units =
        sb.units_only && nb > threshold &&
        static_cast<double>(sb.nonzero) <= 4.0 * std::pow(static_cast<double>(nb), 0.585);

    const unsigned levels = sparse_units ? 0 : karatsuba_levels(nb, threshold);
    const unsigned margin = 2 * levels + 2;
    const unsigned __int128 bound =
        std::min(static_cast<unsigned __int128>(sa.height) * sb.length,
                 static_cast<unsigned __int128>(sb.height) * sa.length);
    const bool safe =
        margin < 63 &&
        bound <= static_cast<unsigned __int128>(
                     static_cast<std::uint64_t>(INT64_MAX) >> margin);

    try {
        if (sparse_units) {
            if (safe)
                schoolbook_acc<std::int64_t, false>(dst.data(), pa, na, pb, nb);
            else
                schoolbook_acc<std::int64_t, true>(dst.data(), pa, na, pb, nb);
        } else if (safe) {
            mul_rec<std::int64_t, false>(dst.data(), pa, na, pb, nb, threshold);
        } else {
            mul_rec<std::int64_t, true>(dst.data(), pa, na, pb, nb, threshold);
        }
    } catch (const Int64Overflow&) {
        return false;
    }
    return true;
}

inline std::vector<BigInt> to_big_vector(const IntPoly& p) {
    if (p.is_bigint()) return p.big_coeffs();
    const auto& s = p.small_coeffs();
    return std::vector<BigInt>(s.begin(), s.end());
}

/// Exact division kernel; returns false when b does not divide a in Z[x].
/// r is consumed (it starts as a copy of the dividend's coefficients).
template <typename C, bool Checked>
bool div_exact(std::vector<C>& q, std::vector<C>&& r, const std::vector<C>& b) {
    using Ops = CoeffOps<C, Checked>;
    const std::size_t nb = b.size();
    const C& lead = b.back();
    const std::size_t nq = r.size() - nb + 1;
    q.assign(nq, C(0));
    for (std::size_t i = nq; i-- > 0;) {
        C num = r[i + nb - 1];
        if (num == 0) continue;
        if constexpr (Checked) {
            if (lead == -1 && num == INT64_MIN) throw Int64Overflow{};
        }
        if (num % lead != 0) return false;
        C qi = num / lead;
        q[i] = qi;
        for (std::size_t j = 0; j < nb; ++j) {
            if (b[j] == 0) continue;
            if (b[j] == 1)
                Ops::dec(r[i + j], qi);
            else if (b[j] == -1)
                Ops::acc(r[i + j], qi);
            else if constexpr (Checked)
                r[i + j] = checked_sub(r[i + j], checked_mul(qi, b[j]));
            else
                r[i + j] -= qi * b[j];
        }
    }
    for (std::size_t i = 0; i + 1 < nb; ++i)
        if (r[i] != 0) return false;
    return true;
}

inline std::uint64_t big_to_u64_measure(const BigInt& v, const char* what) {
    if (v > std::numeric_limits<std::uint64_t>::max())
        throw ValueOverflow(std::string(what) + " does not fit in 64 bits");
    return static_cast<std::uint64_t>(v);
}

/// Accumulator for the bound-guarded short-multiplier path. The guard keeps
/// every coefficient (and the length total) within int64, so plain signed
/// abs/max/add apply; these patterns auto-vectorize where abs_u64 does not.
template <Measure M>
struct SmallMeasureAcc {
    std::int64_t v = 0;
    void add(std::int64_t c) {
        const std::int64_t mag = c < 0 ? -c : c;
        if constexpr (M == Measure::Height)
            v = v > mag ? v : mag;
        else
            v += mag;
    }
    std::uint64_t value() const { return static_cast<std::uint64_t>(v); }
};

template <Measure M>
struct BigMeasureAcc {
    BigInt v = 0;
    void add(const BigInt& c) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if constexpr (M == Measure::Height) {
            if (mag > v) v = std::move(mag);
        } else {
            v += mag;
        }
    }
    std::uint64_t value() const { return big_to_u64_measure(v, "measure"); }
};

/// One-pass convolution by a short multiplier (nb coefficients, fixed at
/// compile time): feeds every product coefficient through the measure
/// accumulator and optionally stores it. Requires na >= NB >= 2.
template <typename C, int NB, bool Store, typename Acc>
void conv_short(C* __restrict dst, const C* __restrict a, std::size_t na,
                const C* __restrict b, Acc& acc) {
    auto emit = [&](std::size_t i, C&& c) {
        acc.add(c);
        if constexpr (Store) dst[i] = std::move(c);
    };
    for (std::size_t i = 0; i < std::size_t(NB - 1); ++i) {
        C c = C(0);
        for (std::size_t j = 0; j <= i; ++j) c += b[j] * a[i - j];
        emit(i, std::move(c));
    }
    if constexpr (Store) {
        for (std::size_t i = NB - 1; i < na; ++i) {
            C c = b[0] * a[i];
            for (int j = 1; j < NB; ++j) c += b[j] * a[i - j];
            acc.add(c);
            dst[i] = std::move(c);
        }
    } else {
        for (std::size_t i = NB - 1; i < na; ++i) {
            C c = b[0] * a[i];
            for (int j = 1; j < NB; ++j) c += b[j] * a[i - j];
            acc.add(c);
        }
    }
    for (std::size_t i = na; i < na + NB - 1; ++i) {
        C c = C(0);
        for (std::size_t j = i - na + 1; j < std::size_t(NB); ++j) c += b[j] * a[i - j];
        emit(i, std::move(c));
    }
}

template <typename C, bool Store, typename Acc>
bool conv_short_dispatch(std::size_t nb, C* dst, const C* a, std::size_t na, const C* b,
                         Acc& acc) {
    switch (nb) {
        case 2: conv_short<C, 2, Store>(dst, a, na, b, acc); return true;
        case 3: conv_short<C, 3, Store>(dst, a, na, b, acc); return true;
        case 4: conv_short<C, 4, Store>(dst, a, na, b, acc); return true;
        case 5: conv_short<C, 5, Store>(dst, a, na, b, acc); return true;
        case 6: conv_short<C, 6, Store>(dst, a, na, b, acc); return true;
        case 7: conv_short<C, 7, Store>(dst, a, na, b, acc); return true;
        case 8: conv_short<C, 8, Store>(dst, a, na, b, acc); return true;
        default: return false;
    }
}

/// Overflow-safety gate for the machine-word short-multiplier path, given
/// the known measure of a. Height mode: |c_i| <= H(a) L(b). Length mode:
/// sum |c_i| <= L(a) L(b). Both are covered by a_meas * L(b).
inline bool short_mul_safe(std::uint64_t a_meas, const std::vector<std::int64_t>& b) {
    unsigned __int128 b_length = 0;
    for (std::int64_t c : b) b_length += abs_u64(c);
    return static_cast<unsigned __int128>(a_meas) * b_length <=
           (static_cast<std::uint64_t>(INT64_MAX) >> 2);
}

}  // namespace detail

/// Largest coefficient in absolute value; 0 for the zero polynomial.
inline std::uint64_t height(const IntPoly& f) {
    if (f.is_zero()) return 0;
    if (!f.is_bigint()) {
        const auto& c = f.small_coeffs();
        std::uint64_t h = 0;
        for (std::size_t i = 0; i < c.size(); ++i) h = std::max(h, detail::abs_u64(c[i]));
        return h;
    }
    BigInt h = 0;
    for (const BigInt& c : f.big_coeffs()) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (mag > h) h = std::move(mag);
    }
    return detail::big_to_u64_measure(h, "height");
}

/// Sum of absolute values of the coefficients; 0 for the zero polynomial.
inline std::uint64_t length(const IntPoly& f) {
    if (f.is_zero()) return 0;
    if (!f.is_bigint()) {
        const auto& c = f.small_coeffs();
        unsigned __int128 sum = 0;
        for (std::size_t i = 0; i < c.size(); ++i) sum += detail::abs_u64(c[i]);
        if (sum > std::numeric_limits<std::uint64_t>::max())
            throw ValueOverflow("length does not fit in 64 bits");
        return static_cast<std::uint64_t>(sum);
    }
    BigInt sum = 0;
    for (const BigInt& c : f.big_coeffs()) sum += (c < 0 ? BigInt(-c) : c);
    return detail::big_to_u64_measure(sum, "length");
}

inline std::uint64_t measure_of(const IntPoly& f, Measure m) {
    return m == Measure::Height ? height(f) : length(f);
}

struct PolyKernels {
    /// dst = a * b. Returns the requested measure of dst and whether the
    /// operation had to escalate to the BigInt lane because of an overflow.
    /// dst must not alias a or b; its buffers are reused across calls.
    struct Outcome {
        std::uint64_t measure = 0;
        bool escalated = false;
    };

    /// dst = a * b without measuring; true when the operation escalated.
    static bool product_into(IntPoly& dst, const IntPoly& a, const IntPoly& b,
                             std::size_t threshold = kDefaultKaratsubaThreshold) {
        assert(&dst != &a && &dst != &b);
        if (a.is_zero() || b.is_zero()) {
            dst.small_.clear();
            dst.big_.clear();
            dst.big_lane_ = false;
            return false;
        }
        bool escalated = false;
        if (!a.is_bigint() && !b.is_bigint()) {
            if (detail::try_mul_small(dst.small_, a.small_, b.small_, threshold)) {
                dst.big_lane_ = false;
                dst.big_.clear();
                return false;
            }
            escalated = true;
        }
        std::vector<BigInt> ba = detail::to_big_vector(a);
        std::vector<BigInt> bb = detail::to_big_vector(b);
        if (ba.size() < bb.size()) ba.swap(bb);
        dst.big_.assign(ba.size() + bb.size() - 1, BigInt(0));
        detail::mul_rec<BigInt, false>(dst.big_.data(), ba.data(), ba.size(), bb.data(),
                                       bb.size(), threshold);
        dst.big_lane_ = true;
        dst.small_.clear();
        return escalated;
    }

    static Outcome mul_into(IntPoly& dst, const IntPoly& a, const IntPoly& b, Measure m,
                            std::size_t threshold = kDefaultKaratsubaThreshold) {
        Outcome out;
        out.escalated = product_into(dst, a, b, threshold);
        out.measure = measure_of(dst, m);
        return out;
    }

    /// Single-pass dst = a * b for a short b, folding the measure into the
    /// write. a_meas is the caller-tracked measure of a, which doubles as
    /// the overflow proof for the machine-word lane. Returns nullopt when
    /// the inputs are not eligible; the caller then uses mul_into.
    static std::optional<Outcome> fused_mul_into(IntPoly& dst, const IntPoly& a,
                                                 std::uint64_t a_meas, const IntPoly& b,
                                                 Measure m) {
        return short_mul<true>(&dst, a, a_meas, b, m);
    }

    /// Measure of a * b without materializing the product; same eligibility
    /// rules as fused_mul_into. For the bottom edge of a subset search this
    /// removes the whole write pass.
    static std::optional<std::uint64_t> streamed_measure(const IntPoly& a,
                                                         std::uint64_t a_meas,
                                                         const IntPoly& b, Measure m) {
        const auto out = short_mul<false>(nullptr, a, a_meas, b, m);
        if (!out) return std::nullopt;
        return out->measure;
    }

  private:
    template <bool Store>
    static std::optional<Outcome> short_mul(IntPoly* dst, const IntPoly& a,
                                            std::uint64_t a_meas, const IntPoly& b,
                                            Measure m) {
        const std::size_t na = a.size(), nb = b.size();
        if (nb < 2 || nb > 8 || na < nb) return std::nullopt;
        const bool big = a.is_bigint() || b.is_bigint();
        if (!big) {
            if (!detail::short_mul_safe(a_meas, b.small_coeffs())) return std::nullopt;
            const std::int64_t* pa = a.small_coeffs().data();
            const std::int64_t* pb = b.small_coeffs().data();
            std::int64_t* out = nullptr;
            if constexpr (Store) {
                dst->big_.clear();
                dst->big_lane_ = false;
                dst->small_.resize(na + nb - 1);
                out = dst->small_.data();
            }
            Outcome res;
            if (m == Measure::Height) {
                detail::SmallMeasureAcc<Measure::Height> acc;
                if (!detail::conv_short_dispatch<std::int64_t, Store>(nb, out, pa, na, pb,
                                                                      acc))
                    return std::nullopt;
                res.measure = acc.value();
            } else {
                detail::SmallMeasureAcc<Measure::Length> acc;
                if (!detail::conv_short_dispatch<std::int64_t, Store>(nb, out, pa, na, pb,
                                                                      acc))
                    return std::nullopt;
                res.measure = acc.value();
            }
            return res;
        }
        if (!a.is_bigint()) return std::nullopt;  // forced runs keep both lanes big
        const std::vector<BigInt>& pa = a.big_coeffs();
        std::vector<BigInt> pb_storage;
        const std::vector<BigInt>* pb = &pb_storage;
        if (b.is_bigint())
            pb = &b.big_coeffs();
        else
            pb_storage = detail::to_big_vector(b);
        BigInt* out = nullptr;
        if constexpr (Store) {
            dst->small_.clear();
            dst->big_lane_ = true;
            dst->big_.resize(na + nb - 1);
            out = dst->big_.data();
        }
        Outcome res;
        if (m == Measure::Height) {
            detail::BigMeasureAcc<Measure::Height> acc;
            if (!detail::conv_short_dispatch<BigInt, Store>(nb, out, pa.data(), na,
                                                            pb->data(), acc))
                return std::nullopt;
            res.measure = acc.value();
        } else {
            detail::BigMeasureAcc<Measure::Length> acc;
            if (!detail::conv_short_dispatch<BigInt, Store>(nb, out, pa.data(), na,
                                                            pb->data(), acc))
                return std::nullopt;
            res.measure = acc.value();
        }
        return res;
    }

  public:

    static IntPoly make_small(std::vector<std::int64_t> coeffs) {
        IntPoly p;
        p.small_ = std::move(coeffs);
        return p;
    }

    static IntPoly make_big(std::vector<BigInt> coeffs) {
        IntPoly p;
        p.big_ = std::move(coeffs);
        p.big_lane_ = true;
        return p;
    }
};

/// Exact product. Subquadratic above the (configurable) operand threshold.
inline IntPoly mul(const IntPoly& a, const IntPoly& b,
                   std::size_t karatsuba_threshold = kDefaultKaratsubaThreshold) {
    IntPoly dst;
    PolyKernels::product_into(dst, a, b, karatsuba_threshold);
    return dst;
}

/// Exact quotient a / b in Z[x]. Throws NotDivisible when b is zero or does
/// not divide a; every planned division in this project is exact by
/// construction, so NotDivisible signals a caller bug.
inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw NotDivisible("division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.size() < b.size())
        throw NotDivisible("dividend degree below divisor degree");
    if (!a.is_bigint() && !b.is_bigint()) {
        std::vector<std::int64_t> q;
        try {
            std::vector<std::int64_t> r = a.small_coeffs();
            if (!detail::div_exact<std::int64_t, true>(q, std::move(r), b.small_coeffs()))
                throw NotDivisible("remainder is nonzero");
            return PolyKernels::make_small(std::move(q));
        } catch (const detail::Int64Overflow&) {
            // fall through to the BigInt lane
        }
    }
    std::vector<BigInt> q;
    if (!detail::div_exact<BigInt, false>(q, detail::to_big_vector(a),
                                          detail::to_big_vector(b)))
        throw NotDivisible("remainder is nonzero");
    return PolyKernels::make_big(std::move(q));
}

/// f(x^m): coefficient i of f lands at index m*i.
inline IntPoly inflate(const IntPoly& f, std::uint64_t m) {
    if (m == 0) throw InputOutOfRange("inflate: m must be >= 1");
    if (f.is_zero() || m == 1) return f;
    const std::size_t n = (f.size() - 1) * static_cast<std::size_t>(m) + 1;
    if (!f.is_bigint()) {
        std::vector<std::int64_t> c(n, 0);
        const auto& src = f.small_coeffs();
        for (std::size_t i = 0; i < src.size(); ++i) c[i * m] = src[i];
        return PolyKernels::make_small(std::move(c));
    }
    std::vector<BigInt> c(n, BigInt(0));
    const auto& src = f.big_coeffs();
    for (std::size_t i = 0; i < src.size(); ++i) c[i * m] = src[i];
    return PolyKernels::make_big(std::move(c));
}

}  // namespace cyclo
