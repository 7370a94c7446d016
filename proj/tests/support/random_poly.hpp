#pragma once

// Seeded generators for property-style tests.

#include <cstdint>
#include <random>
#include <vector>

#include "cyclo/intpoly.hpp"

namespace testsupport {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eedULL);
    return gen;
}

/// Random polynomial with |coefficients| <= max_height, degree <= max_degree.
/// May be zero.
inline cyclo::IntPoly random_poly(std::size_t max_degree, std::int64_t max_height) {
    std::uniform_int_distribution<std::size_t> deg_dist(0, max_degree);
    std::uniform_int_distribution<std::int64_t> coeff_dist(-max_height, max_height);
    std::vector<std::int64_t> coeffs(deg_dist(rng()) + 1);
    for (auto& c : coeffs) c = coeff_dist(rng());
    return cyclo::IntPoly::from_coeffs(std::move(coeffs));
}

inline cyclo::IntPoly random_nonzero_poly(std::size_t max_degree, std::int64_t max_height) {
    for (;;) {
        auto p = random_poly(max_degree, max_height);
        if (!p.is_zero()) return p;
    }
}

}  // namespace testsupport
