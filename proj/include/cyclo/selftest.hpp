#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/search.hpp"

namespace cyclo {

struct SelftestOptions {
    std::uint64_t identity_max_n = 300;  // product-of-cyclotomics identity range
    std::uint64_t oracle_max_n = 40;     // DFS-vs-naive equivalence range
    std::uint64_t lemma_max = 10000;     // prefix products for p^k up to this
    unsigned parallelism = 4;
};

/// Quick identity and oracle-equivalence suites; returns true when all pass.
inline bool run_selftest(std::ostream& log, const SelftestOptions& opts = {}) {
    bool ok = true;
    auto report = [&](const std::string& name, bool pass) {
        log << (pass ? "PASS" : "FAIL") << "  " << name << '\n';
        if (!pass) ok = false;
    };

    {
        bool pass = true;
        for (std::uint64_t n = 1; n <= opts.identity_max_n && pass; ++n) {
            IntPoly prod = IntPoly::one();
            for (std::uint64_t d : divisors(n)) {
                const IntPoly phi = cyclotomic(d);
                if (phi.is_zero() || phi.degree() != euler_phi(d)) pass = false;
                prod = mul(prod, phi);
            }
            if (prod != IntPoly::x_pow_minus_one(n)) pass = false;
        }
        report("identity: prod_{d|n} Phi_d = x^n - 1 and deg Phi_n = phi(n), n <= " +
                   std::to_string(opts.identity_max_n),
               pass);
    }

    {
        bool pass = true;
        for (std::uint64_t p : primes_up_to(opts.lemma_max)) {
            std::uint64_t pk = p;
            for (std::uint32_t k = 1; pk <= opts.lemma_max; ++k, pk *= p) {
                if (!prefix_product_check(p, k)) pass = false;
                if (pk > opts.lemma_max / p) break;
            }
        }
        report("lemma: prod_{k<=n} Phi_{p^k} is all ones, p^n <= " +
                   std::to_string(opts.lemma_max),
               pass);
    }

    {
        bool pass = true;
        for (std::uint64_t n = 1; n <= opts.oracle_max_n && pass; ++n) {
            for (Measure m : {Measure::Height, Measure::Length}) {
                SearchOptions seq;
                seq.allow_closed_form = false;
                SearchOptions par = seq;
                par.parallelism = opts.parallelism;
                const auto ds = divisors(n);
                const auto naive = naive_subset_max(ds, m, seq);
                const auto dfs1 = subset_max(ds, m, seq);
                const auto dfsN = subset_max(ds, m, par);
                for (const auto* got : {&dfs1, &dfsN}) {
                    if (got->value != naive.value || got->witnesses != naive.witnesses ||
                        got->witness_total != naive.witness_total ||
                        got->nodes != naive.nodes)
                        pass = false;
                }
            }
        }
        report("oracle: DFS engine = naive power-set enumeration, both measures, n <= " +
                   std::to_string(opts.oracle_max_n),
               pass);
    }

    return ok;
}

}  // namespace cyclo
