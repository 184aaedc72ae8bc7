#pragma once

// Self-test suites: number-theoretic identities that must hold exactly, and
// a seeded random sweep comparing every counting route with the oracle.

#include <cmath>
#include <cstdint>
#include <exception>
#include <random>
#include <string>
#include <vector>

#include "rlc/arith.hpp"
#include "rlc/congruence.hpp"
#include "rlc/oracle.hpp"
#include "rlc/ramanujan.hpp"

namespace rlc {

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0; }

    void record(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures == 0) first_failure = what;
        ++failures;
    }
};

/// Exponential sum, Kluyver, von Sterneck and the prime-power product agree
/// for 1 <= n <= max_n, 0 <= m <= 2n.
inline SuiteResult verify_ramanujan_agreement(std::int64_t max_n) {
    SuiteResult res;
    res.name = "ramanujan_four_way";
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (std::int64_t m = 0; m <= 2 * n; ++m) {
            const std::int64_t v = ramanujan(n, m);
            const auto z = ramanujan_exponential(n, m);
            const bool ok = ramanujan_kluyver(n, m) == v && ramanujan_sterneck(n, m) == v &&
                            std::llround(z.real()) == v && std::fabs(z.imag()) < 1e-9L &&
                            std::fabs(z.real() - static_cast<long double>(v)) < 1e-9L;
            res.record(ok, "n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
    }
    return res;
}

/// sum_{d | n} c_d(m) = n [n | m] for n <= max_n, 1 <= m <= 2n.
inline SuiteResult verify_divisor_sum(std::int64_t max_n) {
    SuiteResult res;
    res.name = "divisor_sum";
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (std::int64_t m = 1; m <= 2 * n; ++m) {
            const std::int64_t expected = m % n == 0 ? n : 0;
            res.record(ramanujan_divisor_sum(n, m) == expected,
                       "n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
    }
    return res;
}

/// sum_{d | n} c_{d1}(n/d) c_d(n/d2) = n [d1 = d2] for all d1, d2 | n.
inline SuiteResult verify_orthogonality(std::int64_t max_n) {
    SuiteResult res;
    res.name = "orthogonality";
    for (std::int64_t n = 1; n <= max_n; ++n) {
        const auto divs = divisors(n);
        for (std::int64_t d1 : divs) {
            for (std::int64_t d2 : divs) {
                const std::int64_t expected = d1 == d2 ? n : 0;
                res.record(ramanujan_orthogonality_sum(n, d1, d2) == expected,
                           "n=" + std::to_string(n) + " d1=" + std::to_string(d1) + " d2=" + std::to_string(d2));
            }
        }
    }
    return res;
}

/// sum_{d | n} c_d(b) c_{n/s}(n/d) = n [gcd(b, n) = s] for s | n, 0 <= b < n.
inline SuiteResult verify_new_orthogonality_suite(std::int64_t max_n) {
    SuiteResult res;
    res.name = "new_orthogonality";
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (std::int64_t s : divisors(n)) {
            for (std::int64_t b = 0; b < n; ++b) {
                res.record(verify_new_orthogonality(b, n, s),
                           "n=" + std::to_string(n) + " s=" + std::to_string(s) + " b=" + std::to_string(b));
            }
        }
    }
    return res;
}

inline std::string describe(const CongruenceInstance& inst) {
    std::string s = "n=" + std::to_string(inst.n) + " b=" + std::to_string(inst.b) + " a=(";
    for (std::size_t i = 0; i < inst.k(); ++i) s += (i ? "," : "") + std::to_string(inst.a[i]);
    s += ") t=(";
    for (std::size_t i = 0; i < inst.k(); ++i) s += (i ? "," : "") + std::to_string(inst.t[i]);
    return s + ")";
}

/// Draws a random instance with 1 <= n <= max_n, 1 <= k <= max_k. Coefficients
/// and b range over [-2n, 2n]; t_i is a divisor of n except with probability
/// 1/10, where it is any value in [1, 2n].
template <typename Rng>
CongruenceInstance random_instance(Rng& rng, std::int64_t min_n, std::int64_t max_n, std::size_t max_k) {
    std::uniform_int_distribution<std::int64_t> n_dist(min_n, max_n);
    std::uniform_int_distribution<std::size_t> k_dist(1, max_k);
    CongruenceInstance inst;
    inst.n = n_dist(rng);
    const std::size_t k = k_dist(rng);
    const auto divs = divisors(inst.n);
    std::uniform_int_distribution<std::int64_t> val_dist(-2 * inst.n, 2 * inst.n);
    std::uniform_int_distribution<std::size_t> div_dist(0, divs.size() - 1);
    std::uniform_int_distribution<int> coin(0, 9);
    std::uniform_int_distribution<std::int64_t> any_t(1, 2 * inst.n);
    for (std::size_t i = 0; i < k; ++i) {
        inst.a.push_back(val_dist(rng));
        inst.t.push_back(coin(rng) == 0 ? any_t(rng) : divs[div_dist(rng)]);
    }
    inst.b = val_dist(rng);
    return inst;
}

/// One instance through every route; returns an empty string on agreement.
inline std::string cross_check_instance(const CongruenceInstance& inst, const OracleBudget& budget = {}) {
    try {
        const BigInt expected = oracle_count(inst, budget);
        const BigInt ram = count_general_ramanujan(inst);
        const CountReport explicit_report = count_general_explicit(inst);
        const BigInt crt = count_via_crt(inst);
        if (ram != expected || explicit_report.count != expected || crt != expected) {
            return describe(inst) + ": oracle=" + expected.str() + " ramanujan=" + ram.str() +
                   " explicit=" + explicit_report.count.str() + " crt=" + crt.str();
        }
        if ((expected == 0) != classify_unsolvable(inst).has_value()) {
            return describe(inst) + ": classification disagrees with count " + expected.str();
        }
    } catch (const std::exception& e) {
        return describe(inst) + ": " + e.what();
    }
    return {};
}

/// Seeded random sweep: Ramanujan forms, explicit product and CRT against the oracle.
inline SuiteResult verify_counting_sweep(std::uint64_t seed, std::uint64_t samples, std::int64_t max_n) {
    SuiteResult res;
    res.name = "counting_sweep";
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const auto inst = random_instance(rng, 1, max_n, 3);
        const std::string err = cross_check_instance(inst);
        res.record(err.empty(), err);
    }
    return res;
}

}  // namespace rlc
