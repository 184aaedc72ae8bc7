#pragma once

/**
 * @file congruence.hpp
 * @brief Counting solutions of restricted linear congruences
 *
 *     a_1 x_1 + ... + a_k x_k = b (mod n),   gcd(x_i, n) = t_i.
 *
 * Several independent routes are provided and are expected to agree:
 *
 *  - count_unit_coeff:        all a_i = 1, a divisor sum of Ramanujan sums.
 *  - count_general_ramanujan: arbitrary a_i, evaluated two ways (a product
 *                             of Ramanujan sums, and a Moebius/totient form)
 *                             in exact rational arithmetic.
 *  - count_general_explicit:  the per-prime product built from the profile
 *                             (r_p, m_p, e_p) of the instance, together with
 *                             the unsolvability classification.
 *  - count_via_crt:           splits n into prime powers and multiplies the
 *                             local counts.
 *
 * Rational paths assert that the final value is a nonnegative integer; any
 * disagreement raises InvariantViolation.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rlc/arith.hpp"
#include "rlc/bigint.hpp"
#include "rlc/classical.hpp"
#include "rlc/instance.hpp"
#include "rlc/ramanujan.hpp"

namespace rlc {

/// x_1 + ... + x_k = b (mod n) with gcd(x_i, n) = t_i:
/// (1/n) sum_{d | n} c_d(b) prod_i c_{n/t_i}(n/d). Zero if some t_i does not divide n.
inline BigInt count_unit_coeff(std::int64_t b, std::int64_t n, std::span<const std::int64_t> t) {
    detail::require_positive(n, "count_unit_coeff");
    for (std::int64_t ti : t) {
        detail::require_positive(ti, "count_unit_coeff");
        if (n % ti != 0) return 0;
    }
    BigInt sum = 0;
    for (std::int64_t d : divisors(n)) {
        BigInt term = ramanujan(d, b);
        for (std::int64_t ti : t) {
            if (term == 0) break;
            term *= ramanujan(n / ti, n / d);
        }
        sum += term;
    }
    return exact_count(Rational(sum, n), "count_unit_coeff");
}

/// Product-of-Ramanujan-sums form for arbitrary coefficients, with
/// d_i = gcd(a_i, n/t_i). Requires every t_i | n.
inline Rational general_count_ramanujan_form(const CongruenceInstance& inst) {
    const auto c = inst.canonical();
    const std::int64_t n = c.n;
    std::vector<std::int64_t> reduced_mod(c.k());  // n / (t_i d_i)
    Rational prefactor = 1;
    for (std::size_t i = 0; i < c.k(); ++i) {
        const std::int64_t q = n / c.t[i];
        const std::int64_t di = std::gcd(c.a[i], q);
        reduced_mod[i] = q / di;
        prefactor *= Rational(totient(q), totient(q / di));
    }
    BigInt sum = 0;
    for (std::int64_t d : divisors(n)) {
        BigInt term = ramanujan(d, c.b);
        for (std::int64_t m : reduced_mod) {
            if (term == 0) break;
            term *= ramanujan(m, n / d);
        }
        sum += term;
    }
    return prefactor * Rational(sum, n);
}

/// Moebius/totient form: (1/n) prod phi(n/t_i) sum_{d | n} c_d(b)
/// prod_i mu(w_i)/phi(w_i), w_i = d / gcd(a_i t_i, d). Requires every t_i | n.
inline Rational general_count_mobius_form(const CongruenceInstance& inst) {
    const auto c = inst.canonical();
    const std::int64_t n = c.n;
    BigInt phi_prod = 1;
    for (std::int64_t ti : c.t) phi_prod *= totient(n / ti);
    Rational sum = 0;
    for (std::int64_t d : divisors(n)) {
        const std::int64_t cd = ramanujan(d, c.b);
        if (cd == 0) continue;
        Rational term = cd;
        for (std::size_t i = 0; i < c.k(); ++i) {
            const std::int64_t w = d / std::gcd(mul_mod(c.a[i], c.t[i], d), d);
            const auto fw = factorize(w);
            const int mu = mobius(fw);
            if (mu == 0) {
                term = 0;
                break;
            }
            term *= Rational(mu, totient(fw));
        }
        sum += term;
    }
    return Rational(phi_prod) * sum / n;
}

/// Arbitrary coefficients, both Ramanujan-sum forms; they must agree and
/// cancel to a nonnegative integer.
inline BigInt count_general_ramanujan(const CongruenceInstance& inst) {
    inst.validate();
    if (!inst.all_t_divide_n()) return 0;
    const Rational ram = general_count_ramanujan_form(inst);
    const Rational mob = general_count_mobius_form(inst);
    if (ram != mob) {
        detail::fail_invariant("count_general_ramanujan",
                               "Ramanujan form " + ram.str() + " != Moebius form " + mob.str());
    }
    return exact_count(ram, "count_general_ramanujan");
}

/// Per-prime profile (r_p, m_p, e_p, class of b) for every prime p | n.
/// Computed on the canonical instance; m_p is capped at r_p + 1 so zero
/// residues are well defined.
inline std::vector<PrimeLocalProfile> prime_profiles(const CongruenceInstance& inst) {
    const auto c = inst.canonical();
    std::vector<PrimeLocalProfile> out;
    for (const auto& [p, r] : factorize(c.n)) {
        const int cap = r + 1;
        // v_p(a_i t_i) capped; the minimum over i decides m_p.
        std::vector<int> vals;
        vals.reserve(c.k());
        int min_val = cap;
        for (std::size_t i = 0; i < c.k(); ++i) {
            const int va = capped_valuation(p, c.a[i], cap);
            const int vt = capped_valuation(p, c.t[i], cap);
            const int v = std::min(va + vt, cap);
            vals.push_back(v);
            min_val = std::min(min_val, v);
        }
        PrimeLocalProfile prof;
        prof.p = p;
        prof.r_p = r;
        prof.m_p = std::min(min_val + 1, cap);
        const int vb = capped_valuation(p, c.b, cap);
        if (prof.m_p <= r) {
            int e = 0;
            for (int v : vals) e += v < prof.m_p ? 1 : 0;
            prof.e_p = e;
            if (vb >= prof.m_p) {
                prof.b_class = BClass::DivisibleByPm;
            } else if (vb == prof.m_p - 1) {
                prof.b_class = BClass::ExactlyPmMinus1;
            } else {
                prof.b_class = BClass::Below;
            }
        } else {
            prof.b_class = vb >= r ? BClass::DivisibleByPr : BClass::NotDivisibleByPr;
        }
        out.push_back(prof);
    }
    return out;
}

namespace detail {

inline bool all_coefficients_zero(const CongruenceInstance& canonical) {
    for (std::int64_t ai : canonical.a) {
        if (ai != 0) return false;
    }
    return true;
}

// Lowest-numbered unsolvability case among the profiles, if any.
inline std::optional<UnsolvableCase> classify_profiles(std::span<const PrimeLocalProfile> profs) {
    for (const auto& pr : profs) {
        if (!pr.capped() && pr.b_class == BClass::Below) return UnsolvableCase::I;
    }
    for (const auto& pr : profs) {
        if (pr.capped() && pr.b_class == BClass::NotDivisibleByPr) return UnsolvableCase::II;
    }
    for (const auto& pr : profs) {
        if (!pr.capped() && pr.e_p == 1 && pr.b_class == BClass::DivisibleByPm) return UnsolvableCase::III;
    }
    for (const auto& pr : profs) {
        if (pr.p == 2 && !pr.capped() && *pr.e_p % 2 == 1 && pr.b_class == BClass::DivisibleByPm) {
            return UnsolvableCase::IV;
        }
    }
    for (const auto& pr : profs) {
        if (pr.p == 2 && !pr.capped() && *pr.e_p % 2 == 0 && pr.b_class == BClass::ExactlyPmMinus1) {
            return UnsolvableCase::V;
        }
    }
    return std::nullopt;
}

// Number of solutions modulo p^{r_p}: prod_i phi(p^{r_p - v_p(t_i)}) times the
// local factor p^{m_p - 1} (1 - (-1)^E/(p-1)^E) / p^{r_p}, with E = e_p - 1 or
// e_p by class of b. Denominators are cleared and the division is checked.
inline BigInt local_count(const PrimeLocalProfile& pr, std::span<const std::int64_t> t) {
    const std::int64_t p = pr.p;
    BigInt phi_part = 1;
    for (std::int64_t ti : t) {
        const int s = capped_valuation(p, ti, pr.r_p);
        phi_part *= totient(ipow(p, pr.r_p - s));
    }
    switch (pr.b_class) {
        case BClass::Below:
        case BClass::NotDivisibleByPr:
            return 0;
        case BClass::DivisibleByPr:
            return phi_part;
        case BClass::DivisibleByPm:
        case BClass::ExactlyPmMinus1: {
            const int e = pr.b_class == BClass::DivisibleByPm ? *pr.e_p - 1 : *pr.e_p;
            const BigInt pm1 = big_pow(BigInt(p - 1), static_cast<unsigned>(e));
            const BigInt numerator = phi_part * big_pow(BigInt(p), static_cast<unsigned>(pr.m_p - 1)) *
                                     (pm1 - (e % 2 == 0 ? 1 : -1));
            const BigInt denominator = big_pow(BigInt(p), static_cast<unsigned>(pr.r_p)) * pm1;
            return exact_div(numerator, denominator, "local_count");
        }
    }
    return 0;
}

}  // namespace detail

/// Which unsolvability case (I..V) applies, lowest-numbered first; empty when
/// the instance is solvable. Instances outside the profile path (some t_i not
/// dividing n, or every a_i = 0 mod n) get the corresponding plumbing label.
inline std::optional<UnsolvableCase> classify_unsolvable(const CongruenceInstance& inst) {
    const auto c = inst.canonical();
    if (!c.all_t_divide_n()) return UnsolvableCase::TNotDivisor;
    if (detail::all_coefficients_zero(c)) {
        if (c.b != 0) return UnsolvableCase::AllZeroBNonzero;
        return std::nullopt;
    }
    const auto profs = prime_profiles(c);
    return detail::classify_profiles(profs);
}

/// The explicit per-prime product, with solvability verdict and profiles.
inline CountReport count_general_explicit(const CongruenceInstance& inst) {
    const auto c = inst.canonical();
    CountReport report;
    if (!c.all_t_divide_n()) {
        report.unsolvable_case = UnsolvableCase::TNotDivisor;
        return report;
    }
    if (detail::all_coefficients_zero(c)) {
        if (c.b != 0) {
            report.unsolvable_case = UnsolvableCase::AllZeroBNonzero;
            return report;
        }
        BigInt count = 1;
        for (std::int64_t ti : c.t) count *= totient(c.n / ti);
        report.count = count;
        report.solvable = true;
        return report;
    }

    report.locals = prime_profiles(c);
    BigInt count = 1;
    for (const auto& pr : report.locals) {
        count *= detail::local_count(pr, c.t);
        if (count == 0) break;
    }
    report.count = count;
    report.solvable = count > 0;
    report.unsolvable_case = detail::classify_profiles(report.locals);
    if (report.solvable == report.unsolvable_case.has_value()) {
        detail::fail_invariant("count_general_explicit",
                               "count " + count.str() + " inconsistent with unsolvability classification");
    }
    return report;
}

/// The special case where m_p = 1 for every prime p | n:
/// (1/n) prod phi(n/t_i) prod_{p | b} (1 - (-1)^(e_p-1)/(p-1)^(e_p-1))
///                       prod_{p !| b} (1 - (-1)^e_p/(p-1)^e_p).
/// Throws std::domain_error when the hypothesis fails.
inline BigInt count_sburlati(const CongruenceInstance& inst) {
    const auto c = inst.canonical();
    if (!c.all_t_divide_n()) return 0;
    const auto profs = prime_profiles(c);
    Rational value = 1;
    for (std::int64_t ti : c.t) value *= totient(c.n / ti);
    value /= c.n;
    for (const auto& pr : profs) {
        if (pr.m_p != 1) {
            throw std::domain_error("count_sburlati: m_p = " + std::to_string(pr.m_p) + " for p = " +
                                    std::to_string(pr.p) + ", formula needs m_p = 1 for every p | n");
        }
        const int e = c.b % pr.p == 0 ? *pr.e_p - 1 : *pr.e_p;
        const BigInt pm1 = big_pow(BigInt(pr.p - 1), static_cast<unsigned>(e));
        value *= Rational(pm1 - (e % 2 == 0 ? 1 : -1), pm1);
    }
    return exact_count(value, "count_sburlati");
}

/// Splits n into prime powers p^r, restricts each t_i to its p-part, and
/// multiplies the local counts obtained from count_general_ramanujan.
inline BigInt count_via_crt(const CongruenceInstance& inst) {
    const auto c = inst.canonical();
    if (!c.all_t_divide_n()) return 0;
    BigInt count = 1;
    for (const auto& [p, r] : factorize(c.n)) {
        CongruenceInstance local;
        local.n = ipow(p, r);
        local.b = mod_reduce(c.b, local.n);
        local.a.reserve(c.k());
        local.t.reserve(c.k());
        for (std::size_t i = 0; i < c.k(); ++i) {
            local.a.push_back(mod_reduce(c.a[i], local.n));
            local.t.push_back(ipow(p, capped_valuation(p, c.t[i], r)));
        }
        count *= count_general_ramanujan(local);
        if (count == 0) break;
    }
    return count;
}

/// sum_{d | n} c_d(b) c_{n/s}(n/d); equals n if gcd(b, n) = s and 0 otherwise.
inline std::int64_t new_orthogonality_sum(std::int64_t b, std::int64_t n, std::int64_t s) {
    detail::require_positive(n, "new_orthogonality_sum");
    if (s <= 0 || n % s != 0) {
        throw std::invalid_argument("new_orthogonality_sum: s = " + std::to_string(s) +
                                    " does not divide n = " + std::to_string(n));
    }
    std::int64_t sum = 0;
    for (std::int64_t d : divisors(n)) sum += ramanujan(d, b) * ramanujan(n / s, n / d);
    return sum;
}

inline bool verify_new_orthogonality(std::int64_t b, std::int64_t n, std::int64_t s) {
    const std::int64_t expected = std::gcd(abs64(b), n) == s ? n : 0;
    return new_orthogonality_sum(b, n, s) == expected;
}

/// The orbicyclic function at period N (any common multiple of the m_i),
/// divisor form: (1/N) sum_{d | N} phi(d) prod_i c_{m_i}(N/d).
inline Rational orbicyclic_divisor_form(std::span<const std::int64_t> m, std::int64_t period) {
    BigInt sum = 0;
    for (std::int64_t d : divisors(period)) {
        BigInt term = totient(d);
        for (std::int64_t mi : m) term *= ramanujan(mi, period / d);
        sum += term;
    }
    return Rational(sum, period);
}

/// Average form: (1/N) sum_{q=1..N} prod_i c_{m_i}(q).
inline Rational orbicyclic_average_form(std::span<const std::int64_t> m, std::int64_t period) {
    BigInt sum = 0;
    for (std::int64_t q = 1; q <= period; ++q) {
        BigInt term = 1;
        for (std::int64_t mi : m) term *= ramanujan(mi, q);
        sum += term;
    }
    return Rational(sum, period);
}

/// E(m_1, ..., m_k) evaluated at a given common multiple of the m_i.
inline BigInt orbicyclic(std::span<const std::int64_t> m, std::int64_t period) {
    detail::require_positive(period, "orbicyclic");
    for (std::int64_t mi : m) {
        detail::require_positive(mi, "orbicyclic");
        if (period % mi != 0) {
            throw std::invalid_argument("orbicyclic: period " + std::to_string(period) +
                                        " is not a multiple of " + std::to_string(mi));
        }
    }
    const Rational divisor_form = orbicyclic_divisor_form(m, period);
    const Rational average_form = orbicyclic_average_form(m, period);
    if (divisor_form != average_form) {
        detail::fail_invariant("orbicyclic", "divisor form " + divisor_form.str() +
                                                 " != average form " + average_form.str());
    }
    if (boost::multiprecision::denominator(divisor_form) != 1) {
        detail::fail_invariant("orbicyclic", "non-integral value " + divisor_form.str());
    }
    return boost::multiprecision::numerator(divisor_form);
}

/// E(m_1, ..., m_k) with period lcm(m_i). The empty tuple gives 1.
inline BigInt orbicyclic(std::span<const std::int64_t> m) {
    std::int64_t period = 1;
    for (std::int64_t mi : m) {
        detail::require_positive(mi, "orbicyclic");
        period = lcm2(period, mi);
    }
    return orbicyclic(m, period);
}

}  // namespace rlc
