#pragma once

// Special cases of the restricted congruence problem that have their own
// closed forms: no gcd restriction at all, a single unknown, and sums of
// units (including the k = 2 Nagell totient).

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

#include "rlc/arith.hpp"
#include "rlc/bigint.hpp"
#include "rlc/ramanujan.hpp"

namespace rlc {

/// Solutions of a_1 x_1 + ... + a_k x_k = b (mod n) with x free:
/// l * n^(k-1) when l = gcd(a_1, ..., a_k, n) divides b, else 0.
/// k = 0 gives 1 iff n | b.
inline BigInt count_unrestricted(std::span<const std::int64_t> a, std::int64_t b, std::int64_t n) {
    detail::require_positive(n, "count_unrestricted");
    std::int64_t ell = n;
    for (std::int64_t ai : a) ell = std::gcd(ell, mod_reduce(ai, n));
    if (mod_reduce(b, ell) != 0) return 0;
    if (a.empty()) return 1;
    return BigInt(ell) * big_pow(BigInt(n), static_cast<unsigned>(a.size() - 1));
}

/// Solutions of a x = b (mod n) with gcd(x, n) = t.
inline BigInt count_one_var(std::int64_t a, std::int64_t b, std::int64_t n, std::int64_t t) {
    detail::require_positive(n, "count_one_var");
    detail::require_positive(t, "count_one_var");
    if (n % t != 0) return 0;
    const std::int64_t br = mod_reduce(b, n);
    if (br % t != 0) return 0;
    const std::int64_t q = n / t;
    const std::int64_t d = std::gcd(mod_reduce(a, n), q);
    if (std::gcd(br / t, q) != d) return 0;
    const std::int64_t num = totient(q);
    const std::int64_t den = totient(q / d);
    return exact_div(BigInt(num), BigInt(den), "count_one_var");
}

enum class UniqueCase {
    Coprime,   // (i): d = 1
    TwoAdic,   // (ii): d = 2, n = 2^r u with u odd, t = 2^(r-1) v, v | u
};

struct UniqueSolution {
    bool unique = false;
    std::optional<UniqueCase> which;
};

/// Whether a x = b (mod n), gcd(x, n) = t has exactly one solution, and which
/// of the two characterizing cases applies. The case test is evaluated
/// independently and checked against count_one_var.
inline UniqueSolution has_unique_solution_one_var(std::int64_t a, std::int64_t b, std::int64_t n,
                                                  std::int64_t t) {
    const BigInt count = count_one_var(a, b, n, t);

    std::optional<UniqueCase> which;
    if (n % t == 0 && mod_reduce(b, n) % t == 0) {
        const std::int64_t q = n / t;
        const std::int64_t d = std::gcd(mod_reduce(a, n), q);
        const std::int64_t db = std::gcd(mod_reduce(b, n) / t, q);
        if (d == db && d == 1) {
            which = UniqueCase::Coprime;
        } else if (d == db && d == 2) {
            const int r = capped_valuation(2, n, 63);
            const std::int64_t u = n >> r;
            const int s = capped_valuation(2, t, 63);
            const std::int64_t v = t >> s;
            if (r >= 1 && s == r - 1 && u % v == 0) which = UniqueCase::TwoAdic;
        }
    }

    const bool unique = count == 1;
    if (unique != which.has_value()) {
        detail::fail_invariant("has_unique_solution_one_var",
                               "case classification disagrees with count " + count.str());
    }
    return {unique, which};
}

/// Units sum count via the Euler product:
/// phi(n)^k / n * prod_{p | n, p | b} (1 - (-1)^(k-1)/(p-1)^(k-1))
///               * prod_{p | n, p !| b} (1 - (-1)^k/(p-1)^k).
inline Rational units_euler_product(int k, std::int64_t b, std::int64_t n) {
    const auto f = factorize(n);
    Rational value = Rational(big_pow(BigInt(totient(f)), static_cast<unsigned>(k))) / n;
    for (const auto& [p, e] : f) {
        const int exponent = b % p == 0 ? k - 1 : k;
        const BigInt pm1 = big_pow(BigInt(p - 1), static_cast<unsigned>(exponent));
        const int sign = exponent % 2 == 0 ? 1 : -1;
        value *= Rational(pm1 - sign, pm1);
    }
    return value;
}

/// Units sum count via Ramanujan sums: (1/n) sum_{d | n} c_d(b) c_n(n/d)^k.
inline Rational units_ramanujan_sum(int k, std::int64_t b, std::int64_t n) {
    const auto fn = factorize(n);
    BigInt sum = 0;
    for (std::int64_t d : divisors(fn)) {
        sum += BigInt(ramanujan(d, b)) * big_pow(BigInt(ramanujan(fn, n / d)), static_cast<unsigned>(k));
    }
    return Rational(sum, n);
}

/// N_n(k, b): solutions of x_1 + ... + x_k = b (mod n) in units. Both
/// closed forms are evaluated and must agree.
inline BigInt count_units(int k, std::int64_t b, std::int64_t n) {
    if (k <= 0) throw std::invalid_argument("count_units: k must be positive, got " + std::to_string(k));
    detail::require_positive(n, "count_units");
    const Rational euler = units_euler_product(k, b, n);
    const Rational ram = units_ramanujan_sum(k, b, n);
    if (euler != ram) {
        detail::fail_invariant("count_units", "Euler product " + euler.str() +
                                                  " != Ramanujan form " + ram.str());
    }
    return exact_count(euler, "count_units");
}

/// Nagell's totient N_n(2, b) = n prod_{p | n, p | b} (1 - 1/p) prod_{p | n, p !| b} (1 - 2/p),
/// evaluated as an integer: n / rad(n) * prod (p - 1 or p - 2).
inline BigInt nagell_totient(std::int64_t b, std::int64_t n) {
    detail::require_positive(n, "nagell_totient");
    const auto f = factorize(n);
    BigInt value = n;
    for (const auto& [p, e] : f) {
        value /= p;
        value *= b % p == 0 ? p - 1 : p - 2;
    }
    return value;
}

}  // namespace rlc
