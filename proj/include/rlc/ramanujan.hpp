#pragma once

// Ramanujan sums c_n(m) = sum over 1 <= j <= n, gcd(j, n) = 1, of e(jm/n).
//
// Four evaluators: the defining exponential sum (floating point, used only as
// an oracle), the Moebius divisor sum, the von Sterneck closed form, and the
// production path that multiplies prime-power values. All integer evaluators
// depend on m only through gcd(|m|, n), with gcd(0, n) = n.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "rlc/arith.hpp"
#include "rlc/bigint.hpp"

namespace rlc {

/// The literal exponential sum. Only meant for small n; the imaginary part
/// should vanish up to rounding.
inline std::complex<long double> ramanujan_exponential(std::int64_t n, std::int64_t m) {
    detail::require_positive(n, "ramanujan_exponential");
    const long double two_pi = 2.0L * std::acos(-1.0L);
    const std::int64_t mr = mod_reduce(m, n);
    std::complex<long double> sum{0.0L, 0.0L};
    for (std::int64_t j = 1; j <= n; ++j) {
        if (std::gcd(j, n) != 1) continue;
        // Reduce jm mod n first so the angle stays in [0, 2pi).
        const long double angle = two_pi * static_cast<long double>(mul_mod(j, mr, n)) /
                                  static_cast<long double>(n);
        sum += std::complex<long double>(std::cos(angle), std::sin(angle));
    }
    return sum;
}

/// Kluyver's formula: sum over d | gcd(m, n) of mu(n/d) * d.
inline std::int64_t ramanujan_kluyver(std::int64_t n, std::int64_t m) {
    detail::require_positive(n, "ramanujan_kluyver");
    const std::int64_t g = std::gcd(abs64(m), n);
    std::int64_t sum = 0;
    for (std::int64_t d : divisors(g)) sum += mobius(n / d) * d;
    return sum;
}

/// von Sterneck: phi(n) / phi(n/g) * mu(n/g) with g = gcd(m, n).
inline std::int64_t ramanujan_sterneck(std::int64_t n, std::int64_t m) {
    detail::require_positive(n, "ramanujan_sterneck");
    const std::int64_t g = std::gcd(abs64(m), n);
    const auto fq = factorize(n / g);
    const int mu = mobius(fq);
    const std::int64_t phi_n = totient(n);
    const std::int64_t phi_q = totient(fq);
    if (phi_n % phi_q != 0) {
        detail::fail_invariant("ramanujan_sterneck",
                               "phi(" + std::to_string(n) + ") not divisible by phi(" +
                                   std::to_string(n / g) + ")");
    }
    return phi_n / phi_q * mu;
}

/// c_{p^r}(m): p^r - p^(r-1) if p^r | m, -p^(r-1) if p^(r-1) exactly divides m,
/// 0 otherwise.
inline std::int64_t ramanujan_prime_power(std::int64_t p, int r, std::int64_t m) {
    if (!is_prime(p)) throw std::invalid_argument("ramanujan_prime_power: p must be prime");
    if (r <= 0) throw std::invalid_argument("ramanujan_prime_power: r must be positive");
    const std::int64_t pr1 = ipow(p, r - 1);
    const int v = capped_valuation(p, m, r);
    if (v >= r) return pr1 * (p - 1);
    if (v == r - 1) return -pr1;
    return 0;
}

namespace detail {

// Prime-power product without re-checking primality of the factors.
inline std::int64_t ramanujan_from_factors(const Factorization& f, std::int64_t m) {
    std::int64_t value = 1;
    for (const auto& [p, r] : f) {
        const std::int64_t pr1 = ipow(p, r - 1);
        const int v = capped_valuation(p, m, r);
        if (v >= r) {
            value *= pr1 * (p - 1);
        } else if (v == r - 1) {
            value *= -pr1;
        } else {
            return 0;
        }
    }
    return value;
}

}  // namespace detail

/// Production evaluator: multiplicative in n, product of prime-power values.
inline std::int64_t ramanujan(std::int64_t n, std::int64_t m) {
    detail::require_positive(n, "ramanujan");
    return detail::ramanujan_from_factors(factorize(n), m);
}

inline std::int64_t ramanujan(const Factorization& n, std::int64_t m) {
    return detail::ramanujan_from_factors(n, m);
}

/// Sum over d | n of c_d(m); equals n when n | m and 0 otherwise.
inline std::int64_t ramanujan_divisor_sum(std::int64_t n, std::int64_t m) {
    std::int64_t sum = 0;
    for (std::int64_t d : divisors(n)) sum += ramanujan(d, m);
    return sum;
}

/// Sum over d | n of c_{d1}(n/d) * c_d(n/d2), for d1, d2 dividing n.
/// Equals n when d1 = d2 and 0 otherwise.
inline std::int64_t ramanujan_orthogonality_sum(std::int64_t n, std::int64_t d1, std::int64_t d2) {
    detail::require_positive(n, "ramanujan_orthogonality_sum");
    if (d1 <= 0 || d2 <= 0 || n % d1 != 0 || n % d2 != 0) {
        throw std::invalid_argument("ramanujan_orthogonality_sum: d1 and d2 must divide n");
    }
    std::int64_t sum = 0;
    for (std::int64_t d : divisors(n)) sum += ramanujan(d1, n / d) * ramanujan(d, n / d2);
    return sum;
}

}  // namespace rlc
