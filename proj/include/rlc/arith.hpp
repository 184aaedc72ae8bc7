#pragma once

/**
 * @file arith.hpp
 * @brief Integer helpers and the multiplicative functions everything else
 * is built from: factorization, Moebius, Euler totient, divisors, gcd/lcm
 * and p-adic valuations.
 *
 * Inputs are 64-bit; factorization is deterministic trial division, which
 * is plenty for moduli up to ~1e12.
 */

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rlc {

struct PrimePower {
    std::int64_t prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime-power decomposition of a positive integer.
/// Primes are strictly increasing; value 1 has no factors.
class Factorization {
public:
    Factorization() = default;
    Factorization(std::int64_t value, std::vector<PrimePower> factors)
        : value_(value), factors_(std::move(factors)) {}

    std::int64_t value() const { return value_; }
    const std::vector<PrimePower>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    /// Exponent of p in value (0 when p does not divide it).
    int exponent_of(std::int64_t p) const {
        for (const auto& f : factors_) {
            if (f.prime == p) return f.exponent;
        }
        return 0;
    }

    auto begin() const { return factors_.begin(); }
    auto end() const { return factors_.end(); }

private:
    std::int64_t value_ = 1;
    std::vector<PrimePower> factors_;
};

namespace detail {

inline void require_positive(std::int64_t n, const char* what) {
    if (n <= 0) {
        throw std::invalid_argument(std::string(what) + ": expected a positive integer, got " +
                                    std::to_string(n));
    }
}

}  // namespace detail

/// Absolute value that rejects INT64_MIN instead of overflowing.
inline std::int64_t abs64(std::int64_t v) {
    if (v == INT64_MIN) throw std::overflow_error("abs64: INT64_MIN has no 64-bit magnitude");
    return v < 0 ? -v : v;
}

/// Least nonnegative residue of v modulo n (n >= 1).
inline std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
    detail::require_positive(n, "mod_reduce");
    std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

/// (a * b) mod n without overflow, for a, b of either sign.
inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
    detail::require_positive(n, "mul_mod");
    __int128 r = static_cast<__int128>(a) * b % n;
    if (r < 0) r += n;
    return static_cast<std::int64_t>(r);
}

/// base^exp in 64 bits; throws on overflow.
inline std::int64_t ipow(std::int64_t base, int exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    std::int64_t result = 1;
    for (int i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(result, base, &result)) {
            throw std::overflow_error("ipow: " + std::to_string(base) + "^" +
                                      std::to_string(exp) + " overflows int64");
        }
    }
    return result;
}

inline Factorization factorize(std::int64_t n) {
    detail::require_positive(n, "factorize");
    std::vector<PrimePower> factors;
    std::int64_t rest = n;
    for (std::int64_t p = 2; p <= rest / p; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        factors.push_back({p, e});
    }
    if (rest > 1) factors.push_back({rest, 1});
    return Factorization(n, std::move(factors));
}

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    const auto f = factorize(p);
    return f.factors().size() == 1 && f.factors().front().exponent == 1;
}

inline int mobius(const Factorization& f) {
    int sign = 1;
    for (const auto& [p, e] : f) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

inline int mobius(std::int64_t n) { return mobius(factorize(n)); }

inline std::int64_t totient(const Factorization& f) {
    std::int64_t phi = 1;
    for (const auto& [p, e] : f) phi *= ipow(p, e - 1) * (p - 1);
    return phi;
}

inline std::int64_t totient(std::int64_t n) { return totient(factorize(n)); }

/// Ascending list of the positive divisors.
inline std::vector<std::int64_t> divisors(const Factorization& f) {
    std::vector<std::int64_t> out{1};
    for (const auto& [p, e] : f) {
        const std::size_t base_count = out.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base_count; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) { return divisors(factorize(n)); }

/// gcd of a list; empty or all-zero input gives 0, signs are ignored.
inline std::int64_t gcd_many(std::span<const std::int64_t> values) {
    std::int64_t g = 0;
    for (std::int64_t v : values) g = std::gcd(g, abs64(v));
    return g;
}

inline std::int64_t gcd_many(std::initializer_list<std::int64_t> values) {
    return gcd_many(std::span<const std::int64_t>(values.begin(), values.size()));
}

inline std::int64_t lcm2(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    const std::int64_t g = std::gcd(abs64(a), abs64(b));
    std::int64_t out = 0;
    if (__builtin_mul_overflow(abs64(a) / g, abs64(b), &out)) {
        throw std::overflow_error("lcm2: result overflows int64");
    }
    return out;
}

/// Exponent of the prime p in a. a = 0 is rejected: its valuation is infinite.
inline int p_adic_valuation(std::int64_t p, std::int64_t a) {
    if (p < 2) throw std::invalid_argument("p_adic_valuation: p must be prime");
    if (a == 0) throw std::domain_error("p_adic_valuation: valuation of 0 is infinite");
    int v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

/// min(v_p(a), cap); 0 is treated as divisible by every power.
inline int capped_valuation(std::int64_t p, std::int64_t a, int cap) {
    if (a == 0) return cap;
    const int v = p_adic_valuation(p, a);
    return v < cap ? v : cap;
}

}  // namespace rlc
