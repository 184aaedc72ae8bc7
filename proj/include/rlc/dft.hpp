#pragma once

/**
 * @file dft.hpp
 * @brief n-periodic arithmetic functions and their discrete Fourier transform.
 *
 * A PeriodicSignal stores f(1), ..., f(n); residue 0 lives at index n, so
 * sums run over j = 1..n exactly as written in the transform definitions.
 * Signals built from indicators and convolutions stay exact (integers or
 * BigInt); only dft() and idft() produce floating complex values.
 */

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "rlc/arith.hpp"
#include "rlc/ramanujan.hpp"

namespace rlc {

using Complex = std::complex<long double>;

/// Acceptance tolerance wherever transcendental roots of unity are involved.
inline constexpr long double kDftTolerance = 1e-9L;

template <typename T>
class PeriodicSignal {
public:
    using value_type = T;

    explicit PeriodicSignal(std::int64_t period) : values_(checked_period(period)) {}

    /// values[j - 1] = f(j) for j = 1..n.
    explicit PeriodicSignal(std::vector<T> values) : values_(std::move(values)) {
        if (values_.empty()) throw std::invalid_argument("PeriodicSignal: period must be >= 1");
    }

    std::int64_t period() const { return static_cast<std::int64_t>(values_.size()); }

    /// f(m) for any integer m.
    const T& operator()(std::int64_t m) const { return values_[index_of(m)]; }
    T& operator()(std::int64_t m) { return values_[index_of(m)]; }

    const std::vector<T>& values() const { return values_; }

    friend bool operator==(const PeriodicSignal&, const PeriodicSignal&) = default;

private:
    static std::size_t checked_period(std::int64_t n) {
        detail::require_positive(n, "PeriodicSignal");
        return static_cast<std::size_t>(n);
    }

    std::size_t index_of(std::int64_t m) const {
        return static_cast<std::size_t>(mod_reduce(m - 1, period()));
    }

    std::vector<T> values_;
};

/// e(num / n) = exp(2 pi i num / n). Quarter-turn multiples are exact.
inline Complex unit_root(std::int64_t num, std::int64_t n) {
    const std::int64_t r = mod_reduce(num, n);
    if (mul_mod(4, r, n) == 0) {
        switch (4 * static_cast<__int128>(r) / n) {
            case 0: return {1.0L, 0.0L};
            case 1: return {0.0L, 1.0L};
            case 2: return {-1.0L, 0.0L};
            default: return {0.0L, -1.0L};
        }
    }
    const long double angle =
        2.0L * std::acos(-1.0L) * static_cast<long double>(r) / static_cast<long double>(n);
    return {std::cos(angle), std::sin(angle)};
}

namespace detail {

template <typename T>
Complex to_complex(const T& v) {
    if constexpr (std::is_same_v<T, Complex>) {
        return v;
    } else if constexpr (std::is_arithmetic_v<T>) {
        return Complex(static_cast<long double>(v), 0.0L);
    } else {
        return Complex(v.template convert_to<long double>(), 0.0L);
    }
}

}  // namespace detail

/// f^(b) = sum_{j=1..n} f(j) e(-bj/n), naive O(n^2).
template <typename T>
PeriodicSignal<Complex> dft(const PeriodicSignal<T>& f) {
    const std::int64_t n = f.period();
    PeriodicSignal<Complex> out(n);
    for (std::int64_t b = 1; b <= n; ++b) {
        Complex sum{0.0L, 0.0L};
        for (std::int64_t j = 1; j <= n; ++j) sum += detail::to_complex(f(j)) * unit_root(-mul_mod(b, j, n), n);
        out(b) = sum;
    }
    return out;
}

/// g(j) = (1/n) sum_{b=1..n} g^(b) e(bj/n).
template <typename T>
PeriodicSignal<Complex> idft(const PeriodicSignal<T>& g) {
    const std::int64_t n = g.period();
    PeriodicSignal<Complex> out(n);
    for (std::int64_t j = 1; j <= n; ++j) {
        Complex sum{0.0L, 0.0L};
        for (std::int64_t b = 1; b <= n; ++b) sum += detail::to_complex(g(b)) * unit_root(mul_mod(b, j, n), n);
        out(j) = sum / static_cast<long double>(n);
    }
    return out;
}

/// Cauchy convolution: (f (x) g)(m) = sum over x + y = m (mod n) of f(x) g(y).
template <typename T>
PeriodicSignal<T> cauchy_convolve(const PeriodicSignal<T>& f, const PeriodicSignal<T>& g) {
    const std::int64_t n = f.period();
    if (g.period() != n) {
        throw std::invalid_argument("cauchy_convolve: periods differ (" + std::to_string(n) +
                                    " vs " + std::to_string(g.period()) + ")");
    }
    PeriodicSignal<T> out(n);
    for (std::int64_t x = 1; x <= n; ++x) {
        if (f(x) == T{}) continue;
        for (std::int64_t y = 1; y <= n; ++y) out(x + y) += f(x) * g(y);
    }
    return out;
}

/// Left fold over the operands. An empty list needs the period and yields the
/// unit of convolution (1 at residue 0, 0 elsewhere).
template <typename T>
PeriodicSignal<T> cauchy_convolve(std::span<const PeriodicSignal<T>> fs, std::int64_t period) {
    PeriodicSignal<T> acc(period);
    acc(0) = T{1};
    for (const auto& f : fs) acc = cauchy_convolve(acc, f);
    return acc;
}

/// rho_{n,t}: 1 at residues m with gcd(m, n) = t, 0 elsewhere.
inline PeriodicSignal<std::int64_t> gcd_indicator(std::int64_t n, std::int64_t t) {
    detail::require_positive(n, "gcd_indicator");
    if (t <= 0 || n % t != 0) {
        throw std::invalid_argument("gcd_indicator: t = " + std::to_string(t) +
                                    " does not divide n = " + std::to_string(n));
    }
    PeriodicSignal<std::int64_t> out(n);
    for (std::int64_t m = 1; m <= n; ++m) out(m) = std::gcd(m, n) == t ? 1 : 0;
    return out;
}

/// True when f(m) = f(gcd(m, n)) for every residue m.
template <typename T>
bool is_n_even(const PeriodicSignal<T>& f) {
    const std::int64_t n = f.period();
    for (std::int64_t m = 1; m <= n; ++m) {
        if (!(f(m) == f(std::gcd(m, n)))) return false;
    }
    return true;
}

/// An n-even function stored by its values on the divisors of n.
template <typename T>
class EvenSignal {
public:
    /// Every divisor of n must appear exactly once in divisor_values.
    EvenSignal(std::int64_t n, std::map<std::int64_t, T> divisor_values)
        : period_(n), values_(std::move(divisor_values)) {
        detail::require_positive(n, "EvenSignal");
        const auto divs = divisors(n);
        if (values_.size() != divs.size()) {
            throw std::invalid_argument("EvenSignal: need one value per divisor of n");
        }
        for (std::int64_t d : divs) {
            if (!values_.contains(d)) {
                throw std::invalid_argument("EvenSignal: missing value for divisor " + std::to_string(d));
            }
        }
    }

    /// Collapses an n-even PeriodicSignal; throws if f is not n-even.
    static EvenSignal from_periodic(const PeriodicSignal<T>& f) {
        if (!is_n_even(f)) throw std::invalid_argument("EvenSignal: signal is not n-even");
        std::map<std::int64_t, T> vals;
        for (std::int64_t d : divisors(f.period())) vals.emplace(d, f(d));
        return EvenSignal(f.period(), std::move(vals));
    }

    std::int64_t period() const { return period_; }
    const std::map<std::int64_t, T>& divisor_values() const { return values_; }

    /// f(m) = f(gcd(m, n)).
    const T& operator()(std::int64_t m) const { return values_.at(std::gcd(abs64(m), period_)); }

    PeriodicSignal<T> expand() const {
        PeriodicSignal<T> out(period_);
        for (std::int64_t m = 1; m <= period_; ++m) out(m) = (*this)(m);
        return out;
    }

    friend bool operator==(const EvenSignal&, const EvenSignal&) = default;

private:
    std::int64_t period_;
    std::map<std::int64_t, T> values_;
};

/// DFT of an n-even function at m: sum over d | n of f(d) c_{n/d}(m). Exact in T.
template <typename T>
T even_dft(const EvenSignal<T>& f, std::int64_t m) {
    const std::int64_t n = f.period();
    T sum{};
    for (const auto& [d, value] : f.divisor_values()) sum += value * T(ramanujan(n / d, m));
    return sum;
}

}  // namespace rlc
