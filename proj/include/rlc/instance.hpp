#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rlc/arith.hpp"
#include "rlc/bigint.hpp"

namespace rlc {

/// a_1 x_1 + ... + a_k x_k = b (mod n) subject to gcd(x_i, n) = t_i.
struct CongruenceInstance {
    std::int64_t n = 1;
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> t;
    std::int64_t b = 0;

    std::size_t k() const { return a.size(); }

    /// Throws std::invalid_argument unless n >= 1, |a| = |t| and every t_i >= 1.
    void validate() const {
        if (n <= 0) throw std::invalid_argument("modulus n must be positive, got " + std::to_string(n));
        if (a.size() != t.size()) {
            throw std::invalid_argument("coefficient list has " + std::to_string(a.size()) +
                                        " entries but constraint list has " + std::to_string(t.size()));
        }
        for (std::int64_t ti : t) {
            if (ti <= 0) throw std::invalid_argument("gcd targets t_i must be positive, got " + std::to_string(ti));
        }
    }

    /// Same instance with a_i and b reduced into [0, n).
    CongruenceInstance canonical() const {
        validate();
        CongruenceInstance out = *this;
        for (auto& ai : out.a) ai = mod_reduce(ai, n);
        out.b = mod_reduce(b, n);
        return out;
    }

    bool all_t_divide_n() const {
        for (std::int64_t ti : t) {
            if (n % ti != 0) return false;
        }
        return true;
    }

    friend bool operator==(const CongruenceInstance&, const CongruenceInstance&) = default;
};

/// Unsolvability labels: the five Cor. cases plus two plumbing labels.
enum class UnsolvableCase { I, II, III, IV, V, TNotDivisor, AllZeroBNonzero };

inline std::string_view to_string(UnsolvableCase c) {
    switch (c) {
        case UnsolvableCase::I: return "I";
        case UnsolvableCase::II: return "II";
        case UnsolvableCase::III: return "III";
        case UnsolvableCase::IV: return "IV";
        case UnsolvableCase::V: return "V";
        case UnsolvableCase::TNotDivisor: return "T_NOT_DIVISOR";
        case UnsolvableCase::AllZeroBNonzero: return "ALL_ZERO_B_NONZERO";
    }
    return "?";
}

/// Where b sits relative to the powers of p that matter for the local count.
enum class BClass {
    DivisibleByPm,       // m_p <= r_p and p^{m_p} | b
    ExactlyPmMinus1,     // m_p <= r_p and p^{m_p - 1} || b
    Below,               // m_p <= r_p and p^{m_p - 1} does not divide b
    DivisibleByPr,       // m_p = r_p + 1 and p^{r_p} | b
    NotDivisibleByPr,    // m_p = r_p + 1 and p^{r_p} does not divide b
};

inline std::string_view to_string(BClass c) {
    switch (c) {
        case BClass::DivisibleByPm: return "divisible_by_p_mp";
        case BClass::ExactlyPmMinus1: return "exactly_p_mp_minus_1";
        case BClass::Below: return "below";
        case BClass::DivisibleByPr: return "divisible_by_p_rp";
        case BClass::NotDivisibleByPr: return "not_divisible_by_p_rp";
    }
    return "?";
}

/// Per-prime data of an instance. m_p is capped at r_p + 1; e_p is only
/// defined when m_p <= r_p.
struct PrimeLocalProfile {
    std::int64_t p = 0;
    int r_p = 0;
    int m_p = 0;
    std::optional<int> e_p;
    BClass b_class = BClass::Below;

    bool capped() const { return m_p > r_p; }

    friend bool operator==(const PrimeLocalProfile&, const PrimeLocalProfile&) = default;
};

struct CountReport {
    BigInt count;
    bool solvable = false;
    std::optional<UnsolvableCase> unsolvable_case;
    std::vector<PrimeLocalProfile> locals;
};

}  // namespace rlc
