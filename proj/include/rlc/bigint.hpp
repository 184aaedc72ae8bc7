#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rlc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an identity that the theory guarantees fails at runtime
/// (a non-integral count, two formulas disagreeing, an inexact division).
/// Seeing one means there is a bug, not bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

[[noreturn]] inline void fail_invariant(std::string_view where, std::string_view what) {
    throw InvariantViolation(std::string(where) + ": " + std::string(what));
}

}  // namespace detail

/// Converts a rational that must be a nonnegative integer.
inline BigInt exact_count(const Rational& q, std::string_view where) {
    if (boost::multiprecision::denominator(q) != 1) {
        detail::fail_invariant(where, "non-integral result " + q.str());
    }
    BigInt v = boost::multiprecision::numerator(q);
    if (v < 0) detail::fail_invariant(where, "negative count " + v.str());
    return v;
}

/// a / b where b must divide a.
inline BigInt exact_div(const BigInt& a, const BigInt& b, std::string_view where) {
    if (b == 0) detail::fail_invariant(where, "division by zero");
    if (a % b != 0) detail::fail_invariant(where, a.str() + " not divisible by " + b.str());
    return a / b;
}

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

}  // namespace rlc
