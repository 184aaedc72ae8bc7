#pragma once

// Brute-force ground truth for restricted congruences. Scans residues 1..n
// directly and uses nothing from the counting code except std::gcd, so it
// stays an independent check.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "rlc/instance.hpp"

namespace rlc {

struct OracleBudget {
    std::uint64_t max_tuples = 10'000'000;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::int64_t oracle_residue(std::int64_t v, std::int64_t n) {
    const std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

inline void check_budget(const CongruenceInstance& inst, const OracleBudget& budget) {
    inst.validate();
    unsigned __int128 size = 1;
    for (std::size_t i = 0; i < inst.k(); ++i) {
        size *= static_cast<unsigned __int128>(inst.n);
        if (size > budget.max_tuples) {
            throw BudgetExceeded("oracle: n^k exceeds the budget of " + std::to_string(budget.max_tuples) +
                                 " tuples; use a closed form instead");
        }
    }
}

// Depth-first scan over coordinates whose gcd constraint already holds.
template <typename Visit>
void oracle_scan(const CongruenceInstance& inst, Visit&& visit) {
    const std::int64_t n = inst.n;
    const std::size_t k = inst.k();
    std::vector<std::vector<std::int64_t>> allowed(k);
    std::vector<std::int64_t> coeff(k);
    for (std::size_t i = 0; i < k; ++i) {
        coeff[i] = oracle_residue(inst.a[i], n);
        for (std::int64_t x = 1; x <= n; ++x) {
            if (std::gcd(x, n) == inst.t[i]) allowed[i].push_back(x);
        }
        if (allowed[i].empty()) return;
    }
    const std::int64_t target = oracle_residue(inst.b, n);
    std::vector<std::int64_t> tuple(k);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t partial) -> void {
        if (i == k) {
            if (partial == target) visit(tuple);
            return;
        }
        for (std::int64_t x : allowed[i]) {
            tuple[i] = x;
            const auto term = static_cast<std::int64_t>(static_cast<__int128>(coeff[i]) * x % n);
            self(self, i + 1, (partial + term) % n);
        }
    };
    rec(rec, 0, 0);
}

}  // namespace detail

/// Exact count of x in [1, n]^k with gcd(x_i, n) = t_i and sum a_i x_i = b (mod n).
inline std::uint64_t oracle_count(const CongruenceInstance& inst, const OracleBudget& budget = {}) {
    detail::check_budget(inst, budget);
    std::uint64_t count = 0;
    detail::oracle_scan(inst, [&](const std::vector<std::int64_t>&) { ++count; });
    return count;
}

/// All solution tuples, lexicographically sorted.
inline std::vector<std::vector<std::int64_t>> oracle_enumerate(const CongruenceInstance& inst,
                                                                const OracleBudget& budget = {}) {
    detail::check_budget(inst, budget);
    std::vector<std::vector<std::int64_t>> out;
    detail::oracle_scan(inst, [&](const std::vector<std::int64_t>& x) { out.push_back(x); });
    return out;
}

/// Unpruned odometer over all n^k tuples; a cross-check for the pruned scan.
inline std::uint64_t oracle_count_naive(const CongruenceInstance& inst, const OracleBudget& budget = {}) {
    detail::check_budget(inst, budget);
    const std::int64_t n = inst.n;
    const std::size_t k = inst.k();
    std::vector<std::int64_t> x(k, 1);
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        __int128 sum = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (std::gcd(x[i], n) != inst.t[i]) ok = false;
            sum += static_cast<__int128>(inst.a[i]) * x[i];
        }
        if (ok && (sum - inst.b) % n == 0) ++count;
        std::size_t i = 0;
        while (i < k && x[i] == n) x[i++] = 1;
        if (i == k) break;
        ++x[i];
    }
    return count;
}

}  // namespace rlc
