#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "rlc/oracle.hpp"

namespace rlc {
namespace {

using Tuples = std::vector<std::vector<std::int64_t>>;

TEST(OracleCount, Examples) {
    EXPECT_EQ(oracle_count({24, {2, 1, 2}, {3, 2, 4}, 12}), 8u);
    EXPECT_EQ(oracle_count({5, {1, 1}, {1, 1}, 0}), 4u);
    EXPECT_EQ(oracle_count({6, {1, 1}, {4, 1}, 0}), 0u);
    EXPECT_EQ(oracle_count({6, {}, {}, 0}), 1u);
    EXPECT_EQ(oracle_count({6, {}, {}, 2}), 0u);
}

TEST(OracleCount, BudgetGuard) {
    EXPECT_THROW(oracle_count({100, {1, 1, 1, 1}, {1, 1, 1, 1}, 0}), BudgetExceeded);
    EXPECT_THROW(oracle_count({10, {1, 1}, {1, 1}, 0}, OracleBudget{99}), BudgetExceeded);
    EXPECT_NO_THROW(oracle_count({10, {1, 1}, {1, 1}, 0}, OracleBudget{100}));
}

TEST(OracleEnumerate, Examples) {
    EXPECT_EQ(oracle_enumerate({8, {2}, {2}, 4}), (Tuples{{2}, {6}}));
    EXPECT_EQ(oracle_enumerate({6, {1, 1}, {3, 2}, 1}), (Tuples{{3, 4}}));
    EXPECT_TRUE(oracle_enumerate({6, {1, 1}, {3, 2}, 0}).empty());
}

TEST(OracleEnumerate, SortedValidAndCounted) {
    for (std::int64_t n = 1; n <= 9; ++n) {
        for (std::int64_t t1 = 1; t1 <= n; ++t1) {
            for (std::int64_t a1 = -n; a1 <= n; a1 += 2) {
                for (std::int64_t b = -2; b < n; ++b) {
                    const CongruenceInstance inst{n, {a1, 3}, {t1, 1}, b};
                    const auto sols = oracle_enumerate(inst);
                    ASSERT_EQ(sols.size(), oracle_count(inst));
                    ASSERT_TRUE(std::is_sorted(sols.begin(), sols.end()));
                    for (const auto& x : sols) {
                        ASSERT_EQ(std::gcd(x[0], n), t1);
                        ASSERT_EQ(std::gcd(x[1], n), 1);
                        ASSERT_EQ(((a1 * x[0] + 3 * x[1] - b) % n + n) % n, 0);
                    }
                }
            }
        }
    }
}

TEST(OracleCount, PrunedScanMatchesNaive) {
    for (std::int64_t n = 1; n <= 12; ++n) {
        for (std::int64_t t1 = 1; t1 <= n; ++t1) {
            if (n % t1 != 0 && t1 != 5) continue;
            for (std::int64_t a = 0; a < n; ++a) {
                for (std::int64_t b = 0; b < n; ++b) {
                    const CongruenceInstance two{n, {a, 1}, {t1, 1}, b};
                    ASSERT_EQ(oracle_count(two), oracle_count_naive(two));
                    const CongruenceInstance three{n, {a, 1, a + 1}, {t1, 1, t1}, b};
                    ASSERT_EQ(oracle_count(three), oracle_count_naive(three));
                }
            }
        }
    }
}

}  // namespace
}  // namespace rlc
