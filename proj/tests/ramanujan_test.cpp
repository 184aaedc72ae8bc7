#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rlc/ramanujan.hpp"
#include "test_oracles.hpp"

namespace rlc {
namespace {

TEST(RamanujanExponential, Examples) {
    const auto c50 = ramanujan_exponential(5, 0);
    EXPECT_NEAR(static_cast<double>(c50.real()), 4.0, 1e-9);
    EXPECT_NEAR(static_cast<double>(ramanujan_exponential(6, 1).real()), 1.0, 1e-9);
    EXPECT_NEAR(static_cast<double>(ramanujan_exponential(4, 2).real()), -2.0, 1e-9);
    EXPECT_NEAR(static_cast<double>(ramanujan_exponential(4, 2).imag()), 0.0, 1e-9);
    EXPECT_THROW(ramanujan_exponential(0, 1), std::invalid_argument);
}

TEST(RamanujanKluyver, Examples) {
    EXPECT_EQ(ramanujan_kluyver(6, 3), -2);
    EXPECT_EQ(ramanujan_kluyver(7, 3), -1);
    EXPECT_EQ(ramanujan_kluyver(13, 27), -1);
    EXPECT_EQ(ramanujan_kluyver(1, 17), 1);
    EXPECT_THROW(ramanujan_kluyver(-2, 1), std::invalid_argument);
}

TEST(RamanujanSterneck, Examples) {
    EXPECT_EQ(ramanujan_sterneck(4, 2), -2);
    EXPECT_EQ(ramanujan_sterneck(9, 3), -3);
    EXPECT_EQ(ramanujan_sterneck(12, 0), 4);
    EXPECT_THROW(ramanujan_sterneck(0, 0), std::invalid_argument);
}

TEST(RamanujanPrimePower, Examples) {
    EXPECT_EQ(ramanujan_prime_power(2, 2, 4), 2);
    EXPECT_EQ(ramanujan_prime_power(2, 2, 2), -2);
    EXPECT_EQ(ramanujan_prime_power(2, 2, 1), 0);
    EXPECT_EQ(ramanujan_prime_power(3, 2, 0), 6);
    EXPECT_THROW(ramanujan_prime_power(4, 1, 1), std::invalid_argument);
    EXPECT_THROW(ramanujan_prime_power(3, 0, 1), std::invalid_argument);
}

TEST(Ramanujan, Examples) {
    EXPECT_EQ(ramanujan(6, 3), -2);
    EXPECT_EQ(ramanujan(30, 1), -1);
    // c_8(12) = -4 because 4 exactly divides 12; c_3(12) = 2.
    EXPECT_EQ(ramanujan(24, 12), -8);
    EXPECT_EQ(ramanujan(24, 12), rlc_test::ramanujan_exp_rounded(24, 12));
    EXPECT_THROW(ramanujan(0, 3), std::invalid_argument);
}

TEST(Ramanujan, FourWayAgreementSmall) {
    for (std::int64_t n = 1; n <= 80; ++n) {
        for (std::int64_t m = 0; m <= 2 * n; ++m) {
            const std::int64_t v = ramanujan(n, m);
            ASSERT_EQ(ramanujan_kluyver(n, m), v) << n << "," << m;
            ASSERT_EQ(ramanujan_sterneck(n, m), v) << n << "," << m;
            ASSERT_EQ(rlc_test::ramanujan_exp_rounded(n, m), v) << n << "," << m;
            const auto z = ramanujan_exponential(n, m);
            ASSERT_LT(std::fabs(z.imag()), 1e-9L);
        }
    }
}

TEST(Ramanujan, PeriodicAndEven) {
    for (std::int64_t n = 1; n <= 200; ++n) {
        for (std::int64_t m = -3 * n; m <= 3 * n; ++m) {
            const std::int64_t v = ramanujan(n, m);
            ASSERT_EQ(v, ramanujan(n, ((m % n) + n) % n));
            ASSERT_EQ(v, ramanujan(n, std::gcd(m < 0 ? -m : m, n)));
            ASSERT_EQ(v, ramanujan(n, -m));
        }
    }
}

TEST(Ramanujan, MultiplicativeInModulus) {
    for (std::int64_t n1 = 1; n1 <= 100; ++n1) {
        for (std::int64_t n2 = 1; n2 <= 100; ++n2) {
            if (std::gcd(n1, n2) != 1) continue;
            for (std::int64_t m : {0, 1, 2, 6, 12, 30, 35, 210}) {
                ASSERT_EQ(ramanujan(n1 * n2, m), ramanujan(n1, m) * ramanujan(n2, m));
            }
        }
    }
}

TEST(Ramanujan, OrthogonalitySpotValues) {
    EXPECT_EQ(ramanujan_orthogonality_sum(6, 2, 3), 0);
    EXPECT_EQ(ramanujan_orthogonality_sum(6, 2, 2), 6);
    EXPECT_THROW(ramanujan_orthogonality_sum(6, 4, 2), std::invalid_argument);
}

TEST(Ramanujan, DivisorSum) {
    EXPECT_EQ(ramanujan_divisor_sum(12, 24), 12);
    EXPECT_EQ(ramanujan_divisor_sum(12, 18), 0);
}

}  // namespace
}  // namespace rlc
