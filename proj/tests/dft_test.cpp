#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "rlc/dft.hpp"
#include "rlc/oracle.hpp"
#include "test_oracles.hpp"

namespace rlc {
namespace {

using IntSignal = PeriodicSignal<std::int64_t>;

void expect_near(const PeriodicSignal<Complex>& got, const std::vector<long double>& real_expected) {
    ASSERT_EQ(got.period(), static_cast<std::int64_t>(real_expected.size()));
    for (std::int64_t j = 1; j <= got.period(); ++j) {
        EXPECT_NEAR(static_cast<double>(got(j).real()), static_cast<double>(real_expected[j - 1]), 1e-9) << j;
        EXPECT_NEAR(static_cast<double>(got(j).imag()), 0.0, 1e-9) << j;
    }
}

IntSignal random_signal(std::mt19937_64& rng, std::int64_t n) {
    std::uniform_int_distribution<std::int64_t> dist(-5, 5);
    IntSignal f(n);
    for (std::int64_t j = 1; j <= n; ++j) f(j) = dist(rng);
    return f;
}

TEST(PeriodicSignal, IndexingWrapsWithResidueZeroAtN) {
    IntSignal f(std::vector<std::int64_t>{10, 20, 30});
    EXPECT_EQ(f(1), 10);
    EXPECT_EQ(f(3), 30);
    EXPECT_EQ(f(0), 30);
    EXPECT_EQ(f(-1), 20);
    EXPECT_EQ(f(7), 10);
    EXPECT_THROW(IntSignal(0), std::invalid_argument);
    EXPECT_THROW(IntSignal(std::vector<std::int64_t>{}), std::invalid_argument);
}

TEST(Dft, Examples) {
    expect_near(dft(IntSignal(std::vector<std::int64_t>{1, 0, 1, 0})), {0, -2, 0, 2});
    expect_near(dft(IntSignal(std::vector<std::int64_t>(7, 1))), {0, 0, 0, 0, 0, 0, 7});
    expect_near(dft(gcd_indicator(6, 2)), {-1, -1, 2, -1, -1, 2});
}

TEST(Dft, QuarterTurnRootsAreExact) {
    const auto g = dft(IntSignal(std::vector<std::int64_t>{1, 0, 1, 0}));
    EXPECT_EQ(g(2).real(), -2.0L);
    EXPECT_EQ(g(2).imag(), 0.0L);
}

TEST(Idft, Examples) {
    const IntSignal f(std::vector<std::int64_t>{3, 1, 4, 1, 5});
    expect_near(idft(dft(f)), {3, 1, 4, 1, 5});
    expect_near(idft(IntSignal(std::vector<std::int64_t>{0, 0, 0, 0, 0, 6})), {1, 1, 1, 1, 1, 1});
    expect_near(idft(IntSignal(std::vector<std::int64_t>{0, -2, 0, 2})), {1, 0, 1, 0});
}

TEST(Idft, RoundTripRandomSignals) {
    std::mt19937_64 rng(7);
    for (std::int64_t n = 1; n <= 24; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto f = random_signal(rng, n);
            const auto back = idft(dft(f));
            for (std::int64_t j = 1; j <= n; ++j) {
                ASSERT_LT(std::abs(back(j) - Complex(static_cast<long double>(f(j)), 0)), kDftTolerance);
            }
        }
    }
}

TEST(CauchyConvolve, Examples) {
    const auto r21 = gcd_indicator(2, 1);
    EXPECT_EQ(cauchy_convolve(r21, r21)(2), 1);
    const auto r41 = gcd_indicator(4, 1);
    EXPECT_EQ(cauchy_convolve(r41, r41)(2), 2);
    EXPECT_THROW(cauchy_convolve(r21, r41), std::invalid_argument);
}

TEST(CauchyConvolve, EmptyFoldIsUnit) {
    const std::vector<IntSignal> none;
    const auto unit = cauchy_convolve(std::span<const IntSignal>(none), 5);
    EXPECT_EQ(unit.values(), (std::vector<std::int64_t>{0, 0, 0, 0, 1}));
}

TEST(CauchyConvolve, ConvolutionTheorem) {
    std::mt19937_64 rng(11);
    for (std::int64_t n = 1; n <= 24; ++n) {
        for (std::size_t k = 1; k <= 3; ++k) {
            std::vector<IntSignal> fs;
            for (std::size_t i = 0; i < k; ++i) fs.push_back(random_signal(rng, n));
            const auto conv = cauchy_convolve(std::span<const IntSignal>(fs), n);
            const auto lhs = dft(conv);
            for (std::int64_t b = 1; b <= n; ++b) {
                Complex rhs{1, 0};
                for (const auto& f : fs) rhs *= dft(f)(b);
                ASSERT_LT(std::abs(lhs(b) - rhs), kDftTolerance) << n << " " << k << " " << b;
            }
        }
    }
}

TEST(GcdIndicator, Examples) {
    EXPECT_EQ(gcd_indicator(6, 1).values(), (std::vector<std::int64_t>{1, 0, 0, 0, 1, 0}));
    EXPECT_EQ(gcd_indicator(6, 6).values(), (std::vector<std::int64_t>{0, 0, 0, 0, 0, 1}));
    EXPECT_EQ(gcd_indicator(4, 2).values(), (std::vector<std::int64_t>{0, 1, 0, 0}));
    EXPECT_THROW(gcd_indicator(6, 4), std::invalid_argument);
}

TEST(GcdIndicator, DftIsRamanujanSum) {
    for (std::int64_t n = 1; n <= 60; ++n) {
        for (std::int64_t t : divisors(n)) {
            const auto g = dft(gcd_indicator(n, t));
            for (std::int64_t m = 1; m <= n; ++m) {
                ASSERT_LT(std::abs(g(m) - Complex(static_cast<long double>(ramanujan(n / t, m)), 0)), kDftTolerance);
            }
        }
    }
}

TEST(EvenSignal, ExpandCollapseRoundTrip) {
    const EvenSignal<std::int64_t> f(12, {{1, 5}, {2, -1}, {3, 0}, {4, 2}, {6, 7}, {12, 3}});
    const auto expanded = f.expand();
    EXPECT_TRUE(is_n_even(expanded));
    EXPECT_EQ(EvenSignal<std::int64_t>::from_periodic(expanded), f);
    EXPECT_EQ(expanded(8), 2);
    EXPECT_EQ(expanded(0), 3);
    EXPECT_FALSE(is_n_even(IntSignal(std::vector<std::int64_t>{1, 0, 2, 0})));
    EXPECT_THROW(EvenSignal<std::int64_t>::from_periodic(IntSignal(std::vector<std::int64_t>{1, 0, 2, 0})),
                 std::invalid_argument);
    EXPECT_THROW(EvenSignal<std::int64_t>(6, {{1, 1}, {2, 1}, {3, 1}}), std::invalid_argument);
}

TEST(EvenDft, Examples) {
    // rho_{n,t} as an even signal transforms to c_{n/t}.
    for (std::int64_t n : {6, 12, 30}) {
        for (std::int64_t t : divisors(n)) {
            const auto rho = EvenSignal<std::int64_t>::from_periodic(gcd_indicator(n, t));
            for (std::int64_t m = -n; m <= 2 * n; ++m) ASSERT_EQ(even_dft(rho, m), ramanujan(n / t, m));
        }
    }
    const EvenSignal<std::int64_t> ones(6, {{1, 1}, {2, 1}, {3, 1}, {6, 1}});
    EXPECT_EQ(even_dft(ones, 6), 6);
    const EvenSignal<std::int64_t> single(1, {{1, 9}});
    EXPECT_EQ(even_dft(single, 0), 9);
    EXPECT_EQ(even_dft(single, 17), 9);
}

TEST(EvenDft, AgreesWithFullDft) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> dist(-9, 9);
    for (std::int64_t n = 1; n <= 60; ++n) {
        std::map<std::int64_t, std::int64_t> vals;
        for (std::int64_t d : divisors(n)) vals[d] = dist(rng);
        const EvenSignal<std::int64_t> f(n, vals);
        const auto full = dft(f.expand());
        for (std::int64_t m = 1; m <= n; ++m) {
            ASSERT_LT(std::abs(full(m) - Complex(static_cast<long double>(even_dft(f, m)), 0)), kDftTolerance);
        }
    }
}

TEST(CountingBridge, ConvolvedIndicatorsCountSolutions) {
    for (std::int64_t n = 1; n <= 18; ++n) {
        const auto divs = divisors(n);
        for (std::int64_t t1 : divs) {
            for (std::int64_t t2 : divs) {
                const auto conv = cauchy_convolve(gcd_indicator(n, t1), gcd_indicator(n, t2));
                for (std::int64_t b = 0; b < n; ++b) {
                    ASSERT_EQ(conv(b), rlc_test::unit_coeff_count_dp(b, n, {t1, t2}));
                    const CongruenceInstance inst{n, {1, 1}, {t1, t2}, b};
                    ASSERT_EQ(static_cast<std::uint64_t>(conv(b)), oracle_count(inst));
                }
            }
        }
    }
}

}  // namespace
}  // namespace rlc
