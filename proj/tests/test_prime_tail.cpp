#include <zetalab/prime_tail.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace zetalab;

namespace {

const int D = 50;

Real ref(const char* s) { return Real::parse(s, D); }

// Odd m in [3, limit] that are not prime powers, via smallest-prime-factor sieve.
long double odd_non_prime_power_sum(long limit, double s)
{
    std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
    std::vector<std::uint32_t> primes;
    for (long i = 2; i <= limit; ++i) {
        if (spf[static_cast<std::size_t>(i)] == 0) {
            spf[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes) {
            const long m = i * static_cast<long>(p);
            if (p > spf[static_cast<std::size_t>(i)] || m > limit)
                break;
            spf[static_cast<std::size_t>(m)] = p;
        }
    }
    // collect terms, then add smallest first
    std::vector<long double> terms;
    for (long m = 3; m <= limit; m += 2) {
        long r = m;
        const std::uint32_t p = spf[static_cast<std::size_t>(m)];
        while (r % p == 0)
            r /= p;
        if (r != 1)
            terms.push_back(std::pow(static_cast<long double>(m), -static_cast<long double>(s)));
    }
    long double acc = 0;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        acc += *it;
    return acc;
}

} // namespace

TEST(TDirect, KnownValues)
{
    SeriesResult t2 = t_direct(Real(2L, D), Real(1e-7, D));
    ASSERT_TRUE(t2.converged);
    EXPECT_LE(t2.trunc_estimate, Real(1e-7, D));
    // true value below the partial sum plus bound, above the partial sum
    const Real t2_ref = ref("0.5516932976569991844397310239713435781315003777786283");
    EXPECT_LE(t2.value.re, t2_ref);
    EXPECT_LE(t2_ref - t2.value.re, t2.trunc_estimate);

    SeriesResult t3 = t_direct(Real(3L, D), Real(1e-12, D));
    ASSERT_TRUE(t3.converged);
    EXPECT_LT(abs(t3.value.re - ref("0.1941181698326337922995874849113808374518770184527922")), Real(1e-12, D));

    SeriesResult t30 = t_direct(Real(30L, D), Real(1e-30, D));
    const Real two30 = pow(Real(2L, D), -30L);
    EXPECT_LT(abs(t30.value.re - two30), 3 * pow(Real(3L, D), -30L));
}

TEST(TDirect, CapReportsNonConvergence)
{
    SeriesResult r = t_direct(Real(2L, D), Real(1e-30, D), 200'000);
    EXPECT_FALSE(r.converged);
    EXPECT_GT(r.trunc_estimate, Real(1e-30, D));
}

TEST(TDirect, DomainError)
{
    EXPECT_THROW(t_direct(Real(1L, D), Real(1e-10, D)), DomainError);
    EXPECT_THROW(t_closed(Real(0.5, D)), DomainError);
}

TEST(TClosed, KnownValues)
{
    const Real z2 = pi(D) * pi(D) / 6;
    const Real expect2 = z2 * Real(0.75, D) - 1 + Real(1L, D) / 3;
    EXPECT_LT(abs(t_closed(Real(2L, D)) - expect2), Real(1e-40, D));
    EXPECT_LT(abs(t_closed(Real(2L, D)) - ref("0.5670338834")), Real(1e-10, D));
    EXPECT_LT(abs(t_closed(Real(3L, D)) - ref("0.194657")), Real(1e-6, D));
    // large s: p = 2, 3 dominate both
    const Real s(40L, D);
    const Real lead = pow(Real(2L, D), -s) + pow(Real(3L, D), -s);
    EXPECT_LT(abs(t_closed(s) / lead - 1), Real(1e-10, D));
    EXPECT_LT(abs(t_direct(s, Real(1e-40, D)).value.re / lead - 1), Real(1e-10, D));
}

TEST(Gap, PositiveAndDecaying)
{
    std::vector<Real> gaps;
    for (long s = 2; s <= 8; ++s) {
        const Real tol(s == 2 ? 1e-7 : (s == 3 ? 1e-14 : 1e-20), D);
        TailSum t = tail_sum(Real(s, D), tol);
        ASSERT_TRUE(t.direct.converged) << s;
        EXPECT_GT(t.gap, t.direct.trunc_estimate) << s;
        gaps.push_back(t.gap);
    }
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i)
        EXPECT_LT(gaps[i + 1] / gaps[i], Real(0.125, D)) << i + 2;
}

// The closed form counts every odd m > 1 that is not a prime power, weight m^{-s}.
TEST(Gap, EqualsOddNonPrimePowerSum)
{
    const long limit = 10'000'000;
    {
        TailSum t = tail_sum(Real(2L, D), Real(1e-7, D));
        const double brute = static_cast<double>(odd_non_prime_power_sum(limit, 2.0));
        // brute force misses about (density / 2) / limit beyond the cut
        EXPECT_NEAR(t.gap.to_double(), brute, 1e-6);
        EXPECT_NEAR(t.gap.to_double(), 0.015340585812503976, 2e-7);
    }
    {
        TailSum t = tail_sum(Real(3L, D), Real(1e-14, D));
        const double brute = static_cast<double>(odd_non_prime_power_sum(10'000, 3.0));
        EXPECT_NEAR(t.gap.to_double(), brute, 1e-8);
    }
}
