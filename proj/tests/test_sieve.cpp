#include "deuring/errors.hpp"
#include "deuring/sieve.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

using namespace deuring;

namespace {

const SieveTable& sieve_1e5()
{
    static const SieveTable t = build_sieve(100'000);
    return t;
}

} // namespace

TEST(Sieve, SmallestPrimeFactorsUpToTen)
{
    const SieveTable t = build_sieve(10);
    const std::vector<std::uint32_t> expected{2, 3, 2, 5, 2, 7, 2, 3, 2};
    for (std::uint64_t n = 2; n <= 10; ++n)
        EXPECT_EQ(t.spf(n), expected[n - 2]) << n;
}

TEST(Sieve, SmallestCase)
{
    const SieveTable t = build_sieve(2);
    EXPECT_EQ(t.limit(), 2u);
    EXPECT_EQ(t.spf(2), 2u);
}

TEST(Sieve, MatchesTrialDivision)
{
    const SieveTable& t = sieve_1e5();
    for (std::uint64_t n = 2; n <= t.limit(); n += (n < 5000 ? 1 : 37))
        ASSERT_EQ(t.spf(n), oracle::spf(n)) << n;
}

TEST(Sieve, LargePrimeAtOneMillion)
{
    const SieveTable t = build_sieve(1'000'000);
    EXPECT_EQ(t.spf(999'983), 999'983u);
    EXPECT_TRUE(t.is_prime(999'983));
    EXPECT_EQ(t.spf(999'981), oracle::spf(999'981));
}

TEST(Sieve, RejectsOutOfRangeLimits)
{
    EXPECT_THROW(build_sieve(1), BoundsError);
    EXPECT_THROW(build_sieve(0), BoundsError);
    EXPECT_THROW(build_sieve(1001, 1000), BoundsError);
}

TEST(Sieve, IndexOutsideTableThrows)
{
    const SieveTable t = build_sieve(100);
    EXPECT_THROW((void)t.spf(101), BoundsError);
    EXPECT_THROW((void)liouville(t, 0), BoundsError);
    EXPECT_THROW((void)tau(t, 101), BoundsError);
}

TEST(Sieve, FactorAndDivisorsAgreeWithEnumeration)
{
    const SieveTable& t = sieve_1e5();
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        const auto f = t.factor(n);
        const auto ref = oracle::factor(n);
        ASSERT_EQ(f.size(), ref.size()) << n;
        auto it = ref.begin();
        for (const auto& pp : f) {
            EXPECT_EQ(pp.prime, it->first);
            EXPECT_EQ(pp.exponent, it->second);
            ++it;
        }
        EXPECT_EQ(t.divisors(n), oracle::divisors(n)) << n;
    }
}

TEST(Sieve, CacheRoundTrip)
{
    const SieveTable t = build_sieve(5000);
    std::stringstream buf;
    t.dump(buf);
    const SieveTable back = SieveTable::load(buf);
    ASSERT_EQ(back.limit(), t.limit());
    for (std::uint64_t n = 2; n <= t.limit(); ++n)
        ASSERT_EQ(back.spf(n), t.spf(n));
}

TEST(Sieve, CorruptCacheIsRejected)
{
    const SieveTable t = build_sieve(100);
    std::stringstream buf;
    t.dump(buf);
    std::string bytes = buf.str();
    bytes[20] = static_cast<char>(4); // spf(3) rewritten as 4
    std::stringstream bad(bytes);
    EXPECT_ANY_THROW(SieveTable::load(bad));
    std::stringstream junk("not a sieve");
    EXPECT_ANY_THROW(SieveTable::load(junk));
}

TEST(Sieve, CachedSieveWritesAndReuses)
{
    const auto dir = std::filesystem::temp_directory_path() / "deuring_sieve_cache_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const SieveTable a = cached_sieve(777, dir);
    EXPECT_TRUE(std::filesystem::exists(dir / "spf_777.bin"));
    const SieveTable b = cached_sieve(777, dir);
    for (std::uint64_t n = 2; n <= 777; ++n)
        ASSERT_EQ(a.spf(n), b.spf(n));
    std::filesystem::remove_all(dir);
}

TEST(Liouville, Examples)
{
    const SieveTable& t = sieve_1e5();
    EXPECT_EQ(liouville(t, 1), 1);
    EXPECT_EQ(liouville(t, 2), -1);
    EXPECT_EQ(liouville(t, 12), -1);
    EXPECT_EQ(liouville_odd(t, 6), 0);
    EXPECT_EQ(liouville_odd(t, 9), 1);
    EXPECT_EQ(liouville_odd(t, 15), 1);
    EXPECT_EQ(liouville_q(t, 2, 6), 0);
    EXPECT_EQ(liouville_q(t, 3, 9), 0);
    EXPECT_EQ(liouville_q(t, 3, 10), oracle::liouville(10));
    EXPECT_THROW((void)liouville_q(t, 4, 10), ArgumentError);
}

TEST(Liouville, MatchesFactorizationOracle)
{
    const SieveTable& t = sieve_1e5();
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        const int l = oracle::liouville(n);
        ASSERT_EQ(liouville(t, n), l) << n;
        ASSERT_EQ(liouville_odd(t, n), n % 2 ? l : 0) << n;
        ASSERT_EQ(liouville_q(t, 5, n), n % 5 ? l : 0) << n;
    }
}

TEST(DivisorFunctions, Examples)
{
    const SieveTable& t = sieve_1e5();
    EXPECT_EQ(nu(t, 12), 2);
    EXPECT_EQ(tau(t, 12), 6);
    EXPECT_EQ(tau_odd(t, 12), 2);
    EXPECT_EQ(nu(t, 1), 0);
    EXPECT_EQ(tau(t, 1), 1);
    EXPECT_EQ(tau_odd(t, 1), 1);
    EXPECT_EQ(nu(t, 16), 1);
    EXPECT_EQ(tau(t, 16), 5);
    EXPECT_EQ(tau_odd(t, 16), 1);
}

TEST(DivisorFunctions, MatchEnumerationAndOrdering)
{
    const SieveTable& t = sieve_1e5();
    for (std::uint64_t n = 1; n <= 10'000; ++n) {
        ASSERT_EQ(tau(t, n), oracle::tau(n)) << n;
        ASSERT_EQ(tau_odd(t, n), oracle::tau_odd(n)) << n;
        ASSERT_EQ(nu(t, n), oracle::big_omega_distinct(n)) << n;
        ASSERT_LE(tau_odd(t, n), tau(t, n));
        ASSERT_LE(two_pow_nu(t, n), tau(t, n));
    }
}

TEST(OneStarLambdaOdd, Examples)
{
    const SieveTable& t = sieve_1e5();
    EXPECT_EQ(one_star_lambda_odd(t, 16), 1);
    EXPECT_EQ(one_star_lambda_odd(t, 18), 1);
    EXPECT_EQ(one_star_lambda_odd(t, 12), 0);
}

TEST(OneStarLambdaOdd, SquareOrTwiceSquareUpTo1e5)
{
    const SieveTable& t = sieve_1e5();
    const FunctionTable f = one_star_lambda_odd_table(t);
    for (std::uint64_t n = 1; n <= t.limit(); ++n) {
        const bool expected = oracle::is_square(n) || (n % 2 == 0 && oracle::is_square(n / 2));
        ASSERT_EQ(f[n], expected ? 1 : 0) << n;
    }
}

TEST(OneStarLambdaQ, SquareOrQSquare)
{
    const SieveTable& t = sieve_1e5();
    for (const std::uint64_t q : {2u, 3u, 7u})
        for (std::uint64_t n = 1; n <= 3000; ++n) {
            std::int64_t direct = 0;
            for (const auto d : oracle::divisors(n))
                direct += d % q ? oracle::liouville(d) : 0;
            ASSERT_EQ(one_star_lambda_q(t, q, n), direct) << q << " " << n;
        }
}

TEST(Convolution, MobiusInversion)
{
    const SieveTable t = build_sieve(2000);
    const FunctionTable e = dirichlet_convolve(ones_table(t.limit()), mobius_table(t));
    EXPECT_EQ(e[1], 1);
    for (std::uint64_t n = 2; n <= t.limit(); ++n)
        ASSERT_EQ(e[n], 0) << n;
}

TEST(Convolution, OneStarLambdaIsSquareIndicator)
{
    const SieveTable t = build_sieve(2000);
    const FunctionTable f = dirichlet_convolve(ones_table(t.limit()), liouville_table(t));
    EXPECT_EQ(f[9], 1);
    EXPECT_EQ(f[8], 0);
    for (std::uint64_t n = 1; n <= t.limit(); ++n)
        ASSERT_EQ(f[n], oracle::is_square(n) ? 1 : 0) << n;
}

TEST(Convolution, TwoPowNuIdentitiesUpTo1e4)
{
    const SieveTable t = build_sieve(10'000);
    const FunctionTable ones = ones_table(t.limit());
    const FunctionTable w = two_pow_nu_table(t);
    const FunctionTable lhs = dirichlet_convolve(ones, liouville_table(t));
    const FunctionTable rhs = dirichlet_convolve(multiply(w, liouville_table(t)), tau_table(t));
    const FunctionTable lhs_odd = dirichlet_convolve(ones, liouville_odd_table(t));
    const FunctionTable rhs_odd = dirichlet_convolve(multiply(w, liouville_odd_table(t)), tau_odd_table(t));
    for (std::uint64_t n = 1; n <= t.limit(); ++n) {
        ASSERT_EQ(lhs[n], rhs[n]) << n;
        ASSERT_EQ(lhs_odd[n], rhs_odd[n]) << n;
    }
}

TEST(Convolution, LimitMismatchAndOverflow)
{
    const SieveTable t = build_sieve(100);
    EXPECT_THROW(dirichlet_convolve(ones_table(100), ones_table(99)), ArgumentError);
    std::vector<std::int64_t> big(101, INT64_MAX / 2);
    const FunctionTable f(big);
    EXPECT_THROW(dirichlet_convolve(f, f), OverflowError);
}

TEST(Ramanujan, ExamplesAndErrors)
{
    EXPECT_EQ(ramanujan_c(3, 6), 2);
    EXPECT_EQ(ramanujan_c(3, 5), -1);
    EXPECT_EQ(ramanujan_c(2, 7), -1);
    EXPECT_THROW((void)ramanujan_c(9, 3), ArgumentError);
}

TEST(Ramanujan, UnitInvarianceAndBoundedSums)
{
    for (const std::uint64_t q : {2u, 3u, 5u, 7u}) {
        std::int64_t running = 0;
        for (std::uint64_t n = 1; n <= 1000; ++n) {
            running += ramanujan_c(q, n);
            ASSERT_LT(std::abs(running), static_cast<std::int64_t>(q));
            ASSERT_EQ(ramanujan_c(2, n), n % 2 ? -1 : 1);
            for (std::uint64_t d = 1; d * n <= 1000; ++d)
                if (d % q != 0)
                    ASSERT_EQ(ramanujan_c(q, d * n), ramanujan_c(q, n));
        }
    }
}

TEST(Multiplicativity, SeededCoprimePairs)
{
    const SieveTable& t = sieve_1e5();
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::uint64_t> pick(1, 1000);
    int checked = 0;
    while (checked < 2000) {
        const std::uint64_t m = pick(rng), n = pick(rng);
        if (std::gcd(m, n) != 1 || m * n > t.limit())
            continue;
        ++checked;
        ASSERT_EQ(liouville(t, m * n), liouville(t, m) * liouville(t, n));
        ASSERT_EQ(liouville_odd(t, m * n), liouville_odd(t, m) * liouville_odd(t, n));
        ASSERT_EQ(tau(t, m * n), tau(t, m) * tau(t, n));
        ASSERT_EQ(one_star_lambda_odd(t, m * n), one_star_lambda_odd(t, m) * one_star_lambda_odd(t, n));
    }
}

TEST(PrimalityHelper, AgreesWithTrialDivision)
{
    for (std::uint64_t n = 0; n <= 5000; ++n)
        ASSERT_EQ(is_prime_u64(n), oracle::is_prime(n)) << n;
    EXPECT_TRUE(is_prime_u64(1'000'000'007));
}
