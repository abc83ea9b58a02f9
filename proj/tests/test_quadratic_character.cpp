#include "deuring/errors.hpp"
#include "deuring/quadratic_character.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace deuring;

namespace {

const SieveTable& sieve()
{
    static const SieveTable t = build_sieve(1'000'000);
    return t;
}

const std::vector<std::uint64_t> kDiscs{3, 4, 7, 8, 20, 23, 24, 40, 84, 163};

} // namespace

TEST(Kronecker, Examples)
{
    EXPECT_EQ(kronecker(-4, 1), 1);
    EXPECT_EQ(kronecker(-4, 3), -1);
    EXPECT_EQ(kronecker(-4, 2), 0);
    for (const std::int64_t d : {-20, -7, 5, 12, 0, 1})
        EXPECT_EQ(kronecker(d, 1), 1);
    EXPECT_EQ(kronecker(-20, 11), -1);
}

TEST(Kronecker, MatchesResidueOracleForFundamentalDiscriminants)
{
    for (const auto D : kDiscs)
        for (std::uint64_t n = 1; n <= 2000; ++n)
            ASSERT_EQ(kronecker(-static_cast<std::int64_t>(D), static_cast<std::int64_t>(n)), oracle::chi(D, n))
                << D << " " << n;
}

TEST(Kronecker, OddPrimeModuliMatchLegendre)
{
    for (const std::uint64_t p : {3u, 5u, 7u, 11u, 13u, 101u})
        for (std::int64_t a = -60; a <= 60; ++a)
            ASSERT_EQ(kronecker(a, static_cast<std::int64_t>(p)), oracle::legendre(a, p)) << a << " " << p;
    for (std::uint64_t p = 3; p < 500; p += 2)
        if (oracle::is_prime(p))
            for (const std::int64_t a : {-4, -8, -20, -24, -40, 7})
                ASSERT_EQ(oracle::legendre_euler(a, p), oracle::legendre(a, p)) << a << " " << p;
}

TEST(Fundamental, Examples)
{
    EXPECT_TRUE(is_fundamental(-4));
    EXPECT_FALSE(is_fundamental(-12));
    EXPECT_TRUE(is_fundamental(-20));
    EXPECT_TRUE(is_fundamental(-3));
    EXPECT_TRUE(is_fundamental(-8));
    EXPECT_FALSE(is_fundamental(-16));
    EXPECT_FALSE(is_fundamental(-1));
    EXPECT_THROW((void)is_fundamental(0), ArgumentError);
    EXPECT_THROW((void)is_fundamental(5), ArgumentError);
}

TEST(Fundamental, DirectCriterion)
{
    const auto squarefree = [](std::uint64_t n) {
        for (const auto& [p, e] : oracle::factor(n))
            if (e > 1)
                return false;
        return true;
    };
    for (std::uint64_t D = 1; D <= 2000; ++D) {
        bool expected = false;
        if (D % 4 == 3)
            expected = squarefree(D);
        else if (D % 4 == 0) {
            const std::uint64_t k = D / 4; // -D = 4 (-k), -k = 2 or 3 mod 4
            expected = (k % 4 == 1 || k % 4 == 2) && squarefree(k);
        }
        ASSERT_EQ(is_fundamental(-static_cast<std::int64_t>(D)), expected) << D;
    }
}

TEST(QuadraticCharacter, RejectsNonFundamental)
{
    EXPECT_THROW(QuadraticCharacter(12), ArgumentError);
    EXPECT_THROW(QuadraticCharacter(1), ArgumentError);
    try {
        QuadraticCharacter bad(12);
    } catch (const ArgumentError& e) {
        EXPECT_NE(std::string(e.what()).find("12"), std::string::npos);
    }
}

TEST(QuadraticCharacter, StructuralInvariants)
{
    for (const auto D : kDiscs) {
        const QuadraticCharacter chi(D);
        EXPECT_EQ(chi.is_even(), D % 4 == 0);
        EXPECT_EQ(chi.char_sum(0), 0);
        EXPECT_EQ(chi.char_sum(D), 0) << D;
        for (std::uint64_t m = 1; m <= 200; ++m) {
            ASSERT_EQ(chi(m + D), chi(m));
            ASSERT_EQ(chi(m) == 0, std::gcd(m, D) > 1);
            for (std::uint64_t n = 1; n <= 200; ++n)
                ASSERT_EQ(chi(m * n), chi(m) * chi(n));
        }
    }
}

TEST(QuadraticCharacter, CharSumMatchesRunningSum)
{
    const QuadraticCharacter chi(20);
    EXPECT_EQ(QuadraticCharacter(4).char_sum(3), 0);
    std::int64_t s = 0;
    for (std::uint64_t x = 1; x <= 5000; ++x) {
        s += oracle::chi(20, x);
        ASSERT_EQ(chi.char_sum(x), s) << x;
    }
    EXPECT_EQ(chi.char_sum(1'000'000'000'000ull + 7), chi.char_sum(7));
}

TEST(PolyaVinogradov, Examples)
{
    const auto r4 = polya_vinogradov_check(QuadraticCharacter(4), 1000);
    EXPECT_EQ(r4.status, Status::pass);
    EXPECT_DOUBLE_EQ(r4.lhs, 1.0);
    EXPECT_NEAR(r4.rhs, 2.0 * std::log(4.0), 1e-12);
    EXPECT_EQ(polya_vinogradov_check(QuadraticCharacter(8), 1000).status, Status::pass);
    const auto r20 = polya_vinogradov_check(QuadraticCharacter(20), 10'000);
    EXPECT_EQ(r20.status, Status::pass);
    EXPECT_GT(r20.margin, 0.0);
}

TEST(Abm, Examples)
{
    const SieveTable& t = sieve();
    const QuadraticCharacter chi20(20);
    EXPECT_EQ(classify_abm(t, chi20, 165), (AbmFactorization{3, 5, 11}));
    EXPECT_EQ(classify_abm(t, chi20, 1), (AbmFactorization{1, 1, 1}));
    EXPECT_EQ(classify_abm(t, QuadraticCharacter(4), 8), (AbmFactorization{1, 8, 1}));
}

TEST(Abm, ReassemblyAndClasses)
{
    const SieveTable& t = sieve();
    for (const std::uint64_t D : {4u, 8u, 20u, 24u, 40u}) {
        const QuadraticCharacter chi(D);
        for (std::uint64_t n = 1; n <= 10'000; ++n) {
            const auto f = classify_abm(t, chi, n);
            ASSERT_EQ(f.a * f.b * f.m, n);
            for (const auto& [p, e] : oracle::factor(f.a))
                ASSERT_EQ(oracle::chi(D, p), 1);
            for (const auto& [p, e] : oracle::factor(f.b))
                ASSERT_EQ(oracle::chi(D, p), 0);
            for (const auto& [p, e] : oracle::factor(f.m))
                ASSERT_EQ(oracle::chi(D, p), -1);
            ASSERT_EQ(in_class_c(t, chi, n), f.m == 1);
        }
    }
}

TEST(OneStarChi, Examples)
{
    const SieveTable& t = sieve();
    const QuadraticCharacter chi(20);
    EXPECT_EQ(one_star_chi(t, chi, 3), 2);
    EXPECT_EQ(one_star_chi(t, chi, 5), 1);
    EXPECT_EQ(one_star_chi(t, chi, 11), 0);
}

TEST(OneStarChi, DivisorSumAndClasswiseIdentities)
{
    const SieveTable& t = sieve();
    for (const std::uint64_t D : {4u, 8u, 20u, 24u, 40u}) {
        const QuadraticCharacter chi(D);
        const FunctionTable table = one_star_chi_table(t, chi);
        for (std::uint64_t n = 1; n <= 10'000; ++n) {
            std::int64_t direct = 0;
            for (const auto d : oracle::divisors(n))
                direct += oracle::chi(D, d);
            const std::int64_t v = one_star_chi(t, chi, n);
            ASSERT_EQ(v, direct) << D << " " << n;
            ASSERT_EQ(table[n], v);
            const auto f = classify_abm(t, chi, n);
            if (f.a == n)
                ASSERT_EQ(v, oracle::tau(n));
            if (f.b == n)
                ASSERT_EQ(v, 1);
            if (f.m == n)
                ASSERT_EQ(v, oracle::is_square(n) ? 1 : 0);
            if (f.m == 1) {
                ASSERT_LE(two_pow_nu(t, f.a), v);
                ASSERT_LE(v, oracle::tau_odd(n));
                ASSERT_LE(oracle::tau_odd(n), oracle::tau(n));
            }
        }
    }
}

TEST(SplitIdentity, HoldsForEvenDiscriminants)
{
    const SieveTable& t = sieve();
    for (const std::uint64_t D : {4u, 8u, 20u, 24u, 40u}) {
        const QuadraticCharacter chi(D);
        const auto one = split_identity_sides(t, chi, 1);
        EXPECT_EQ(one.lhs, 1);
        EXPECT_EQ(one.rhs, 1);
        const auto reports = check_split_identity_range(t, chi, 10'000);
        ASSERT_FALSE(reports.empty());
        EXPECT_EQ(reports.front().status, Status::pass) << D;
        EXPECT_EQ(reports.front().lhs, 0.0);
    }
}

TEST(SplitIdentity, BruteForceBothSides)
{
    // Both sides of the split rebuilt from divisor enumeration.
    const SieveTable& t = sieve();
    for (const std::uint64_t D : {4u, 20u, 24u}) {
        const QuadraticCharacter chi(D);
        for (std::uint64_t n = 1; n <= 3000; ++n) {
            std::uint64_t c = 1;
            for (const auto& [p, e] : oracle::factor(n))
                if (oracle::chi(D, p) != -1)
                    for (int i = 0; i < e; ++i)
                        c *= p;
            std::int64_t rhs = 0;
            for (const auto cp : oracle::divisors(c)) {
                if (cp % 2 == 0)
                    continue;
                int nu_a = 0;
                for (const auto& [p, e] : oracle::factor(cp))
                    nu_a += oracle::chi(D, p) == 1;
                std::int64_t ochi = 0;
                for (const auto d : oracle::divisors(n / cp))
                    ochi += oracle::chi(D, d);
                rhs += (std::int64_t{1} << nu_a) * oracle::liouville(cp) * ochi;
            }
            const bool lhs = oracle::is_square(n) || (n % 2 == 0 && oracle::is_square(n / 2));
            ASSERT_EQ(rhs, lhs ? 1 : 0) << D << " " << n;
            const auto sides = split_identity_sides(t, chi, n);
            ASSERT_EQ(sides.rhs, rhs);
        }
    }
}

TEST(SplitIdentity, RequiresEvenD)
{
    EXPECT_THROW((void)split_identity_sides(sieve(), QuadraticCharacter(7), 10), ArgumentError);
}

TEST(LOne, MatchesClassNumberValues)
{
    for (const auto& [D, L] : oracle::kLOne) {
        const LOneValue v = l_one(QuadraticCharacter(D), 1'000'000);
        EXPECT_LE(std::abs(v.value - L), v.tail_bound) << D;
        EXPECT_GT(v.tail_bound, 0.0);
    }
    EXPECT_NEAR(l_one(QuadraticCharacter(4), 1'000'000).value, 0.785398, 1e-5);
    EXPECT_NEAR(l_one(QuadraticCharacter(8), 1'000'000).value, 1.110721, 1e-5);
    EXPECT_NEAR(l_one(QuadraticCharacter(20), 1'000'000).value, 1.404963, 1e-5);
    EXPECT_THROW((void)l_one(QuadraticCharacter(20), 19), ArgumentError);
}

TEST(ClassNumber, KnownValues)
{
    const std::map<std::uint64_t, std::uint64_t> h{{3, 1},  {4, 1},  {7, 1},  {8, 1},  {20, 2},  {23, 3},
                                                 {24, 2}, {40, 2}, {47, 5}, {71, 7}, {84, 4}, {163, 1}};
    for (const auto& [D, expected] : h)
        EXPECT_EQ(class_number(D), expected) << D;
    EXPECT_THROW((void)class_number(5), ArgumentError);
    EXPECT_EQ(l_one_class_number_check(QuadraticCharacter(24), 1'000'000).status, Status::pass);
}
