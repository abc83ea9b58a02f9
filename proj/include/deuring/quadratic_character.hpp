#pragma once

#include "deuring/check_report.hpp"
#include "deuring/sieve.hpp"

#include <cstdint>
#include <vector>

namespace deuring {

// Kronecker symbol (d | n), total on integer pairs.
int kronecker(std::int64_t d, std::int64_t n) noexcept;

// True iff minus_d is a fundamental discriminant. ArgumentError for minus_d >= 0.
bool is_fundamental(std::int64_t minus_d);

bool is_squarefree_u64(std::uint64_t n) noexcept;

// The real primitive character n -> (-D | n) attached to the fundamental
// discriminant -D.
class QuadraticCharacter {
public:
    // Periods up to this size are cached as a packed 2-bit table with
    // one-period prefix sums.
    static constexpr std::uint64_t kPeriodCacheMax = std::uint64_t{1} << 26;

    // ArgumentError unless -D is fundamental.
    explicit QuadraticCharacter(std::uint64_t D);

    [[nodiscard]] std::uint64_t modulus() const noexcept { return D_; }
    [[nodiscard]] bool is_even() const noexcept { return D_ % 4 == 0; }

    [[nodiscard]] int operator()(std::uint64_t n) const noexcept;
    // S_D(x) = sum_{1 <= n <= x} chi(n).
    [[nodiscard]] std::int64_t char_sum(std::uint64_t x) const noexcept;

    // sqrt(D) log D.
    [[nodiscard]] double polya_vinogradov_bound() const noexcept;

private:
    [[nodiscard]] int cached(std::uint64_t r) const noexcept
    {
        const unsigned code = (packed_[r >> 2] >> (2 * (r & 3))) & 3u;
        return code == 2 ? -1 : static_cast<int>(code);
    }

    std::uint64_t D_;
    std::vector<std::uint8_t> packed_;      // chi(r), r in [0, D)
    std::vector<std::int32_t> period_sums_; // S_D(r), r in [0, D)
};

// max_{x <= X} |S_D(x)| against sqrt(D) log D.
CheckReport polya_vinogradov_check(const QuadraticCharacter& chi, std::uint64_t X);

struct AbmFactorization {
    std::uint64_t a = 1; // primes with chi(p) = 1
    std::uint64_t b = 1; // primes with chi(p) = 0
    std::uint64_t m = 1; // primes with chi(p) = -1
    [[nodiscard]] std::uint64_t c() const noexcept { return a * b; }

    friend bool operator==(const AbmFactorization&, const AbmFactorization&) = default;
};

AbmFactorization classify_abm(const SieveTable& t, const QuadraticCharacter& chi, std::uint64_t n);

// True iff n = ab with a in A_1, b in A_0, i.e. no prime with chi(p) = -1.
bool in_class_c(const SieveTable& t, const QuadraticCharacter& chi, std::uint64_t n);

// sum_{d|n} chi(d), via the multiplicative formula over prime powers.
std::int64_t one_star_chi(const SieveTable& t, const QuadraticCharacter& chi, std::uint64_t n);
FunctionTable one_star_chi_table(const SieveTable& t, const QuadraticCharacter& chi);

// Both sides of the A_1/A_0/A_{-1} split of 1*lambda_odd, as integers:
//   1*lambda_odd(n) = sum_{c'|c} 2^{nu(a')} lambda_odd(c') 1*chi(n/c'),
// where c is the C-part of n and a' the A_1-part of c'. Requires D even.
struct SplitIdentitySides {
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    // Same sum with 2^{nu(c')} in place of 2^{nu(a')}.
    std::int64_t rhs_nu_of_c = 0;
};
SplitIdentitySides split_identity_sides(const SieveTable& t, const QuadraticCharacter& chi, std::uint64_t n);

// Exact check of the split identity at one n (pass iff lhs == rhs).
CheckReport check_split_identity(const SieveTable& t, const QuadraticCharacter& chi, std::uint64_t n);

// Check over 1..n_max; reports the number of mismatches for both readings
// of the 2^nu weight. The a'-reading is asserted, the c'-reading is
// informational.
std::vector<CheckReport> check_split_identity_range(const SieveTable& t, const QuadraticCharacter& chi,
                                                    std::uint64_t n_max);

struct LOneValue {
    double value = 0.0;
    double tail_bound = 0.0;
};

// sum_{n <= X} chi(n)/n with the tail bound sqrt(D) log D / X, from
// summation by parts against Polya-Vinogradov. Requires X >= D.
LOneValue l_one(const QuadraticCharacter& chi, std::uint64_t X);

// h(-D) by counting reduced forms (a, b, c) with b^2 - 4ac = -D.
std::uint64_t class_number(std::uint64_t D);
// 2 pi h / (w sqrt D), with w the number of roots of unity.
double l_one_class_number(std::uint64_t D);
// |l_one(chi, X) - 2 pi h / (w sqrt D)| within the tail bound.
CheckReport l_one_class_number_check(const QuadraticCharacter& chi, std::uint64_t X);

} // namespace deuring
