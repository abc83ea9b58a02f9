#pragma once

// Smallest-prime-factor sieve and the integer arithmetic functions derived
// from it: Liouville and its odd / q-free variants, nu, tau, tau_odd,
// 1*lambda_odd, Dirichlet convolution and Ramanujan sums at prime q.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace deuring {

inline constexpr std::uint64_t kDefaultSieveCap = 100'000'000;

struct PrimePower {
    std::uint64_t prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

class SieveTable {
public:
    [[nodiscard]] std::uint64_t limit() const noexcept { return limit_; }

    // Smallest prime factor of n, 2 <= n <= limit.
    [[nodiscard]] std::uint32_t spf(std::uint64_t n) const;
    [[nodiscard]] bool is_prime(std::uint64_t n) const;

    // Prime-power factorization in increasing prime order; empty for n = 1.
    [[nodiscard]] std::vector<PrimePower> factor(std::uint64_t n) const;
    // All divisors of n in increasing order.
    [[nodiscard]] std::vector<std::uint64_t> divisors(std::uint64_t n) const;

    void check_index(std::uint64_t n) const;

    // Binary cache format: "SPFT", u32 version, u64 limit, then u32 spf
    // entries for n = 2..limit. All integers little-endian.
    void dump(std::ostream& out) const;
    static SieveTable load(std::istream& in, std::uint64_t cap = kDefaultSieveCap);
    void save(const std::filesystem::path& path) const;
    static SieveTable load(const std::filesystem::path& path, std::uint64_t cap = kDefaultSieveCap);

    friend SieveTable build_sieve(std::uint64_t limit, std::uint64_t cap);

private:
    SieveTable(std::uint64_t limit, std::vector<std::uint32_t> spf)
        : limit_(limit), spf_(std::move(spf)) {}

    std::uint64_t limit_ = 0;
    std::vector<std::uint32_t> spf_; // indices 0..limit, entries 0 and 1 unused
};

// Linear sieve, O(N). Throws BoundsError unless 2 <= limit <= cap.
SieveTable build_sieve(std::uint64_t limit, std::uint64_t cap = kDefaultSieveCap);

// Loads `spf_<limit>.bin` from cache_dir if present and valid, otherwise
// builds the table and writes it there. An empty cache_dir just builds.
SieveTable cached_sieve(std::uint64_t limit, const std::filesystem::path& cache_dir,
                        std::uint64_t cap = kDefaultSieveCap);

// Values f(1..N) of an integer arithmetic function.
class FunctionTable {
public:
    FunctionTable() = default;
    // values[0] is ignored; values.size() - 1 is the limit.
    explicit FunctionTable(std::vector<std::int64_t> values);

    [[nodiscard]] std::uint64_t limit() const noexcept { return values_.empty() ? 0 : values_.size() - 1; }
    [[nodiscard]] std::int64_t operator[](std::uint64_t n) const noexcept { return values_[n]; }
    [[nodiscard]] std::int64_t at(std::uint64_t n) const;
    // Indexed by n; element 0 is a placeholder.
    [[nodiscard]] std::span<const std::int64_t> values() const noexcept { return values_; }

private:
    std::vector<std::int64_t> values_;
};

// Trial-division primality, for parameters such as q that may exceed a sieve.
bool is_prime_u64(std::uint64_t n) noexcept;

int liouville(const SieveTable& t, std::uint64_t n);
int liouville_odd(const SieveTable& t, std::uint64_t n);
int liouville_q(const SieveTable& t, std::uint64_t q, std::uint64_t n);
int nu(const SieveTable& t, std::uint64_t n);
std::int64_t two_pow_nu(const SieveTable& t, std::uint64_t n);
std::int64_t tau(const SieveTable& t, std::uint64_t n);
std::int64_t tau_odd(const SieveTable& t, std::uint64_t n);
int mobius(const SieveTable& t, std::uint64_t n);

// sum_{d|n} lambda_odd(d), computed both as a divisor sum and by the
// square / twice-square predicate. Disagreement throws InvariantViolation.
int one_star_lambda_odd(const SieveTable& t, std::uint64_t n);
// sum_{d|n} lambda_q(d) = 1 iff n = m^2 or n = q m^2 (same dual check).
int one_star_lambda_q(const SieveTable& t, std::uint64_t q, std::uint64_t n);

bool is_square(std::uint64_t n) noexcept;

// c_q(n) for prime q: -1 if q does not divide n, q - 1 otherwise.
std::int64_t ramanujan_c(std::uint64_t q, std::uint64_t n);

FunctionTable ones_table(std::uint64_t limit);
FunctionTable liouville_table(const SieveTable& t);
FunctionTable liouville_odd_table(const SieveTable& t);
FunctionTable liouville_q_table(const SieveTable& t, std::uint64_t q);
FunctionTable nu_table(const SieveTable& t);
FunctionTable two_pow_nu_table(const SieveTable& t);
FunctionTable tau_table(const SieveTable& t);
FunctionTable tau_odd_table(const SieveTable& t);
FunctionTable mobius_table(const SieveTable& t);
FunctionTable one_star_lambda_odd_table(const SieveTable& t);

// Pointwise product.
FunctionTable multiply(const FunctionTable& f, const FunctionTable& g);

// (f*g)(n) = sum_{d|n} f(d) g(n/d), with checked 64-bit arithmetic
// (OverflowError on overflow). ArgumentError when the limits differ.
FunctionTable dirichlet_convolve(const FunctionTable& f, const FunctionTable& g);

} // namespace deuring
