#include "deuring/sieve.hpp"

#include "deuring/errors.hpp"
#include "deuring/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace deuring {

namespace {

constexpr std::array<char, 4> kMagic{'S', 'P', 'F', 'T'};
constexpr std::uint32_t kFormatVersion = 1;

void put_le(std::ostream& out, std::uint64_t v, int bytes)
{
    for (int i = 0; i < bytes; ++i)
        out.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_le(std::istream& in, int bytes)
{
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) {
        const int c = in.get();
        if (c == std::char_traits<char>::eof())
            throw ArgumentError("sieve cache: truncated input");
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
    }
    return v;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("dirichlet_convolve: 64-bit overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("dirichlet_convolve: 64-bit overflow");
    return r;
}

void require_prime(std::uint64_t q, const char* what)
{
    if (!is_prime_u64(q))
        throw ArgumentError(std::string(what) + ": q = " + std::to_string(q) + " is not prime");
}

template <class F>
FunctionTable tabulate_table(std::uint64_t limit, F&& f)
{
    std::vector<std::int64_t> v(limit + 1, 0);
    kernels::tabulate(std::span<std::int64_t>(v), f);
    return FunctionTable(std::move(v));
}

int omega_parity_sign(const SieveTable& t, std::uint64_t n)
{
    int sign = 1;
    while (n > 1) {
        n /= t.spf(n);
        sign = -sign;
    }
    return sign;
}

} // namespace

SieveTable build_sieve(std::uint64_t limit, std::uint64_t cap)
{
    if (limit < 2 || limit > cap)
        throw BoundsError("build_sieve: limit " + std::to_string(limit) + " outside [2, " +
                          std::to_string(cap) + "]");
    std::vector<std::uint32_t> spf(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    primes.reserve(limit < 1000 ? 200 : static_cast<std::size_t>(1.3 * limit / std::log(double(limit))));
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            spf[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (const std::uint32_t p : primes) {
            const std::uint64_t m = i * p;
            if (p > spf[i] || m > limit)
                break;
            spf[m] = p;
        }
    }
    return SieveTable(limit, std::move(spf));
}

void SieveTable::check_index(std::uint64_t n) const
{
    if (n < 1 || n > limit_)
        throw BoundsError("sieve: n = " + std::to_string(n) + " outside [1, " + std::to_string(limit_) + "]");
}

std::uint32_t SieveTable::spf(std::uint64_t n) const
{
    if (n < 2 || n > limit_)
        throw BoundsError("spf: n = " + std::to_string(n) + " outside [2, " + std::to_string(limit_) + "]");
    return spf_[n];
}

bool SieveTable::is_prime(std::uint64_t n) const
{
    check_index(n);
    return n >= 2 && spf_[n] == n;
}

std::vector<PrimePower> SieveTable::factor(std::uint64_t n) const
{
    check_index(n);
    std::vector<PrimePower> out;
    while (n > 1) {
        const std::uint64_t p = spf_[n];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    return out;
}

std::vector<std::uint64_t> SieveTable::divisors(std::uint64_t n) const
{
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, e] : factor(n)) {
        const std::size_t count = divs.size();
        std::uint64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < count; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

void SieveTable::dump(std::ostream& out) const
{
    out.write(kMagic.data(), kMagic.size());
    put_le(out, kFormatVersion, 4);
    put_le(out, limit_, 8);
    for (std::uint64_t n = 2; n <= limit_; ++n)
        put_le(out, spf_[n], 4);
    if (!out)
        throw std::ios_base::failure("sieve cache: write failed");
}

SieveTable SieveTable::load(std::istream& in, std::uint64_t cap)
{
    std::array<char, 4> magic{};
    in.read(magic.data(), magic.size());
    if (!in || magic != kMagic)
        throw ArgumentError("sieve cache: bad magic");
    if (get_le(in, 4) != kFormatVersion)
        throw ArgumentError("sieve cache: unsupported version");
    const std::uint64_t limit = get_le(in, 8);
    if (limit < 2 || limit > cap)
        throw BoundsError("sieve cache: limit " + std::to_string(limit) + " out of range");
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (std::uint64_t n = 2; n <= limit; ++n) {
        const auto p = static_cast<std::uint32_t>(get_le(in, 4));
        if (p < 2 || n % p != 0)
            throw ArgumentError("sieve cache: corrupt entry at n = " + std::to_string(n));
        spf[n] = p;
    }
    return SieveTable(limit, std::move(spf));
}

void SieveTable::save(const std::filesystem::path& path) const
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::ios_base::failure("sieve cache: cannot open " + path.string());
    dump(out);
}

SieveTable SieveTable::load(const std::filesystem::path& path, std::uint64_t cap)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::ios_base::failure("sieve cache: cannot open " + path.string());
    return load(in, cap);
}

SieveTable cached_sieve(std::uint64_t limit, const std::filesystem::path& cache_dir, std::uint64_t cap)
{
    if (cache_dir.empty())
        return build_sieve(limit, cap);
    const auto file = cache_dir / ("spf_" + std::to_string(limit) + ".bin");
    std::error_code ec;
    if (std::filesystem::exists(file, ec)) {
        try {
            auto t = SieveTable::load(file, cap);
            if (t.limit() == limit)
                return t;
        } catch (const std::exception&) {
            // rebuild below
        }
    }
    auto t = build_sieve(limit, cap);
    std::filesystem::create_directories(cache_dir, ec);
    try {
        t.save(file);
    } catch (const std::exception&) {
        // an unwritable cache is not fatal
    }
    return t;
}

FunctionTable::FunctionTable(std::vector<std::int64_t> values) : values_(std::move(values))
{
    if (values_.empty())
        values_.push_back(0);
}

std::int64_t FunctionTable::at(std::uint64_t n) const
{
    if (n < 1 || n > limit())
        throw BoundsError("FunctionTable: n = " + std::to_string(n) + " outside [1, " +
                          std::to_string(limit()) + "]");
    return values_[n];
}

bool is_prime_u64(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

bool is_square(std::uint64_t n) noexcept
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r * r == n;
}

int liouville(const SieveTable& t, std::uint64_t n)
{
    t.check_index(n);
    return omega_parity_sign(t, n);
}

int liouville_odd(const SieveTable& t, std::uint64_t n)
{
    t.check_index(n);
    return n % 2 == 0 ? 0 : omega_parity_sign(t, n);
}

int liouville_q(const SieveTable& t, std::uint64_t q, std::uint64_t n)
{
    require_prime(q, "liouville_q");
    t.check_index(n);
    return n % q == 0 ? 0 : omega_parity_sign(t, n);
}

int nu(const SieveTable& t, std::uint64_t n)
{
    t.check_index(n);
    int count = 0;
    std::uint64_t last = 0;
    while (n > 1) {
        const std::uint64_t p = t.spf(n);
        if (p != last)
            ++count;
        last = p;
        n /= p;
    }
    return count;
}

std::int64_t two_pow_nu(const SieveTable& t, std::uint64_t n)
{
    return std::int64_t{1} << nu(t, n);
}

std::int64_t tau(const SieveTable& t, std::uint64_t n)
{
    std::int64_t r = 1;
    for (const auto& pe : t.factor(n))
        r *= pe.exponent + 1;
    return r;
}

std::int64_t tau_odd(const SieveTable& t, std::uint64_t n)
{
    std::int64_t r = 1;
    for (const auto& pe : t.factor(n))
        if (pe.prime != 2)
            r *= pe.exponent + 1;
    return r;
}

int mobius(const SieveTable& t, std::uint64_t n)
{
    int r = 1;
    for (const auto& pe : t.factor(n)) {
        if (pe.exponent > 1)
            return 0;
        r = -r;
    }
    return r;
}

int one_star_lambda_odd(const SieveTable& t, std::uint64_t n)
{
    t.check_index(n);
    int direct = 0;
    for (const std::uint64_t d : t.divisors(n))
        direct += liouville_odd(t, d);
    const int predicate = (is_square(n) || (n % 2 == 0 && is_square(n / 2))) ? 1 : 0;
    if (direct != predicate)
        throw InvariantViolation("1*lambda_odd(" + std::to_string(n) + "): divisor sum " +
                                 std::to_string(direct) + " != predicate " + std::to_string(predicate));
    return direct;
}

int one_star_lambda_q(const SieveTable& t, std::uint64_t q, std::uint64_t n)
{
    require_prime(q, "one_star_lambda_q");
    t.check_index(n);
    int direct = 0;
    for (const std::uint64_t d : t.divisors(n))
        direct += liouville_q(t, q, d);
    const int predicate = (is_square(n) || (n % q == 0 && is_square(n / q))) ? 1 : 0;
    if (direct != predicate)
        throw InvariantViolation("1*lambda_q(" + std::to_string(n) + "): divisor sum " +
                                 std::to_string(direct) + " != predicate " + std::to_string(predicate));
    return direct;
}

std::int64_t ramanujan_c(std::uint64_t q, std::uint64_t n)
{
    require_prime(q, "ramanujan_c");
    if (n < 1)
        throw ArgumentError("ramanujan_c: n must be positive");
    return n % q == 0 ? static_cast<std::int64_t>(q) - 1 : -1;
}

FunctionTable ones_table(std::uint64_t limit)
{
    std::vector<std::int64_t> v(limit + 1, 1);
    v[0] = 0;
    return FunctionTable(std::move(v));
}

FunctionTable liouville_table(const SieveTable& t)
{
    return tabulate_table(t.limit(), [&](std::uint64_t n) { return std::int64_t{liouville(t, n)}; });
}

FunctionTable liouville_odd_table(const SieveTable& t)
{
    return tabulate_table(t.limit(), [&](std::uint64_t n) { return std::int64_t{liouville_odd(t, n)}; });
}

FunctionTable liouville_q_table(const SieveTable& t, std::uint64_t q)
{
    require_prime(q, "liouville_q_table");
    return tabulate_table(t.limit(), [&](std::uint64_t n) { return std::int64_t{liouville_q(t, q, n)}; });
}

FunctionTable nu_table(const SieveTable& t)
{
    return tabulate_table(t.limit(), [&](std::uint64_t n) { return std::int64_t{nu(t, n)}; });
}

FunctionTable two_pow_nu_table(const SieveTable& t)
{
    return tabulate_table(t.limit(), [&](std::uint64_t n) { return two_pow_nu(t, n); });
}

FunctionTable tau_table(const SieveTable& t)
{
    return tabulate_table(t.limit(), [&](std::uint64_t n) { return tau(t, n); });
}

FunctionTable tau_odd_table(const SieveTable& t)
{
    return tabulate_table(t.limit(), [&](std::uint64_t n) { return tau_odd(t, n); });
}

FunctionTable mobius_table(const SieveTable& t)
{
    return tabulate_table(t.limit(), [&](std::uint64_t n) { return std::int64_t{mobius(t, n)}; });
}

FunctionTable one_star_lambda_odd_table(const SieveTable& t)
{
    return tabulate_table(t.limit(), [&](std::uint64_t n) { return std::int64_t{one_star_lambda_odd(t, n)}; });
}

FunctionTable multiply(const FunctionTable& f, const FunctionTable& g)
{
    if (f.limit() != g.limit())
        throw ArgumentError("multiply: limits differ");
    std::vector<std::int64_t> v(f.limit() + 1, 0);
    for (std::uint64_t n = 1; n <= f.limit(); ++n)
        v[n] = checked_mul(f[n], g[n]);
    return FunctionTable(std::move(v));
}

FunctionTable dirichlet_convolve(const FunctionTable& f, const FunctionTable& g)
{
    if (f.limit() != g.limit())
        throw ArgumentError("dirichlet_convolve: limits differ (" + std::to_string(f.limit()) + " vs " +
                            std::to_string(g.limit()) + ")");
    const std::uint64_t n_max = f.limit();
    std::vector<std::int64_t> v(n_max + 1, 0);
    for (std::uint64_t d = 1; d <= n_max; ++d) {
        const std::int64_t fd = f[d];
        if (fd == 0)
            continue;
        for (std::uint64_t m = 1, n = d; n <= n_max; ++m, n += d)
            v[n] = checked_add(v[n], checked_mul(fd, g[m]));
    }
    return FunctionTable(std::move(v));
}

} // namespace deuring
