#pragma once

// Independent reference implementations. Nothing here calls into the
// library: values come from trial division, divisor enumeration, residue
// squaring and naive long-double summation, or are frozen constants
// computed once with 30-digit arithmetic.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <set>
#include <vector>

namespace oracle {

// Frozen high-precision values.
inline constexpr double kZeta2 = 1.64493406684822644;
inline constexpr double kZeta3 = 1.20205690315959429;
inline constexpr double kZetaHalf = -1.46035450880958681;
inline const std::complex<double> kZeta_09_141{0.271011957466440051, 0.0147527701286088822};
inline const std::complex<double> kZeta_18_6{0.918631283729914668, 0.17522789115984162};
inline const std::complex<double> kZeta_075_100{2.00299199525539583, -0.0543920711900925869};
inline const std::complex<double> kZeta_175_282{1.41913821036612071, -0.267458621241894716};
inline const std::complex<double> kZeta_06_5{0.71427042312197791, 0.219910825963893137};
// sum_{j >= 0} (2.5 + j)^{-(1.8 + 6i)}
inline const std::complex<double> kHurwitz_18_6_at_25{0.11528230393247131, 0.0587907421078712216};

// L(1, chi_{-D}) = 2 pi h / (w sqrt D) with tabulated class numbers.
inline const std::map<std::uint64_t, double> kLOne{
    {4, std::numbers::pi / 4.0},
    {8, std::numbers::pi / (2.0 * std::numbers::sqrt2)},
    {20, std::numbers::pi / std::sqrt(5.0)},
    {24, 2.0 * std::numbers::pi / std::sqrt(24.0)},
    {40, 2.0 * std::numbers::pi / std::sqrt(40.0)},
};

inline std::uint64_t spf(std::uint64_t n)
{
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return p;
    return n;
}

inline bool is_prime(std::uint64_t n)
{
    return n >= 2 && spf(n) == n;
}

inline std::map<std::uint64_t, int> factor(std::uint64_t n)
{
    std::map<std::uint64_t, int> f;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    if (n > 1)
        ++f[n];
    return f;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> lo, hi;
    for (std::uint64_t d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            lo.push_back(d);
            if (d * d != n)
                hi.push_back(n / d);
        }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

inline int liouville(std::uint64_t n)
{
    int omega = 0;
    for (const auto& [p, e] : factor(n))
        omega += e;
    return omega % 2 ? -1 : 1;
}

inline int big_omega_distinct(std::uint64_t n)
{
    return static_cast<int>(factor(n).size());
}

inline std::int64_t tau(std::uint64_t n)
{
    return static_cast<std::int64_t>(divisors(n).size());
}

inline std::int64_t tau_odd(std::uint64_t n)
{
    std::int64_t c = 0;
    for (const auto d : divisors(n))
        c += d % 2;
    return c;
}

inline bool is_square(std::uint64_t n)
{
    for (std::uint64_t m = 0; m * m <= n; ++m)
        if (m * m == n)
            return true;
    return false;
}

// Quadratic residues mod an odd prime p, by squaring every residue.
inline int legendre(std::int64_t a, std::uint64_t p)
{
    const auto pp = static_cast<std::int64_t>(p);
    const std::int64_t r = ((a % pp) + pp) % pp;
    if (r == 0)
        return 0;
    std::set<std::int64_t> squares;
    for (std::int64_t x = 1; x < pp; ++x)
        squares.insert(x * x % pp);
    return squares.count(r) ? 1 : -1;
}

// Euler's criterion a^{(p-1)/2} mod p for an odd prime p.
inline int legendre_euler(std::int64_t a, std::uint64_t p)
{
    const auto pp = static_cast<std::int64_t>(p);
    std::uint64_t base = static_cast<std::uint64_t>(((a % pp) + pp) % pp);
    if (base == 0)
        return 0;
    std::uint64_t e = (p - 1) / 2, r = 1;
    while (e) {
        if (e & 1)
            r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

// (-D | n) for a fundamental discriminant -D, multiplicatively from
// the values at primes.
inline int chi(std::uint64_t D, std::uint64_t n)
{
    const std::int64_t d = -static_cast<std::int64_t>(D);
    int v = 1;
    for (const auto& [p, e] : factor(n)) {
        int at_p;
        if (p == 2) {
            const std::int64_t r = ((d % 8) + 8) % 8;
            at_p = D % 2 == 0 ? 0 : (r == 1 ? 1 : -1);
        } else {
            at_p = legendre(d, p);
        }
        for (int i = 0; i < e; ++i)
            v *= at_p;
    }
    return v;
}

// sum_{first <= n <= last} c(n) n^{-s} in long double, no compensation.
template <class F>
std::complex<long double> naive_sum(F c, std::complex<long double> s, std::uint64_t first, std::uint64_t last)
{
    std::complex<long double> acc = 0;
    for (std::uint64_t n = first; n <= last; ++n) {
        const long double cn = c(n);
        if (cn != 0)
            acc += cn * std::exp(-s * std::log(static_cast<long double>(n)));
    }
    return acc;
}

} // namespace oracle
