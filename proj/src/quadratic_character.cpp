#include "deuring/quadratic_character.hpp"

#include "deuring/errors.hpp"
#include "deuring/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <string>

namespace deuring {

namespace {

constexpr int kTwoTable[8] = {0, 1, 0, -1, 0, -1, 0, 1}; // (a|2) by a mod 8

} // namespace

int kronecker(std::int64_t a, std::int64_t n) noexcept
{
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0)
        return 0;
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    int k = (v & 1) ? kTwoTable[a & 7] : 1;
    if (n < 0) {
        n = -n;
        if (a < 0)
            k = -k;
    }
    std::int64_t r = a % n;
    if (r < 0)
        r += n;
    auto A = static_cast<std::uint64_t>(r);
    auto N = static_cast<std::uint64_t>(n);
    while (A != 0) {
        v = 0;
        while (A % 2 == 0) {
            A /= 2;
            ++v;
        }
        if (v & 1)
            k *= kTwoTable[N & 7];
        if (A & N & 2)
            k = -k;
        const std::uint64_t rem = N % A;
        N = A;
        A = rem;
    }
    return N == 1 ? k : 0;
}

bool is_squarefree_u64(std::uint64_t n) noexcept
{
    if (n == 0)
        return false;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return false;
        }
    }
    return true;
}

bool is_fundamental(std::int64_t minus_d)
{
    if (minus_d >= 0)
        throw ArgumentError("is_fundamental: expected a negative discriminant, got " + std::to_string(minus_d));
    const auto mod4 = [](std::int64_t x) { return ((x % 4) + 4) % 4; };
    const auto abs_u = [](std::int64_t x) { return static_cast<std::uint64_t>(x < 0 ? -x : x); };
    if (mod4(minus_d) == 1)
        return is_squarefree_u64(abs_u(minus_d));
    if (mod4(minus_d) == 0) {
        const std::int64_t k = minus_d / 4;
        return (mod4(k) == 2 || mod4(k) == 3) && is_squarefree_u64(abs_u(k));
    }
    return false;
}

QuadraticCharacter::QuadraticCharacter(std::uint64_t D) : D_(D)
{
    if (D < 3 || D > static_cast<std::uint64_t>(INT64_MAX) || !is_fundamental(-static_cast<std::int64_t>(D)))
        throw ArgumentError("-" + std::to_string(D) + " is not a fundamental discriminant");
    if (D > kPeriodCacheMax)
        return;
    packed_.assign((D + 3) / 4, 0);
    period_sums_.assign(D, 0);
    std::int64_t running = 0;
    const auto minus_d = -static_cast<std::int64_t>(D);
    for (std::uint64_t r = 0; r < D; ++r) {
        const int v = kronecker(minus_d, static_cast<std::int64_t>(r));
        const unsigned code = v == -1 ? 2u : static_cast<unsigned>(v);
        packed_[r >> 2] = static_cast<std::uint8_t>(packed_[r >> 2] | (code << (2 * (r & 3))));
        running += v;
        period_sums_[r] = static_cast<std::int32_t>(running);
    }
    // running now holds S_D(D - 1); chi(D) = 0, so this is the period sum.
    if (running != 0)
        throw InvariantViolation("character mod " + std::to_string(D) + " has nonzero period sum");
}

int QuadraticCharacter::operator()(std::uint64_t n) const noexcept
{
    if (!packed_.empty())
        return cached(n % D_);
    return kronecker(-static_cast<std::int64_t>(D_), static_cast<std::int64_t>(n));
}

std::int64_t QuadraticCharacter::char_sum(std::uint64_t x) const noexcept
{
    if (!period_sums_.empty())
        return period_sums_[x % D_];
    std::int64_t s = 0;
    for (std::uint64_t n = 1; n <= x; ++n)
        s += (*this)(n);
    return s;
}

double QuadraticCharacter::polya_vinogradov_bound() const noexcept
{
    const double d = static_cast<double>(D_);
    return std::sqrt(d) * std::log(d);
}

CheckReport polya_vinogradov_check(const QuadraticCharacter& chi, std::uint64_t X)
{
    if (X < 1)
        throw ArgumentError("polya_vinogradov_check: X must be >= 1");
    // S_D is D-periodic, so one period covers every x.
    const std::uint64_t scan = std::min(X, chi.modulus());
    std::int64_t worst = 0;
    std::int64_t s = 0;
    for (std::uint64_t x = 1; x <= scan; ++x) {
        s += chi(x);
        worst = std::max(worst, s < 0 ? -s : s);
    }
    return CheckReport::at_most("pv.max_char_sum", "lemma2", static_cast<double>(worst),
                                chi.polya_vinogradov_bound())
        .with("D", static_cast<double>(chi.modulus()))
        .with("X", static_cast<double>(X));
}

AbmFactorization classify_abm(const SieveTable& t, const QuadraticCharacter& chi, std::uint64_t n)
{
    AbmFactorization f;
    for (const auto& [p, e] : t.factor(n)) {
        std::uint64_t pe = 1;
        for (int i = 0; i < e; ++i)
            pe *= p;
        switch (chi(p)) {
        case 1:
            f.a *= pe;
            break;
        case 0:
            f.b *= pe;
            break;
        default:
            f.m *= pe;
            break;
        }
    }
    return f;
}

bool in_class_c(const SieveTable& t, const QuadraticCharacter& chi, std::uint64_t n)
{
    return classify_abm(t, chi, n).m == 1;
}

std::int64_t one_star_chi(const SieveTable& t, const QuadraticCharacter& chi, std::uint64_t n)
{
    std::int64_t r = 1;
    for (const auto& [p, e] : t.factor(n)) {
        switch (chi(p)) {
        case 1:
            r *= e + 1;
            break;
        case 0:
            break;
        default:
            if (e % 2 == 1)
                return 0;
            break;
        }
    }
    return r;
}

FunctionTable one_star_chi_table(const SieveTable& t, const QuadraticCharacter& chi)
{
    std::vector<std::int64_t> v(t.limit() + 1, 0);
    kernels::tabulate(std::span<std::int64_t>(v), [&](std::uint64_t n) { return one_star_chi(t, chi, n); });
    return FunctionTable(std::move(v));
}

SplitIdentitySides split_identity_sides(const SieveTable& t, const QuadraticCharacter& chi, std::uint64_t n)
{
    if (!chi.is_even())
        throw ArgumentError("split identity requires D = 0 mod 4, got D = " + std::to_string(chi.modulus()));
    SplitIdentitySides sides;
    sides.lhs = one_star_lambda_odd(t, n);
    const AbmFactorization f = classify_abm(t, chi, n);
    for (const std::uint64_t cp : t.divisors(f.c())) {
        const int lam = liouville_odd(t, cp);
        if (lam == 0)
            continue;
        const std::uint64_t ap = std::gcd(cp, f.a);
        const std::int64_t weight = one_star_chi(t, chi, n / cp) * lam;
        sides.rhs += two_pow_nu(t, ap) * weight;
        sides.rhs_nu_of_c += two_pow_nu(t, cp) * weight;
    }
    return sides;
}

CheckReport check_split_identity(const SieveTable& t, const QuadraticCharacter& chi, std::uint64_t n)
{
    const auto sides = split_identity_sides(t, chi, n);
    return CheckReport::close("identities.split_identity", "identities", static_cast<double>(sides.lhs),
                              static_cast<double>(sides.rhs), 0.0)
        .with("D", static_cast<double>(chi.modulus()))
        .with("n", static_cast<double>(n));
}

std::vector<CheckReport> check_split_identity_range(const SieveTable& t, const QuadraticCharacter& chi,
                                                    std::uint64_t n_max)
{
    t.check_index(n_max);
    std::uint64_t bad = 0;
    std::uint64_t bad_alt = 0;
    std::uint64_t first_bad = 0;
    std::uint64_t first_bad_alt = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const auto s = split_identity_sides(t, chi, n);
        if (s.lhs != s.rhs && bad++ == 0)
            first_bad = n;
        if (s.lhs != s.rhs_nu_of_c && bad_alt++ == 0)
            first_bad_alt = n;
    }
    const double D = static_cast<double>(chi.modulus());
    std::vector<CheckReport> out;
    out.push_back(CheckReport::at_most("identities.split_identity", "identities", static_cast<double>(bad), 0.0)
                      .with("D", D)
                      .with("n_max", static_cast<double>(n_max))
                      .with("first_mismatch", static_cast<double>(first_bad)));
    out.push_back(CheckReport::informational("identities.split_identity_nu_of_c", "identities",
                                             static_cast<double>(bad_alt), 0.0)
                      .with("D", D)
                      .with("n_max", static_cast<double>(n_max))
                      .with("first_mismatch", static_cast<double>(first_bad_alt)));
    return out;
}

LOneValue l_one(const QuadraticCharacter& chi, std::uint64_t X)
{
    if (X < chi.modulus())
        throw ArgumentError("l_one: X = " + std::to_string(X) + " must be >= D = " + std::to_string(chi.modulus()));
    LOneValue r;
    r.value = kernels::sum_real([&](std::uint64_t n) { return chi(n) / static_cast<double>(n); }, 1, X);
    r.tail_bound = chi.polya_vinogradov_bound() / static_cast<double>(X);
    return r;
}

std::uint64_t class_number(std::uint64_t D)
{
    if (D < 3 || (D % 4 != 0 && D % 4 != 3))
        throw ArgumentError("class_number: -" + std::to_string(D) + " is not a discriminant");
    if (D > 100'000'000)
        throw BoundsError("class_number: form enumeration is limited to D <= 1e8");
    const auto d = static_cast<std::int64_t>(D);
    std::uint64_t h = 0;
    for (std::int64_t a = 1; 3 * a * a <= d; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            const std::int64_t num = b * b + d;
            if (num % (4 * a) != 0)
                continue;
            const std::int64_t c = num / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            ++h;
        }
    }
    return h;
}

double l_one_class_number(std::uint64_t D)
{
    const double w = D == 4 ? 4.0 : (D == 3 ? 6.0 : 2.0);
    return 2.0 * std::numbers::pi * static_cast<double>(class_number(D)) / (w * std::sqrt(static_cast<double>(D)));
}

CheckReport l_one_class_number_check(const QuadraticCharacter& chi, std::uint64_t X)
{
    const LOneValue L = l_one(chi, X);
    const double reference = l_one_class_number(chi.modulus());
    return CheckReport::at_most("bound.l_one_class_number", "bound", std::abs(L.value - reference), L.tail_bound)
        .with("D", static_cast<double>(chi.modulus()))
        .with("X", static_cast<double>(X))
        .with("class_number", static_cast<double>(class_number(chi.modulus())))
        .with("direct_sum", L.value)
        .with("reference", reference);
}

} // namespace deuring
