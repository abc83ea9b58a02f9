#include "deuring/series.hpp"

#include "deuring/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace deuring {

namespace {

// B_{2k} / (2k)!, k = 1..30.
constexpr std::array<double, 30> kBernoulliOverFactorial = {
    0.083333333333333333,    -0.0013888888888888889,  3.3068783068783069e-5,   -8.2671957671957672e-7,
    2.0876756987868099e-8,   -5.2841901386874932e-10, 1.3382536530684679e-11,  -3.3896802963225829e-13,
    8.5860620562778446e-15,  -2.1748686985580619e-16, 5.5090028283602295e-18,  -1.3954464685812523e-19,
    3.5347070396294675e-21,  -8.9535174270375469e-23, 2.2679524523376831e-24,  -5.7447906688722024e-26,
    1.4551724756148649e-27,  -3.6859949406653102e-29, 9.3367342570950447e-31,  -2.3650224157006299e-32,
    5.9906717624821343e-34,  -1.5174548844682903e-35, 3.8437581254541882e-37,  -9.736353072646691e-39,
    2.466247044200681e-40,   -6.2470767418207437e-42, 1.5824030244644914e-43,  -4.008273685948936e-45,
    1.0153075855569556e-46,  -2.5718041582418717e-48,
};

std::complex<double> real_power(double x, std::complex<double> s)
{
    // x^{-s} for real x > 0
    return std::exp(-s * std::log(x));
}

void require_finite(ComplexS s, const char* what)
{
    if (!std::isfinite(s.sigma) || !std::isfinite(s.t))
        throw DomainError(std::string(what) + ": non-finite s");
}

} // namespace

std::complex<double> partial_sum(std::span<const double> coeffs, ComplexS s, std::uint64_t X)
{
    require_finite(s, "partial_sum");
    if (X < 1)
        throw ArgumentError("partial_sum: X must be >= 1");
    if (coeffs.size() <= X)
        throw ArgumentError("partial_sum: coefficient source has " + std::to_string(coeffs.size() ? coeffs.size() - 1 : 0) +
                            " terms, need " + std::to_string(X));
    return partial_sum_fn([&](std::uint64_t n) { return coeffs[n]; }, s, 1, X);
}

std::complex<double> partial_sum(const FunctionTable& f, ComplexS s, std::uint64_t X)
{
    if (f.limit() < X)
        throw ArgumentError("partial_sum: coefficient table limit " + std::to_string(f.limit()) + " < X = " +
                            std::to_string(X));
    return partial_sum(std::span<const double>(to_coefficients(f)), s, X);
}

std::vector<double> to_coefficients(const FunctionTable& f)
{
    std::vector<double> c(f.limit() + 1, 0.0);
    for (std::uint64_t n = 1; n <= f.limit(); ++n)
        c[n] = static_cast<double>(f[n]);
    return c;
}

std::complex<double> hurwitz_sum(std::complex<double> s, double a)
{
    if (!(a > 0.0) || !std::isfinite(a))
        throw DomainError("hurwitz_sum: offset must be positive");
    if (s == std::complex<double>(1.0, 0.0))
        throw DomainError("hurwitz_sum: pole at s = 1");
    // Shift the Euler-Maclaurin point far enough that successive corrections
    // shrink by about (|s| + 2k)^2 / (2 pi b)^2.
    const double shift = std::abs(s) + 64.0;
    const auto direct = static_cast<std::uint64_t>(std::max(0.0, std::ceil(shift - a)));
    CompensatedComplexSum acc;
    for (std::uint64_t j = 0; j < direct; ++j)
        acc.add(real_power(a + static_cast<double>(j), s));
    const double b = a + static_cast<double>(direct);
    const std::complex<double> b_pow = real_power(b, s); // b^{-s}
    acc.add(b * b_pow / (s - 1.0));
    acc.add(0.5 * b_pow);
    // Term k: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * b^{-s-2k+1}.
    std::complex<double> rising = s;        // s(s+1)...(s+2k-2)
    std::complex<double> power = b_pow / b; // b^{-s-2k+1}
    const double scale = std::abs(acc.value()) + std::abs(b_pow);
    for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
        const std::complex<double> term = kBernoulliOverFactorial[k] * rising * power;
        acc.add(term);
        if (std::abs(term) <= 1e-18 * scale)
            return acc.value();
        const double m = 2.0 * static_cast<double>(k + 1);
        rising *= (s + (m - 1.0)) * (s + m);
        power /= b * b;
    }
    throw NumericError("hurwitz_sum: Euler-Maclaurin corrections did not converge");
}

std::complex<double> zeta(std::complex<double> s)
{
    return hurwitz_sum(s, 1.0);
}

std::complex<double> zeta_tail(std::complex<double> s, std::uint64_t N)
{
    if (N < 1)
        throw DomainError("zeta_tail: N must be >= 1");
    return hurwitz_sum(s, static_cast<double>(N));
}

std::complex<double> alternating_tail(std::complex<double> s, std::uint64_t M)
{
    const std::complex<double> two_pow = std::exp(-s * std::numbers::ln2); // 2^{-s}
    return 2.0 * two_pow * hurwitz_sum(s, static_cast<double>(M / 2 + 1)) - hurwitz_sum(s, static_cast<double>(M + 1));
}

std::complex<double> phi_closed(std::complex<double> s)
{
    if (s == std::complex<double>(1.0, 0.0))
        return -std::numbers::ln2;
    return (2.0 * std::exp(-s * std::numbers::ln2) - 1.0) * zeta(s);
}

SumWithTail phi_at(ComplexS s, std::uint64_t X)
{
    require_finite(s, "phi_at");
    if (!(s.sigma > 0.0))
        throw DomainError("phi_at: requires sigma > 0");
    if (X < 1)
        throw ArgumentError("phi_at: X must be >= 1");
    SumWithTail r;
    r.partial = partial_sum_fn([](std::uint64_t n) { return (n & 1) ? -1.0 : 1.0; }, s, 1, X);
    r.tail_bound = std::pow(static_cast<double>(X), -s.sigma) * (1.0 + s.modulus() / s.sigma);
    r.terms_used = X;
    return r;
}

double alternating_tail_bound(double X, ComplexS s)
{
    if (!(s.sigma > 0.0))
        throw DomainError("alternating_tail_bound: requires sigma > 0");
    const double M = std::floor(X) + 1.0;
    const double ss1 = std::abs(s.value() * (s.value() + 1.0));
    return 0.5 * std::pow(M, -s.sigma) +
           0.5 * ss1 * (std::pow(M, -s.sigma - 2.0) + std::pow(M, -s.sigma - 1.0) / (2.0 * (s.sigma + 1.0)));
}

double abel_tail_bound(double X, ComplexS s)
{
    if (!(s.sigma > 0.0))
        throw DomainError("abel_tail_bound: requires sigma > 0");
    if (std::isinf(X))
        return 0.0;
    return std::max(std::pow(X, -s.sigma), alternating_tail_bound(X, s));
}

double euler_tail_bound(double X, ComplexS s)
{
    if (!(s.sigma > 1.0))
        throw DomainError("euler_tail_bound: requires sigma > 1");
    if (std::isinf(X))
        return 0.0;
    const double main = std::pow(X, 1.0 - s.sigma) / std::abs(s.value() - 1.0);
    return main + std::pow(X, -s.sigma) * (1.0 + s.modulus() / s.sigma);
}

SbpPieces sbp_pieces(ComplexS s, double Y)
{
    require_finite(s, "sbp_pieces");
    if (!(s.sigma > 0.5))
        throw DomainError("sbp_identity_check: requires sigma > 1/2");
    if (!(Y >= 2.0) || !std::isfinite(Y))
        throw ArgumentError("sbp_identity_check: requires y/d >= 2");
    const std::complex<double> z = s.value();
    const auto floor_y = static_cast<std::uint64_t>(std::floor(Y));
    const auto S = [](std::uint64_t k) { return (k & 1) ? -1.0 : 0.0; };

    SbpPieces p;
    p.phi = phi_closed(z);
    p.partial = partial_sum_fn([](std::uint64_t n) { return (n & 1) ? -1.0 : 1.0; }, s, 1, floor_y);
    const std::complex<double> y_pow = real_power(Y, z);
    p.boundary = -S(floor_y) * y_pow;

    // s int_a^b x^{-s-1} dx = a^{-s} - b^{-s}. S(x) = -1 on [k, k+1) for odd k, 0 otherwise.
    CompensatedComplexSum integral;
    integral.add(S(floor_y) * (y_pow - real_power(static_cast<double>(floor_y + 1), z)));
    const std::uint64_t first_odd = (floor_y + 1) | 1u;
    const std::uint64_t last_direct = std::max<std::uint64_t>(first_odd + 4000, 4 * floor_y) | 1u;
    integral.add(kernels::sum_complex(
        [&](std::uint64_t j) {
            const std::uint64_t k = 2 * j + 1;
            return -(kernels::power_minus_s(k, s.sigma, s.t) - kernels::power_minus_s(k + 1, s.sigma, s.t));
        },
        first_odd / 2, last_direct / 2));
    // Remainder over odd k = 2j + 1, j >= J: 2^{-s} [H(s, J + 1/2) - H(s, J + 1)].
    const double J = static_cast<double>(last_direct / 2 + 1);
    const std::complex<double> two_pow = std::exp(-z * std::numbers::ln2);
    integral.add(-two_pow * (hurwitz_sum(z, J + 0.5) - hurwitz_sum(z, J + 1.0)));
    p.integral = integral.value();

    p.residual = std::abs(p.phi - (p.partial + p.boundary + p.integral));
    // With S(x) - S(Y) in the integrand the integral drops by S(Y) Y^{-s}.
    const std::complex<double> shifted = p.integral - S(floor_y) * y_pow;
    p.residual_shifted_integrand = std::abs(p.phi - (p.partial + p.boundary + shifted));
    return p;
}

CheckReport sbp_identity_check(ComplexS s, double y_over_d, double tolerance)
{
    const SbpPieces p = sbp_pieces(s, y_over_d);
    return CheckReport::at_most("series.sbp_identity", "lemma2", p.residual, tolerance)
        .with("sigma", s.sigma)
        .with("t", s.t)
        .with("y_over_d", y_over_d)
        .with("abs_phi", std::abs(p.phi))
        .with("abs_integral", std::abs(p.integral))
        .with("residual_shifted_integrand", p.residual_shifted_integrand);
}

namespace {

CheckReport hyperbola_report(std::string name, std::uint64_t X, double exact, double main, double max_error)
{
    const double err = exact - main;
    auto r = CheckReport::at_most(std::move(name), "sigma", std::abs(err), max_error);
    r.with("X", static_cast<double>(X)).with("exact", exact).with("main_term", main).with("error", err);
    if (X < 1000)
        r.as_info();
    return r;
}

} // namespace

CheckReport tau_sqrt_hyperbola(const SieveTable& t, std::uint64_t X, double max_error)
{
    t.check_index(X);
    const double exact = kernels::sum_real(
        [&](std::uint64_t n) { return static_cast<double>(tau(t, n)) / std::sqrt(static_cast<double>(n)); }, 1, X);
    const double x = static_cast<double>(X);
    const double main = std::sqrt(x) * (2.0 * std::log(x) + 4.0 * kEulerGamma - 4.0);
    return hyperbola_report("series.tau_sqrt_hyperbola", X, exact, main, max_error);
}

CheckReport tau_over_n_hyperbola(const SieveTable& t, std::uint64_t X, double max_error)
{
    t.check_index(X);
    const double exact = kernels::sum_real(
        [&](std::uint64_t n) { return static_cast<double>(tau(t, n)) / static_cast<double>(n); }, 1, X);
    const double lx = std::log(static_cast<double>(X));
    const double main = 0.5 * lx * lx + 2.0 * kEulerGamma * lx;
    return hyperbola_report("series.tau_over_n_hyperbola", X, exact, main, max_error);
}

CheckReport one_star_chi_over_n_estimate(const SieveTable& t, const QuadraticCharacter& chi, std::uint64_t X1,
                                         std::uint64_t X2)
{
    if (X1 < 1 || X1 > X2)
        throw ArgumentError("one_star_chi_over_n_estimate: requires 1 <= X1 <= X2");
    t.check_index(X2);
    const double exact = kernels::sum_real(
        [&](std::uint64_t n) { return static_cast<double>(one_star_chi(t, chi, n)) / static_cast<double>(n); },
        X1 + 1, X2);
    const LOneValue L = l_one(chi, std::max<std::uint64_t>(chi.modulus(), 1'000'000));
    const double D = static_cast<double>(chi.modulus());
    const double log_ratio = std::log(static_cast<double>(X2) / static_cast<double>(X1));
    const double model = log_ratio * L.value;
    const double shape = std::pow(D, 0.25) * std::log(D) * log_ratio / std::sqrt(static_cast<double>(X1));
    const double envelope = 6.0 * shape + log_ratio * L.tail_bound;
    const double err = std::abs(exact - model);
    return CheckReport::at_most("series.one_star_chi_over_n", "sigma", err, envelope)
        .with("D", D)
        .with("X1", static_cast<double>(X1))
        .with("X2", static_cast<double>(X2))
        .with("exact", exact)
        .with("model", model)
        .with("L1", L.value)
        .with("empirical_constant", shape > 0 ? err / shape : 0.0);
}

} // namespace deuring
