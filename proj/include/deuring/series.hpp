#pragma once

// Complex Dirichlet partial sums with compensated accumulation, certified
// tail bounds, the alternating zeta function, an Euler-Maclaurin zeta
// oracle, and the two divisor-function hyperbola estimates.
//
// All summation is binary64. Phases t log n are evaluated directly, which
// keeps phase error well below 1e-9 for n <= 1e7 and |t| <= 1e6. Larger
// ordinates are only ever handled through closed-form bound formulas.

#include "deuring/check_report.hpp"
#include "deuring/kernels.hpp"
#include "deuring/quadratic_character.hpp"
#include "deuring/sieve.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace deuring {

inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kMaxDeskOrdinate = 1e6;

// s = sigma + i t.
struct ComplexS {
    double sigma = 0.0;
    double t = 0.0;

    [[nodiscard]] std::complex<double> value() const noexcept { return {sigma, t}; }
    [[nodiscard]] double modulus() const noexcept { return std::abs(value()); }
    [[nodiscard]] ComplexS scaled(double k) const noexcept { return {k * sigma, k * t}; }
};

// Certified statement: |true value - partial| <= tail_bound.
struct SumWithTail {
    std::complex<double> partial;
    double tail_bound = 0.0;
    std::uint64_t terms_used = 0;
};

// sum_{n <= X} f(n) n^{-s}. coeffs[n] holds f(n); coeffs[0] is ignored.
// ArgumentError if coeffs has no entry for X.
std::complex<double> partial_sum(std::span<const double> coeffs, ComplexS s, std::uint64_t X);
std::complex<double> partial_sum(const FunctionTable& f, ComplexS s, std::uint64_t X);

// sum_{first <= n <= last} f(n) n^{-s} for a generated coefficient f.
template <class F>
std::complex<double> partial_sum_fn(F&& f, ComplexS s, std::uint64_t first, std::uint64_t last)
{
    return kernels::sum_complex(
        [&](std::uint64_t n) { return f(n) * kernels::power_minus_s(n, s.sigma, s.t); }, first, last);
}

std::vector<double> to_coefficients(const FunctionTable& f);

// Hurwitz tail sum_{j >= 0} (a + j)^{-s} for a > 0, s != 1, by
// Euler-Maclaurin (analytic continuation for sigma <= 1). NumericError if
// the correction series does not converge.
std::complex<double> hurwitz_sum(std::complex<double> s, double a);
// zeta(s) for s != 1.
std::complex<double> zeta(std::complex<double> s);
// sum_{n >= N} n^{-s}.
std::complex<double> zeta_tail(std::complex<double> s, std::uint64_t N);
// sum_{m > M} (-1)^m m^{-s}.
std::complex<double> alternating_tail(std::complex<double> s, std::uint64_t M);

// phi(s) = (2^{1-s} - 1) zeta(s) = sum (-1)^n n^{-s}; continuous at s = 1.
std::complex<double> phi_closed(std::complex<double> s);

// Partial sum of phi with tail bound X^{-sigma}(1 + |s|/sigma), from
// summation by parts with |S(x)| <= 1. DomainError for sigma <= 0.
SumWithTail phi_at(ComplexS s, std::uint64_t X);

// Bound for |sum_{m > X} (-1)^m m^{-s}|. Returns X^{-sigma} whenever that is
// certified, i.e. whenever the pairing bound below does not exceed it.
double abel_tail_bound(double X, ComplexS s);
// Pairing bound 1/2 M^{-sigma} + 1/2 |s(s+1)| (M^{-sigma-2} + M^{-sigma-1}/(2(sigma+1))), M = floor(X)+1.
double alternating_tail_bound(double X, ComplexS s);

// Bound for |sum_{m > X} m^{-s}| by Euler summation:
// X^{1-sigma}/|s-1| + X^{-sigma}(1 + |s|/sigma). DomainError for sigma <= 1.
double euler_tail_bound(double X, ComplexS s);

// The summation-by-parts decomposition of phi at cut Y:
//   phi(s) = sum_{l <= Y} (-1)^l l^{-s} - S(Y) Y^{-s} + s int_Y^inf S(x) x^{-s-1} dx,
// S(x) = sum_{n <= x} (-1)^n. The integral is taken piecewise in closed form
// between the integer breakpoints of S, with an Euler-Maclaurin remainder.
struct SbpPieces {
    std::complex<double> phi;
    std::complex<double> partial;
    std::complex<double> boundary;
    std::complex<double> integral;
    double residual = 0.0;
    // Residual if the integrand were S(x) - S(Y) and the boundary kept.
    double residual_shifted_integrand = 0.0;
};
SbpPieces sbp_pieces(ComplexS s, double Y);
CheckReport sbp_identity_check(ComplexS s, double y_over_d, double tolerance = 1e-8);

// sum_{n <= X} tau(n)/sqrt(n) against sqrt(X)(2 log X + 4C - 4).
// Asserted |error| <= max_error for X >= 1000, informational below.
CheckReport tau_sqrt_hyperbola(const SieveTable& t, std::uint64_t X, double max_error = 5.0);
// sum_{r <= X} tau(r)/r against 1/2 log^2 X + 2C log X.
CheckReport tau_over_n_hyperbola(const SieveTable& t, std::uint64_t X, double max_error = 2.0);

// sum_{X1 < n <= X2} 1*chi(n)/n against log(X2/X1) L(1, chi), within
// 6 D^{1/4} X1^{-1/2} log D log(X2/X1) plus the L(1) enclosure width.
CheckReport one_star_chi_over_n_estimate(const SieveTable& t, const QuadraticCharacter& chi, std::uint64_t X1,
                                         std::uint64_t X2);

} // namespace deuring
