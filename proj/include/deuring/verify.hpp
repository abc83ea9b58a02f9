#pragma once

// Theorem-level checks: the main-factor constant, the square-sum lower
// bound and its tails, the inner-sum bound with the z-split, the Sigma
// decomposition, the 1/50 threshold chain, the final L(1, chi) bound and the
// Ramanujan-sum generalization at a prime q.
//
// Two regimes. Checks backed by summation run at desk scale (U^12 within the
// sieve, moderate gamma). Checks of constants and exponents run at the true
// scale (U >= 1e16, |rho| ~ 1e12) in closed form only.

#include "deuring/check_report.hpp"
#include "deuring/quadratic_character.hpp"
#include "deuring/series.hpp"
#include "deuring/sieve.hpp"
#include "deuring/zero_hypothesis.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace deuring {

inline constexpr double kMainFactorConstant = 1.0 / 25.0;
inline constexpr double kSigma2Threshold = 1.0 / 50.0;
inline constexpr double kTheoremConstant = 5400.0;
// Lemma-2 style absorption of boundary terms needs |rho| beyond this.
inline constexpr double kLargeOrdinate = 1e12;

// lo, lo + step, ... up to hi (inclusive when hi lands on the grid).
std::vector<double> linear_grid(double lo, double hi, double step, bool include_hi = true);

// |(1 + 2^{-rho})(2^{1-rho} - 1)| as a function of (beta, delta).
double main_factor(double beta, double delta) noexcept;
double main_factor(const ZeroHypothesis& h) noexcept;

struct GridMinimum {
    double value = 0.0;
    double beta = 0.0;
    double delta = 0.0;
    std::size_t points = 0;
};
// Minimum over betas x (deltas and -deltas).
GridMinimum main_factor_grid_min(std::span<const double> betas, std::span<const double> abs_deltas);
// The default grid: beta in [7/8, 1), |delta| in [pi/100, pi], step 1e-3.
GridMinimum main_factor_default_grid_min(double step = 1e-3);
CheckReport main_factor_check(double step = 1e-3);

// |zeta(2 rho)| > zeta(4 beta) / zeta(2 beta).
CheckReport zeta_ratio_check(const ZeroHypothesis& h);

// floor(U^k), tolerant of pow rounding just below an integer.
std::uint64_t floor_power(double U, int k);

// Lower bound for |sum_{n <= U^12} (-1)^n 1*lambda_odd(n) / n^rho| with the
// decomposition (1 + 2^{-rho})(2^{1-rho} - 1) zeta(2 rho) and both tails.
// Reports: finite rearrangement, infinite rearrangement, the alternating
// tail against U^{-12 beta}, the Euler tail, and the bound itself
// (informational at desk scale).
std::vector<CheckReport> square_sum_lower_bound_check(const ZeroHypothesis& h, const SieveTable& t, double U,
                                                      double tolerance = 1e-6);

// The inner sum sum_{r <= y} (-1)^r r^{-rho} 1*chi(r), its split at
// z = D^{1/4} y^{1/2}, the piece bounds and the (2/3) bound. The bound is
// asserted only when the modulus in use is >= 1e12.
struct InnerSumSplit {
    std::complex<double> full;
    std::complex<double> small_d; // d <= z
    std::complex<double> large_d; // l <= y/z, z < d <= y/l
    double z = 0.0;
};
InnerSumSplit inner_sum_split(const ZeroHypothesis& h, const QuadraticCharacter& chi, double y, const SieveTable& t);
std::vector<CheckReport> inner_sum_bound_check(const ZeroHypothesis& h, const QuadraticCharacter& chi, double y,
                                               const SieveTable& t, const BoundInputs& inputs);

struct SigmaSums {
    std::complex<double> full_direct;
    std::complex<double> full_via_c;
    double sigma1_prime = 0.0;
    double sigma2_prime = 0.0;
    double sigma1 = 0.0;
    double sigma2 = 0.0;
    // U^{12(1-beta)} sum_{U^6 < n <= U^12} 1*chi(n)/n sum_{r <= U^12/n} tau(r)/r
    double sigma2_upper = 0.0;
    std::uint64_t n_max = 0;
    std::uint64_t c_split = 0;
};
SigmaSums sigma_sums(const ZeroHypothesis& h, const QuadraticCharacter& chi, const SieveTable& t, double U);
std::vector<CheckReport> sigma_decomposition(const ZeroHypothesis& h, const QuadraticCharacter& chi,
                                             const SieveTable& t, double U);

// 1 / (5400 U^{12(1-beta)} log^3 U). PreconditionError names the first
// violated hypothesis (beta > 7/8, |delta| > pi/100, D = 0 mod 4).
double theorem_bound(const ZeroHypothesis& h, const BoundInputs& inputs);
// The same closed form without the hypothesis checks.
double theorem_bound_value(double beta, double U) noexcept;

// (1/25) zeta(4b)/zeta(2b) - U^{6-12b} - 96 U^{10-12b} log^2 U.
double sigma2_lower_estimate(double beta, double U);
CheckReport sigma2_threshold_point(double beta, double U);
CheckReport sigma2_threshold_grid(std::span<const double> betas, std::span<const double> Us);
CheckReport sigma2_threshold_default_grid();

// |(1 + q^{-rho})(1 - q^{1-rho})| with q^{-i gamma} = exp(-i delta_q).
double general_q_factor(std::uint64_t q, const ZeroHypothesis& h);
double general_q_factor_phase(std::uint64_t q, double beta, double q_phase);
GridMinimum general_q_grid_min(std::uint64_t q, std::span<const double> betas, std::span<const double> abs_phases);

// c_q(n) series against (q^{1-s} - 1) zeta(s), and c_q(n) 1*lambda_q(n) series
// against (1 + q^{-s})(q^{1-s} - 1) zeta(2s), each with a rigorous tail bound.
std::vector<CheckReport> ramanujan_series_check(std::uint64_t q, ComplexS s, std::uint64_t X, const SieveTable& t,
                                                double tolerance = 1e-6);

// phi partial sum against (2^{1-s} - 1) zeta(s) within tail + tolerance.
CheckReport phi_identity_check(ComplexS s, std::uint64_t X, double tolerance = 1e-6);
// sum lambda_odd(n) n^{-s} against zeta(2s)/zeta(s) (1 + 2^{-s}), sigma > 1.
CheckReport lambda_odd_series_check(const SieveTable& t, ComplexS s, std::uint64_t X, double tolerance = 1e-6);

} // namespace deuring
