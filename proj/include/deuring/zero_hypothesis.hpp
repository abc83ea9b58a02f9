#pragma once

#include "deuring/series.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace deuring {

// Reduces log(base) * gamma modulo 2 pi into (-pi, pi]. The product and the
// reduction are carried in double-double, so the phase stays accurate for
// ordinates far beyond the summation range.
double phase_mod_two_pi(double log_base_hi, double log_base_lo, double gamma);

// delta with log 2 * gamma = 2 pi n + delta, -pi < delta <= pi, so that
// 2^{-i gamma} = exp(-i delta).
double delta_of_gamma(double gamma);
// The same reduction for log q * gamma.
double q_phase_of_gamma(std::uint64_t q, double gamma);

// A hypothetical zero rho = beta + i gamma of zeta with 1/2 < beta < 1.
struct ZeroHypothesis {
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;

    // DomainError unless 1/2 < beta < 1 and gamma is finite.
    static ZeroHypothesis make(double beta, double gamma);

    [[nodiscard]] std::complex<double> rho() const noexcept { return {beta, gamma}; }
    [[nodiscard]] ComplexS as_s() const noexcept { return {beta, gamma}; }
    [[nodiscard]] double rho_modulus() const noexcept { return std::abs(rho()); }

    // beta > 7/8 and |delta| > pi/100.
    [[nodiscard]] bool theorem_mode() const noexcept;
    // Name of the first violated theorem-mode hypothesis, or empty.
    [[nodiscard]] std::string violated_hypothesis() const;
};

struct BoundInputs {
    std::uint64_t D = 4;
    // Injects a modulus such as 2.4e12 in place of |rho| for bounds whose
    // derivation assumes |rho| > 10^12.
    std::optional<double> rho_modulus_override;

    [[nodiscard]] double rho_modulus(const ZeroHypothesis& h) const noexcept
    {
        return rho_modulus_override.value_or(h.rho_modulus());
    }
    // U = |rho| D^{1/4} log D.
    [[nodiscard]] double U(const ZeroHypothesis& h) const;
};

} // namespace deuring
