#include "deuring/zero_hypothesis.hpp"

#include "deuring/errors.hpp"
#include "deuring/sieve.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace deuring {

namespace {

constexpr double kTwoPiHi = 6.283185307179586;
constexpr double kTwoPiLo = 2.4492935982947064e-16;
constexpr double kLn2Hi = 0.6931471805599453;
constexpr double kLn2Lo = 2.3190468138462996e-17;

} // namespace

double phase_mod_two_pi(double log_base_hi, double log_base_lo, double gamma)
{
    if (!std::isfinite(gamma))
        throw DomainError("phase_mod_two_pi: non-finite ordinate");
    const double ph = gamma * log_base_hi;
    const double pl = std::fma(gamma, log_base_hi, -ph) + gamma * log_base_lo;
    const double k = std::nearbyint(ph / kTwoPiHi);
    double r = std::fma(-k, kTwoPiHi, ph);
    r = r - k * kTwoPiLo + pl;
    constexpr double pi = std::numbers::pi;
    while (r > pi)
        r -= kTwoPiHi;
    while (r <= -pi)
        r += kTwoPiHi;
    // The half-open convention puts the half period at +pi; snap values that
    // are within rounding of either end.
    const double tol = 4.0 * std::numeric_limits<double>::epsilon() * std::max(pi, std::abs(ph));
    if (std::abs(r - pi) <= tol || std::abs(r + pi) <= tol)
        r = pi;
    return r;
}

double delta_of_gamma(double gamma)
{
    return phase_mod_two_pi(kLn2Hi, kLn2Lo, gamma);
}

double q_phase_of_gamma(std::uint64_t q, double gamma)
{
    if (q == 2)
        return delta_of_gamma(gamma);
    const long double l = std::log(static_cast<long double>(q));
    const double hi = static_cast<double>(l);
    const double lo = static_cast<double>(l - static_cast<long double>(hi));
    return phase_mod_two_pi(hi, lo, gamma);
}

ZeroHypothesis ZeroHypothesis::make(double beta, double gamma)
{
    if (!(beta > 0.5 && beta < 1.0))
        throw DomainError("zero hypothesis requires 1/2 < beta < 1, got beta = " + std::to_string(beta));
    if (!std::isfinite(gamma))
        throw DomainError("zero hypothesis requires finite gamma");
    ZeroHypothesis h;
    h.beta = beta;
    h.gamma = gamma;
    h.delta = delta_of_gamma(gamma);
    return h;
}

bool ZeroHypothesis::theorem_mode() const noexcept
{
    return violated_hypothesis().empty();
}

std::string ZeroHypothesis::violated_hypothesis() const
{
    if (!(beta > 0.875))
        return "beta > 7/8";
    if (!(std::abs(delta) > std::numbers::pi / 100.0))
        return "|delta| > pi/100";
    return {};
}

double BoundInputs::U(const ZeroHypothesis& h) const
{
    if (D < 2)
        throw ArgumentError("BoundInputs: D must be >= 2");
    const double d = static_cast<double>(D);
    const double u = rho_modulus(h) * std::pow(d, 0.25) * std::log(d);
    if (!(u > 0.0) || !std::isfinite(u))
        throw DomainError("BoundInputs: U must be positive and finite");
    return u;
}

} // namespace deuring
