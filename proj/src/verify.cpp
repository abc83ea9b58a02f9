#include "deuring/verify.hpp"

#include "deuring/errors.hpp"
#include "deuring/kernels.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace deuring {

namespace {

constexpr double kPi = std::numbers::pi;

std::complex<double> pow_real_base(double base, std::complex<double> exponent)
{
    return std::exp(exponent * std::log(base));
}

std::uint64_t isqrt(std::uint64_t n) noexcept
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

double real_zeta(double x)
{
    return zeta({x, 0.0}).real();
}

void require_even(const QuadraticCharacter& chi, const char* what)
{
    if (!chi.is_even())
        throw ArgumentError(std::string(what) + " requires D = 0 mod 4, got D = " + std::to_string(chi.modulus()));
}

void require_within(const SieveTable& t, std::uint64_t n, const char* what)
{
    if (n > t.limit())
        throw BoundsError(std::string(what) + ": needs terms up to " + std::to_string(n) + " but the sieve stops at " +
                          std::to_string(t.limit()));
}

std::vector<double> coefficient_table(std::uint64_t limit, auto&& f)
{
    std::vector<double> c(limit + 1, 0.0);
    kernels::tabulate(std::span<double>(c), f);
    return c;
}

// prefix[x] = sum_{n <= x} f(n) n^{-s}, accumulated with compensation.
std::vector<std::complex<double>> dirichlet_prefix(std::uint64_t limit, ComplexS s, auto&& f)
{
    std::vector<std::complex<double>> prefix(limit + 1);
    CompensatedComplexSum acc;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        const double c = f(n);
        if (c != 0.0)
            acc.add(c * kernels::power_minus_s(n, s.sigma, s.t));
        prefix[n] = acc.value();
    }
    return prefix;
}

std::vector<double> real_prefix(std::uint64_t limit, auto&& f)
{
    std::vector<double> prefix(limit + 1, 0.0);
    CompensatedSum acc;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        acc.add(f(n));
        prefix[n] = acc.value();
    }
    return prefix;
}

CheckReport& with_hypothesis(CheckReport& r, const ZeroHypothesis& h)
{
    return r.with("beta", h.beta).with("gamma", h.gamma).with("delta", h.delta);
}

} // namespace

std::vector<double> linear_grid(double lo, double hi, double step, bool include_hi)
{
    if (!(step > 0.0) || !std::isfinite(lo) || !std::isfinite(hi))
        throw ArgumentError("linear_grid: bounds must be finite and step positive");
    std::vector<double> g;
    const double slack = 1e-9 * step;
    for (std::uint64_t k = 0;; ++k) {
        const double v = lo + static_cast<double>(k) * step;
        if (include_hi ? v > hi + slack : v >= hi - slack)
            break;
        g.push_back(v);
    }
    return g;
}

double main_factor(double beta, double delta) noexcept
{
    const std::complex<double> e = std::polar(1.0, -delta);
    const double a = std::exp2(-beta);
    return std::abs((1.0 + a * e) * (2.0 * a * e - 1.0));
}

double main_factor(const ZeroHypothesis& h) noexcept
{
    return main_factor(h.beta, h.delta);
}

GridMinimum main_factor_grid_min(std::span<const double> betas, std::span<const double> abs_deltas)
{
    std::vector<double> deltas;
    deltas.reserve(2 * abs_deltas.size());
    for (const double d : abs_deltas) {
        deltas.push_back(d);
        deltas.push_back(-d);
    }
    const auto best = kernels::grid_min(betas, std::span<const double>(deltas),
                                        [](double b, double d) { return main_factor(b, d); });
    return {best.value, betas.empty() ? 0.0 : betas[best.row], deltas.empty() ? 0.0 : deltas[best.col],
            betas.size() * deltas.size()};
}

GridMinimum main_factor_default_grid_min(double step)
{
    const auto betas = linear_grid(0.875, 1.0, step, false);
    auto deltas = linear_grid(kPi / 100.0, kPi, step, true);
    if (deltas.back() < kPi)
        deltas.push_back(kPi);
    return main_factor_grid_min(betas, deltas);
}

CheckReport main_factor_check(double step)
{
    const GridMinimum m = main_factor_default_grid_min(step);
    return CheckReport::at_most("lemma1.main_factor_min", "lemma1", kMainFactorConstant, m.value)
        .with("beta_at_min", m.beta)
        .with("delta_at_min", m.delta)
        .with("grid_points", static_cast<double>(m.points))
        .with("step", step);
}

CheckReport zeta_ratio_check(const ZeroHypothesis& h)
{
    const double ratio = real_zeta(4.0 * h.beta) / real_zeta(2.0 * h.beta);
    const double abs_zeta = std::abs(zeta(2.0 * h.rho()));
    auto r = CheckReport::at_most("lemma1.zeta_ratio", "lemma1", ratio, abs_zeta);
    with_hypothesis(r, h);
    return r;
}

std::uint64_t floor_power(double U, int k)
{
    if (!(U >= 1.0) || !std::isfinite(U))
        throw DomainError("floor_power: U must be >= 1");
    const double v = std::pow(U, k);
    const double nearest = std::nearbyint(v);
    const double snapped = std::abs(v - nearest) <= 1e-9 * std::max(1.0, v) ? nearest : std::floor(v);
    return static_cast<std::uint64_t>(snapped);
}

std::vector<CheckReport> square_sum_lower_bound_check(const ZeroHypothesis& h, const SieveTable& t, double U,
                                                      double tolerance)
{
    const std::uint64_t N = floor_power(U, 12);
    require_within(t, N, "square_sum_lower_bound_check");
    const std::complex<double> rho = h.rho();
    const ComplexS two_rho = h.as_s().scaled(2.0);

    const auto coeffs = coefficient_table(N, [&](std::uint64_t n) {
        const double sign = (n & 1) ? -1.0 : 1.0;
        return sign * one_star_lambda_odd(t, n);
    });
    const std::complex<double> direct = partial_sum(coeffs, h.as_s(), N);

    const std::uint64_t M1 = isqrt(N);
    const std::uint64_t M2 = isqrt(N / 2);
    const std::complex<double> two_pow_rho = pow_real_base(2.0, -rho); // 2^{-rho}
    const std::complex<double> sparse =
        partial_sum_fn([](std::uint64_t m) { return (m & 1) ? -1.0 : 1.0; }, two_rho, 1, M1) +
        two_pow_rho * partial_sum_fn([](std::uint64_t) { return 1.0; }, two_rho, 1, M2);

    const std::complex<double> zeta_2rho = zeta(2.0 * rho);
    const std::complex<double> factor = (1.0 + two_pow_rho) * (2.0 * two_pow_rho - 1.0);
    const std::complex<double> closed = factor * zeta_2rho;
    const std::complex<double> tail_alt = alternating_tail(2.0 * rho, M1);
    const std::complex<double> tail_sq = two_pow_rho * zeta_tail(2.0 * rho, M2 + 1);

    const double U6 = std::pow(U, 6.0);
    const double stated_alt_bound = std::pow(U, -12.0 * h.beta);
    const double power_bound = std::pow(U, 6.0 - 12.0 * h.beta);
    const double euler_bound = std::exp2(-h.beta) * euler_tail_bound(U6 / std::numbers::sqrt2, two_rho);
    const double ratio = real_zeta(4.0 * h.beta) / real_zeta(2.0 * h.beta);
    const double lower = kMainFactorConstant * ratio - power_bound;

    std::vector<CheckReport> out;
    const double scale = std::max(1.0, std::abs(direct));
    out.push_back(CheckReport::at_most("lemma1.finite_rearrangement", "lemma1", std::abs(direct - sparse),
                                       1e-10 * scale));
    out.push_back(CheckReport::at_most("lemma1.rearrangement", "lemma1",
                                       std::abs(direct + tail_alt + tail_sq - closed), tolerance)
                      .with("abs_closed", std::abs(closed)));
    out.push_back(CheckReport::at_most("lemma1.alternating_tail", "lemma1", std::abs(tail_alt),
                                       abel_tail_bound(U6, two_rho))
                      .with("stated_bound", stated_alt_bound));
    out.push_back(CheckReport::at_most("lemma1.euler_tail", "lemma1", std::abs(tail_sq), euler_bound)
                      .with("power_bound", power_bound)
                      .with("stated_constant", 1.0 / (std::numbers::sqrt2 * (2.0 * h.beta - 1.0))));
    out.push_back(CheckReport::informational("lemma1.lower_bound", "lemma1", lower, std::abs(direct),
                                             std::abs(direct) - lower)
                      .with("main_factor", std::abs(factor))
                      .with("abs_zeta_2rho", std::abs(zeta_2rho))
                      .with("zeta_ratio", ratio));
    for (auto& r : out) {
        with_hypothesis(r, h);
        r.with("U", U).with("N", static_cast<double>(N));
    }
    return out;
}

InnerSumSplit inner_sum_split(const ZeroHypothesis& h, const QuadraticCharacter& chi, double y, const SieveTable& t)
{
    require_even(chi, "inner_sum_split");
    InnerSumSplit r;
    const double D = static_cast<double>(chi.modulus());
    r.z = std::pow(D, 0.25) * std::sqrt(std::max(y, 0.0));
    if (y < 1.0)
        return r;
    const auto Y = static_cast<std::uint64_t>(std::floor(y));
    require_within(t, Y, "inner_sum_split");
    const ComplexS s = h.as_s();

    const auto coeffs = coefficient_table(Y, [&](std::uint64_t n) {
        const double sign = (n & 1) ? -1.0 : 1.0;
        return sign * static_cast<double>(one_star_chi(t, chi, n));
    });
    r.full = partial_sum(coeffs, s, Y);

    const auto alt = dirichlet_prefix(Y, s, [](std::uint64_t n) { return (n & 1) ? -1.0 : 1.0; });
    const auto chi_prefix = dirichlet_prefix(Y, s, [&](std::uint64_t n) { return static_cast<double>(chi(n)); });
    const std::uint64_t z_floor = std::min<std::uint64_t>(Y, static_cast<std::uint64_t>(std::floor(r.z)));

    CompensatedComplexSum small;
    for (std::uint64_t d = 1; d <= z_floor; ++d) {
        const int c = chi(d);
        if (c != 0)
            small.add(static_cast<double>(c) * kernels::power_minus_s(d, s.sigma, s.t) * alt[Y / d]);
    }
    r.small_d = small.value();

    CompensatedComplexSum large;
    const auto l_max = static_cast<std::uint64_t>(std::floor(y / r.z));
    for (std::uint64_t l = 1; l <= l_max; ++l) {
        const double sign = (l & 1) ? -1.0 : 1.0;
        large.add(sign * kernels::power_minus_s(l, s.sigma, s.t) * (chi_prefix[Y / l] - chi_prefix[z_floor]));
    }
    r.large_d = large.value();
    return r;
}

std::vector<CheckReport> inner_sum_bound_check(const ZeroHypothesis& h, const QuadraticCharacter& chi, double y,
                                               const SieveTable& t, const BoundInputs& inputs)
{
    const InnerSumSplit split = inner_sum_split(h, chi, y, t);
    const double D = static_cast<double>(chi.modulus());
    const double beta = h.beta;
    const double modulus = inputs.rho_modulus(h);
    const double logD = std::log(D);
    const double z = split.z;
    const bool meaningful = y > std::sqrt(D) && y >= 1.0;
    const bool asserted = meaningful && modulus >= kLargeOrdinate;

    const double bound_small = meaningful ? z * modulus / (beta * std::pow(y, beta)) : 0.0;
    const double bound_large =
        meaningful ? modulus * std::sqrt(D) * logD / beta * std::pow(y, 1.0 - beta) * std::log(y / z) / z : 0.0;
    const double bound = meaningful ? (2.0 / 3.0) * std::pow(y, 0.5 - beta) * modulus * std::pow(D, 0.25) * logD *
                                          std::log(y / std::sqrt(D))
                                    : 0.0;

    // The harmonic-type sum behind the "~" step, as a ratio to its model.
    double harmonic_ratio = 0.0;
    if (meaningful && y / z >= 1.0) {
        CompensatedSum acc;
        const auto l_max = static_cast<std::uint64_t>(std::floor(y / z));
        for (std::uint64_t l = 1; l <= l_max; ++l)
            acc.add(std::pow(static_cast<double>(l), -beta) * std::pow(z, -beta));
        const double model = std::pow(y, 1.0 - beta) * std::log(y / z) / z;
        harmonic_ratio = model > 0.0 ? acc.value() / model : 0.0;
    }

    std::vector<CheckReport> out;
    const double scale = std::max(1.0, std::abs(split.full));
    out.push_back(CheckReport::at_most("lemma2.split_recombination", "lemma2",
                                       std::abs(split.full - (split.small_d + split.large_d)), 1e-9 * scale));
    auto small = CheckReport::at_most("lemma2.small_d_bound", "lemma2", std::abs(split.small_d), bound_small);
    auto large = CheckReport::at_most("lemma2.large_d_bound", "lemma2", std::abs(split.large_d), bound_large);
    auto inner = CheckReport::at_most("lemma2.inner_bound", "lemma2", std::abs(split.full), bound);
    inner.with("harmonic_ratio", harmonic_ratio)
        .with("log_condition", meaningful ? std::log(y / std::sqrt(D)) * logD / 18.0 : 0.0)
        .with("inverse_beta", 1.0 / beta);
    for (CheckReport* r : {&small, &large, &inner}) {
        if (!asserted)
            r->as_info();
        out.push_back(std::move(*r));
    }
    for (auto& r : out) {
        with_hypothesis(r, h);
        r.with("D", D).with("y", y).with("z", z).with("rho_modulus_used", modulus);
    }
    return out;
}

SigmaSums sigma_sums(const ZeroHypothesis& h, const QuadraticCharacter& chi, const SieveTable& t, double U)
{
    require_even(chi, "sigma_sums");
    SigmaSums r;
    r.n_max = floor_power(U, 12);
    r.c_split = floor_power(U, 6);
    const std::uint64_t N = r.n_max;
    const std::uint64_t L6 = r.c_split;
    require_within(t, N, "sigma_decomposition");
    const ComplexS s = h.as_s();
    const double beta = h.beta;

    std::vector<std::int64_t> ochi(N + 1, 0);
    kernels::tabulate(std::span<std::int64_t>(ochi), [&](std::uint64_t n) { return one_star_chi(t, chi, n); });
    std::vector<std::int64_t> tau_v(N + 1, 0);
    kernels::tabulate(std::span<std::int64_t>(tau_v), [&](std::uint64_t n) { return tau(t, n); });
    // Weight 2^{nu(a)} for c in C, 0 otherwise.
    std::vector<std::int64_t> c_weight(N + 1, 0);
    kernels::tabulate(std::span<std::int64_t>(c_weight), [&](std::uint64_t n) -> std::int64_t {
        const AbmFactorization f = classify_abm(t, chi, n);
        return f.m == 1 ? two_pow_nu(t, f.a) : 0;
    });
    const auto lodd_coeffs = coefficient_table(N, [&](std::uint64_t n) {
        const double sign = (n & 1) ? -1.0 : 1.0;
        return sign * one_star_lambda_odd(t, n);
    });

    const auto inner = dirichlet_prefix(N, s, [&](std::uint64_t n) {
        const double sign = (n & 1) ? -1.0 : 1.0;
        return sign * static_cast<double>(ochi[n]);
    });
    const auto chi_beta = real_prefix(N, [&](std::uint64_t n) {
        return static_cast<double>(ochi[n]) * std::pow(static_cast<double>(n), -beta);
    });
    const auto tau_beta = real_prefix(N, [&](std::uint64_t n) {
        return static_cast<double>(tau_v[n]) * std::pow(static_cast<double>(n), -beta);
    });
    const auto tau_over_n = real_prefix(N, [&](std::uint64_t n) {
        return static_cast<double>(tau_v[n]) / static_cast<double>(n);
    });

    r.full_direct = partial_sum(lodd_coeffs, s, N);

    CompensatedComplexSum via_c;
    CompensatedSum s1p, s2p, s1, s2, s2u;
    for (std::uint64_t c = 1; c <= N; ++c) {
        const double c_beta = std::pow(static_cast<double>(c), -beta);
        const std::uint64_t rest = N / c;
        if (c_weight[c] != 0) {
            const auto w = static_cast<double>(c_weight[c]);
            const int lam = liouville_odd(t, c);
            if (lam != 0)
                via_c.add(w * lam * kernels::power_minus_s(c, s.sigma, s.t) * inner[rest]);
            if (c <= L6)
                s1p.add(w * c_beta * std::abs(inner[rest]));
            else
                s2p.add(w * c_beta * chi_beta[rest]);
        }
        if (c <= L6) {
            s1.add(static_cast<double>(tau_v[c]) * c_beta * std::abs(inner[rest]));
        } else {
            s2.add(static_cast<double>(ochi[c]) * c_beta * tau_beta[rest]);
            s2u.add(static_cast<double>(ochi[c]) / static_cast<double>(c) * tau_over_n[rest]);
        }
    }
    r.full_via_c = via_c.value();
    r.sigma1_prime = s1p.value();
    r.sigma2_prime = s2p.value();
    r.sigma1 = s1.value();
    r.sigma2 = s2.value();
    r.sigma2_upper = std::pow(U, 12.0 * (1.0 - beta)) * s2u.value();
    return r;
}

std::vector<CheckReport> sigma_decomposition(const ZeroHypothesis& h, const QuadraticCharacter& chi,
                                             const SieveTable& t, double U)
{
    const SigmaSums s = sigma_sums(h, chi, t, U);
    const double full = std::abs(s.full_direct);
    std::vector<CheckReport> out;
    out.push_back(CheckReport::at_most("sigma.rewrite_identity", "sigma", std::abs(s.full_direct - s.full_via_c),
                                       1e-9 * std::max(1.0, full)));
    out.push_back(CheckReport::at_most("sigma.triangle", "sigma", full, s.sigma1_prime + s.sigma2_prime));
    out.push_back(CheckReport::at_most("sigma.sigma1_prime", "sigma", s.sigma1_prime, s.sigma1));
    out.push_back(CheckReport::at_most("sigma.sigma2_prime", "sigma", s.sigma2_prime, s.sigma2));
    out.push_back(CheckReport::at_most("sigma.sigma2_upper_chain", "sigma", s.sigma2, s.sigma2_upper));
    if (U > 1.0) {
        // Empirical constant in Sigma_1 < c U^{6-12b} log U |rho| D^{1/4} log D sum_{n <= U^6} tau(n)/sqrt(n).
        const double D = static_cast<double>(chi.modulus());
        const double tau_sqrt = kernels::sum_real(
            [&](std::uint64_t n) { return static_cast<double>(tau(t, n)) / std::sqrt(static_cast<double>(n)); }, 1,
            s.c_split);
        const double shape = std::pow(U, 6.0 - 12.0 * h.beta) * std::log(U) * h.rho_modulus() * std::pow(D, 0.25) *
                             std::log(D) * tau_sqrt;
        out.push_back(CheckReport::informational("sigma.sigma1_constant", "sigma", s.sigma1 / shape, 8.0,
                                                 8.0 - s.sigma1 / shape));
    }
    for (auto& r : out) {
        with_hypothesis(r, h);
        r.with("D", static_cast<double>(chi.modulus()))
            .with("U", U)
            .with("sigma1_prime", s.sigma1_prime)
            .with("sigma2_prime", s.sigma2_prime)
            .with("sigma1", s.sigma1)
            .with("sigma2", s.sigma2);
    }
    return out;
}

double theorem_bound_value(double beta, double U) noexcept
{
    const double log_u = std::log(U);
    return 1.0 / (kTheoremConstant * std::exp(12.0 * (1.0 - beta) * log_u) * log_u * log_u * log_u);
}

double theorem_bound(const ZeroHypothesis& h, const BoundInputs& inputs)
{
    if (const std::string v = h.violated_hypothesis(); !v.empty())
        throw PreconditionError("theorem_bound: hypothesis " + v + " does not hold");
    if (inputs.D % 4 != 0)
        throw PreconditionError("theorem_bound: hypothesis D = 0 mod 4 does not hold");
    const double U = inputs.U(h);
    if (!(U > 1.0))
        throw DomainError("theorem_bound: U must exceed 1");
    return theorem_bound_value(h.beta, U);
}

double sigma2_lower_estimate(double beta, double U)
{
    const double log_u = std::log(U);
    const double ratio = real_zeta(4.0 * beta) / real_zeta(2.0 * beta);
    return kMainFactorConstant * ratio - std::exp((6.0 - 12.0 * beta) * log_u) -
           96.0 * std::exp((10.0 - 12.0 * beta) * log_u) * log_u * log_u;
}

CheckReport sigma2_threshold_point(double beta, double U)
{
    auto r = CheckReport::at_most("threshold.sigma2_point", "threshold", kSigma2Threshold,
                                  sigma2_lower_estimate(beta, U));
    r.with("beta", beta).with("U", U);
    if (!(beta > 0.875))
        r.as_info();
    return r;
}

CheckReport sigma2_threshold_grid(std::span<const double> betas, std::span<const double> Us)
{
    double worst = std::numeric_limits<double>::infinity();
    double worst_beta = 0.0;
    double worst_u = 0.0;
    for (const double b : betas) {
        if (!(b > 0.875 && b < 1.0))
            throw ArgumentError("sigma2_threshold_grid: beta must lie in (7/8, 1)");
        for (const double u : Us) {
            const double v = sigma2_lower_estimate(b, u);
            if (v < worst) {
                worst = v;
                worst_beta = b;
                worst_u = u;
            }
        }
    }
    return CheckReport::at_most("threshold.sigma2_grid", "threshold", kSigma2Threshold, worst)
        .with("beta_at_min", worst_beta)
        .with("U_at_min", worst_u)
        .with("grid_points", static_cast<double>(betas.size() * Us.size()));
}

CheckReport sigma2_threshold_default_grid()
{
    std::vector<double> betas{0.875 + 1e-6};
    for (int k = 1; k < 125; ++k)
        betas.push_back(0.875 + 1e-3 * k);
    std::vector<double> Us;
    for (int e = 16; e <= 24; ++e)
        Us.push_back(std::pow(10.0, e));
    return sigma2_threshold_grid(betas, Us);
}

double general_q_factor_phase(std::uint64_t q, double beta, double q_phase)
{
    if (!is_prime_u64(q))
        throw ArgumentError("general_q_factor: q = " + std::to_string(q) + " is not prime");
    const std::complex<double> e = std::polar(1.0, -q_phase);
    const double qd = static_cast<double>(q);
    const double a = std::pow(qd, -beta);
    return std::abs((1.0 + a * e) * (1.0 - qd * a * e));
}

double general_q_factor(std::uint64_t q, const ZeroHypothesis& h)
{
    if (!is_prime_u64(q))
        throw ArgumentError("general_q_factor: q = " + std::to_string(q) + " is not prime");
    return general_q_factor_phase(q, h.beta, q_phase_of_gamma(q, h.gamma));
}

GridMinimum general_q_grid_min(std::uint64_t q, std::span<const double> betas, std::span<const double> abs_phases)
{
    if (!is_prime_u64(q))
        throw ArgumentError("general_q_grid_min: q = " + std::to_string(q) + " is not prime");
    std::vector<double> phases;
    for (const double p : abs_phases) {
        phases.push_back(p);
        phases.push_back(-p);
    }
    const auto best = kernels::grid_min(betas, std::span<const double>(phases),
                                        [q](double b, double p) { return general_q_factor_phase(q, b, p); });
    return {best.value, betas.empty() ? 0.0 : betas[best.row], phases.empty() ? 0.0 : phases[best.col],
            betas.size() * phases.size()};
}

std::vector<CheckReport> ramanujan_series_check(std::uint64_t q, ComplexS s, std::uint64_t X, const SieveTable& t,
                                                double tolerance)
{
    if (!is_prime_u64(q))
        throw ArgumentError("ramanujan_series_check: q = " + std::to_string(q) + " is not prime");
    if (!(s.sigma > 0.5))
        throw DomainError("ramanujan_series_check: requires sigma > 1/2");
    require_within(t, X, "ramanujan_series_check");
    const double qd = static_cast<double>(q);
    const std::complex<double> z = s.value();
    const std::complex<double> q_pow = pow_real_base(qd, -z); // q^{-s}
    const bool at_one = z == std::complex<double>(1.0, 0.0);

    const auto cq = [q](std::uint64_t n) { return n % q == 0 ? static_cast<double>(q - 1) : -1.0; };
    const std::complex<double> partial1 = partial_sum_fn(cq, s, 1, X);
    const std::complex<double> closed1 = at_one ? std::complex<double>(-std::log(qd), 0.0) : (qd * q_pow - 1.0) * zeta(z);
    const double bound1 = (qd - 1.0) * std::pow(static_cast<double>(X), -s.sigma) * (1.0 + s.modulus() / s.sigma);
    auto r1 = CheckReport::at_most("general_q.cq_series", "general-q", std::abs(partial1 - closed1),
                                   bound1 + tolerance);
    if (!at_one) {
        const std::complex<double> tail = -zeta_tail(z, X + 1) + qd * q_pow * zeta_tail(z, X / q + 1);
        r1.with("residual_after_tail", std::abs(partial1 + tail - closed1));
    }
    r1.with("tail_bound", bound1);

    const auto coeffs = coefficient_table(X, [&](std::uint64_t n) { return cq(n) * one_star_lambda_q(t, q, n); });
    const std::complex<double> partial2 = partial_sum(coeffs, s, X);
    const std::complex<double> closed2 = (1.0 + q_pow) * (qd * q_pow - 1.0) * zeta(2.0 * z);
    const std::uint64_t M = isqrt(X);
    const std::uint64_t M2 = isqrt(X / q);
    const ComplexS two_s = s.scaled(2.0);
    const double bound2 = (qd - 1.0) * std::pow(static_cast<double>(M), -two_s.sigma) *
                              (1.0 + two_s.modulus() / two_s.sigma) +
                          (qd - 1.0) * std::pow(qd, -s.sigma) * euler_tail_bound(static_cast<double>(std::max<std::uint64_t>(M2, 1)), two_s);
    const std::complex<double> tail2 = -zeta_tail(2.0 * z, M + 1) +
                                       qd * q_pow * q_pow * zeta_tail(2.0 * z, M / q + 1) +
                                       (qd - 1.0) * q_pow * zeta_tail(2.0 * z, M2 + 1);
    auto r2 = CheckReport::at_most("general_q.lambda_q_series", "general-q", std::abs(partial2 - closed2),
                                   bound2 + tolerance);
    r2.with("tail_bound", bound2)
        .with("residual_after_tail", std::abs(partial2 + tail2 - closed2))
        .with("residual_opposite_sign", std::abs(partial2 + closed2));

    std::vector<CheckReport> out{std::move(r1), std::move(r2)};
    for (auto& r : out) {
        r.with("q", qd).with("sigma", s.sigma).with("t", s.t).with("X", static_cast<double>(X));
        if (s.sigma <= 1.0)
            r.as_info();
    }
    return out;
}

CheckReport phi_identity_check(ComplexS s, std::uint64_t X, double tolerance)
{
    const SumWithTail p = phi_at(s, X);
    const std::complex<double> closed = phi_closed(s.value());
    return CheckReport::at_most("series.phi_identity", "lemma2", std::abs(p.partial - closed), p.tail_bound + tolerance)
        .with("sigma", s.sigma)
        .with("t", s.t)
        .with("X", static_cast<double>(X))
        .with("tail_bound", p.tail_bound)
        .with("partial_re", p.partial.real())
        .with("partial_im", p.partial.imag());
}

CheckReport lambda_odd_series_check(const SieveTable& t, ComplexS s, std::uint64_t X, double tolerance)
{
    if (!(s.sigma > 1.0))
        throw DomainError("lambda_odd_series_check: requires sigma > 1");
    require_within(t, X, "lambda_odd_series_check");
    const auto coeffs = coefficient_table(X, [&](std::uint64_t n) { return static_cast<double>(liouville_odd(t, n)); });
    const std::complex<double> partial = partial_sum(coeffs, s, X);
    const std::complex<double> z = s.value();
    const std::complex<double> closed = zeta(2.0 * z) / zeta(z) * (1.0 + pow_real_base(2.0, -z));
    const double bound = euler_tail_bound(static_cast<double>(X), {s.sigma, 0.0});
    return CheckReport::at_most("identities.lambda_odd_series", "identities", std::abs(partial - closed),
                                bound + tolerance)
        .with("sigma", s.sigma)
        .with("t", s.t)
        .with("X", static_cast<double>(X))
        .with("tail_bound", bound);
}

} // namespace deuring
