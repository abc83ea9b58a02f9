#include "deuring/suite.hpp"

#include "deuring/emit.hpp"
#include "deuring/errors.hpp"
#include "deuring/quadratic_character.hpp"
#include "deuring/series.hpp"
#include "deuring/sieve.hpp"
#include "deuring/verify.hpp"
#include "deuring/zero_hypothesis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>

namespace deuring {

namespace {

constexpr std::uint64_t kIdentityRange = 10'000;
constexpr std::uint64_t kPredicateRange = 100'000;
constexpr std::uint64_t kRamanujanRange = 1'000;
constexpr std::uint64_t kInnerSumY = 10'000;
constexpr std::uint64_t kOneStarChiX1 = 1'000;

struct SectionContext {
    const SuiteConfig& cfg;
    const SieveTable& sieve;
    std::vector<QuadraticCharacter> chars;
    std::vector<ZeroHypothesis> zeros;
};

void append(std::vector<CheckReport>& out, std::vector<CheckReport> more)
{
    std::move(more.begin(), more.end(), std::back_inserter(out));
}

CheckReport count_check(std::string name, std::string anchor, std::uint64_t mismatches, std::uint64_t n_max)
{
    return CheckReport::at_most(std::move(name), std::move(anchor), static_cast<double>(mismatches), 0.0)
        .with("n_max", static_cast<double>(n_max));
}

std::uint64_t count_mismatches(const FunctionTable& a, const FunctionTable& b)
{
    std::uint64_t bad = 0;
    for (std::uint64_t n = 1; n <= a.limit(); ++n)
        bad += a[n] != b[n];
    return bad;
}

std::vector<CheckReport> identities(const SectionContext& ctx)
{
    const SuiteConfig& cfg = ctx.cfg;
    std::vector<CheckReport> out;
    const std::uint64_t n_id = std::min(kIdentityRange, cfg.nmax);

    for (const auto& chi : ctx.chars) {
        if (!chi.is_even()) {
            out.push_back(CheckReport::informational("identities.split_identity_skipped", "identities", 0, 0)
                              .with("D", static_cast<double>(chi.modulus())));
            continue;
        }
        auto split = check_split_identity_range(ctx.sieve, chi, n_id);
        for (auto& r : split)
            r.with("D", static_cast<double>(chi.modulus()));
        append(out, std::move(split));
    }

    {
        const SieveTable small = build_sieve(std::max<std::uint64_t>(n_id, 2));
        const FunctionTable tau_t = tau_table(small);
        const FunctionTable weight = two_pow_nu_table(small);
        const FunctionTable lam = liouville_table(small);
        const FunctionTable lam_odd = liouville_odd_table(small);
        const FunctionTable ones = ones_table(small.limit());

        const FunctionTable lhs = dirichlet_convolve(ones, lam);
        const FunctionTable rhs = dirichlet_convolve(multiply(weight, lam), tau_t);
        out.push_back(count_check("identities.one_star_lambda_via_tau", "identities", count_mismatches(lhs, rhs),
                                  small.limit()));
        const FunctionTable lhs_odd = dirichlet_convolve(ones, lam_odd);
        const FunctionTable rhs_odd = dirichlet_convolve(multiply(weight, lam_odd), tau_odd_table(small));
        out.push_back(count_check("identities.one_star_lambda_odd_via_tau_odd", "identities",
                                  count_mismatches(lhs_odd, rhs_odd), small.limit()));
        std::uint64_t not_square = 0;
        for (std::uint64_t n = 1; n <= lhs.limit(); ++n)
            not_square += lhs[n] != (is_square(n) ? 1 : 0);
        out.push_back(count_check("identities.one_star_lambda_squares", "identities", not_square, lhs.limit()));
    }

    {
        const std::uint64_t n_pred = std::min(kPredicateRange, cfg.nmax);
        const FunctionTable ol = one_star_lambda_odd_table(ctx.sieve);
        std::uint64_t bad = 0;
        for (std::uint64_t n = 1; n <= n_pred; ++n) {
            const bool expected = is_square(n) || (n % 2 == 0 && is_square(n / 2));
            bad += ol[n] != (expected ? 1 : 0);
        }
        out.push_back(count_check("identities.one_star_lambda_odd_predicate", "identities", bad, n_pred));
    }

    {
        // Ramanujan sums: invariance under units, bounded partial sums.
        const std::uint64_t n_max = std::min(kRamanujanRange, cfg.nmax);
        std::uint64_t bad = 0;
        for (const std::uint64_t q : {2u, 3u, 5u, 7u}) {
            std::int64_t running = 0;
            for (std::uint64_t n = 1; n <= n_max; ++n) {
                running += ramanujan_c(q, n);
                bad += std::abs(running) >= static_cast<std::int64_t>(q);
                for (std::uint64_t d = 1; d * n <= n_max; ++d)
                    if (std::gcd(d, q) == 1)
                        bad += ramanujan_c(q, d * n) != ramanujan_c(q, n);
            }
        }
        out.push_back(count_check("identities.ramanujan_sum_properties", "general-q", bad, n_max));
    }

    {
        const std::uint64_t n_max = std::min<std::uint64_t>(1'000, cfg.nmax);
        const FunctionTable ol = one_star_lambda_odd_table(ctx.sieve);
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<std::uint64_t> pick(1, n_max);
        std::uint64_t bad = 0;
        std::uint64_t pairs = 0;
        while (pairs < 1000) {
            const std::uint64_t m = pick(rng);
            const std::uint64_t n = pick(rng);
            if (std::gcd(m, n) != 1 || m * n > ctx.sieve.limit())
                continue;
            ++pairs;
            const std::uint64_t mn = m * n;
            bad += liouville(ctx.sieve, mn) != liouville(ctx.sieve, m) * liouville(ctx.sieve, n);
            bad += liouville_odd(ctx.sieve, mn) != liouville_odd(ctx.sieve, m) * liouville_odd(ctx.sieve, n);
            bad += tau(ctx.sieve, mn) != tau(ctx.sieve, m) * tau(ctx.sieve, n);
            bad += ol[mn] != ol[m] * ol[n];
        }
        out.push_back(count_check("identities.multiplicativity_sample", "identities", bad, n_max)
                          .with("pairs", static_cast<double>(pairs))
                          .with("seed", static_cast<double>(cfg.seed)));
    }

    out.push_back(lambda_odd_series_check(ctx.sieve, {2.0, 0.0}, cfg.nmax, cfg.tolerance));
    out.push_back(phi_identity_check({2.0, 0.0}, cfg.nmax, cfg.tolerance));
    out.push_back(phi_identity_check({1.0, 0.0}, cfg.nmax, cfg.tolerance));
    return out;
}

std::vector<CheckReport> lemma1(const SectionContext& ctx)
{
    std::vector<CheckReport> out;
    out.push_back(main_factor_check());
    for (const auto& h : ctx.zeros) {
        out.push_back(zeta_ratio_check(h));
        for (const double U : ctx.cfg.u_desk)
            append(out, square_sum_lower_bound_check(h, ctx.sieve, U, ctx.cfg.tolerance));
    }
    return out;
}

std::vector<CheckReport> lemma2(const SectionContext& ctx)
{
    std::vector<CheckReport> out;
    for (const double sigma : {0.6, 0.75, 0.9, 1.25, 2.0})
        for (const double t : {0.0, 3.0, 14.134725})
            for (const double y : {2.5, 10.0, 1000.5})
                out.push_back(sbp_identity_check({sigma, t}, y, 1e-8));
    const double y = static_cast<double>(std::min(kInnerSumY, ctx.cfg.nmax));
    for (const auto& chi : ctx.chars) {
        out.push_back(polya_vinogradov_check(chi, ctx.cfg.nmax));
        if (!chi.is_even())
            continue;
        BoundInputs inputs{chi.modulus(), ctx.cfg.rho_modulus};
        for (const auto& h : ctx.zeros)
            append(out, inner_sum_bound_check(h, chi, y, ctx.sieve, inputs));
    }
    return out;
}

std::vector<CheckReport> sigma(const SectionContext& ctx)
{
    std::vector<CheckReport> out;
    for (const auto& chi : ctx.chars) {
        if (!chi.is_even())
            continue;
        for (const auto& h : ctx.zeros)
            for (const double U : ctx.cfg.u_desk)
                append(out, sigma_decomposition(h, chi, ctx.sieve, U));
    }
    for (std::uint64_t X = 1'000; X <= ctx.cfg.nmax && X <= 1'000'000; X *= 10) {
        out.push_back(tau_sqrt_hyperbola(ctx.sieve, X));
        out.push_back(tau_over_n_hyperbola(ctx.sieve, X));
    }
    if (ctx.cfg.nmax > kOneStarChiX1)
        for (const auto& chi : ctx.chars)
            out.push_back(one_star_chi_over_n_estimate(ctx.sieve, chi, kOneStarChiX1, ctx.cfg.nmax));
    return out;
}

std::vector<CheckReport> threshold(const SectionContext&)
{
    std::vector<CheckReport> out;
    out.push_back(sigma2_threshold_default_grid());
    out.push_back(sigma2_threshold_point(0.875 + 1e-6, 1e16));
    out.push_back(sigma2_threshold_point(0.95, 1e20));
    out.push_back(sigma2_threshold_point(5.0 / 6.0, 1e16));
    return out;
}

std::vector<CheckReport> bound(const SectionContext& ctx)
{
    std::vector<CheckReport> out;
    for (const auto& chi : ctx.chars) {
        out.push_back(l_one_class_number_check(chi, ctx.cfg.nmax));
        const double L = l_one(chi, ctx.cfg.nmax).value;
        const BoundInputs inputs{chi.modulus(), ctx.cfg.rho_modulus};
        for (const auto& h : ctx.zeros) {
            auto r = CheckReport::informational("bound.theorem_bound", "bound", 0.0, L);
            try {
                const double b = theorem_bound(h, inputs);
                r.lhs = b;
                r.margin = L - b;
                r.with("hypotheses_hold", 1.0);
            } catch (const PreconditionError& e) {
                r.name = "bound.theorem_bound_precondition";
                r.with("hypotheses_hold", 0.0).with("beta_hypothesis_holds", h.beta > 0.875 ? 1.0 : 0.0);
            }
            r.with("D", static_cast<double>(chi.modulus()))
                .with("beta", h.beta)
                .with("gamma", h.gamma)
                .with("delta", h.delta)
                .with("U", inputs.U(h));
            out.push_back(std::move(r));
        }
    }

    // Finite differences on the true-scale grid.
    std::uint64_t beta_bad = 0;
    std::uint64_t u_bad = 0;
    std::uint64_t points = 0;
    for (int k = 1; k < 125; ++k) {
        const double b = 0.875 + 1e-3 * k;
        for (int e = 16; e <= 24; ++e) {
            const double U = std::pow(10.0, e);
            ++points;
            beta_bad += !(theorem_bound_value(b + 5e-4, U) > theorem_bound_value(b, U));
            u_bad += !(theorem_bound_value(b, 10.0 * U) < theorem_bound_value(b, U));
        }
    }
    out.push_back(count_check("bound.monotone_in_beta", "bound", beta_bad, points));
    out.push_back(count_check("bound.monotone_in_U", "bound", u_bad, points));
    const double U = 1e16;
    out.push_back(CheckReport::informational("bound.beta_to_one_limit", "bound", theorem_bound_value(1.0 - 1e-12, U),
                                             1.0 / (kTheoremConstant * std::pow(std::log(U), 3.0)))
                      .with("U", U));
    return out;
}

std::vector<CheckReport> general_q(const SectionContext& ctx)
{
    std::vector<CheckReport> out;
    for (const std::uint64_t q : ctx.cfg.qs) {
        append(out, ramanujan_series_check(q, {2.0, 0.0}, ctx.cfg.nmax, ctx.sieve, ctx.cfg.tolerance));
        append(out, ramanujan_series_check(q, {0.9, 5.0}, ctx.cfg.nmax, ctx.sieve, ctx.cfg.tolerance));
    }
    for (const auto& h : ctx.zeros)
        out.push_back(CheckReport::close("general_q.q2_matches_main_factor", "general-q", general_q_factor(2, h),
                                         main_factor(h), 1e-12)
                          .with("beta", h.beta)
                          .with("gamma", h.gamma));

    const auto betas = linear_grid(0.875, 1.0, 1e-3, false);
    const auto phases = linear_grid(std::numbers::pi / 100.0, std::numbers::pi, 1e-3, true);
    const std::vector<double> fixed_beta{0.875};
    std::vector<double> mins;
    for (const std::uint64_t q : ctx.cfg.qs) {
        const GridMinimum g = general_q_grid_min(q, betas, phases);
        const GridMinimum slice = general_q_grid_min(q, fixed_beta, phases);
        mins.push_back(g.value);
        out.push_back(CheckReport::informational("general_q.grid_min", "general-q", g.value, 0.0, g.value)
                          .with("q", static_cast<double>(q))
                          .with("beta_at_min", g.beta)
                          .with("phase_at_min", g.delta)
                          .with("min_at_beta_7_8", slice.value));
    }
    std::uint64_t increases = 0;
    const bool ascending = std::is_sorted(ctx.cfg.qs.begin(), ctx.cfg.qs.end());
    if (ascending)
        for (std::size_t i = 1; i < mins.size(); ++i)
            increases += mins[i] > mins[i - 1];
    auto r = count_check("general_q.grid_min_non_increasing", "general-q", increases, mins.size());
    if (!ascending)
        r.as_info();
    out.push_back(std::move(r));
    return out;
}

using SectionFn = std::vector<CheckReport> (*)(const SectionContext&);

SectionFn section_fn(Section s)
{
    switch (s) {
    case Section::identities:
        return identities;
    case Section::lemma1:
        return lemma1;
    case Section::lemma2:
        return lemma2;
    case Section::sigma:
        return sigma;
    case Section::threshold:
        return threshold;
    case Section::bound:
        return bound;
    case Section::general_q:
        return general_q;
    }
    throw ArgumentError("unknown section");
}

bool needs_sieve(Section s)
{
    return s != Section::threshold;
}

std::string json_list(const auto& values)
{
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            s += ", ";
        s += json_number(static_cast<double>(values[i]));
    }
    return s + "]";
}

std::vector<std::pair<std::string, std::string>> config_echo(const SuiteConfig& cfg)
{
    std::string sections = "[";
    for (std::size_t i = 0; i < cfg.sections.size(); ++i)
        sections += (i ? ", \"" : "\"") + std::string(to_string(cfg.sections[i])) + "\"";
    sections += "]";
    return {
        {"nmax", json_number(static_cast<double>(cfg.nmax))},
        {"discriminants", json_list(cfg.discs)},
        {"betas", json_list(cfg.betas)},
        {"gammas", json_list(cfg.gammas)},
        {"u_desk", json_list(cfg.u_desk)},
        {"q", json_list(cfg.qs)},
        {"rho_modulus", json_number(cfg.rho_modulus)},
        {"tolerance", json_number(cfg.tolerance)},
        {"seed", json_number(static_cast<double>(cfg.seed))},
        {"sections", sections},
    };
}

SieveTable make_sieve(std::uint64_t limit)
{
    if (const auto dir = sieve_cache_dir())
        return cached_sieve(limit, *dir);
    return build_sieve(limit);
}

} // namespace

std::string_view to_string(Section s) noexcept
{
    switch (s) {
    case Section::identities:
        return "identities";
    case Section::lemma1:
        return "lemma1";
    case Section::lemma2:
        return "lemma2";
    case Section::sigma:
        return "sigma";
    case Section::threshold:
        return "threshold";
    case Section::bound:
        return "bound";
    case Section::general_q:
        return "general-q";
    }
    return "identities";
}

Section section_from_string(std::string_view name)
{
    for (const Section s : all_sections())
        if (to_string(s) == name)
            return s;
    throw ArgumentError("unknown section '" + std::string(name) + "'");
}

std::vector<Section> all_sections()
{
    return {Section::identities, Section::lemma1, Section::lemma2,   Section::sigma,
            Section::threshold,  Section::bound,  Section::general_q};
}

void SuiteConfig::validate() const
{
    if (nmax < 2 || nmax > kDefaultSieveCap)
        throw ArgumentError("nmax must lie in [2, " + std::to_string(kDefaultSieveCap) + "], got " +
                            std::to_string(nmax));
    for (const std::uint64_t D : discs) {
        if (D < 3 || D > (std::uint64_t{1} << 62) || !is_fundamental(-static_cast<std::int64_t>(D)))
            throw ArgumentError("discriminant -" + std::to_string(D) + " is not fundamental");
    }
    for (const double b : betas)
        if (!(b > 0.5 && b < 1.0))
            throw ArgumentError("beta must lie in (1/2, 1), got " + std::to_string(b));
    for (const double g : gammas)
        if (!std::isfinite(g) || std::abs(g) > kMaxDeskOrdinate)
            throw ArgumentError("gamma must be finite with |gamma| <= 1e6, got " + std::to_string(g));
    for (const std::uint64_t q : qs)
        if (!is_prime_u64(q))
            throw ArgumentError("q = " + std::to_string(q) + " is not prime");
    if (!(rho_modulus > 0.0) || !std::isfinite(rho_modulus))
        throw ArgumentError("rho modulus must be positive and finite");
    if (!(tolerance >= 0.0) || !std::isfinite(tolerance))
        throw ArgumentError("tolerance must be non-negative");

    const auto uses = [&](Section s) { return std::find(sections.begin(), sections.end(), s) != sections.end(); };
    if (uses(Section::lemma1) || uses(Section::sigma)) {
        for (const double U : u_desk) {
            if (!(U >= 1.0) || !std::isfinite(U))
                throw ArgumentError("U_desk must be >= 1, got " + std::to_string(U));
            if (floor_power(U, 12) > nmax)
                throw ArgumentError("nmax = " + std::to_string(nmax) + " is below U_desk^12 for U_desk = " +
                                    std::to_string(U));
        }
    }
    if (uses(Section::bound))
        for (const std::uint64_t D : discs)
            if (D > nmax)
                throw ArgumentError("nmax must be >= D = " + std::to_string(D) + " for the L(1, chi) sums");
}

Summary ReportDocument::summary() const noexcept
{
    Summary s;
    for (const auto& c : checks) {
        switch (c.status) {
        case Status::pass:
            ++s.pass;
            break;
        case Status::fail:
            ++s.fail;
            break;
        case Status::info:
            ++s.info;
            break;
        }
    }
    return s;
}

int ReportDocument::exit_code() const noexcept
{
    return summary().fail == 0 ? kExitOk : kExitCheckFailed;
}

std::optional<std::string> sieve_cache_dir()
{
    const char* v = std::getenv("DEURING_SIEVE_CACHE");
    if (v == nullptr || *v == '\0')
        return std::nullopt;
    return std::string(v);
}

ReportDocument run_suite(const SuiteConfig& config)
{
    config.validate();
    ReportDocument doc;
    doc.config = config_echo(config);
    if (config.sections.empty())
        return doc;

    const bool sieve_needed = std::any_of(config.sections.begin(), config.sections.end(), needs_sieve);
    const SieveTable sieve = sieve_needed ? make_sieve(config.nmax) : build_sieve(2);
    SectionContext ctx{config, sieve, {}, {}};
    for (const std::uint64_t D : config.discs)
        ctx.chars.emplace_back(D);
    for (const double b : config.betas)
        for (const double g : config.gammas)
            ctx.zeros.push_back(ZeroHypothesis::make(b, g));

    for (const Section s : config.sections) {
        const auto start = std::chrono::steady_clock::now();
        append(doc.checks, section_fn(s)(ctx));
        if (config.timing) {
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
            doc.timing.emplace_back(std::string(to_string(s)), dt.count());
        }
    }
    return doc;
}

ReportDocument scan_grid(const SuiteConfig& config)
{
    const ScanConfig& sc = config.scan;
    for (const double v : {sc.beta_lo, sc.beta_hi, sc.beta_step, sc.delta_lo, sc.delta_hi, sc.delta_step, sc.U,
                           sc.q_beta, sc.q_gamma})
        if (!std::isfinite(v))
            throw ArgumentError("scan bounds must be finite");
    if (!(sc.beta_lo > 0.5 && sc.beta_hi <= 1.0 && sc.beta_lo <= sc.beta_hi))
        throw ArgumentError("scan beta range must lie in (1/2, 1]");
    if (!(sc.U > 1.0))
        throw ArgumentError("scan U must exceed 1");
    for (const std::uint64_t q : config.qs)
        if (!is_prime_u64(q))
            throw ArgumentError("q = " + std::to_string(q) + " is not prime");

    ReportDocument doc;
    doc.config = {
        {"beta_range", json_list(std::vector<double>{sc.beta_lo, sc.beta_hi, sc.beta_step})},
        {"delta_range", json_list(std::vector<double>{sc.delta_lo, sc.delta_hi, sc.delta_step})},
        {"U", json_number(sc.U)},
        {"q", json_list(config.qs)},
        {"q_beta", json_number(sc.q_beta)},
        {"q_gamma", json_number(sc.q_gamma)},
    };

    // A single-point range yields one row.
    auto betas = sc.beta_lo == sc.beta_hi ? std::vector<double>{sc.beta_lo}
                                          : linear_grid(sc.beta_lo, sc.beta_hi, sc.beta_step, sc.beta_hi < 1.0);
    auto deltas = sc.delta_lo == sc.delta_hi ? std::vector<double>{sc.delta_lo}
                                             : linear_grid(sc.delta_lo, sc.delta_hi, sc.delta_step, true);
    betas.erase(std::remove_if(betas.begin(), betas.end(), [](double b) { return b >= 1.0; }), betas.end());

    Table table;
    table.columns = {"q", "beta", "phase", "factor", "theorem_bound"};
    table.rows.reserve(betas.size() * deltas.size() + config.qs.size());
    double best = std::numeric_limits<double>::infinity();
    double best_beta = 0.0;
    double best_delta = 0.0;
    for (const double b : betas) {
        const double tb = theorem_bound_value(b, sc.U);
        for (const double d : deltas) {
            const double f = main_factor(b, d);
            table.rows.push_back({2.0, b, d, f, tb});
            if (f < best) {
                best = f;
                best_beta = b;
                best_delta = d;
            }
        }
    }
    if (!betas.empty() && !deltas.empty()) {
        auto r = CheckReport::at_most("scan.main_factor_min", "lemma1", kMainFactorConstant, best)
                     .with("beta_at_min", best_beta)
                     .with("delta_at_min", best_delta)
                     .with("rows", static_cast<double>(betas.size() * deltas.size()));
        const bool theorem_region = sc.beta_lo >= 0.875 && std::min(std::abs(sc.delta_lo), std::abs(sc.delta_hi)) >=
                                                               std::numbers::pi / 100.0 &&
                                    sc.delta_lo * sc.delta_hi > 0.0;
        if (!theorem_region)
            r.as_info();
        doc.checks.push_back(std::move(r));
    }

    if (!config.qs.empty()) {
        const double tb = sc.q_beta < 1.0 ? theorem_bound_value(sc.q_beta, sc.U) : 0.0;
        std::uint64_t increases = 0;
        double previous = std::numeric_limits<double>::infinity();
        for (const std::uint64_t q : config.qs) {
            const double phase = q_phase_of_gamma(q, sc.q_gamma);
            const double f = general_q_factor_phase(q, sc.q_beta, phase);
            table.rows.push_back({static_cast<double>(q), sc.q_beta, phase, f, tb});
            increases += f > previous;
            previous = f;
        }
        doc.checks.push_back(CheckReport::informational("scan.general_q_increases", "general-q",
                                                        static_cast<double>(increases), 0.0)
                                 .with("beta", sc.q_beta)
                                 .with("gamma", sc.q_gamma));
    }
    doc.table = std::move(table);
    return doc;
}

} // namespace deuring
