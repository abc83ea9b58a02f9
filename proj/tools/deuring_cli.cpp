#include "deuring/emit.hpp"
#include "deuring/errors.hpp"
#include "deuring/suite.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct Options {
    deuring::SuiteConfig config;
    std::string format = "json";
    std::string out;
    std::vector<std::string> skip;
    std::array<double, 3> beta_range{};
    std::array<double, 3> delta_range{};
};

void add_common(CLI::App& app, Options& o)
{
    auto& c = o.config;
    app.add_option("--nmax", c.nmax, "Sieve limit")->capture_default_str();
    app.add_option("--disc", c.discs, "Discriminants D (character of -D)")->delimiter(',');
    app.add_option("--beta", c.betas, "Real parts of the hypothetical zeros")->delimiter(',');
    app.add_option("--gamma", c.gammas, "Ordinates of the hypothetical zeros")->delimiter(',');
    app.add_option("--u-desk", c.u_desk, "Desk-scale U values (U^12 <= nmax)")->delimiter(',');
    app.add_option("--q", c.qs, "Primes for the Ramanujan-sum checks")->delimiter(',');
    app.add_option("--rho-modulus", c.rho_modulus, "Modulus injected for |rho| in large-ordinate bounds")
        ->capture_default_str();
    app.add_option("--tolerance", c.tolerance, "Absolute tolerance for analytic identities")->capture_default_str();
    app.add_option("--seed", c.seed, "Seed for sampled property checks")->capture_default_str();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--out", o.out, "Output file (default: stdout)");
    app.add_flag("--timing", c.timing, "Record per-section wall time");
}

int run(int argc, char** argv)
{
    Options o;
    CLI::App app{"Desk-scale numerical checks of a lower bound for L(1, chi) from an off-line zeta zero"};
    app.require_subcommand(1);
    app.fallthrough();
    add_common(app, o);

    struct Named {
        const char* name;
        const char* help;
    };
    const std::vector<Named> single{
        {"identities", "Exact convolution identities and basic series"},
        {"lemma1", "Main-factor constant and the square-sum lower bound"},
        {"lemma2", "Summation by parts, Polya-Vinogradov and the inner-sum bound"},
        {"sigma", "Sigma decomposition and hyperbola estimates"},
        {"threshold", "The 1/50 threshold chain at true scale"},
        {"bound", "Theorem bound and L(1, chi) reference values"},
        {"general-q", "Ramanujan sums and the general-q main factor"},
    };
    std::vector<CLI::App*> subs;
    for (const auto& s : single)
        subs.push_back(app.add_subcommand(s.name, s.help));
    CLI::App* all = app.add_subcommand("all", "Every section in order");
    all->add_option("--skip", o.skip, "Sections to leave out")->delimiter(',');
    CLI::App* scan = app.add_subcommand("scan", "Closed-form grid scan of the main factors");
    o.beta_range = {o.config.scan.beta_lo, o.config.scan.beta_hi, o.config.scan.beta_step};
    o.delta_range = {o.config.scan.delta_lo, o.config.scan.delta_hi, o.config.scan.delta_step};
    scan->add_option("--beta-range", o.beta_range, "lo,hi,step")->delimiter(',');
    scan->add_option("--delta-range", o.delta_range, "lo,hi,step (|delta|)")->delimiter(',');
    scan->add_option("--scan-u", o.config.scan.U, "U for the theorem-bound column")->capture_default_str();
    scan->add_option("--q-beta", o.config.scan.q_beta, "beta of the fixed zero for the q rows")->capture_default_str();
    scan->add_option("--q-gamma", o.config.scan.q_gamma, "gamma of the fixed zero for the q rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? deuring::kExitOk : deuring::kExitUsage;
    }

    auto& cfg = o.config;
    const deuring::Format format = deuring::format_from_string(o.format);
    deuring::ReportDocument doc;
    if (scan->parsed()) {
        cfg.scan.beta_lo = o.beta_range[0];
        cfg.scan.beta_hi = o.beta_range[1];
        cfg.scan.beta_step = o.beta_range[2];
        cfg.scan.delta_lo = o.delta_range[0];
        cfg.scan.delta_hi = o.delta_range[1];
        cfg.scan.delta_step = o.delta_range[2];
        doc = deuring::scan_grid(cfg);
    } else {
        if (all->parsed()) {
            cfg.sections = deuring::all_sections();
            for (const auto& name : o.skip) {
                const deuring::Section s = deuring::section_from_string(name);
                cfg.sections.erase(std::remove(cfg.sections.begin(), cfg.sections.end(), s), cfg.sections.end());
            }
        } else {
            for (std::size_t i = 0; i < subs.size(); ++i)
                if (subs[i]->parsed())
                    cfg.sections = {deuring::section_from_string(single[i].name)};
        }
        doc = deuring::run_suite(cfg);
    }

    if (o.out.empty())
        std::cout << deuring::emit(doc, format);
    else
        deuring::emit_to_file(doc, format, o.out);
    return doc.exit_code();
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const deuring::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return deuring::kExitInvariant;
    } catch (const deuring::IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return deuring::kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return deuring::kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return deuring::kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return deuring::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return deuring::kExitInvariant;
    }
}
