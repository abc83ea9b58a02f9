#pragma once

#include "deuring/check_report.hpp"

#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace deuring {

inline constexpr const char* kToolVersion = "deuring-verify 1.0.0";

enum class Section { identities, lemma1, lemma2, sigma, threshold, bound, general_q };

std::string_view to_string(Section s) noexcept;
// ArgumentError for an unknown name.
Section section_from_string(std::string_view name);
// Every section in execution order.
std::vector<Section> all_sections();

struct ScanConfig {
    double beta_lo = 0.875;
    double beta_hi = 1.0;
    double beta_step = 1e-3;
    double delta_lo = std::numbers::pi / 100.0;
    double delta_hi = std::numbers::pi;
    double delta_step = 1e-3;
    // U used for the theorem-bound column.
    double U = 1e16;
    // Fixed zero for the q rows; gamma defaults to pi / log 2.
    double q_beta = 0.875;
    double q_gamma = std::numbers::pi / std::numbers::ln2;
};

struct SuiteConfig {
    std::uint64_t nmax = 1'000'000;
    std::vector<std::uint64_t> discs{4, 8, 20, 24};
    std::vector<double> betas{0.875, 0.9};
    std::vector<double> gammas{3.0, 5.0};
    std::vector<double> u_desk{2.0, 3.0};
    std::vector<std::uint64_t> qs{2, 3, 5, 7, 11};
    double rho_modulus = 2.4e12;
    double tolerance = 1e-6;
    std::uint64_t seed = 20240601;
    std::vector<Section> sections = all_sections();
    bool timing = false;
    ScanConfig scan;

    // ArgumentError naming the first offending field or value.
    void validate() const;
};

// Plot-ready rows of a grid scan.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct Summary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t info = 0;
    [[nodiscard]] std::size_t total() const noexcept { return pass + fail + info; }
};

struct ReportDocument {
    std::string tool = kToolVersion;
    // Ordered echo of the configuration, each value already serialized as JSON.
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<CheckReport> checks;
    std::optional<Table> table;
    // Section name -> seconds; filled only when timing was requested.
    std::vector<std::pair<std::string, double>> timing;

    [[nodiscard]] Summary summary() const noexcept;
    // 0 when no asserted check failed, 1 otherwise.
    [[nodiscard]] int exit_code() const noexcept;
};

ReportDocument run_suite(const SuiteConfig& config);
ReportDocument scan_grid(const SuiteConfig& config);

// Exit codes of the command-line driver.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;
inline constexpr int kExitIo = 4;

// Directory named by DEURING_SIEVE_CACHE, if set and non-empty.
std::optional<std::string> sieve_cache_dir();

} // namespace deuring
