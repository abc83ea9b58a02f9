#include "deuring/emit.hpp"
#include "deuring/errors.hpp"
#include "deuring/suite.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

using namespace deuring;

namespace {

ReportDocument sample()
{
    ReportDocument doc;
    doc.config = {{"nmax", "1000"}};
    doc.checks.push_back(
        CheckReport::at_most("a.first", "lemma1", 0.1, 1.0 / 3.0).with("beta", 0.875).with("pi", M_PI));
    doc.checks.push_back(CheckReport::close("a.second", "identities", 1e-300, 2.5e-17, 1e-6));
    doc.checks.push_back(CheckReport::informational("a.third, quoted \"name\"", "bound", 3, 2, -1));
    doc.checks.back().with("nan", std::numeric_limits<double>::quiet_NaN());
    doc.checks.push_back(CheckReport::at_most("a.fails", "sigma", 2.0, 1.0));
    return doc;
}

} // namespace

TEST(CheckReport, Semantics)
{
    const auto a = CheckReport::at_most("x", "y", 1.0, 2.0);
    EXPECT_EQ(a.status, Status::pass);
    EXPECT_DOUBLE_EQ(a.margin, 1.0);
    EXPECT_TRUE(CheckReport::at_most("x", "y", 2.0, 1.0).failed());
    EXPECT_EQ(CheckReport::at_most("x", "y", 2.0, 1.0, 1.5).status, Status::pass);
    const auto c = CheckReport::close("x", "y", 1.0, 1.1, 0.5);
    EXPECT_NEAR(c.margin, 0.4, 1e-15);
    EXPECT_EQ(status_from_string("info"), Status::info);
    EXPECT_THROW((void)status_from_string("maybe"), ArgumentError);
}

TEST(Emit, EmptyReport)
{
    ReportDocument doc;
    const std::string json = emit(doc, Format::json);
    EXPECT_NE(json.find("\"checks\": []"), std::string::npos);
    EXPECT_NE(json.find("\"summary\": {\"pass\": 0, \"fail\": 0, \"info\": 0, \"total\": 0}"), std::string::npos);
    EXPECT_EQ(doc.exit_code(), kExitOk);
}

TEST(Emit, JsonRoundTripIsExact)
{
    const ReportDocument doc = sample();
    const ReportDocument back = parse_report(emit(doc, Format::json));
    ASSERT_EQ(back.checks.size(), doc.checks.size());
    for (std::size_t i = 0; i < doc.checks.size(); ++i) {
        const auto& a = doc.checks[i];
        const auto& b = back.checks[i];
        EXPECT_EQ(a.name, b.name);
        EXPECT_EQ(a.anchor, b.anchor);
        EXPECT_EQ(a.lhs, b.lhs);
        EXPECT_EQ(a.rhs, b.rhs);
        EXPECT_EQ(a.margin, b.margin);
        EXPECT_EQ(a.status, b.status);
        EXPECT_EQ(a.tolerance, b.tolerance);
        ASSERT_EQ(a.params.size(), b.params.size());
        for (const auto& [k, v] : a.params) {
            if (std::isnan(v))
                EXPECT_TRUE(std::isnan(b.params.at(k)));
            else
                EXPECT_EQ(v, b.params.at(k));
        }
    }
    EXPECT_EQ(back.tool, kToolVersion);
}

TEST(Emit, TableRoundTrip)
{
    ReportDocument doc;
    doc.table = Table{{"q", "factor"}, {{2.0, 0.1}, {3.0, 1.0 / 7.0}}};
    const auto back = parse_report(emit(doc, Format::json));
    ASSERT_TRUE(back.table.has_value());
    EXPECT_EQ(back.table->rows, doc.table->rows);
    EXPECT_EQ(back.table->columns, doc.table->columns);
    const std::string csv = emit(doc, Format::csv);
    EXPECT_EQ(csv, "q,factor\n2,0.10000000000000001\n3,0.14285714285714285\n");
}

TEST(Emit, CsvHasHeaderPlusOneRowPerCheck)
{
    const ReportDocument doc = sample();
    const std::string csv = emit(doc, Format::csv);
    std::size_t lines = 0;
    bool in_quotes = false;
    for (const char c : csv) {
        if (c == '"')
            in_quotes = !in_quotes;
        if (c == '\n' && !in_quotes)
            ++lines;
    }
    EXPECT_EQ(lines, doc.checks.size() + 1);
    EXPECT_EQ(csv.rfind("name,anchor,lhs,rhs,margin,status,tolerance,params\n", 0), 0u);
}

TEST(Emit, SeventeenDigits)
{
    EXPECT_EQ(json_number(0.1), "0.10000000000000001");
    EXPECT_EQ(json_number(std::numeric_limits<double>::infinity()), "null");
    EXPECT_EQ(std::stod(json_number(M_PI)), M_PI);
}

TEST(Emit, SummaryAndExitCode)
{
    const ReportDocument doc = sample();
    const Summary s = doc.summary();
    EXPECT_EQ(s.pass, 2u);
    EXPECT_EQ(s.fail, 1u);
    EXPECT_EQ(s.info, 1u);
    EXPECT_EQ(doc.exit_code(), kExitCheckFailed);
}

TEST(Emit, UnwritablePath)
{
    EXPECT_THROW(emit_to_file(sample(), Format::json, "/nonexistent-dir/x/report.json"), IoError);
    const auto path = std::filesystem::temp_directory_path() / "deuring_emit_test.json";
    emit_to_file(sample(), Format::json, path);
    std::ifstream in(path);
    const std::string text((std::istreambuf_iterator<char>(in)), {});
    EXPECT_EQ(text, emit(sample(), Format::json));
    std::filesystem::remove(path);
}

TEST(Emit, FormatNames)
{
    EXPECT_EQ(format_from_string("json"), Format::json);
    EXPECT_EQ(format_from_string("csv"), Format::csv);
    EXPECT_THROW((void)format_from_string("xml"), ArgumentError);
    EXPECT_THROW((void)parse_report("{oops"), ArgumentError);
}

TEST(Suite, ValidationNamesTheProblem)
{
    SuiteConfig c;
    c.discs = {4, 12};
    try {
        c.validate();
        FAIL();
    } catch (const ArgumentError& e) {
        EXPECT_NE(std::string(e.what()).find("-12"), std::string::npos);
    }
    SuiteConfig q;
    q.qs = {2, 9};
    EXPECT_THROW(q.validate(), ArgumentError);
    SuiteConfig small;
    small.nmax = 1000;
    EXPECT_THROW(small.validate(), ArgumentError);
    SuiteConfig beta;
    beta.betas = {1.2};
    EXPECT_THROW(beta.validate(), ArgumentError);
    EXPECT_NO_THROW(SuiteConfig{}.validate());
    EXPECT_THROW((void)section_from_string("lemma3"), ArgumentError);
}

TEST(Suite, EmptySelection)
{
    SuiteConfig c;
    c.sections.clear();
    const auto doc = run_suite(c);
    EXPECT_TRUE(doc.checks.empty());
    EXPECT_EQ(doc.exit_code(), kExitOk);
    EXPECT_NE(emit(doc, Format::json).find("\"checks\": []"), std::string::npos);
}

TEST(Suite, ThresholdSectionEchoesSeedAndAnchors)
{
    SuiteConfig c;
    c.sections = {Section::threshold};
    const auto doc = run_suite(c);
    EXPECT_EQ(doc.exit_code(), kExitOk);
    for (const auto& r : doc.checks)
        EXPECT_EQ(r.anchor, "threshold");
    const std::string json = emit(doc, Format::json);
    EXPECT_NE(json.find("\"seed\": 20240601"), std::string::npos);
    EXPECT_EQ(json.find("timing"), std::string::npos);
}

TEST(Suite, IdentitiesSectionPassesAtSmallScale)
{
    SuiteConfig c;
    c.nmax = 20'000;
    c.sections = {Section::identities, Section::general_q};
    const auto doc = run_suite(c);
    EXPECT_EQ(doc.summary().fail, 0u);
    EXPECT_GT(doc.summary().pass, 10u);
}

TEST(Scan, SinglePointGivesSingleRow)
{
    SuiteConfig c;
    c.qs.clear();
    c.scan.beta_lo = c.scan.beta_hi = 0.9;
    c.scan.delta_lo = c.scan.delta_hi = 1.0;
    const auto doc = scan_grid(c);
    ASSERT_TRUE(doc.table.has_value());
    EXPECT_EQ(doc.table->rows.size(), 1u);
    const std::string csv = emit(doc, Format::csv);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
}

TEST(Scan, CoarseGridAndQRows)
{
    SuiteConfig c;
    c.scan.beta_step = 1e-2;
    c.scan.delta_step = 1e-2;
    const auto doc = scan_grid(c);
    ASSERT_FALSE(doc.checks.empty());
    EXPECT_EQ(doc.checks.front().name, "scan.main_factor_min");
    EXPECT_EQ(doc.checks.front().status, Status::pass);
    EXPECT_GT(doc.checks.front().rhs, 0.04);
    std::size_t q_rows = 0;
    for (const auto& row : doc.table->rows)
        q_rows += row[0] != 2.0;
    EXPECT_EQ(q_rows, 4u);
    SuiteConfig bad;
    bad.scan.beta_lo = 0.2;
    EXPECT_THROW((void)scan_grid(bad), ArgumentError);
}
