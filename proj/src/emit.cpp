#include "deuring/emit.hpp"

#include "deuring/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace deuring {

namespace {

std::string json_string(std::string_view s)
{
    std::string out = "\"";
    for (const char c : s) {
        switch (c) {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += "\\n";
            break;
        case '\t':
            out += "\\t";
            break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out + "\"";
}

std::string csv_number(double v)
{
    return std::isfinite(v) ? json_number(v) : std::string();
}

std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\n") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void emit_check(std::string& out, const CheckReport& c)
{
    out += "    {\"name\": " + json_string(c.name);
    out += ", \"anchor\": " + json_string(c.anchor);
    out += ", \"lhs\": " + json_number(c.lhs);
    out += ", \"rhs\": " + json_number(c.rhs);
    out += ", \"margin\": " + json_number(c.margin);
    out += ", \"status\": " + json_string(to_string(c.status));
    out += ", \"tolerance\": " + json_number(c.tolerance);
    out += ", \"params\": {";
    bool first = true;
    for (const auto& [k, v] : c.params) {
        out += (first ? "" : ", ") + json_string(k) + ": " + json_number(v);
        first = false;
    }
    out += "}}";
}

std::string emit_json(const ReportDocument& doc)
{
    std::string out = "{\n";
    out += "  \"tool\": " + json_string(doc.tool) + ",\n";
    out += "  \"config\": {";
    for (std::size_t i = 0; i < doc.config.size(); ++i)
        out += (i ? ", " : "") + json_string(doc.config[i].first) + ": " + doc.config[i].second;
    out += "},\n";

    out += "  \"checks\": [";
    for (std::size_t i = 0; i < doc.checks.size(); ++i) {
        out += i ? ",\n" : "\n";
        emit_check(out, doc.checks[i]);
    }
    out += doc.checks.empty() ? "],\n" : "\n  ],\n";

    const Summary s = doc.summary();
    out += "  \"summary\": {\"pass\": " + std::to_string(s.pass) + ", \"fail\": " + std::to_string(s.fail) +
           ", \"info\": " + std::to_string(s.info) + ", \"total\": " + std::to_string(s.total()) + "}";

    if (doc.table) {
        out += ",\n  \"table\": {\"columns\": [";
        for (std::size_t i = 0; i < doc.table->columns.size(); ++i)
            out += (i ? ", " : "") + json_string(doc.table->columns[i]);
        out += "], \"rows\": [";
        for (std::size_t r = 0; r < doc.table->rows.size(); ++r) {
            out += r ? ",\n    [" : "\n    [";
            const auto& row = doc.table->rows[r];
            for (std::size_t i = 0; i < row.size(); ++i)
                out += (i ? ", " : "") + json_number(row[i]);
            out += "]";
        }
        out += doc.table->rows.empty() ? "]}" : "\n  ]}";
    }
    if (!doc.timing.empty()) {
        out += ",\n  \"timing_seconds\": {";
        for (std::size_t i = 0; i < doc.timing.size(); ++i)
            out += (i ? ", " : "") + json_string(doc.timing[i].first) + ": " + json_number(doc.timing[i].second);
        out += "}";
    }
    out += "\n}\n";
    return out;
}

std::string emit_csv(const ReportDocument& doc)
{
    std::string out;
    if (doc.table) {
        for (std::size_t i = 0; i < doc.table->columns.size(); ++i)
            out += (i ? "," : "") + csv_field(doc.table->columns[i]);
        out += "\n";
        for (const auto& row : doc.table->rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out += (i ? "," : "") + csv_number(row[i]);
            out += "\n";
        }
        return out;
    }
    out = "name,anchor,lhs,rhs,margin,status,tolerance,params\n";
    for (const auto& c : doc.checks) {
        std::string params;
        for (const auto& [k, v] : c.params)
            params += (params.empty() ? "" : ";") + k + "=" + csv_number(v);
        out += csv_field(c.name) + "," + csv_field(c.anchor) + "," + csv_number(c.lhs) + "," + csv_number(c.rhs) +
               "," + csv_number(c.margin) + "," + std::string(to_string(c.status)) + "," + csv_number(c.tolerance) +
               "," + csv_field(params) + "\n";
    }
    return out;
}

double number_or_nan(const nlohmann::json& j)
{
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

} // namespace

std::string json_number(double v)
{
    if (!std::isfinite(v))
        return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Format format_from_string(std::string_view name)
{
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    throw ArgumentError("unknown format '" + std::string(name) + "' (expected json or csv)");
}

std::string emit(const ReportDocument& doc, Format format)
{
    return format == Format::json ? emit_json(doc) : emit_csv(doc);
}

void emit_to_file(const ReportDocument& doc, Format format, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out << emit(doc, format);
    out.close();
    if (!out)
        throw IoError("failed writing '" + path.string() + "'");
}

ReportDocument parse_report(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ArgumentError(std::string("report is not valid JSON: ") + e.what());
    }
    ReportDocument doc;
    doc.tool = j.value("tool", std::string());
    if (j.contains("config"))
        for (const auto& [k, v] : j.at("config").items())
            doc.config.emplace_back(k, v.dump());
    for (const auto& c : j.at("checks")) {
        CheckReport r;
        r.name = c.at("name").get<std::string>();
        r.anchor = c.at("anchor").get<std::string>();
        r.lhs = number_or_nan(c.at("lhs"));
        r.rhs = number_or_nan(c.at("rhs"));
        r.margin = number_or_nan(c.at("margin"));
        r.status = status_from_string(c.at("status").get<std::string>());
        r.tolerance = number_or_nan(c.at("tolerance"));
        for (const auto& [k, v] : c.at("params").items())
            r.params[k] = number_or_nan(v);
        doc.checks.push_back(std::move(r));
    }
    if (j.contains("table")) {
        Table t;
        for (const auto& c : j.at("table").at("columns"))
            t.columns.push_back(c.get<std::string>());
        for (const auto& row : j.at("table").at("rows")) {
            std::vector<double> values;
            for (const auto& v : row)
                values.push_back(number_or_nan(v));
            t.rows.push_back(std::move(values));
        }
        doc.table = std::move(t);
    }
    if (j.contains("timing_seconds"))
        for (const auto& [k, v] : j.at("timing_seconds").items())
            doc.timing.emplace_back(k, v.get<double>());
    return doc;
}

} // namespace deuring
