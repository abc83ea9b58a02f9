#pragma once

#include "deuring/suite.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace deuring {

enum class Format { json, csv };

// ArgumentError unless name is "json" or "csv".
Format format_from_string(std::string_view name);

// %.17g, or null for a non-finite value.
std::string json_number(double v);

// Floats use 17 significant digits, so a parse restores them exactly.
// Non-finite values become null in JSON and an empty field in CSV.
std::string emit(const ReportDocument& doc, Format format);
// IoError when the path cannot be written.
void emit_to_file(const ReportDocument& doc, Format format, const std::filesystem::path& path);

// Reads the "checks" (and "table", when present) back from emitted JSON.
ReportDocument parse_report(std::string_view json);

} // namespace deuring
