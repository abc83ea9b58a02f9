#pragma once

#include <map>
#include <string>
#include <string_view>

namespace deuring {

enum class Status { pass, fail, info };

std::string_view to_string(Status s) noexcept;
Status status_from_string(std::string_view s);

// Outcome of one verification. `margin` is signed so that a positive value
// means the inequality holds with room to spare; for equalities it is
// tolerance - |lhs - rhs|. Informational reports never fail a suite.
struct CheckReport {
    std::string name;
    std::string anchor;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    Status status = Status::info;
    double tolerance = 0.0;
    std::map<std::string, double> params;

    // Asserted lhs <= rhs + tolerance.
    static CheckReport at_most(std::string name, std::string anchor, double lhs, double rhs,
                               double tolerance = 0.0);
    // Asserted |lhs - rhs| <= tolerance.
    static CheckReport close(std::string name, std::string anchor, double lhs, double rhs, double tolerance);
    static CheckReport informational(std::string name, std::string anchor, double lhs, double rhs,
                                     double margin = 0.0);

    CheckReport& with(std::string key, double value)
    {
        params[std::move(key)] = value;
        return *this;
    }

    // Demote an asserted result to informational, keeping the margin.
    CheckReport& as_info()
    {
        status = Status::info;
        return *this;
    }

    [[nodiscard]] bool failed() const noexcept { return status == Status::fail; }
};

} // namespace deuring
