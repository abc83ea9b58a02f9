#include "deuring/check_report.hpp"

#include "deuring/errors.hpp"

#include <cmath>

namespace deuring {

std::string_view to_string(Status s) noexcept
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::info:
        return "info";
    }
    return "info";
}

Status status_from_string(std::string_view s)
{
    if (s == "pass")
        return Status::pass;
    if (s == "fail")
        return Status::fail;
    if (s == "info")
        return Status::info;
    throw ArgumentError("unknown status '" + std::string(s) + "'");
}

CheckReport CheckReport::at_most(std::string name, std::string anchor, double lhs, double rhs, double tolerance)
{
    CheckReport r;
    r.name = std::move(name);
    r.anchor = std::move(anchor);
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tolerance;
    r.margin = rhs - lhs;
    r.status = (lhs <= rhs + tolerance) ? Status::pass : Status::fail;
    return r;
}

CheckReport CheckReport::close(std::string name, std::string anchor, double lhs, double rhs, double tolerance)
{
    CheckReport r;
    r.name = std::move(name);
    r.anchor = std::move(anchor);
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tolerance;
    r.margin = tolerance - std::abs(lhs - rhs);
    r.status = (std::abs(lhs - rhs) <= tolerance) ? Status::pass : Status::fail;
    return r;
}

CheckReport CheckReport::informational(std::string name, std::string anchor, double lhs, double rhs, double margin)
{
    CheckReport r;
    r.name = std::move(name);
    r.anchor = std::move(anchor);
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = margin;
    r.status = Status::info;
    return r;
}

} // namespace deuring
