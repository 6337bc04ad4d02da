#pragma once

#include <dilogid/registry.hpp>

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace dilogid {

namespace detail {

inline std::string json_number(double x)
{
    if (!std::isfinite(x)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string json_pair(complex z) { return "[" + json_number(z.real()) + "," + json_number(z.imag()) + "]"; }

inline std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

inline std::string fixed_digits(double x, int digits)
{
    if (std::isnan(x)) return "nan";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

inline std::string table_complex(complex z)
{
    if (z.imag() == 0.0) return fixed_digits(z.real(), 12);
    return fixed_digits(z.real(), 12) + (std::signbit(z.imag()) ? "-" : "+") + fixed_digits(std::fabs(z.imag()), 12) + "i";
}

}  // namespace detail

inline std::string to_jsonl(const verification_result& r)
{
    using namespace detail;
    std::string s = "{\"id\":" + json_string(r.id) + ",\"title\":" + json_string(r.title) + ",\"anchor\":" + json_string(r.anchor) +
                    ",\"params\":{";
    for (std::size_t i = 0; i < r.params.size(); ++i)
        s += (i ? "," : "") + json_string(r.params[i].first) + ":" + json_pair(r.params[i].second);
    s += "},\"lhs\":" + json_pair(r.lhs) + ",\"rhs\":" + json_pair(r.rhs) + ",\"abs_residual\":" + json_number(r.abs_residual) +
         ",\"rel_residual\":" + json_number(r.rel_residual) + ",\"tol\":" + json_number(r.tol) +
         ",\"pass\":" + (r.pass ? "true" : "false") + ",\"diagnostics\":" + json_string(r.diagnostics) + "}";
    return s;
}

inline void write_jsonl(std::ostream& os, const std::vector<verification_result>& results)
{
    for (const auto& r : results) os << to_jsonl(r) << '\n';
}

inline void write_table(std::ostream& os, const std::vector<verification_result>& results)
{
    char line[512];
    std::snprintf(line, sizeof line, "%-6s %3s %-26s %-38s %-38s %-19s %-6s %s\n", "id", "#", "params", "lhs", "rhs", "abs_residual",
                  "status", "diagnostics");
    os << line;
    for (const auto& r : results) {
        std::string params;
        for (const auto& [k, v] : r.params) params += (params.empty() ? "" : " ") + k + "=" + detail::table_complex(v);
        const char* status = r.pass ? "pass" : "FAIL";
        if (r.stress || r.informational) status = r.pass ? "pass*" : "fail*";
        std::snprintf(line, sizeof line, "%-6s %3zu %-26s %-38s %-38s %-19s %-6s %s\n", r.id.c_str(), r.sample_index, params.c_str(),
                      detail::table_complex(r.lhs).c_str(), detail::table_complex(r.rhs).c_str(),
                      detail::fixed_digits(r.abs_residual, 12).c_str(), status, r.diagnostics.c_str());
        os << line;
    }
}

}  // namespace dilogid
