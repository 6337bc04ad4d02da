#pragma once

#include <dilogid/errors.hpp>
#include <dilogid/numerics.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dilogid {

using param_map = std::vector<std::pair<std::string, complex>>;

inline complex param(const param_map& p, std::string_view name)
{
    for (const auto& [k, v] : p)
        if (k == name) return v;
    throw domain_error(std::string(name), "missing parameter " + std::string(name));
}

inline double real_param(const param_map& p, std::string_view name) { return param(p, name).real(); }

inline int int_param(const param_map& p, std::string_view name) { return static_cast<int>(std::lround(param(p, name).real())); }

struct sample {
    param_map params;
    bool stress = false;
};

enum class domain_kind { complex_minus_ray, real_interval, integer_range, composite };

inline const char* to_string(domain_kind k)
{
    switch (k) {
    case domain_kind::complex_minus_ray: return "complex_minus_ray";
    case domain_kind::real_interval: return "real_interval";
    case domain_kind::integer_range: return "integer_range";
    default: return "composite";
    }
}

struct parameter_domain {
    domain_kind kind = domain_kind::composite;
    std::string description;
    // Throws domain_error naming the offending parameter.
    std::function<void(const param_map&)> validate;
    // Interior point; empty function when the domain has no free parameters.
    std::function<param_map(std::mt19937_64&)> draw;
};

struct estimate {
    complex value{};
    double error_estimate = 0.0;
    std::string note;
};

using lhs_evaluator = std::function<estimate(const param_map&, double)>;
using rhs_evaluator = std::function<complex(const param_map&)>;

struct identity_record {
    std::string id;
    std::string title;
    std::string anchor;
    parameter_domain domain;
    lhs_evaluator lhs;
    rhs_evaluator rhs;
    std::vector<sample> samples;
    double default_tol = 1e-9;
    // Printed variants kept for reference; never counted in the exit status.
    bool informational = false;
    std::string note;
};

namespace detail {

// Excluded segment of the real axis, e.g. (-inf, -1) or [0, inf).
struct real_ray {
    double lo, hi;
    bool lo_closed, hi_closed;
};

inline std::string ray_text(const real_ray& r)
{
    auto end = [](double x) {
        if (std::isinf(x)) return std::string(x < 0 ? "−∞" : "∞");
        return x < 0 ? "−" + format_number(-x) : format_number(x);
    };
    std::string t;
    t += (r.lo_closed && !std::isinf(r.lo)) ? "[" : "(";
    t += end(r.lo) + ", " + end(r.hi);
    t += (r.hi_closed && !std::isinf(r.hi)) ? "]" : ")";
    return t;
}

inline bool on_ray(complex a, const real_ray& r)
{
    if (a.imag() != 0.0) return false;
    double x = a.real();
    bool above = r.lo_closed ? x >= r.lo : x > r.lo;
    bool below = r.hi_closed ? x <= r.hi : x < r.hi;
    return above && below;
}

inline double distance_to_ray(complex a, const real_ray& r)
{
    double x = std::clamp(a.real(), r.lo, r.hi);
    return std::abs(a - complex(x, 0.0));
}

inline std::string rays_text(const std::vector<real_ray>& rays)
{
    std::string t;
    for (std::size_t i = 0; i < rays.size(); ++i) t += (i ? " ∪ " : "") + ray_text(rays[i]);
    return t;
}

}  // namespace detail

struct complex_domain_options {
    double max_modulus = std::numeric_limits<double>::infinity();
    std::vector<complex> excluded_points;
    double draw_radius = 2.0;
};

// name ∈ ℂ minus the given real rays (and optionally outside a disk or at isolated points).
inline parameter_domain complex_minus_rays(std::string name, std::vector<detail::real_ray> rays, complex_domain_options opt = {})
{
    parameter_domain d;
    d.kind = domain_kind::complex_minus_ray;
    d.description = name + " ∈ ℂ";
    if (rays.size() == 1) d.description += "∖" + detail::rays_text(rays);
    if (rays.size() > 1) d.description += "∖(" + detail::rays_text(rays) + ")";
    if (std::isfinite(opt.max_modulus)) d.description += ", |" + name + "| ≤ " + detail::format_number(opt.max_modulus);
    for (auto p : opt.excluded_points) d.description += ", " + name + " ≠ " + detail::format_number(p);
    d.validate = [name, rays, opt](const param_map& p) {
        complex a = param(p, name);
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw domain_error(name, name + " = " + detail::format_number(a) + ": not finite");
        for (const auto& r : rays)
            if (detail::on_ray(a, r))
                throw domain_error(name, name + " = " + detail::format_number(a) + ": " + detail::ray_text(r) + " excluded");
        if (std::abs(a) > opt.max_modulus)
            throw domain_error(name, name + " = " + detail::format_number(a) + ": |" + name + "| > " + detail::format_number(opt.max_modulus) + " excluded");
        for (auto q : opt.excluded_points)
            if (a == q) throw domain_error(name, name + " = " + detail::format_number(a) + ": point excluded");
    };
    d.draw = [name, rays, opt](std::mt19937_64& rng) {
        double radius = std::min(opt.draw_radius, 0.95 * opt.max_modulus);
        std::uniform_real_distribution<double> u(-radius, radius);
        for (;;) {
            complex a(u(rng), u(rng));
            if (std::abs(a) > radius || std::abs(a) < 1e-2) continue;
            bool ok = true;
            for (const auto& r : rays) ok = ok && detail::distance_to_ray(a, r) >= 1e-3;
            for (auto q : opt.excluded_points) ok = ok && std::abs(a - q) >= 1e-3;
            if (ok) return param_map{{name, a}};
        }
    };
    return d;
}

inline parameter_domain real_interval(std::string name, double lo, double hi, bool lo_closed, bool hi_closed)
{
    parameter_domain d;
    d.kind = domain_kind::real_interval;
    d.description = name + " ∈ " + std::string(lo_closed ? "[" : "(") + detail::format_number(lo) + ", " + detail::format_number(hi) +
                    (hi_closed ? "]" : ")");
    d.validate = [=](const param_map& p) {
        complex a = param(p, name);
        bool inside = a.imag() == 0.0 && (lo_closed ? a.real() >= lo : a.real() > lo) && (hi_closed ? a.real() <= hi : a.real() < hi);
        if (!inside) throw domain_error(name, name + " = " + detail::format_number(a) + ": outside " + d.description);
    };
    d.draw = [=](std::mt19937_64& rng) {
        std::uniform_real_distribution<double> u(lo + 1e-3, hi - 1e-3);
        return param_map{{name, complex(u(rng), 0.0)}};
    };
    return d;
}

inline parameter_domain integer_range(std::string name, int lo, int hi)
{
    parameter_domain d;
    d.kind = domain_kind::integer_range;
    d.description = name + " ∈ {" + std::to_string(lo) + ", …, " + std::to_string(hi) + "}";
    d.validate = [=](const param_map& p) {
        complex a = param(p, name);
        if (a.imag() != 0.0 || a.real() != std::floor(a.real()) || a.real() < lo || a.real() > hi)
            throw domain_error(name, name + " = " + detail::format_number(a) + ": outside " + d.description);
    };
    d.draw = [=](std::mt19937_64& rng) {
        std::uniform_int_distribution<int> u(lo, hi);
        return param_map{{name, complex(u(rng), 0.0)}};
    };
    return d;
}

inline parameter_domain no_parameters()
{
    parameter_domain d;
    d.kind = domain_kind::composite;
    d.description = "no parameters";
    d.validate = [](const param_map&) {};
    return d;
}

// Several named parameters; validate is supplied by the caller, draw picks from a fixed list.
inline parameter_domain composite(std::string description, std::function<void(const param_map&)> validate,
                                  std::vector<param_map> pool = {})
{
    parameter_domain d;
    d.kind = domain_kind::composite;
    d.description = std::move(description);
    d.validate = std::move(validate);
    if (!pool.empty())
        d.draw = [pool](std::mt19937_64& rng) {
            std::uniform_int_distribution<std::size_t> u(0, pool.size() - 1);
            return pool[u(rng)];
        };
    return d;
}

struct verification_result {
    std::string id;
    std::string title;
    std::string anchor;
    std::size_t sample_index = 0;
    param_map params;
    complex lhs{std::nan(""), std::nan("")};
    complex rhs{std::nan(""), std::nan("")};
    double abs_residual = std::nan("");
    double rel_residual = std::nan("");
    double lhs_error_estimate = 0.0;
    double tol = 0.0;
    bool pass = false;
    bool stress = false;
    bool informational = false;
    std::string diagnostics;
};

inline bool passes(double abs_residual, double tol, double lhs_error_estimate)
{
    return abs_residual <= std::max(tol, 10.0 * lhs_error_estimate);
}

}  // namespace dilogid
