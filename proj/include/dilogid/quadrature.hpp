#pragma once

#include <dilogid/detail/summation.hpp>
#include <dilogid/errors.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <type_traits>

namespace dilogid {

template <class T>
struct quadrature_result {
    T value{};
    double error_estimate = 0.0;
    long long evaluations = 0;
    bool converged = false;
    int level = 0;
};

struct quadrature_options {
    int max_level = 12;
    int min_level = 3;
};

namespace detail {

template <class T>
struct accumulator_for {
    using type = neumaier;
};
template <>
struct accumulator_for<std::complex<double>> {
    using type = complex_neumaier;
};

inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(std::complex<double> z) { return std::fabs(z.real()) + std::fabs(z.imag()); }

// Integrands may take (x) or (x, x - lo, hi - x); the second form receives
// endpoint distances computed without cancellation.
template <class F>
auto call_with_distances(F& f, double x, double from_lo, double from_hi)
{
    if constexpr (std::is_invocable_v<F&, double, double, double>)
        return f(x, from_lo, from_hi);
    else
        return f(x);
}

template <class F>
using finite_value_t = std::decay_t<decltype(call_with_distances(std::declval<F&>(), 0.0, 0.0, 0.0))>;

template <class T>
bool is_finite_value(const T& v)
{
    if constexpr (std::is_same_v<T, double>)
        return std::isfinite(v);
    else
        return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// Shared level loop. node_sum(h, offset, step) must add the weighted
// integrand at t = offset + k*step for all admissible k and return the number
// of evaluations; sums are returned through the accumulators.
template <class T, class NodeSum>
quadrature_result<T> double_exponential(NodeSum&& node_sum, double scale, double tol, const quadrature_options& opt)
{
    using acc_t = typename accumulator_for<T>::type;
    acc_t total;
    neumaier l1;
    quadrature_result<T> r;
    T previous{};
    double h = 1.0;
    for (int level = 0; level <= opt.max_level; ++level) {
        if (level == 0)
            r.evaluations += node_sum(total, l1, 0.0, 1.0);
        else
            r.evaluations += node_sum(total, l1, h, 2.0 * h);
        T current = total.value() * (scale * h);
        r.level = level;
        r.value = current;
        if (level > 0) {
            r.error_estimate = magnitude(current - previous);
            double floor = 64.0 * std::numeric_limits<double>::epsilon() * l1.value() * scale * h;
            if (level >= opt.min_level) {
                if (r.error_estimate <= tol) {
                    r.converged = true;
                    break;
                }
                if (r.error_estimate <= floor) break;
            }
        }
        previous = current;
        h *= 0.5;
    }
    note_numeric_evaluation();
    return r;
}

inline constexpr double half_pi = 1.5707963267948966192313;

}  // namespace detail

// tanh-sinh rule on (lo, hi). Endpoints are never evaluated.
template <class F>
auto integrate_finite(F&& f, double lo, double hi, double tol, const quadrature_options& opt = {})
{
    using T = detail::finite_value_t<F>;
    if (!(lo < hi)) throw domain_error("interval", "integrate_finite: requires lo < hi");
    const double half = 0.5 * (hi - lo);
    const double mid = lo + half;
    constexpr double t_max = 6.0;

    auto node_sum = [&](auto& total, detail::neumaier& l1, double offset, double step) -> long long {
        long long n = 0;
        auto visit = [&](double t) {
            double u = detail::half_pi * std::sinh(t);
            double e2u = std::exp(2.0 * std::fabs(u));
            if (!std::isfinite(e2u)) return;
            double dist = half * 2.0 / (e2u + 1.0);
            if (dist == 0.0) return;
            double w = detail::half_pi * std::cosh(t) * 4.0 * e2u / ((e2u + 1.0) * (e2u + 1.0));
            double x, from_lo, from_hi;
            if (t > 0) {
                x = hi - dist;
                from_hi = dist;
                from_lo = 2.0 * half - dist;
            } else if (t < 0) {
                x = lo + dist;
                from_lo = dist;
                from_hi = 2.0 * half - dist;
            } else {
                x = mid;
                from_lo = from_hi = half;
            }
            if constexpr (!std::is_invocable_v<F&, double, double, double>) {
                if (x <= lo || x >= hi) return;
            }
            T v = detail::call_with_distances(f, x, from_lo, from_hi);
            ++n;
            if (!detail::is_finite_value(v)) return;
            total.add(v * w);
            l1.add(detail::magnitude(v) * w);
        };
        if (offset == 0.0) {
            visit(0.0);
            for (double t = step; t <= t_max; t += step) {
                visit(t);
                visit(-t);
            }
        } else {
            for (double t = offset; t <= t_max; t += step) {
                visit(t);
                visit(-t);
            }
        }
        return n;
    };
    return detail::double_exponential<T>(node_sum, half, tol, opt);
}

// exp-sinh rule on (0, inf) for integrands decaying at least like e^{-x}.
template <class F>
auto integrate_semi_infinite(F&& f, double tol, const quadrature_options& opt = {})
{
    using T = std::decay_t<std::invoke_result_t<F&, double>>;
    constexpr double t_lo = -4.5;
    constexpr double t_hi = 2.625;

    auto node_sum = [&](auto& total, detail::neumaier& l1, double offset, double step) -> long long {
        long long n = 0;
        auto visit = [&](double t) {
            double x = std::exp(detail::half_pi * std::sinh(t));
            if (!(x > 0.0) || !std::isfinite(x)) return;
            double w = detail::half_pi * std::cosh(t) * x;
            T v = f(x);
            ++n;
            if (!detail::is_finite_value(v)) return;
            total.add(v * w);
            l1.add(detail::magnitude(v) * w);
        };
        double first = offset == 0.0 ? std::ceil(t_lo / step) * step : offset + std::ceil((t_lo - offset) / step) * step;
        for (double t = first; t <= t_hi; t += step) visit(t);
        return n;
    };
    return detail::double_exponential<T>(node_sum, 1.0, tol, opt);
}

}  // namespace dilogid
