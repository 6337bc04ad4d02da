#pragma once

#include <dilogid/numerics.hpp>
#include <dilogid/quadrature.hpp>

#include <array>
#include <cmath>
#include <string>

namespace dilogid {

namespace detail {

inline constexpr int log_series_terms = 90;

// c_k = zeta(s - k)/k! for the expansion of Li_s(e^mu) about mu = 0.
// The k = s-1 slot is unused (it carries the logarithmic term).
inline const std::array<double, log_series_terms>& log_series_coefficients(int s)
{
    auto build = [](int order) {
        std::array<double, log_series_terms> c{};
        long double fact = 1.0L;
        for (int k = 0; k < log_series_terms; ++k) {
            if (k > 0) fact *= k;
            int arg = order - k;
            long double z;
            if (arg >= 2)
                z = riemann_zeta(arg);
            else if (arg == 1)
                z = 0.0L;
            else if (arg == 0)
                z = -0.5L;
            else {
                int n = -arg;
                z = (n % 2 == 0) ? 0.0L : -static_cast<long double>(even_bernoulli_table()[(n + 1) / 2]) / (n + 1);
            }
            c[k] = static_cast<double>(z / fact);
        }
        return c;
    };
    static const std::array<double, log_series_terms> c2 = build(2);
    static const std::array<double, log_series_terms> c3 = build(3);
    static const std::array<double, log_series_terms> c4 = build(4);
    return s == 2 ? c2 : (s == 3 ? c3 : c4);
}

inline void check_order(int s)
{
    if (s < 2 || s > 4) throw unsupported_order("li: order " + std::to_string(s) + " not in {2, 3, 4}");
}

inline complex li_direct(int s, complex z)
{
    complex_neumaier acc;
    complex zk = 1.0;
    for (int k = 1; k < 200; ++k) {
        zk *= z;
        double ks = std::pow(static_cast<double>(k), s);
        complex t = zk / ks;
        acc.add(t);
        if (std::abs(zk) < 1e-17 * ks * std::abs(acc.value())) break;
        if (zk == 0.0) break;
    }
    return acc.value();
}

inline complex li_log_series(int s, complex z)
{
    const auto& c = log_series_coefficients(s);
    complex mu = std::log(z);
    complex_neumaier acc;
    complex muk = 1.0;
    int quiet = 0;
    for (int k = 0; k < log_series_terms; ++k) {
        if (k > 0) muk *= mu;
        if (k == s - 1) {
            double h = (s == 2) ? 1.0 : (s == 3 ? 1.5 : 11.0 / 6.0);
            acc.add(muk / factorial(k) * (h - std::log(-mu)));
            continue;
        }
        if (c[k] == 0.0) continue;
        complex t = c[k] * muk;
        acc.add(t);
        if (std::abs(t) < 1e-18 * std::abs(acc.value()))
            if (++quiet == 2) break;
    }
    return acc.value();
}

inline complex zeta_value(int s)
{
    return s == 2 ? constants::pi * constants::pi / 6.0 : riemann_zeta(s);
}

}  // namespace detail

// Principal branch of Li_s(z), s in {2, 3, 4}, on the plane cut along (1, inf).
inline complex li(int s, complex z)
{
    using constants::pi;
    detail::check_order(s);
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw domain_error("z", "li: non-finite argument");
    if (z.imag() == 0.0 && z.real() > 1.0)
        throw domain_error("z", "li: z = " + detail::format_number(z) + " lies on the branch cut [1, ∞)");
    if (z == 1.0) return detail::zeta_value(s);
    if (z == 0.0) return 0.0;

    double r = std::abs(z);
    complex v;
    if (r <= 0.5) {
        v = detail::li_direct(s, z);
    } else if (r >= 2.0) {
        complex l = std::log(-z);
        complex inv = detail::li_direct(s, 1.0 / z);
        complex l2 = l * l;
        switch (s) {
        case 2: v = -inv - pi * pi / 6.0 - 0.5 * l2; break;
        case 3: v = inv - pi * pi / 6.0 * l - l2 * l / 6.0; break;
        default: v = -inv - 7.0 * std::pow(pi, 4) / 360.0 - pi * pi / 12.0 * l2 - l2 * l2 / 24.0; break;
        }
    } else {
        v = detail::li_log_series(s, z);
    }
    if (z.imag() == 0.0) v.imag(0.0);
    return v;
}

// -int_0^z ln(1 - t)/t dt along the segment [0, z].
inline complex li2_integral(complex z, double tol = 1e-15)
{
    if (z.imag() == 0.0 && z.real() > 1.0)
        throw domain_error("z", "li2_integral: path to z = " + detail::format_number(z) + " crosses the cut (1, ∞)");
    if (z == 0.0) return 0.0;
    auto f = [z](double u, double, double from_hi) -> complex {
        complex w = -z * u;
        if (u > 0.5) return std::log((1.0 - z) + z * from_hi) / u;
        return detail::log1p(w) / u;
    };
    return -integrate_finite(f, 0.0, 1.0, tol).value;
}

// Li_s(z) = z/Gamma(s) int_0^inf t^{s-1}/(e^t - z) dt, valid off [1, inf)
// (z = 1 allowed). Independent of the series/functional-equation route.
inline quadrature_result<complex> polylog_integral(int s, complex z, double tol = 1e-15)
{
    detail::check_order(s);
    if (z.imag() == 0.0 && z.real() > 1.0)
        throw domain_error("z", "polylog_integral: z = " + detail::format_number(z) + " lies on the branch cut [1, ∞)");
    complex one_minus_z = 1.0 - z;
    auto f = [s, one_minus_z](double t) -> complex {
        double p = (s == 2) ? t : (s == 3 ? t * t : t * t * t);
        return p / (std::expm1(t) + one_minus_z);
    };
    auto r = integrate_semi_infinite(f, tol);
    double g = detail::factorial(s - 1);
    r.value *= z / g;
    r.error_estimate *= std::abs(z) / g;
    return r;
}

namespace detail {

inline void check_hurwitz(double s, complex z, const char* who)
{
    if (!(s > 1.0))
        throw domain_error("s", std::string(who) + ": requires s > 1, got s = " + format_number(s));
    if (!(z.real() > 0.0))
        throw domain_error("z", std::string(who) + ": requires Re z > 0, got z = " + format_number(z));
}

// [(z - ix)^{-s} - (z + ix)^{-s}]/(2i), equal to sin(s atan(x/z))/(x^2+z^2)^{s/2} for real z.
inline complex hermite_numerator(double s, complex z, double x)
{
    complex t = x / z;
    if (std::abs(t) < 1e-3) {
        complex t2 = t * t;
        double c1 = s;
        double c3 = -s * (s + 1) * (s + 2) / 6.0;
        double c5 = s * (s + 1) * (s + 2) * (s + 3) * (s + 4) / 120.0;
        return std::pow(z, -s) * t * (c1 + t2 * (c3 + t2 * c5));
    }
    if (z.imag() == 0.0) {
        double zr = z.real();
        return std::sin(s * std::atan2(x, zr)) / std::pow(std::hypot(x, zr), s);
    }
    const complex i(0.0, 1.0);
    return (std::pow(z - i * x, -s) - std::pow(z + i * x, -s)) / (2.0 * i);
}

}  // namespace detail

// Hermite's representation; the Bose-kernel integral goes through the quadrature module.
inline quadrature_result<complex> hurwitz_zeta_hermite(double s, complex z, double tol = 0.0)
{
    using constants::pi;
    detail::check_hurwitz(s, z, "hurwitz_zeta");
    complex zs = std::pow(z, -s);
    complex head = 0.5 * zs + z * zs / (s - 1.0);
    double qtol = tol > 0.0 ? tol : 1e-16 * (1.0 + std::abs(zs));
    auto f = [s, z](double x) -> complex { return detail::hermite_numerator(s, z, x) / std::expm1(2.0 * pi * x); };
    auto r = integrate_semi_infinite(f, 0.5 * qtol);
    r.value = head + 2.0 * r.value;
    r.error_estimate *= 2.0;
    return r;
}

inline complex hurwitz_zeta(double s, complex z) { return hurwitz_zeta_hermite(s, z).value; }

// Euler-Maclaurin with B2, B4, B6 corrections; N grows until the B8 term is below 1e-16 (relative to max(1, |z^-s|)).
inline complex hurwitz_zeta_em(double s, complex z)
{
    detail::check_hurwitz(s, z, "hurwitz_zeta_em");
    constexpr double b8 = -1.0 / 30.0 / 40320.0;
    double rising7 = s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * (s + 5) * (s + 6);
    double scale = std::max(1.0, std::pow(std::abs(z), -s));
    int n = 0;
    while (std::fabs(b8) * rising7 * std::pow(std::abs(z + static_cast<double>(n)), -s - 7.0) >= 1e-16 * scale) ++n;

    detail::complex_neumaier acc;
    complex a = z + static_cast<double>(n);
    complex as = std::pow(a, -s);
    complex a2 = 1.0 / (a * a);
    double r1 = s;
    double r3 = s * (s + 1) * (s + 2);
    double r5 = r3 * (s + 3) * (s + 4);
    complex corr = as / a * (r1 / 12.0 + a2 * (-r3 / 720.0 + a2 * (r5 / 30240.0)));
    acc.add(corr);
    acc.add(0.5 * as);
    acc.add(a * as / (s - 1.0));
    for (int k = n - 1; k >= 0; --k) acc.add(std::pow(z + static_cast<double>(k), -s));
    return acc.value();
}

inline double hurwitz_zeta_em(double s, double z) { return hurwitz_zeta_em(s, complex(z, 0.0)).real(); }

// Phi(z, s, a) = sum_{n>=0} z^n/(n+a)^s for |z| <= 1.
inline complex lerch_phi(complex z, double s, double a, double tol = 1e-15)
{
    if (a <= 0.0 && a == std::floor(a))
        throw domain_error("a", "lerch_phi: a = " + detail::format_number(a) + " is a non-positive integer");
    if (!(a > 0.0)) throw domain_error("a", "lerch_phi: requires a > 0");
    if (!(s > 1.0)) throw domain_error("s", "lerch_phi: requires s > 1");
    double r = std::abs(z);
    if (r > 1.0 + 1e-15) throw domain_error("z", "lerch_phi: requires |z| <= 1");

    constexpr long long cap = 100000000;
    detail::complex_neumaier acc;
    complex zn = 1.0;
    for (long long n = 0; n < cap; ++n) {
        double base = static_cast<double>(n) + a;
        if (z == 1.0 && n >= 16) {
            acc.add(hurwitz_zeta_em(s, base));
            return acc.value();
        }
        if (z == -1.0 && n >= 16 && n % 2 == 0) {
            double h = std::pow(2.0, -s);
            acc.add(h * (hurwitz_zeta_em(s, 0.5 * base) - hurwitz_zeta_em(s, 0.5 * (base + 1.0))));
            return acc.value();
        }
        acc.add(zn * std::pow(base, -s));
        zn *= z;
        double next = std::pow(base + 1.0, -s);
        double bound = r < 1.0 ? std::abs(zn) * next / (1.0 - r) : 2.0 * next / std::abs(1.0 - z);
        if (bound < tol * std::max(1.0, std::abs(acc.value()))) return acc.value();
    }
    throw non_convergence("lerch_phi: tail bound not reached after 1e8 terms");
}

}  // namespace dilogid
