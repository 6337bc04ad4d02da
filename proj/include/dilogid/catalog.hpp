#pragma once

#include <dilogid/numerics.hpp>
#include <dilogid/polylog.hpp>
#include <dilogid/quadrature.hpp>
#include <dilogid/registry.hpp>
#include <dilogid/series.hpp>

#include <cmath>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

namespace dilogid {

namespace catalog_detail {

using constants::pi;
using constants::zeta3;
inline constexpr double inf = std::numeric_limits<double>::infinity();
inline const complex I(0.0, 1.0);

inline complex li2(complex z) { return li(2, z); }
inline complex li3(complex z) { return li(3, z); }
inline complex li4(complex z) { return li(4, z); }
inline double pi2() { return pi * pi; }
inline double pi4() { return pi2() * pi2(); }

// log(1 + a x) for x in (0, 1); near x = 1 uses (1 + a) - a (1 - x).
inline complex log_one_plus(complex a, double x, double from_hi)
{
    if (x > 0.5) return std::log((1.0 + a) - a * from_hi);
    return detail::log1p(a * x);
}

inline double log_one_minus(double x, double from_hi) { return x > 0.5 ? std::log(from_hi) : std::log1p(-x); }

inline estimate from(const quadrature_result<complex>& q)
{
    estimate e{q.value, q.error_estimate, {}};
    if (!q.converged) e.note = "quadrature stopped at level " + std::to_string(q.level);
    return e;
}

inline estimate from(const quadrature_result<double>& q)
{
    estimate e{q.value, q.error_estimate, {}};
    if (!q.converged) e.note = "quadrature stopped at level " + std::to_string(q.level);
    return e;
}

inline estimate from(const series_result& s) { return {s.value, s.tail_estimate, {}}; }

inline estimate operator+(estimate a, const estimate& b)
{
    a.value += b.value;
    a.error_estimate += b.error_estimate;
    if (a.note.empty())
        a.note = b.note;
    else if (!b.note.empty())
        a.note += "; " + b.note;
    return a;
}

inline estimate scaled(estimate a, complex c)
{
    a.value *= c;
    a.error_estimate *= std::abs(c);
    return a;
}

template <class F>
estimate quad01(F&& f, double tol)
{
    return from(integrate_finite(std::forward<F>(f), 0.0, 1.0, tol));
}

// Harmonic-number coefficient bound: H_k <= ln k + 1.
inline double log_bound(long long k) { return std::log(static_cast<double>(k)) + 1.0; }

// sum_{k>N} c (ln k + 1)/k^p <= c [(p-1) ln N + p]/((p-1)^2 N^(p-1)).
inline auto log_power_tail(double c, double p)
{
    return [c, p](long long n) {
        double x = static_cast<double>(n);
        return c * ((p - 1.0) * std::log(x) + p) / ((p - 1.0) * (p - 1.0) * std::pow(x, p - 1.0));
    };
}

// |term(k)| <= b(k) rho^k with b non-increasing from k = 3 on.
template <class B>
auto power_tail(B b, complex a, bool alternating)
{
    double rho = std::abs(a);
    return [=](long long n) -> double {
        if (n < 2) return inf;
        if (rho < 1.0) return b(n + 1) * std::pow(rho, static_cast<double>(n + 1)) / (1.0 - rho);
        if (alternating && rho == 1.0) return b(n + 1);
        return inf;
    };
}

inline bool alternates(complex signed_ratio) { return signed_ratio == -1.0; }

inline sample at(std::initializer_list<std::pair<const char*, complex>> values, bool stress = false)
{
    sample s;
    for (const auto& [k, v] : values) s.params.emplace_back(k, v);
    s.stress = stress;
    return s;
}

inline std::vector<sample> points(const char* name, std::initializer_list<complex> values, std::initializer_list<complex> stress = {})
{
    std::vector<sample> out;
    for (auto v : values) out.push_back(at({{name, v}}));
    for (auto v : stress) out.push_back(at({{name, v}}, true));
    return out;
}

inline std::vector<sample> no_sample() { return {sample{}}; }

inline detail::real_ray ray(double lo, double hi, bool lo_closed, bool hi_closed) { return {lo, hi, lo_closed, hi_closed}; }

// Integrands over z in (0, 1).
inline complex f_lll(complex a, double z, double from_hi)
{
    return std::log(z) * log_one_plus(a, z, from_hi) * log_one_minus(z, from_hi) / z;
}
inline complex f_lsq(complex a, double z, double from_hi)
{
    complex l = log_one_plus(a, z, from_hi);
    return std::log(z) * l * l / z;
}
inline complex f_li2(complex a, double z, double from_hi) { return li2(z) * log_one_plus(a, z, from_hi) / z; }

inline estimate int_lll(complex a, double tol)
{
    return quad01([a](double z, double, double h) { return f_lll(a, z, h); }, tol);
}
inline estimate int_lsq(complex a, double tol)
{
    return quad01([a](double z, double, double h) { return f_lsq(a, z, h); }, tol);
}
inline estimate int_li2(complex a, double tol)
{
    return quad01([a](double z, double, double h) { return f_li2(a, z, h); }, tol);
}
inline estimate int_t1a(complex a, double tol)
{
    return quad01([a](double z, double, double h) { return f_lll(a, z, h) + 0.5 * f_lsq(a, z, h); }, tol);
}
inline estimate int_t1b(complex a, double tol)
{
    return quad01([a](double z, double, double h) { return f_li2(a, z, h) + 0.5 * f_lsq(a, z, h); }, tol);
}

inline complex rhs_t1a(complex a)
{
    complex l2 = li2(-a);
    return -0.5 * l2 * l2 + pi2() / 6.0 * l2 - 2.0 * li4(-a);
}
inline complex rhs_t1b(complex a) { return -pi2() / 6.0 * li2(-a) + li4(-a); }

// Terms shared by the closed forms on ℂ∖(−∞, 0].
inline complex uv_tail(complex a)
{
    complex L = std::log(1.0 + a), la = std::log(a);
    complex u = 1.0 / (1.0 + a), v = a / (1.0 + a);
    complex L2 = L * L;
    return pi2() / 12.0 * L2 + la * L2 * L / 3.0 - 0.25 * L2 * L2 + L * (li3(u) + li3(v)) + li4(u) + li4(v);
}

// Terms shared by the closed forms on ℂ∖((−∞, −1] ∪ [0, ∞)).
inline complex neg_tail(complex a)
{
    complex L = std::log(1.0 + a), lma = std::log(-a);
    complex L2 = L * L;
    return zeta3 * L + pi2() / 12.0 * L2 + L2 * L2 / 24.0 - lma * L2 * L / 6.0 - L * li3(-a) - li4(1.0 + a) + li4(a / (a + 1.0));
}

// Path integral int_0^w g(t) dt along [0, w] as w int_0^1 g(w u) du.
template <class G>
estimate path_integral(complex w, G&& g, double tol)
{
    auto e = quad01([&](double u, double lo, double hi) { return w * g(u, lo, hi); }, tol);
    return e;
}

// int_0^z ln t ln^2(1 - t)/t dt.
inline estimate newinh_path(complex z, double tol)
{
    complex lz = std::log(z), one_minus = 1.0 - z;
    return quad01(
        [=](double u, double, double from_hi) {
            complex l1 = u > 0.5 ? std::log(one_minus + z * from_hi) : detail::log1p(-z * u);
            return (lz + std::log(u)) * l1 * l1 / u;
        },
        tol);
}

inline complex newinh_rhs(complex z)
{
    complex l = std::log(1.0 - z), lz = std::log(z), l2 = l * l;
    return -pi4() / 45.0 - 2.0 * zeta3 * l - pi2() / 6.0 * l2 - l2 * l2 / 12.0 + lz * l2 * l / 3.0 + 2.0 * l * li3(z) - 2.0 * li4(z) +
           2.0 * li4(1.0 - z) - 2.0 * li4(z / (z - 1.0)) + 2.0 * lz * zeta3 + 2.0 * lz * l * li2(1.0 - z) - 2.0 * lz * li3(1.0 - z) +
           lz * lz * l2;
}

inline complex bose_li(int s, complex z, double tol, estimate& acc)
{
    auto r = polylog_integral(s, z, tol);
    acc = acc + from(r);
    return r.value;
}

inline double hurwitz_tail(double m, double r_abs, double sigma, long long k)
{
    double x = static_cast<double>(k) - sigma;
    if (x <= 1.0) return inf;
    return (std::pow(x, 1.0 - 2.0 * m) / (2.0 * m - 1.0) + std::pow(x, 2.0 - 2.0 * m) / ((m - 1.0) * (2.0 * m - 2.0))) / std::pow(r_abs, m);
}

// sum_{j>=1} psi_{n-1}((rj - s)/r)/(rj - s)^n.
inline series_result polygamma_series(int n, double r, double s, double tol)
{
    auto term = [=](long long j) {
        double c = r * static_cast<double>(j) - s;
        return complex(polygamma(n - 1, c / r) / std::pow(c, n));
    };
    double f = detail::factorial(n - 1);
    auto tail = [=](long long k) { return f * hurwitz_tail(n, r, s / r, k); };
    return sum_series(term, tail, tol);
}

inline double euler_abs(int n) { return std::fabs(real_view(rational(euler_number(n)))); }
inline double bernoulli_value(int n) { return real_view(bernoulli(n)); }
inline complex hz(double s, complex w) { return hurwitz_zeta_em(s, w); }

inline void validate_hurwitz_triple(const param_map& p, bool integer_m, double min_m)
{
    double m = real_param(p, "m");
    complex mc = param(p, "m");
    if (mc.imag() != 0.0 || !(m >= min_m) || (integer_m && m != std::floor(m)))
        throw domain_error("m", "m = " + detail::format_number(mc) + ": requires " + (integer_m ? "integer " : "real ") + "m ≥ " +
                                    detail::format_number(min_m));
    complex r = param(p, "r"), s = param(p, "s");
    if (r == 0.0) throw domain_error("r", "r = 0 excluded");
    complex w = (r - s) / r;
    if (!(w.real() > 0.0))
        throw domain_error("s", "(r − s)/r = " + detail::format_number(w) + ": Re((r − s)/r) ≤ 0 excluded");
}

inline std::vector<param_map> as_pool(const std::vector<sample>& v)
{
    std::vector<param_map> out;
    for (const auto& s : v)
        if (!s.stress) out.push_back(s.params);
    return out;
}

inline std::vector<sample> hurwitz_grid(std::initializer_list<double> ms, std::initializer_list<std::pair<double, double>> rs)
{
    std::vector<sample> out;
    for (double m : ms)
        for (auto [r, s] : rs) out.push_back(at({{"m", m}, {"r", r}, {"s", s}}));
    return out;
}

inline std::vector<sample> integers(const char* name, int lo, int hi)
{
    std::vector<sample> out;
    for (int k = lo; k <= hi; ++k) out.push_back(at({{name, static_cast<double>(k)}}));
    return out;
}

struct bose_kind {
    double r, s;
    std::vector<bose_term> (*terms)(int m);
    int (*order)(int m);
};

// Odd/even splits of the Hermite family.
inline std::vector<bose_term> odd_terms(int m, double r)
{
    std::vector<bose_term> t;
    for (int p = 0; p < m; ++p) {
        double sign = ((m + p - 1) % 2 == 0) ? 1.0 : -1.0;
        t.push_back({sign * detail::binomial(2 * m, 2 * p + 1) / std::pow(r, 2 * p + 1), 2 * m - 2 * p - 1});
    }
    return t;
}

inline std::vector<bose_term> even_terms(int m, double r)
{
    std::vector<bose_term> t;
    for (int p = 0; p <= m; ++p) {
        double sign = ((m + p) % 2 == 0) ? 1.0 : -1.0;
        t.push_back({sign * detail::binomial(2 * m + 1, 2 * p) / std::pow(r, 2 * p), 2 * m - 2 * p + 1});
    }
    return t;
}

struct printed_example {
    std::vector<bose_term> terms;
    int order;
    double (*value)();
};

inline double z_(int n) { return riemann_zeta(n); }

inline const printed_example& family_example(int kind, int m)
{
    static const std::vector<printed_example> table = {
        {{{1, 1}}, 2, [] { return pi4() / 288.0 - z_(3) / 4.0; }},
        {{{1, 1}, {-1, 3}}, 4, [] { return std::pow(pi, 8) / 129600.0 - z_(7) / 24.0; }},
        {{{6, 1}, {-20, 3}, {6, 5}}, 6, [] { return std::pow(pi, 12) / 3572100.0 - z_(11) / 10.0; }},
        {{{3, 1}, {-1, 3}}, 3, [] { return z_(3) * z_(3) / 4.0 - z_(5) / 4.0; }},
        {{{5, 1}, {-10, 3}, {1, 5}}, 5, [] { return z_(5) * z_(5) / 4.0 - z_(9) / 8.0; }},
        {{{7, 1}, {-35, 3}, {21, 5}, {-1, 7}}, 7, [] { return z_(7) * z_(7) / 4.0 - z_(13) / 12.0; }},
        {{{1, 1}}, 2, [] { return pi4() / 1024.0 - 7.0 * z_(3) / 128.0; }},
        {{{0.5, 1}, {-2, 3}}, 4, [] { return std::pow(pi, 8) / 589824.0 - 127.0 * z_(7) / 24576.0; }},
        {{{3.0 / 16.0, 1}, {-2.5, 3}, {3, 5}}, 6, [] { return std::pow(pi, 12) / 235929600.0 - 2047.0 * z_(11) / 2621440.0; }},
        {{{0.75, 1}, {-1, 3}}, 3, [] { return 49.0 * z_(3) * z_(3) / 2048.0 - 31.0 * z_(5) / 2048.0; }},
        {{{5.0 / 16.0, 1}, {-2.5, 3}, {1, 5}}, 5, [] { return 961.0 * z_(5) * z_(5) / 131072.0 - 511.0 * z_(9) / 262144.0; }},
        {{{7.0 / 64.0, 1}, {-35.0 / 16.0, 3}, {5.25, 5}, {-1, 7}}, 7,
         [] { return 16129.0 * z_(7) * z_(7) / 8388608.0 - 8191.0 * z_(13) / 25165824.0; }},
    };
    return table[static_cast<std::size_t>(3 * (kind - 1) + (m - 1))];
}

inline complex family_rhs(int kind, int m)
{
    double tm = 2.0 * m;
    switch (kind) {
    case 1: {
        double b = bernoulli_value(2 * m);
        return std::pow(2.0, 4 * m - 4) / std::pow(detail::factorial(2 * m), 2) * b * b * std::pow(pi, 4 * m) -
               z_(4 * m - 1) / (2.0 * (tm - 1.0));
    }
    case 2: return z_(2 * m + 1) * z_(2 * m + 1) / 4.0 - z_(4 * m + 1) / (4.0 * m);
    case 3: {
        double b = bernoulli_value(2 * m);
        double c = std::pow(2.0, tm) - 1.0;
        return std::pow(2.0, -tm - 4.0) * c * c / std::pow(detail::factorial(2 * m), 2) * b * b * std::pow(pi, 4 * m) -
               std::pow(2.0, -6.0 * m - 1.0) * (std::pow(2.0, 4.0 * m - 1.0) - 1.0) / (tm - 1.0) * z_(4 * m - 1);
    }
    default: {
        double c = std::pow(2.0, tm + 1.0) - 1.0;
        return std::pow(2.0, -6.0 * m - 5.0) * c * c * z_(2 * m + 1) * z_(2 * m + 1) -
               std::pow(2.0, -6.0 * m - 4.0) * (std::pow(2.0, 4.0 * m + 1.0) - 1.0) / tm * z_(4 * m + 1);
    }
    }
}

inline series_result family_lhs(int kind, int m, double tol)
{
    bool odd_k = kind >= 3;
    double r = odd_k ? 2.0 : 1.0, s = odd_k ? 1.0 : 0.0;
    bool odd = kind == 1 || kind == 3;
    auto terms = odd ? odd_terms(m, r) : even_terms(m, r);
    return bose_family_sum(terms, odd ? 2 * m : 2 * m + 1, r, s, tol);
}

// D-family test functions.
inline double d1_value(int c, long long k)
{
    double x = static_cast<double>(k);
    switch (c) {
    case 0: return 1.0 / (x * x);
    case 1: return 1.0 / (x * x * x);
    case 2: return std::pow(0.7, x) / x;
    default: return std::pow(-0.6, x);
    }
}

inline double d1_shell_tail(int c, long long n)
{
    double x = static_cast<double>(n);
    switch (c) {
    case 0: return pi2() / 6.0 / x;
    case 1: return zeta3 / (2.0 * x * x);
    case 2: return -std::log(0.3) * std::pow(0.7, x + 1.0) / ((x + 1.0) * 0.3);
    default: return 1.5 * std::pow(0.6, x + 1.0) / 0.4;
    }
}

inline complex d1_rhs(int c)
{
    switch (c) {
    case 0: return 0.5 * (pi4() / 36.0 + pi4() / 90.0);
    case 1: return 0.5 * (zeta3 * zeta3 + std::pow(pi, 6) / 945.0);
    case 2: {
        double l = std::log(0.3);
        return 0.5 * (l * l + li2(0.49));
    }
    default: return 0.5 * (0.375 * 0.375 + 0.5625);
    }
}

inline double d0_value(int c, long long k, long long j)
{
    double x = static_cast<double>(k), y = static_cast<double>(j);
    switch (c) {
    case 0: return 1.0 / std::pow(x + y, 4) + 1.0 / (x * x * y * y);
    case 1: return std::pow(1.0 / 3.0, x + y);
    default: return (k == 1 && j == 1) ? 1.0 : 0.0;
    }
}

inline double d0_shell_tail(int c, long long n)
{
    double x = static_cast<double>(n);
    switch (c) {
    case 0: return 1.0 / (2.0 * x * x) + pi2() / 6.0 / x;
    case 1: return std::pow(1.0 / 3.0, x + 2.0) / (4.0 / 9.0);
    default: return 0.0;
    }
}

inline complex d0_rhs(int c)
{
    switch (c) {
    case 0: return 0.5 * (zeta3 + pi4() / 36.0 + pi4() / 90.0 / 16.0);
    case 1: {
        double q = 1.0 / 3.0;
        return 0.5 * (std::pow(q / (1.0 - q), 2) + q * q / (1.0 - q * q));
    }
    default: return 1.0;
    }
}

inline identity_record make(std::string id, std::string title, std::string anchor, parameter_domain domain, lhs_evaluator lhs,
                            rhs_evaluator rhs, std::vector<sample> samples)
{
    identity_record r;
    r.id = std::move(id);
    r.title = std::move(title);
    r.anchor = std::move(anchor);
    r.domain = std::move(domain);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.samples = std::move(samples);
    return r;
}

inline std::vector<identity_record> build_catalog()
{
    std::vector<identity_record> c;
    const double ln2 = constants::ln2;
    const double G = constants::catalan;

    auto harmonic_case = [](int which) {
        return [which](const param_map&, double tol) {
            harmonic_stream h;
            auto term = [&h, which](long long k) -> double {
                double x = static_cast<double>(k);
                switch (which) {
                case 1: h.advance(); return h.h1() / (x * x * x);
                case 2: {
                    h.advance();
                    double d = 2.0 * x - 1.0;
                    return h.h1() / (d * d * d);
                }
                case 3: {
                    while (h.index() < 2 * k - 1) h.advance();
                    double d = 2.0 * x - 1.0;
                    return h.h1() / (d * d * d);
                }
                case 4: while (h.index() < 2 * k) h.advance(); return h.h1() / (x * x * x);
                default: {
                    h.advance();
                    double d = 2.0 * x + 1.0;
                    return h.h1() / (d * d * d);
                }
                }
            };
            const double c23 = 8.0 / 27.0;
            double cs[] = {0.0, 1.0, c23, (1.0 + constants::ln2) * c23, 1.0 + constants::ln2, 0.125};
            return from(sum_series(term, log_power_tail(cs[which], 3.0), tol));
        };
    };
    auto constant = [](complex v) { return [v](const param_map&) { return v; }; };
    const complex li4_half = li4(0.5);

    c.push_back(make("L1", "Σ H_k/k³", "(hrmkcu) Σ_{k≥1} H_k/k³ = π⁴/72", no_parameters(), harmonic_case(1), constant(pi4() / 72.0),
                     no_sample()));
    c.push_back(make("L2", "Σ H_k/(2k−1)³", "(ftpv) Σ_{k≥1} H_k/(2k−1)³", no_parameters(), harmonic_case(2),
                     constant(-pi2() / 4.0 + pi4() / 64.0 + 2.0 * ln2 + 7.0 * zeta3 / 4.0 - 7.0 * ln2 * zeta3 / 4.0), no_sample()));
    c.push_back(make("L3", "Σ H_{2k−1}/(2k−1)³", "(wgt1) Σ_{k≥1} H_{2k−1}/(2k−1)³", no_parameters(), harmonic_case(3),
                     constant(pi4() / 45.0 + pi2() / 24.0 * ln2 * ln2 - std::pow(ln2, 4) / 24.0 - 7.0 * ln2 * zeta3 / 8.0 - li4_half),
                     no_sample()));
    c.push_back(make("L4", "Σ H_{2k}/k³", "(relf1) Σ_{k≥1} H_{2k}/k³", no_parameters(), harmonic_case(4),
                     constant(-pi4() / 15.0 - pi2() / 3.0 * ln2 * ln2 + std::pow(ln2, 4) / 3.0 + 7.0 * ln2 * zeta3 + 8.0 * li4_half),
                     no_sample()));
    c.push_back(make("HK", "Σ H_k/(2k+1)³", "(hafe1) Σ_{k≥1} H_k/(2k+1)³", no_parameters(), harmonic_case(5),
                     constant(pi4() / 64.0 - 7.0 * ln2 / 4.0 * zeta3), no_sample()));
    c.push_back(make(
        "R1", "∫₀¹ Li₂(z) ln(1+z)/z dz", "(qot1) ∫₀¹ Li₂(z) ln(1+z)/z dz", no_parameters(),
        [](const param_map&, double tol) { return int_li2(1.0, tol); },
        constant(std::pow(ln2, 4) / 12.0 - pi2() * ln2 * ln2 / 12.0 - pi4() / 60.0 + 7.0 * ln2 * zeta3 / 4.0 + 2.0 * li4_half),
        no_sample()));
    c.push_back(make(
        "AB3", "∫₀¹ z^{k−1} ln(1+z) dz", "(abv3) ∫₀¹ z^{k−1} ln(1+z) dz = (H_k − H_{k/2})/k", integer_range("k", 1, 1000),
        [](const param_map& p, double tol) {
            int k = int_param(p, "k");
            return quad01([k](double z) { return complex(std::pow(z, k - 1) * std::log1p(z)); }, tol);
        },
        [](const param_map& p) {
            double k = real_param(p, "k");
            auto H = [](double x) { return digamma(x + 1.0) + constants::euler_gamma; };
            return complex((H(k) - H(0.5 * k)) / k);
        },
        integers("k", 1, 8)));

    // Generalized dilogarithmic integrals.
    const std::initializer_list<complex> off_axis = {{0.5, 0.8}, {0.5, -0.8}, {-0.4, 0.9}, {1.2, -0.3}};
    auto with = [](std::initializer_list<complex> a, std::initializer_list<complex> b) {
        std::vector<complex> v(a);
        v.insert(v.end(), b);
        return v;
    };
    auto pts = [](const char* name, const std::vector<complex>& v, std::initializer_list<complex> stress) {
        std::vector<sample> out;
        for (auto x : v) out.push_back(at({{name, x}}));
        for (auto x : stress) out.push_back(at({{name, x}}, true));
        return out;
    };
    const auto dom_m1_open = complex_minus_rays("a", {ray(-inf, -1.0, false, false)});
    const auto dom_0_closed = complex_minus_rays("a", {ray(-inf, 0.0, false, true)});
    const auto dom_two_rays = complex_minus_rays("a", {ray(-inf, -1.0, false, true), ray(0.0, inf, true, false)});
    const auto t1_samples = pts("a", with({0.5, 1.0, 2.0, -0.5, -0.3}, off_axis), {-0.99, -1.0, 50.0});
    const auto t2_samples = pts("a", with({0.5, 1.0, 2.0}, off_axis), {1e-3, 50.0, {-0.5, 1e-3}});
    const auto t4_samples = pts("a", with({-0.5, -0.3, -0.8}, off_axis), {-0.99, -1e-3, {3.0, 1e-3}});

    c.push_back(make(
        "T1a", "∫ ln z ln(1+az) ln(1−z)/z + ½∫ ln z ln²(1+az)/z", "(thmhaf1) a ∈ ℂ∖(−∞, −1)", dom_m1_open,
        [](const param_map& p, double tol) { return int_t1a(param(p, "a"), tol); }, [](const param_map& p) { return rhs_t1a(param(p, "a")); },
        t1_samples));
    c.push_back(make(
        "T1b", "∫ Li₂(z) ln(1+az)/z + ½∫ ln z ln²(1+az)/z", "(thmhaf2) a ∈ ℂ∖(−∞, −1)", dom_m1_open,
        [](const param_map& p, double tol) { return int_t1b(param(p, "a"), tol); }, [](const param_map& p) { return rhs_t1b(param(p, "a")); },
        t1_samples));
    c.push_back(make(
        "SV1", "T1a at a = 1", "(thmhaf1) at a = 1: π⁴/480", no_parameters(), [](const param_map&, double tol) { return int_t1a(1.0, tol); },
        constant(pi4() / 480.0), no_sample()));
    c.push_back(make(
        "SV2", "T1b at a = 1", "(thmhaf2) at a = 1: π⁴/240", no_parameters(), [](const param_map&, double tol) { return int_t1b(1.0, tol); },
        constant(pi4() / 240.0), no_sample()));
    c.push_back(make(
        "SV3", "T1b at a = −1", "(thmhaf2) at a = −1: −π⁴/60", no_parameters(),
        [](const param_map&, double tol) { return int_t1b(-1.0, tol); }, constant(-pi4() / 60.0), no_sample()));

    c.push_back(make(
        "T2", "∫₀¹ ln z ln(1+az) ln(1−z)/z dz", "(thmhaf22) a ∈ ℂ∖(−∞, 0]", dom_0_closed,
        [](const param_map& p, double tol) { return int_lll(param(p, "a"), tol); },
        [](const param_map& p) {
            complex a = param(p, "a"), l2 = li2(-a);
            return -pi4() / 90.0 - 0.5 * l2 * l2 + pi2() / 6.0 * l2 - li4(-a) + uv_tail(a);
        },
        t2_samples));
    c.push_back(make(
        "T3", "∫₀¹ Li₂(z) ln(1+az)/z dz", "(inthmhaf3) a ∈ ℂ∖(−∞, 0]", dom_0_closed,
        [](const param_map& p, double tol) { return int_li2(param(p, "a"), tol); },
        [](const param_map& p) {
            complex a = param(p, "a");
            return -pi4() / 90.0 - pi2() / 6.0 * li2(-a) + 2.0 * li4(-a) + uv_tail(a);
        },
        t2_samples));
    c.push_back(make(
        "E7", "∫₀¹ ln z ln²(1+az)/z dz", "(fimp1) a ∈ ℂ∖(−∞, 0]", dom_0_closed,
        [](const param_map& p, double tol) { return int_lsq(param(p, "a"), tol); },
        [](const param_map& p) {
            complex a = param(p, "a");
            complex L = std::log(1.0 + a), la = std::log(a), u = 1.0 / (1.0 + a), v = a / (1.0 + a), L2 = L * L;
            return pi4() / 45.0 - pi2() / 6.0 * L2 - 2.0 * la * L2 * L / 3.0 + 0.5 * L2 * L2 - 2.0 * L * (li3(u) + li3(v)) - 2.0 * li4(-a) -
                   2.0 * li4(u) - 2.0 * li4(v);
        },
        t2_samples));
    c.push_back(make(
        "T4", "∫₀¹ ln z ln(1+az) ln(1−z)/z dz", "(thmhaf4) a ∈ ℂ∖((−∞, −1] ∪ [0, ∞))", dom_two_rays,
        [](const param_map& p, double tol) { return int_lll(param(p, "a"), tol); },
        [](const param_map& p) {
            complex a = param(p, "a"), l2 = li2(-a);
            return pi4() / 90.0 - li4(-a) + pi2() / 6.0 * l2 - 0.5 * l2 * l2 + neg_tail(a);
        },
        t4_samples));
    c.push_back(make(
        "T5", "∫₀¹ Li₂(z) ln(1+az)/z dz", "(thmhaf5) a ∈ ℂ∖((−∞, −1] ∪ [0, ∞))", dom_two_rays,
        [](const param_map& p, double tol) { return int_li2(param(p, "a"), tol); },
        [](const param_map& p) {
            complex a = param(p, "a");
            return pi4() / 90.0 + 2.0 * li4(-a) - pi2() / 6.0 * li2(-a) + neg_tail(a);
        },
        t4_samples));
    c.push_back(make(
        "E7b", "∫₀¹ ln z ln²(1+az)/z dz", "(thmhaf5eq) a ∈ ℂ∖((−∞, −1] ∪ [0, ∞))", dom_two_rays,
        [](const param_map& p, double tol) { return int_lsq(param(p, "a"), tol); },
        [](const param_map& p) {
            complex a = param(p, "a");
            complex L = std::log(1.0 + a), lma = std::log(-a), L2 = L * L;
            return -pi4() / 45.0 - 2.0 * zeta3 * L - pi2() / 6.0 * L2 - L2 * L2 / 12.0 + lma * L2 * L / 3.0 + 2.0 * L * li3(-a) -
                   2.0 * li4(-a) + 2.0 * li4(1.0 + a) - 2.0 * li4(a / (a + 1.0));
        },
        t4_samples));

    // Auxiliary closed forms.
    c.push_back(make(
        "E1", "∫₀¹ ln z Li₂(z)/(1+az) dz", "(major2) a ∈ ℂ∖((−∞, −1) ∪ {0})",
        complex_minus_rays("a", {ray(-inf, -1.0, false, false)}, {inf, {0.0}, 2.0}),
        [](const param_map& p, double tol) {
            complex a = param(p, "a");
            return quad01(
                [a](double z, double, double from_hi) {
                    complex den = z > 0.5 ? (1.0 + a) - a * from_hi : 1.0 + a * z;
                    return std::log(z) * li2(z) / den;
                },
                tol);
        },
        [](const param_map& p) {
            complex a = param(p, "a"), l2 = li2(-a);
            return -l2 * l2 / (2.0 * a) + pi2() * l2 / (3.0 * a) - 3.0 * li4(-a) / a;
        },
        points("a", {0.5, -0.3, {0.3, 0.4}, {-0.4, 0.5}, 0.9, 2.0, -1.0, {1.2, -0.3}}, {-0.999, 1e-3})));

    c.push_back(make(
        "E2", "4Σ H_k a^k/k³ + 2Σ H⁽²⁾_k a^k/k² − 6Σ a^k/k⁴", "(cauchy1) |a| ≤ 1",
        complex_minus_rays("a", {}, {1.0, {}, 1.0}),
        [](const param_map& p, double tol) {
            complex a = param(p, "a");
            harmonic_stream h;
            complex ak = 1.0;
            auto term = [&](long long k) {
                h.advance();
                ak *= a;
                double x = static_cast<double>(k);
                return ak * (4.0 * h.h1() / (x * x * x) + 2.0 * h.h2() / (x * x) - 6.0 / (x * x * x * x));
            };
            auto b = [](long long k) {
                double x = static_cast<double>(k);
                return 4.0 * log_bound(k) / (x * x * x) + 2.0 * pi2() / 6.0 / (x * x) + 6.0 / (x * x * x * x);
            };
            return from(sum_series(term, power_tail(b, a, alternates(a)), tol));
        },
        [](const param_map& p) {
            complex l = li2(param(p, "a"));
            return l * l;
        },
        points("a", {0.5, -0.3, {0.3, 0.4}, {-0.4, 0.5}, 0.9, -1.0, {0.6, 0.7}})));

    c.push_back(make(
        "E3", "Σ H_k p^k/(k+1)", "(major5) |p| ≤ 1, p ≠ 0, 1", complex_minus_rays("p", {}, {1.0, {0.0, 1.0}, 1.0}),
        [](const param_map& prm, double tol) {
            complex a = param(prm, "p");
            harmonic_stream h;
            complex ak = 1.0;
            auto term = [&](long long k) {
                h.advance();
                ak *= a;
                return ak * h.h1() / static_cast<double>(k + 1);
            };
            auto b = [](long long k) { return log_bound(k) / static_cast<double>(k + 1); };
            return from(sum_series(term, power_tail(b, a, alternates(a)), tol));
        },
        [](const param_map& prm) {
            complex a = param(prm, "p"), l = std::log(1.0 - a);
            return l * l / (2.0 * a);
        },
        points("p", {0.2, 0.5, 0.8, {0.3, 0.4}, -0.5, {-0.4, 0.5}, 0.9})));

    const auto dom_z_cut = complex_minus_rays("z", {ray(-inf, 0.0, false, true), ray(1.0, inf, true, false)}, {1.0, {}, 1.0});
    const auto gf_samples = points("z", {0.2, 0.5, 0.8, {0.3, 0.4}, 0.9, {-0.4, 0.5}, {0.6, -0.3}});
    auto harmonic_gf = [](int power) {
        return [power](const param_map& p, double tol) {
            complex z = param(p, "z");
            harmonic_stream h;
            complex zk = 1.0;
            auto term = [&](long long k) {
                h.advance();
                zk *= z;
                return zk * h.h1() / std::pow(static_cast<double>(k), power);
            };
            auto b = [power](long long k) { return log_bound(k) / std::pow(static_cast<double>(k), power); };
            return from(sum_series(term, power_tail(b, z, false), tol));
        };
    };
    c.push_back(make(
        "E4", "Σ H_k z^k/k²", "(harmo1) z ∈ ℂ∖((−∞, 0] ∪ [1, ∞)), |z| ≤ 1", dom_z_cut, harmonic_gf(2),
        [](const param_map& p) {
            complex z = param(p, "z"), l = std::log(1.0 - z);
            return zeta3 + li2(1.0 - z) * l + li3(z) - li3(1.0 - z) + std::log(z) * l * l / 2.0;
        },
        gf_samples));
    c.push_back(make(
        "E5", "Σ H_k z^k/k³", "(harmo2) z ∈ ℂ∖((−∞, 0] ∪ [1, ∞)), |z| ≤ 1", dom_z_cut, harmonic_gf(3),
        [](const param_map& p) {
            complex z = param(p, "z"), l = std::log(1.0 - z), l2 = l * l;
            return pi4() / 90.0 + zeta3 * l + pi2() / 12.0 * l2 + l2 * l2 / 24.0 - std::log(z) * l2 * l / 6.0 - l * li3(z) + 2.0 * li4(z) -
                   li4(1.0 - z) + li4(z / (z - 1.0));
        },
        gf_samples));

    const auto dom_path = complex_minus_rays("z", {ray(-inf, 0.0, false, true), ray(1.0, inf, true, false)});
    c.push_back(make(
        "E6", "∫₀^z ln t ln²(1−t)/t dt", "(newinh1) z ∈ ℂ∖((−∞, 0] ∪ [1, ∞))", dom_path,
        [](const param_map& p, double tol) { return newinh_path(param(p, "z"), tol); },
        [](const param_map& p) { return newinh_rhs(param(p, "z")); },
        points("z", {0.5, 0.2, 0.9, {0.3, 0.4}, {-0.4, 0.5}, {2.0, 1.0}, {1.5, -0.5}})));

    auto alt_cubic = [](complex a, double tol) {
        harmonic_stream h;
        complex ak = 1.0;
        auto term = [&](long long k) {
            h.advance();
            ak *= -a;
            double x = static_cast<double>(k);
            return ak * h.h1() / (x * x * x);
        };
        auto b = [](long long k) {
            double x = static_cast<double>(k);
            return log_bound(k) / (x * x * x);
        };
        return from(sum_series(term, power_tail(b, a, alternates(-a)), tol));
    };
    auto news1 = [](double quartic) {
        return [quartic](const param_map& p) {
            complex a = param(p, "a");
            complex L = std::log(1.0 + a), la = std::log(a), u = 1.0 / (1.0 + a), v = a / (1.0 + a), L2 = L * L;
            return -pi4() / 90.0 + pi2() / 12.0 * L2 + la * L2 * L / 3.0 + quartic * L2 * L2 + L * (li3(u) + li3(v)) + 2.0 * li4(-a) +
                   li4(u) + li4(v);
        };
    };
    const auto dom_a_cut = complex_minus_rays("a", {ray(-inf, 0.0, false, true), ray(1.0, inf, true, false)}, {1.0, {}, 1.0});
    const auto alt_samples = points("a", {0.5, 0.9, {0.3, 0.4}, {-0.4, 0.5}, {0.2, -0.6}});
    c.push_back(make(
        "E8a", "Σ (−1)^k H_k a^k/k³", "(news1) a ∈ ℂ∖((−∞, 0] ∪ [1, ∞)), |a| ≤ 1; ln⁴(1+a) coefficient −1/4", dom_a_cut,
        [alt_cubic](const param_map& p, double tol) { return alt_cubic(param(p, "a"), tol); }, news1(-0.25), alt_samples));
    {
        auto printed = make(
            "E8a.p", "Σ (−1)^k H_k a^k/k³", "(news1) as printed, ln⁴(1+a) coefficient +1/2", dom_a_cut,
            [alt_cubic](const param_map& p, double tol) { return alt_cubic(param(p, "a"), tol); }, news1(0.5), alt_samples);
        printed.informational = true;
        printed.note = "printed coefficient; expected to fail";
        c.push_back(std::move(printed));
    }
    c.push_back(make(
        "E8b", "Σ (−1)^k H_k a^k/k³", "(harmo21) a ∈ ℂ∖((−∞, −1] ∪ [0, ∞)), |a| ≤ 1",
        complex_minus_rays("a", {ray(-inf, -1.0, false, true), ray(0.0, inf, true, false)}, {1.0, {}, 1.0}),
        [alt_cubic](const param_map& p, double tol) { return alt_cubic(param(p, "a"), tol); },
        [](const param_map& p) {
            complex a = param(p, "a");
            return pi4() / 90.0 + 2.0 * li4(-a) + neg_tail(a);
        },
        points("a", {-0.5, -0.3, -0.8, {0.3, 0.4}, {-0.4, 0.5}, {0.2, -0.6}})));
    c.push_back(make(
        "E8c", "Σ (−1)^k H_k z^k/k²", "(stah12) z ∈ ℂ∖((−∞, 0] ∪ [1, ∞)), |z| ≤ 1", dom_z_cut,
        [](const param_map& p, double tol) {
            complex z = param(p, "z");
            harmonic_stream h;
            complex zk = 1.0;
            auto term = [&](long long k) {
                h.advance();
                zk *= -z;
                double x = static_cast<double>(k);
                return zk * h.h1() / (x * x);
            };
            auto b = [](long long k) {
                double x = static_cast<double>(k);
                return log_bound(k) / (x * x);
            };
            return from(sum_series(term, power_tail(b, z, alternates(-z)), tol));
        },
        [](const param_map& p) {
            complex z = param(p, "z"), L = std::log(1.0 + z), w = 1.0 / (1.0 + z);
            return zeta3 - L * L * L / 3.0 + li3(-z) - li3(w) - L * li2(w) + std::log(z) * L * L / 2.0;
        },
        points("z", {0.5, 0.9, {0.3, 0.4}, {-0.4, 0.5}, {0.2, -0.6}})));
    c.push_back(make(
        "LH", "Σ (−1)^k H_k z^{k+1}/(k+1)²", "(lastheq1) z ∈ ℂ∖((−∞, 0] ∪ [1, ∞)), |z| ≤ 1", dom_z_cut,
        [](const param_map& p, double tol) {
            complex z = param(p, "z");
            harmonic_stream h;
            complex zk = z;
            auto term = [&](long long k) {
                h.advance();
                zk *= -z;
                double x = static_cast<double>(k + 1);
                return zk * h.h1() / (x * x);
            };
            auto b = [](long long k) {
                double x = static_cast<double>(k + 1);
                return log_bound(k) / (x * x);
            };
            return from(sum_series(term, power_tail(b, z, alternates(-z)), tol));
        },
        [](const param_map& p) {
            complex z = param(p, "z"), L = std::log(1.0 + z), w = 1.0 / (1.0 + z);
            return -zeta3 + L * L * L / 3.0 + li3(w) + L * li2(w) - std::log(z) * L * L / 2.0;
        },
        points("z", {0.5, 0.9, {0.3, 0.4}, {-0.4, 0.5}, {0.2, -0.6}})));
    c.push_back(make(
        "E9", "Σ (−1)^k H_k a^k/k³ + ½∫₀¹ ln z ln²(1+az)/z dz", "(major11) a ∈ ℂ∖((−∞, 0) ∪ (1, ∞)), |a| ≤ 1",
        complex_minus_rays("a", {ray(-inf, 0.0, false, false), ray(1.0, inf, false, false)}, {1.0, {}, 1.0}),
        [alt_cubic](const param_map& p, double tol) {
            complex a = param(p, "a");
            return alt_cubic(a, 0.5 * tol) + scaled(int_lsq(a, 0.5 * tol), 0.5);
        },
        [](const param_map& p) { return li4(-param(p, "a")); },
        points("a", {0.5, 0.9, 1.0, {0.3, 0.4}, {-0.4, 0.5}, {0.2, -0.6}})));

    c.push_back(make(
        "E9b", "Σ H_k a^k/k³ + ½∫₀¹ ln z ln²(1−az)/z dz", "(simha2) |a| ≤ 1", complex_minus_rays("a", {}, {1.0, {}, 1.0}),
        [](const param_map& p, double tol) {
            complex a = param(p, "a");
            harmonic_stream h;
            complex ak = 1.0;
            auto term = [&](long long k) {
                h.advance();
                ak *= a;
                double x = static_cast<double>(k);
                return ak * h.h1() / (x * x * x);
            };
            auto b = [](long long k) {
                double x = static_cast<double>(k);
                return log_bound(k) / (x * x * x);
            };
            auto series = from(sum_series(term, power_tail(b, a, alternates(a)), 0.5 * tol));
            return series + scaled(int_lsq(-a, 0.5 * tol), 0.5);
        },
        [](const param_map& p) { return li4(param(p, "a")); },
        points("a", {0.5, 0.9, -1.0, {0.3, 0.4}, {-0.4, 0.5}, {0.2, -0.6}})));

    // Integrals along [0, a]-type paths.
    const auto a_samples = points("a", {0.5, 1.0, 2.0, 5.0, {0.3, 0.4}, {-0.4, 0.5}, {1.2, -0.3}});
    c.push_back(make(
        "A1", "∫₀^{1/(1+a)} ln³z/(1−z) dz", "(frsin1) a ∈ ℂ∖(−∞, 0]", dom_0_closed,
        [](const param_map& p, double tol) {
            complex a = param(p, "a"), u = 1.0 / (1.0 + a), lu = std::log(u), one_minus = 1.0 - u;
            return quad01(
                [=](double x, double, double from_hi) {
                    complex l = lu + std::log(x);
                    complex den = x > 0.5 ? one_minus + u * from_hi : 1.0 - u * x;
                    return u * l * l * l / den;
                },
                tol);
        },
        [](const param_map& p) {
            complex a = param(p, "a"), L = std::log(1.0 + a), la = std::log(a), u = 1.0 / (1.0 + a);
            return (la - L) * L * L * L - 3.0 * L * L * li2(u) - 6.0 * L * li3(u) - 6.0 * li4(u);
        },
        a_samples));
    c.push_back(make(
        "A2", "∫₀^{a/(1+a)} ln²(1−z)/z dz", "(frsin2) a ∈ ℂ∖(−∞, 0]", dom_0_closed,
        [](const param_map& p, double tol) {
            complex a = param(p, "a"), v = a / (1.0 + a), one_minus = 1.0 - v;
            return quad01(
                [=](double x, double, double from_hi) {
                    complex l = x > 0.5 ? std::log(one_minus + v * from_hi) : detail::log1p(-v * x);
                    return l * l / x;
                },
                tol);
        },
        [](const param_map& p) {
            complex a = param(p, "a"), L = std::log(1.0 + a), la = std::log(a), u = 1.0 / (1.0 + a);
            return 2.0 * zeta3 - 2.0 * li3(u) + (la - L) * L * L - 2.0 * L * li2(u);
        },
        a_samples));

    auto cube_log = [](complex a, double x) {
        complex l = detail::log1p(a * x);
        return l * l * l;
    };
    auto combh1_lhs = [cube_log](const param_map& p, double tol) {
        complex a = param(p, "a");
        return quad01([=](double x) { return (zeta3 - li3(1.0 / (1.0 + a * x)) + cube_log(a, x) / 6.0) / x; }, tol);
    };
    auto combh1_rhs = [](double la_power) {
        return [la_power](const param_map& p) {
            complex a = param(p, "a"), L = std::log(1.0 + a), la = std::log(a), u = 1.0 / (1.0 + a), l2 = li2(-a);
            return la * (zeta3 - li3(u)) - la * L * li2(u) - li2(u) * l2 + la * L * l2 - L * L / 2.0 * l2 + l2 * l2 / 2.0 +
                   la * la / 2.0 * std::pow(L, la_power) - la / 3.0 * L * L * L;
        };
    };
    c.push_back(make("A3", "∫₀^a (ζ(3) − Li₃(1/(1+t)))/t dt + (1/6)∫₀^a ln³(1+t)/t dt", "(combh1) a ∈ ℂ∖(−∞, 0]; ln²a ln²(1+a)/2 term",
                     dom_0_closed, combh1_lhs, combh1_rhs(2.0), a_samples));
    {
        auto printed = make("A3.p", "∫₀^a (ζ(3) − Li₃(1/(1+t)))/t dt + (1/6)∫₀^a ln³(1+t)/t dt", "(combh1) as printed, ln²a ln(1+a)/2 term",
                            dom_0_closed, combh1_lhs, combh1_rhs(1.0), a_samples);
        printed.informational = true;
        printed.note = "printed term; expected to fail";
        c.push_back(std::move(printed));
    }
    c.push_back(make(
        "A4", "∫₀^a ln(1+t) Li₂(1/(1+t))/t + ½ln³(1+t)/t − ln t ln²(1+t)/t dt", "(combh2) a ∈ ℂ∖(−∞, 0]", dom_0_closed,
        [](const param_map& p, double tol) {
            complex a = param(p, "a"), la = std::log(a);
            return quad01(
                [=](double x) {
                    complex l = detail::log1p(a * x);
                    return (l * li2(1.0 / (1.0 + a * x)) + 0.5 * l * l * l - (la + std::log(x)) * l * l) / x;
                },
                tol);
        },
        [](const param_map& p) {
            complex a = param(p, "a"), L = std::log(1.0 + a), la = std::log(a), u = 1.0 / (1.0 + a), l2 = li2(-a);
            return -li2(u) * l2 + l2 * la * L + l2 * l2 / 2.0 - L * L / 2.0 * l2;
        },
        a_samples));
    c.push_back(make(
        "A5", "F(z) + F(1−z), F(z) = ∫₀^z ln t ln²(1−t)/t dt", "(eulan2) z ∈ ℂ∖((−∞, 0] ∪ [1, ∞))", dom_path,
        [](const param_map& p, double tol) {
            complex z = param(p, "z");
            return newinh_path(z, 0.5 * tol) + newinh_path(1.0 - z, 0.5 * tol);
        },
        [](const param_map& p) {
            complex z = param(p, "z"), lz = std::log(z), l1 = std::log(1.0 - z);
            return -pi4() / 180.0 + 0.5 * lz * lz * l1 * l1;
        },
        points("z", {0.5, 0.2, 0.9, {0.3, 0.4}, {-0.4, 0.5}, {1.5, -0.5}})));

    // Jonquière inversion, left sides through the Bose-Einstein integral.
    {
        std::vector<sample> js;
        for (int k = 1; k <= 25; ++k) js.push_back(at({{"z", k / 26.0}}));
        for (complex z : {complex(0.5, 0.5), complex(0.3, -0.4), complex(1.5, 0.5)}) js.push_back(at({{"z", z}}));
        c.push_back(make(
            "J1", "Li₄((z−1)/z) + Li₄(z/(z−1))", "(myiden1) z ∈ ℂ∖((−∞, 0] ∪ [1, ∞))", dom_path,
            [](const param_map& p, double tol) {
                complex z = param(p, "z");
                estimate e;
                bose_li(4, (z - 1.0) / z, 0.5 * tol, e);
                bose_li(4, z / (z - 1.0), 0.5 * tol, e);
                return e;
            },
            [](const param_map& p) {
                complex z = param(p, "z"), lz = std::log(z), l1 = std::log(1.0 - z);
                complex lz2 = lz * lz, l12 = l1 * l1;
                return -7.0 * pi4() / 360.0 - lz2 * l12 / 4.0 - pi2() / 12.0 * l12 - l12 * l12 / 24.0 + pi2() / 6.0 * lz * l1 +
                       lz * l12 * l1 / 6.0 - pi2() / 12.0 * lz2 + lz2 * lz * l1 / 6.0 - lz2 * lz2 / 24.0;
            },
            js));
    }
    {
        std::vector<sample> js;
        for (int j = 0; j < 50; ++j) js.push_back(at({{"a", std::pow(10.0, -3.0 + 6.0 * j / 49.0)}}));
        for (complex a : {complex(0.3, 0.4), complex(-0.4, 0.5), complex(2.0, -3.0), complex(-5.0, 0.1)}) js.push_back(at({{"a", a}}));
        c.push_back(make(
            "J2", "Li₄(−1/a) + Li₄(−a)", "(newthgh) a ∈ ℂ∖(−∞, 0]", dom_0_closed,
            [](const param_map& p, double tol) {
                complex a = param(p, "a");
                estimate e;
                bose_li(4, -1.0 / a, 0.5 * tol, e);
                bose_li(4, -a, 0.5 * tol, e);
                return e;
            },
            [](const param_map& p) {
                complex la = std::log(param(p, "a")), la2 = la * la;
                return -7.0 * pi4() / 360.0 - pi2() / 12.0 * la2 - la2 * la2 / 24.0;
            },
            js));
    }

    // Symmetric double series.
    c.push_back(make(
        "D0", "Σ_j Σ_{k≥0} f(k+j, j), f symmetric", "(bigmastht1) case 0: 1/(k+j)⁴ + 1/(k²j²); 1: 3^{−k−j}; 2: [k = j = 1]",
        integer_range("case", 0, 2),
        [](const param_map& p, double tol) {
            int cs = int_param(p, "case");
            return from(double_series_lhs([cs](long long n, long long j) { return d0_value(cs, n, j); },
                                          [cs](long long n) { return d0_shell_tail(cs, n); }, tol));
        },
        [](const param_map& p) { return d0_rhs(int_param(p, "case")); }, integers("case", 0, 2)));
    c.push_back(make(
        "D1", "Σ_j Σ_{k≥0} f(k+j) f(j)", "(coroh12) case 0: 1/k²; 1: 1/k³; 2: 0.7^k/k; 3: (−0.6)^k", integer_range("case", 0, 3),
        [](const param_map& p, double tol) {
            int cs = int_param(p, "case");
            return from(double_series_lhs([cs](long long n, long long j) { return d1_value(cs, n) * d1_value(cs, j); },
                                          [cs](long long n) { return d1_shell_tail(cs, n); }, tol));
        },
        [](const param_map& p) { return d1_rhs(int_param(p, "case")); }, integers("case", 0, 3)));

    // Hurwitz zeta series.
    const std::initializer_list<std::pair<double, double>> rs8 = {{1, 0},  {1, -0.5}, {2, 0},  {2, 1},
                                                                  {2, -0.5}, {4, 0},   {4, 1}, {4, -0.5}};
    {
        auto grid = hurwitz_grid({2.0, 3.0, 4.0, 2.5}, rs8);
        grid.push_back(at({{"m", 2.0}, {"r", complex(1.0, 1.0)}, {"s", 0.5}}));
        auto dom = composite(
            "m > 1 real, r ∈ ℂ∖{0}, s ∈ ℂ with Re((r − s)/r) > 0", [](const param_map& p) { validate_hurwitz_triple(p, false, 1.0 + 1e-12); },
            as_pool(grid));
        c.push_back(make(
            "H1", "Σ ζ(m, (rk−s)/r)/(rk−s)^m", "(bigthmh1) Re m > 1, r ≠ 0, rk ≠ s", dom,
            [](const param_map& p, double tol) {
                hurwitz_series_params hp{real_param(p, "m"), param(p, "r"), param(p, "s"), 0};
                auto e = from(hurwitz_series_lhs(hp, tol));
                if (hp.r.imag() != 0.0 || hp.s.imag() != 0.0) e.note = "extrapolated domain";
                return e;
            },
            [](const param_map& p) {
                double m = real_param(p, "m");
                complex r = param(p, "r"), s = param(p, "s"), w = (r - s) / r, z = hz(m, w);
                return (z * z + hz(2.0 * m, w)) / (2.0 * std::pow(r, m));
            },
            grid));
        auto grid_s = hurwitz_grid({2.0, 3.0, 2.5}, {{1, 0}, {2, 1}, {4, 1}, {1, -0.5}});
        c.push_back(make(
            "H1s", "Σ ζ(m, (rk+r−s)/r)/(rk−s)^m", "(bigthmh1) shifted argument (rk + r − s)/r", dom,
            [](const param_map& p, double tol) {
                hurwitz_series_params hp{real_param(p, "m"), param(p, "r"), param(p, "s"), 1};
                return from(hurwitz_series_lhs(hp, tol));
            },
            [](const param_map& p) {
                double m = real_param(p, "m");
                complex r = param(p, "r"), s = param(p, "s"), w = (r - s) / r, z = hz(m, w);
                return (z * z - hz(2.0 * m, w)) / (2.0 * std::pow(r, m));
            },
            grid_s));
    }
    {
        auto grid = hurwitz_grid({2.0, 3.0, 4.0}, {{1, 0}, {2, 1}, {4, 1}, {2, -0.5}});
        auto dom = composite(
            "m ≥ 2 integer, r > 0, s real with r − s > 0",
            [](const param_map& p) {
                validate_hurwitz_triple(p, true, 2.0);
                if (param(p, "r").imag() != 0.0 || param(p, "s").imag() != 0.0 || !(real_param(p, "r") > 0.0))
                    throw domain_error("r", "r, s must be real with r > 0");
            },
            as_pool(grid));
        c.push_back(make(
            "H2", "Σ ψ_{m−1}((rj−s)/r)/(rj−s)^m", "(thisc) m ≥ 2 integer", dom,
            [](const param_map& p, double tol) {
                return from(polygamma_series(int_param(p, "m"), real_param(p, "r"), real_param(p, "s"), tol));
            },
            [](const param_map& p) {
                int m = int_param(p, "m");
                double r = real_param(p, "r"), s = real_param(p, "s"), w = (r - s) / r;
                double pg = polygamma(m - 1, w);
                double sign = m % 2 == 0 ? 1.0 : -1.0;
                return complex(sign / (2.0 * std::pow(r, m)) *
                               (pg * pg / detail::factorial(m - 1) +
                                detail::factorial(m - 1) / detail::factorial(2 * m - 1) * polygamma(2 * m - 1, w)));
            },
            grid));
        c.push_back(make(
            "B1", "Σ_k Σ_p C(m,p) sin(π(m−p)/2) r^{−p} (rk−s)^{p−m} ∫ x^{m−p}/((r²x²+(rk−s)²)^m (e^{2πx}−1)) dx",
            "(bghaft) m ≥ 2 integer", dom,
            [](const param_map& p, double tol) {
                return from(hermite_family_lhs(int_param(p, "m"), real_param(p, "r"), real_param(p, "s"), tol));
            },
            [](const param_map& p) {
                double m = real_param(p, "m"), r = real_param(p, "r"), s = real_param(p, "s"), w = (r - s) / r;
                complex z = hz(m, w);
                double r3m = std::pow(r, 3.0 * m);
                return z * z / (4.0 * r3m) - hz(2.0 * m - 1.0, w) / (2.0 * r3m * (m - 1.0));
            },
            hurwitz_grid({2.0, 3.0, 4.0}, {{1, 0}, {2, 1}, {1, -0.5}})));
    }
    {
        auto grid = hurwitz_grid({1.0, 2.0}, {{1, 0}, {2, 1}, {1, -0.5}});
        auto dom = composite(
            "m ≥ 1 integer, r > 0, s real with r − s > 0",
            [](const param_map& p) {
                validate_hurwitz_triple(p, true, 1.0);
                if (param(p, "r").imag() != 0.0 || param(p, "s").imag() != 0.0 || !(real_param(p, "r") > 0.0))
                    throw domain_error("r", "r, s must be real with r > 0");
            },
            as_pool(grid));
        c.push_back(make(
            "B1o", "Hermite family, order 2m", "(bghaft1o) m ≥ 1 integer", dom,
            [](const param_map& p, double tol) {
                int m = int_param(p, "m");
                double r = real_param(p, "r"), s = real_param(p, "s");
                return from(bose_family_sum(odd_terms(m, r), 2 * m, r, s, tol));
            },
            [](const param_map& p) {
                double m = real_param(p, "m"), r = real_param(p, "r"), s = real_param(p, "s"), w = (r - s) / r;
                complex z = hz(2.0 * m, w);
                double r6m = std::pow(r, 6.0 * m);
                return z * z / (4.0 * r6m) - hz(4.0 * m - 1.0, w) / (2.0 * r6m * (2.0 * m - 1.0));
            },
            grid));
        c.push_back(make(
            "B1e", "Hermite family, order 2m+1", "(bghaft2o) m ≥ 1 integer", dom,
            [](const param_map& p, double tol) {
                int m = int_param(p, "m");
                double r = real_param(p, "r"), s = real_param(p, "s");
                return from(bose_family_sum(even_terms(m, r), 2 * m + 1, r, s, tol));
            },
            [](const param_map& p) {
                double m = real_param(p, "m"), r = real_param(p, "r"), s = real_param(p, "s"), w = (r - s) / r;
                complex z = hz(2.0 * m + 1.0, w);
                double r6m3 = std::pow(r, 6.0 * m + 3.0);
                return z * z / (4.0 * r6m3) - hz(4.0 * m + 1.0, w) / (4.0 * m * r6m3);
            },
            grid));
    }
    c.push_back(make(
        "C1", "Hermite family at r = 1, s = 0", "(corol1h1h) m ≥ 2 integer", integer_range("m", 2, 12),
        [](const param_map& p, double tol) { return from(hermite_family_lhs(int_param(p, "m"), 1.0, 0.0, tol)); },
        [](const param_map& p) {
            int m = int_param(p, "m");
            return complex(z_(m) * z_(m) / 4.0 - z_(2 * m - 1) / (2.0 * (m - 1)));
        },
        integers("m", 2, 4)));
    c.push_back(make(
        "C2", "Hermite family at r = 2, s = 1", "(corol1h) m ≥ 2 integer", integer_range("m", 2, 12),
        [](const param_map& p, double tol) { return from(hermite_family_lhs(int_param(p, "m"), 2.0, 1.0, tol)); },
        [](const param_map& p) {
            int m = int_param(p, "m");
            double c1 = std::pow(2.0, m) - 1.0;
            return complex(std::pow(2.0, -3.0 * m - 2.0) * c1 * c1 * z_(m) * z_(m) -
                           std::pow(2.0, -3.0 * m - 1.0) * (std::pow(2.0, 2.0 * m - 1.0) - 1.0) / (m - 1.0) * z_(2 * m - 1));
        },
        integers("m", 2, 4)));

    const char* family_ids[] = {"B2", "B3", "B4", "B5"};
    const char* family_tags[] = {"(corol1)", "(corol2)", "(corol3)", "(corol4)"};
    const char* family_titles[] = {"Σ_k Σ_p over k, order 2m", "Σ_k Σ_p over k, order 2m+1", "Σ_k Σ_p over odd 2k−1, order 2m",
                                      "Σ_k Σ_p over odd 2k−1, order 2m+1"};
    for (int kind = 1; kind <= 4; ++kind) {
        c.push_back(make(
            family_ids[kind - 1], family_titles[kind - 1], std::string(family_tags[kind - 1]) + " m ≥ 1 integer",
            integer_range("m", 1, 6), [kind](const param_map& p, double tol) { return from(family_lhs(kind, int_param(p, "m"), tol)); },
            [kind](const param_map& p) { return family_rhs(kind, int_param(p, "m")); }, integers("m", 1, 3)));
    }
    for (int kind = 1; kind <= 4; ++kind) {
        c.push_back(make(
            std::string(family_ids[kind - 1]) + "x", std::string(family_titles[kind - 1]) + ", worked examples",
            std::string(family_tags[kind - 1]) + " examples m = 1, 2, 3", integer_range("m", 1, 3),
            [kind](const param_map& p, double tol) {
                const auto& ex = family_example(kind, int_param(p, "m"));
                double r = kind >= 3 ? 2.0 : 1.0, s = kind >= 3 ? 1.0 : 0.0;
                return from(bose_family_sum(ex.terms, ex.order, r, s, tol));
            },
            [kind](const param_map& p) { return complex(family_example(kind, int_param(p, "m")).value()); }, integers("m", 1, 3)));
    }

    c.push_back(make(
        "S1", "Σ_p C(m,p) z^p sin(π(m−p)/2) ∫ x^{m−p}/((x²+z²)^m (e^{2πx}−1)) dx",
        "(sether1) f(m, z) = (ζ(m, z) − z^{−m}/2 − z^{1−m}/(m−1))/2",
        composite(
            "m ≥ 2 integer, z > 0",
            [](const param_map& p) {
                complex m = param(p, "m"), z = param(p, "z");
                if (m.imag() != 0.0 || m.real() < 2.0 || m.real() != std::floor(m.real())) throw domain_error("m", "m must be an integer ≥ 2");
                if (z.imag() != 0.0 || !(z.real() > 0.0)) throw domain_error("z", "z = " + detail::format_number(z) + ": z > 0 required");
            }),
        [](const param_map& p, double tol) {
            int m = int_param(p, "m");
            double z = real_param(p, "z");
            estimate e;
            for (int q = 0; q < m; ++q) {
                int sg = sin_half_pi_int(m - q);
                if (sg == 0) continue;
                auto r = bose_moment(m - q, m, 1.0, z, 0.1 * tol);
                e = e + scaled(from(r), detail::binomial(m, q) * std::pow(z, q) * sg);
            }
            return e;
        },
        [](const param_map& p) {
            double m = real_param(p, "m"), z = real_param(p, "z");
            return (hz(m, z) - 0.5 * std::pow(z, -m) - std::pow(z, 1.0 - m) / (m - 1.0)) / 2.0;
        },
        {at({{"m", 2.0}, {"z", 1.0}}), at({{"m", 3.0}, {"z", 1.0}}), at({{"m", 4.0}, {"z", 0.5}}), at({{"m", 5.0}, {"z", 2.0}})}));

    c.push_back(make(
        "H3", "Σ ψ_{m−1}((4j−1)/4)/(4j−1)^m", "(tirtheh2eq) m ≥ 2 integer", integer_range("m", 2, 10),
        [](const param_map& p, double tol) { return from(polygamma_series(int_param(p, "m"), 4.0, 1.0, tol)); },
        [](const param_map& p) {
            int m = int_param(p, "m");
            double pg = polygamma(m - 1, 0.75);
            double sign = m % 2 == 0 ? 1.0 : -1.0;
            return complex(sign * std::pow(2.0, -2.0 * m - 1.0) *
                           (pg * pg / detail::factorial(m - 1) + detail::factorial(m - 1) / detail::factorial(2 * m - 1) * polygamma(2 * m - 1, 0.75)));
        },
        integers("m", 2, 6)));
    c.push_back(make(
        "H3e", "Σ ψ_{m−1}((4j−1)/4)/(4j−1)^m, worked examples", "(tirtheh2eq) examples m = 2, 3, 4, 5", integer_range("m", 2, 5),
        [](const param_map& p, double tol) { return from(polygamma_series(int_param(p, "m"), 4.0, 1.0, tol)); },
        [G](const param_map& p) {
            int m = int_param(p, "m");
            double z3 = zeta3, z5 = constants::zeta5;
            switch (m) {
            case 2: return complex(2.0 * G * G - G * pi2() / 2.0 + pi4() / 32.0 + polygamma(3, 0.75) / 192.0);
            case 3: return complex(-std::pow(pi, 6) / 64.0 + 7.0 * std::pow(pi, 3) / 8.0 * z3 - 49.0 * z3 * z3 / 4.0 - polygamma(5, 0.75) / 7680.0);
            case 4: {
                double p3 = polygamma(3, 0.75);
                return complex(p3 * p3 / 3072.0 + polygamma(7, 0.75) / 430080.0);
            }
            default:
                return complex(-25.0 * std::pow(pi, 10) / 768.0 + 155.0 * std::pow(pi, 5) / 8.0 * z5 - 2883.0 * z5 * z5 -
                               polygamma(9, 0.75) / 30965760.0);
            }
        },
        integers("m", 2, 5)));
    c.push_back(make(
        "H4", "Σ ψ_{2m−2}((4j−1)/4)/(4j−1)^{2m−1}", "(corsha) m ≥ 2 integer, Euler numbers E_{2m−2}", integer_range("m", 2, 8),
        [](const param_map& p, double tol) { return from(polygamma_series(2 * int_param(p, "m") - 1, 4.0, 1.0, tol)); },
        [](const param_map& p) {
            int m = int_param(p, "m");
            double E = euler_abs(2 * m - 2), c1 = 1.0 - std::pow(2.0, 2 * m - 1), f = detail::factorial(2 * m - 2);
            double zq = z_(2 * m - 1);
            return complex(-E / 8.0 * c1 * std::pow(pi, 2 * m - 1) * zq - c1 * c1 * f / 8.0 * zq * zq -
                           E * E / (32.0 * f) * std::pow(pi, 4 * m - 2) -
                           f / (std::pow(2.0, 4 * m - 1) * detail::factorial(4 * m - 3)) * polygamma(4 * m - 3, 0.75));
        },
        integers("m", 2, 4)));
    c.push_back(make(
        "P1", "ψ_{2m−2}(3/4) = −(2m−2)! Σ_{k≥0} (k+3/4)^{1−2m}", "(psiabd1) m ≥ 2 integer", integer_range("m", 2, 8),
        [](const param_map& p, double tol) {
            int m = int_param(p, "m"), q = 2 * m - 1;
            double f = detail::factorial(2 * m - 2);
            auto term = [q](long long k) { return std::pow(static_cast<double>(k) + 0.75, -q); };
            auto tail = [q, f](long long k) { return f * std::pow(static_cast<double>(k) + 0.75, 1.0 - q) / (q - 1.0); };
            series_options opt;
            opt.start = 0;
            auto r = sum_series(term, tail, tol, opt);
            r.value *= -f;
            return from(r);
        },
        [](const param_map& p) {
            int m = int_param(p, "m");
            const long double pi_ld = 3.141592653589793238462643383279503L;
            long double f = detail::factorial(2 * m - 2), z = detail::riemann_zeta_ld(2 * m - 1);
            long double v = std::pow(2.0L, 2 * m - 2) * ((1.0L - std::pow(2.0L, 2 * m - 1)) * f * z +
                                                         std::pow(pi_ld, 2 * m - 1) / 2.0L * euler_abs(2 * m - 2));
            return complex(static_cast<double>(v));
        },
        integers("m", 2, 4)));
    return c;
}

}  // namespace catalog_detail

inline const std::vector<identity_record>& catalog()
{
    static const std::vector<identity_record> c = catalog_detail::build_catalog();
    return c;
}

inline const identity_record* lookup(std::string_view id)
{
    for (const auto& r : catalog())
        if (r.id == id) return &r;
    return nullptr;
}

}  // namespace dilogid
