#pragma once

#include <dilogid/numerics.hpp>
#include <dilogid/polylog.hpp>
#include <dilogid/quadrature.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace dilogid {

struct series_result {
    complex value{};
    double tail_estimate = 0.0;
    long long terms_used = 0;
};

struct series_options {
    long long start = 1;
    long long max_terms = 10000000;
    // Only test the tail after an even number of terms (alternating series).
    bool pair_grouping = false;
};

// term(k) is called exactly once for k = start, start+1, ... in order, so
// stateful callables (running harmonic numbers) are fine.
// tail_bound(K) must bound |sum_{k > K} term(k)|.
template <class Term, class Tail>
series_result sum_series(Term&& term, Tail&& tail_bound, double tol, const series_options& opt = {})
{
    detail::complex_neumaier acc;
    series_result r;
    const long long last = opt.start + opt.max_terms - 1;
    double early = -1.0;
    for (long long k = opt.start; k <= last; ++k) {
        acc.add(complex(term(k)));
        ++r.terms_used;
        if (opt.pair_grouping && r.terms_used % 2 == 1) continue;
        double t = tail_bound(k);
        if (t < tol) {
            r.value = acc.value();
            r.tail_estimate = t;
            detail::note_numeric_evaluation();
            return r;
        }
        if (r.terms_used == opt.max_terms / 2) early = t;
    }
    double t = tail_bound(last);
    if (!std::isfinite(t) || (early >= 0.0 && !(t < early)))
        throw non_convergence("sum_series: tail bound not decreasing after " + std::to_string(opt.max_terms) + " terms");
    r.value = acc.value();
    r.tail_estimate = t;
    detail::note_numeric_evaluation();
    return r;
}

struct double_series_options {
    long long max_shells = 2000;
    bool pair_grouping = false;
};

// sum_{j>=1} sum_{k>=0} f(k + j, j), summed over shells n = k + j:
// shell n contributes sum_{j=1}^{n} f(n, j). shell_tail(N) bounds the shells beyond N.
template <class F, class Tail>
series_result double_series_lhs(F&& f, Tail&& shell_tail, double tol, const double_series_options& opt = {})
{
    detail::complex_neumaier acc;
    series_result r;
    for (long long n = 1; n <= opt.max_shells; ++n) {
        detail::complex_neumaier shell;
        for (long long j = 1; j <= n; ++j) shell.add(complex(f(n, j)));
        acc.add(shell.value());
        r.terms_used += n;
        if (opt.pair_grouping && n % 2 == 1) continue;
        double t = shell_tail(n);
        if (t < tol) {
            r.value = acc.value();
            r.tail_estimate = t;
            detail::note_numeric_evaluation();
            return r;
        }
    }
    double t = shell_tail(opt.max_shells);
    if (!std::isfinite(t)) throw non_convergence("double_series_lhs: shell tail bound is not finite");
    r.value = acc.value();
    r.tail_estimate = t;
    detail::note_numeric_evaluation();
    return r;
}

// (1/2)((sum f)^2 + sum f^2). The tail estimate combines both truncations:
// |S^2 - S_N^2| <= (2|S_N| + t1) t1.
template <class Single, class SingleTail, class Diag, class DiagTail>
series_result transform_rhs(Single&& f_single, SingleTail&& single_tail, Diag&& f_diag, DiagTail&& diag_tail, double tol,
                            const series_options& opt = {})
{
    auto s1 = sum_series(f_single, single_tail, 0.25 * tol, opt);
    auto s2 = sum_series(f_diag, diag_tail, 0.5 * tol, opt);
    series_result r;
    r.value = 0.5 * (s1.value * s1.value + s2.value);
    r.tail_estimate = 0.5 * ((2.0 * std::abs(s1.value) + s1.tail_estimate) * s1.tail_estimate + s2.tail_estimate);
    r.terms_used = s1.terms_used + s2.terms_used;
    return r;
}

struct hurwitz_series_params {
    double m = 2.0;
    complex r = 1.0;
    complex s = 0.0;
    // Argument shift: zeta(m, (rk - s)/r + shift).
    int shift = 0;
};

inline void validate(const hurwitz_series_params& p)
{
    if (!(p.m > 1.0)) throw domain_error("m", "hurwitz_series: requires m > 1, got m = " + detail::format_number(p.m));
    if (p.r == 0.0) throw domain_error("r", "hurwitz_series: r must be nonzero");
    complex w = (p.r - p.s) / p.r;
    if (!(w.real() > 0.0))
        throw domain_error("s", "hurwitz_series: requires Re((r - s)/r) > 0, got " + detail::format_number(w));
}

// sum_{k>=1} zeta(m, (rk - s)/r + shift)/(rk - s)^m.
inline series_result hurwitz_series_lhs(const hurwitz_series_params& p, double tol)
{
    validate(p);
    const double m = p.m;
    const complex sigma_c = p.s / p.r;
    const double sigma = sigma_c.real();
    const double rm = std::pow(std::abs(p.r), m);
    auto term = [&](long long k) -> complex {
        complex w = static_cast<double>(k) - sigma_c;
        complex z = w + static_cast<double>(p.shift);
        complex zeta = k <= 8 ? hurwitz_zeta(m, z) : hurwitz_zeta_em(m, z);
        return zeta / std::pow(p.r * static_cast<double>(k) - p.s, m);
    };
    auto tail = [&](long long k) {
        double x = static_cast<double>(k) - sigma;
        if (x <= 1.0) return std::numeric_limits<double>::infinity();
        return (std::pow(x, 1.0 - 2.0 * m) / (2.0 * m - 1.0) + std::pow(x, 2.0 - 2.0 * m) / ((m - 1.0) * (2.0 * m - 2.0))) / rm;
    };
    return sum_series(term, tail, tol);
}

// sin(pi n/2) for integer n.
constexpr int sin_half_pi_int(long long n)
{
    constexpr int table[4] = {0, 1, 0, -1};
    return table[((n % 4) + 4) % 4];
}

// int_0^inf x^n/((r^2 x^2 + c^2)^M (e^{2 pi x} - 1)) dx.
inline quadrature_result<double> bose_moment(int n, int M, double r, double c, double tol = 0.0)
{
    if (n < 1) throw domain_error("n", "bose_moment: requires n >= 1");
    if (!(c > 0.0)) throw domain_error("c", "bose_moment: requires c > 0");
    const double two_pi = 2.0 * constants::pi;
    const double r2 = r * r, c2 = c * c;
    double scale = std::pow(c, -2.0 * M) * detail::factorial(n) * riemann_zeta(n + 1.0) / std::pow(two_pi, n + 1.0);
    double qtol = tol > 0.0 ? tol : 1e-15 * scale;
    auto f = [=](double x) { return std::pow(x, n) / (std::pow(r2 * x * x + c2, M) * std::expm1(two_pi * x)); };
    return integrate_semi_infinite(f, qtol);
}

struct bose_term {
    double coef;
    int power;
};

// sum_{k>=1} sum_t coef_t/(rk - s)^{n_t} * bose_moment(n_t, M, r, rk - s).
inline series_result bose_family_sum(const std::vector<bose_term>& terms, int M, double r, double s, double tol)
{
    if (!(r > 0.0) || !(r - s > 0.0)) throw domain_error("s", "bose_family_sum: requires r > 0 and r - s > 0");
    const double two_pi = 2.0 * constants::pi;
    struct scaled {
        double weight;
        int q;
    };
    std::vector<scaled> bounds;
    for (const auto& t : terms) {
        double w = std::fabs(t.coef) * detail::factorial(t.power) * riemann_zeta(t.power + 1.0) / std::pow(two_pi, t.power + 1.0);
        bounds.push_back({w, t.power + 2 * M});
    }
    double quad_error = 0.0;
    auto term = [&](long long k) {
        double c = r * static_cast<double>(k) - s;
        detail::neumaier acc;
        for (const auto& t : terms) {
            double coef = t.coef / std::pow(c, t.power);
            auto q = bose_moment(t.power, M, r, c, 1e-16 * std::pow(c, -2.0 * M));
            acc.add(coef * q.value);
            quad_error += std::fabs(coef) * q.error_estimate;
        }
        return acc.value();
    };
    auto tail = [&](long long k) {
        double c = r * static_cast<double>(k) - s;
        double b = 0.0;
        for (const auto& w : bounds) b += w.weight * std::pow(c, 1.0 - w.q) / (r * (w.q - 1.0));
        return b;
    };
    auto res = sum_series(term, tail, tol);
    res.tail_estimate += quad_error;
    return res;
}

// sum_k sum_{p<m} C(m,p) sin(pi(m-p)/2)/(r^p (rk-s)^{m-p}) int_0^inf x^{m-p}/((r^2x^2+(rk-s)^2)^m (e^{2pi x}-1)) dx.
inline series_result hermite_family_lhs(int m, double r, double s, double tol)
{
    if (m < 2) throw domain_error("m", "hermite_family_lhs: requires m >= 2");
    std::vector<bose_term> terms;
    for (int p = 0; p < m; ++p) {
        int sgn = sin_half_pi_int(m - p);
        if (sgn == 0) continue;
        terms.push_back({detail::binomial(m, p) * sgn / std::pow(r, p), m - p});
    }
    return bose_family_sum(terms, m, r, s, tol);
}

}  // namespace dilogid
