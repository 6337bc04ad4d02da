#pragma once

#include <dilogid/detail/summation.hpp>
#include <dilogid/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace dilogid {

using complex = std::complex<double>;
using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

namespace constants {
inline constexpr double pi = 3.141592653589793238462643;
inline constexpr double euler_gamma = 0.5772156649015328606065121;
inline constexpr double ln2 = 0.6931471805599453094172321;
inline constexpr double catalan = 0.9159655941772190150546035;
inline constexpr double e = 2.718281828459045235360287;
inline constexpr double zeta3 = 1.202056903159594285399738;
inline constexpr double zeta5 = 1.036927755143369926331365;
inline constexpr double zeta7 = 1.008349277381922826839798;
inline constexpr double zeta9 = 1.002008392826082214417853;
inline constexpr double zeta11 = 1.000494188604119464558702;
inline constexpr double zeta13 = 1.000122713347578489146752;
}  // namespace constants

inline double real_view(const rational& q) { return q.convert_to<double>(); }

namespace detail {

inline std::string format_number(double x)
{
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

inline std::string format_number(complex z)
{
    if (z.imag() == 0.0) return format_number(z.real());
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::fabs(z.imag()) << "i";
    return os.str();
}

inline bool is_nonpositive_integer(complex z)
{
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

inline complex ipow(complex z, int n)
{
    if (n < 0) return 1.0 / ipow(z, -n);
    complex r = 1.0;
    while (n) {
        if (n & 1) r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

// log(1 + w) without losing digits for small |w|.
inline complex log1p(complex w)
{
    if (w.imag() == 0.0 && w.real() > -1.0) return std::log1p(w.real());
    complex u = 1.0 + w;
    if (u == 1.0) return w;
    if (std::abs(w) > 0.5) return std::log(u);
    return std::log(u) * (w / (u - 1.0));
}

inline double factorial(int n)
{
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

inline double binomial(int n, int k)
{
    if (k < 0 || k > n) return 0.0;
    double b = 1.0;
    for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
    return std::round(b);
}

// Tangent numbers T_1..T_n (T_k = d^{2k-1}/dx^{2k-1} tan x at 0).
inline std::vector<integer> tangent_numbers(unsigned n)
{
    std::vector<integer> t(n + 1);
    if (n == 0) return t;
    t[1] = 1;
    for (unsigned k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
    for (unsigned k = 2; k <= n; ++k)
        for (unsigned j = k; j <= n; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    return t;
}

inline rational bernoulli_from_tangent(unsigned k, const integer& t)
{
    integer four_k = integer(1) << (2 * k);
    rational b(integer(2 * k) * t, four_k * (four_k - 1));
    return (k % 2 == 1) ? b : rational(-b);
}

inline constexpr unsigned bernoulli_table_size = 101;

// B_{2k} as doubles for k < bernoulli_table_size. Built once; immutable afterwards.
inline const std::array<double, bernoulli_table_size>& even_bernoulli_table()
{
    static const std::array<double, bernoulli_table_size> table = [] {
        std::array<double, bernoulli_table_size> b{};
        auto t = tangent_numbers(bernoulli_table_size - 1);
        b[0] = 1.0;
        for (unsigned k = 1; k < bernoulli_table_size; ++k) b[k] = real_view(bernoulli_from_tangent(k, t[k]));
        return b;
    }();
    return table;
}

inline long double eta_borwein(long double s)
{
    constexpr int n = 36;
    std::array<long double, n + 1> d{};
    long double term = 1.0L, acc = 1.0L;
    d[0] = 1.0L;
    for (int i = 1; i <= n; ++i) {
        term *= 4.0L * (n + i - 1) * (n - i + 1) / ((2.0L * i) * (2.0L * i - 1));
        acc += term;
        d[i] = acc;
    }
    long double sum = 0.0L;
    for (int k = n - 1; k >= 0; --k) {
        long double t = (d[k] - d[n]) / std::pow(static_cast<long double>(k + 1), s);
        sum += (k % 2 == 0) ? t : -t;
    }
    return -sum / d[n];
}

}  // namespace detail

inline rational harmonic(long long n)
{
    if (n < 1) throw domain_error("n", "harmonic: n must be >= 1, got " + std::to_string(n));
    rational h = 0;
    for (long long k = 1; k <= n; ++k) h += rational(1, k);
    return h;
}

inline rational harmonic2(long long n)
{
    if (n < 1) throw domain_error("n", "harmonic2: n must be >= 1, got " + std::to_string(n));
    rational h = 0;
    for (long long k = 1; k <= n; ++k) h += rational(integer(1), integer(k) * k);
    return h;
}

// B_1 = -1/2.
inline rational bernoulli(long long n)
{
    if (n < 0) throw domain_error("n", "bernoulli: n must be >= 0");
    if (n == 0) return 1;
    if (n == 1) return rational(-1, 2);
    if (n % 2 == 1) return 0;
    unsigned k = static_cast<unsigned>(n / 2);
    auto t = detail::tangent_numbers(k);
    return detail::bernoulli_from_tangent(k, t[k]);
}

// Seidel boustrophedon for the zigzag numbers; E_{2k} = (-1)^k A_{2k}.
inline integer euler_number(long long n)
{
    if (n < 0) throw domain_error("n", "euler_number: n must be >= 0");
    if (n % 2 == 1) return 0;
    std::vector<integer> row{1}, next;
    for (long long i = 1; i <= n; ++i) {
        next.assign(static_cast<std::size_t>(i + 1), integer(0));
        for (long long k = 1; k <= i; ++k) next[k] = next[k - 1] + row[static_cast<std::size_t>(i - k)];
        row.swap(next);
    }
    integer a = row.back();
    return (n / 2) % 2 == 0 ? a : integer(-a);
}

inline complex digamma(complex z)
{
    using constants::pi;
    if (detail::is_nonpositive_integer(z))
        throw domain_error("z", "digamma: pole at z = " + detail::format_number(z));
    if (z.real() < 0.0) return digamma(1.0 - z) - pi / std::tan(pi * z);

    detail::complex_neumaier shift;
    while (z.real() < 10.0) {
        shift.add(-1.0 / z);
        z += 1.0;
    }
    const auto& b = detail::even_bernoulli_table();
    complex w = 1.0 / (z * z);
    complex series = 0.0;
    for (int k = 14; k >= 1; --k) series = (series + b[k] / (2.0 * k)) * w;
    complex v = std::log(z) - 0.5 / z - series;
    shift.add(v);
    return shift.value();
}

inline double digamma(double x) { return digamma(complex(x, 0.0)).real(); }

// psi_m(z), the m-th derivative of digamma.
inline complex polygamma(int m, complex z)
{
    if (m < 0) throw domain_error("m", "polygamma: order must be >= 0, got " + std::to_string(m));
    if (m == 0) return digamma(z);
    if (detail::is_nonpositive_integer(z))
        throw domain_error("z", "polygamma: pole at z = " + detail::format_number(z));

    const double lift_to = 10.0 + m;
    detail::complex_neumaier lifted;
    while (z.real() < lift_to) {
        lifted.add(detail::ipow(z, -(m + 1)));
        z += 1.0;
    }
    const auto& b = detail::even_bernoulli_table();
    complex w = 1.0 / (z * z);
    complex s = 1.0 + static_cast<double>(m) / (2.0 * z);
    double p = 1.0;
    complex wk = 1.0;
    for (unsigned k = 1; k < detail::bernoulli_table_size; ++k) {
        p *= (2.0 * k + m - 1) * (2.0 * k + m - 2) / ((2.0 * k) * (2.0 * k - 1));
        wk *= w;
        complex t = b[k] * p * wk;
        s += t;
        if (std::abs(t) < 1e-18 * std::abs(s)) break;
    }
    double sign = (m % 2 == 1) ? 1.0 : -1.0;
    complex asym = sign * detail::factorial(m - 1) * detail::ipow(z, -m) * s;
    return asym + sign * detail::factorial(m) * lifted.value();
}

inline double polygamma(int m, double x) { return polygamma(m, complex(x, 0.0)).real(); }

inline double dirichlet_eta(double s)
{
    if (!(s > 0.0)) throw domain_error("s", "dirichlet_eta: requires s > 0, got " + detail::format_number(s));
    return static_cast<double>(detail::eta_borwein(s));
}

namespace detail {

inline long double riemann_zeta_ld(long double s)
{
    if (s == std::floor(s) && std::fmod(s, 2.0L) == 0.0L && s < 2.0L * bernoulli_table_size) {
        int n = static_cast<int>(s) / 2;
        long double v = std::fabs(static_cast<long double>(even_bernoulli_table()[n])) / 2.0L;
        const long double two_pi = 6.283185307179586476925286766559L;
        for (int k = 1; k <= 2 * n; ++k) v *= two_pi / k;
        return v;
    }
    return eta_borwein(s) / (1.0L - std::pow(2.0L, 1.0L - s));
}

}  // namespace detail

inline double riemann_zeta(double s)
{
    if (!(s > 1.0)) throw domain_error("s", "riemann_zeta: requires s > 1, got " + detail::format_number(s));
    return static_cast<double>(detail::riemann_zeta_ld(s));
}

// Running H_k and H_k^(2) for k = 1, 2, ...
class harmonic_stream {
public:
    void advance()
    {
        ++k_;
        double x = static_cast<double>(k_);
        h1_.add(1.0 / x);
        h2_.add(1.0 / (x * x));
    }
    long long index() const noexcept { return k_; }
    double h1() const noexcept { return h1_.value(); }
    double h2() const noexcept { return h2_.value(); }

private:
    long long k_ = 0;
    detail::neumaier h1_, h2_;
};

}  // namespace dilogid
