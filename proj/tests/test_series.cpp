#include <dilogid/catalog.hpp>
#include <dilogid/series.hpp>

#include <gtest/gtest.h>

using namespace dilogid;
using constants::pi;

namespace {

const double pi4 = std::pow(pi, 4);

}  // namespace

TEST(SumSeries, InverseSquares)
{
    series_options opt;
    opt.max_terms = 200000000;
    auto r = sum_series([](long long k) { return 1.0 / (double(k) * double(k)); }, [](long long k) { return 1.0 / double(k); }, 1e-8, opt);
    EXPECT_LE(std::abs(r.value - pi * pi / 6), 1e-8);
    EXPECT_LT(r.tail_estimate, 1e-8);
    EXPECT_EQ(r.terms_used, 100000001);
}

TEST(SumSeries, HarmonicCubes)
{
    harmonic_stream h;
    auto term = [&h](long long k) {
        h.advance();
        return h.h1() / std::pow(double(k), 3);
    };
    auto tail = [](long long n) {
        double x = double(n);
        return (2 * std::log(x) + 3) / (4 * x * x);
    };
    auto r = sum_series(term, tail, 1e-10);
    EXPECT_LE(std::abs(r.value - pi4 / 72), 1e-10);
}

TEST(SumSeries, EvenHarmonicCubes)
{
    harmonic_stream h;
    auto term = [&h](long long k) {
        while (h.index() < 2 * k) h.advance();
        return h.h1() / std::pow(double(k), 3);
    };
    auto tail = [](long long n) {
        double x = double(n);
        return (1 + constants::ln2) * (2 * std::log(x) + 3) / (4 * x * x);
    };
    auto r = sum_series(term, tail, 1e-10);
    double l = constants::ln2;
    double expect = -pi4 / 15 - pi * pi / 3 * l * l + std::pow(l, 4) / 3 + 7 * l * constants::zeta3 + 8 * li(4, 0.5).real();
    EXPECT_LE(std::abs(r.value - expect), 1e-10);
}

TEST(SumSeries, TermsCalledOnceInOrder)
{
    long long expected = 3;
    series_options opt;
    opt.start = 3;
    auto r = sum_series(
        [&](long long k) {
            EXPECT_EQ(k, expected);
            ++expected;
            return std::pow(0.5, double(k));
        },
        [](long long k) { return std::pow(0.5, double(k)); }, 1e-12, opt);
    EXPECT_NEAR(r.value.real(), 0.25, 1e-12);
    EXPECT_EQ(r.terms_used, expected - 3);
}

TEST(SumSeries, PairGrouping)
{
    series_options opt;
    opt.pair_grouping = true;
    auto r = sum_series([](long long k) { return (k % 2 ? -1.0 : 1.0) / double(k); }, [](long long k) { return 1.0 / double(k + 1); },
                        1e-6, opt);
    EXPECT_EQ(r.terms_used % 2, 0);
    EXPECT_LE(std::abs(r.value + constants::ln2), 1e-6);
}

TEST(SumSeries, DivergentTailThrows)
{
    series_options opt;
    opt.max_terms = 1000;
    EXPECT_THROW(sum_series([](long long k) { return 1.0 / double(k); }, [](long long) { return std::numeric_limits<double>::infinity(); },
                            1e-8, opt),
                 non_convergence);
    EXPECT_THROW(sum_series([](long long) { return 1.0; }, [](long long) { return 1.0; }, 1e-8, opt), non_convergence);
}

TEST(SumSeries, CapReturnsCertifiedTail)
{
    series_options opt;
    opt.max_terms = 1000;
    auto r = sum_series([](long long k) { return 1.0 / (double(k) * double(k)); }, [](long long k) { return 1.0 / double(k); }, 1e-12, opt);
    EXPECT_EQ(r.terms_used, 1000);
    EXPECT_NEAR(r.tail_estimate, 1e-3, 1e-15);
    EXPECT_LE(std::abs(r.value - pi * pi / 6), r.tail_estimate);
}

TEST(DoubleSeries, Symmetric)
{
    auto f = [](long long k, long long j) { return 1.0 / std::pow(double(k + j), 4) + 1.0 / (double(k * k) * double(j * j)); };
    auto tail = [](long long n) { return 1.0 / (2.0 * double(n) * double(n)) + pi * pi / 6 / double(n); };
    double_series_options opt;
    opt.max_shells = 2000;
    auto r = double_series_lhs([&](long long n, long long j) { return f(n, j); }, tail, 1e-9, opt);
    double rhs = 0.5 * (constants::zeta3 + pi4 / 36 + pi4 / 90 / 16);
    EXPECT_NEAR(r.tail_estimate, tail(2000), 1e-18);
    EXPECT_LE(std::abs(r.value - rhs), 1e-9 + r.tail_estimate);
}

TEST(DoubleSeries, ProductOfInverseSquares)
{
    auto f = [](long long n, long long j) { return 1.0 / (double(n) * double(n) * double(j) * double(j)); };
    auto r = double_series_lhs(f, [](long long n) { return pi * pi / 6 / double(n); }, 1e-9);
    EXPECT_LE(std::abs(r.value - 7 * pi4 / 360), std::max(1e-9, r.tail_estimate));
}

TEST(DoubleSeries, Geometric)
{
    double q = 1.0 / 3;
    auto f = [q](long long n, long long j) { return std::pow(q, double(n + j)); };
    auto r = double_series_lhs(f, [q](long long n) { return std::pow(q, double(n + 2)) / ((1 - q) * (1 - q)); }, 1e-12);
    double rhs = 0.5 * (std::pow(q / (1 - q), 2) + q * q / (1 - q * q));
    EXPECT_LE(std::abs(r.value - rhs), 1e-12);
    EXPECT_LT(r.tail_estimate, 1e-12);
}

TEST(DoubleSeries, Indicator)
{
    auto r = double_series_lhs([](long long n, long long j) { return (n == 1 && j == 1) ? 1.0 : 0.0; }, [](long long) { return 0.0; }, 1e-9);
    EXPECT_EQ(r.value, complex(1.0));
}

TEST(Transform, InverseSquares)
{
    auto single = [](long long k) { return 1.0 / (double(k) * double(k)); };
    auto diag = [](long long k) { return std::pow(double(k), -4); };
    auto r = transform_rhs(single, [](long long k) { return 1.0 / double(k); }, diag, [](long long k) { return 1.0 / (3 * std::pow(double(k), 3)); },
                           1e-7);
    EXPECT_LE(std::abs(r.value - 7 * pi4 / 360), std::max(1e-9, r.tail_estimate));
}

TEST(Transform, AlternatingHarmonic)
{
    series_options opt;
    opt.pair_grouping = true;
    auto single = [](long long k) { return (k % 2 ? -1.0 : 1.0) / double(k); };
    auto diag = [](long long k) { return 1.0 / (double(k) * double(k)); };
    auto r = transform_rhs(single, [](long long k) { return 1.0 / double(k + 1); }, diag, [](long long k) { return 1.0 / double(k); }, 1e-6, opt);
    double l = constants::ln2;
    EXPECT_LE(std::abs(r.value - 0.5 * (l * l + pi * pi / 6)), std::max(1e-9, r.tail_estimate));
}

TEST(Transform, Zero)
{
    auto zero = [](long long) { return 0.0; };
    auto r = transform_rhs(zero, zero, zero, zero, 1e-9);
    EXPECT_EQ(r.value, complex(0.0));
}

TEST(Transform, MatchesDoubleSeriesForListedChoices)
{
    for (int c = 0; c < 4; ++c) {
        auto lhs = double_series_lhs([c](long long n, long long j) { return catalog_detail::d1_value(c, n) * catalog_detail::d1_value(c, j); },
                                     [c](long long n) { return catalog_detail::d1_shell_tail(c, n); }, 1e-9);
        complex rhs = catalog_detail::d1_rhs(c);
        EXPECT_LE(std::abs(lhs.value - rhs), std::max(1e-9, lhs.tail_estimate)) << c;
    }
}

TEST(HurwitzSeries, SquaredZetaTwo)
{
    auto r = hurwitz_series_lhs({2.0, 1.0, 0.0, 0}, 1e-10);
    EXPECT_LE(std::abs(r.value - 7 * pi4 / 360), 1e-9);
}

TEST(HurwitzSeries, HalfShift)
{
    auto r = hurwitz_series_lhs({2.0, 2.0, 1.0, 0}, 1e-10);
    double expect = (std::pow(pi * pi / 2, 2) + pi4 / 6) / 8;
    EXPECT_LE(std::abs(r.value - expect), 1e-9);
}

TEST(HurwitzSeries, CatalanExample)
{
    auto r = hurwitz_series_lhs({2.0, 4.0, 1.0, 0}, 1e-11);
    double G = constants::catalan;
    double printed = 2 * G * G - pi * pi / 2 * G + pi4 / 32 + polygamma(3, 0.75) / 192;
    EXPECT_LE(std::abs(r.value - printed), 1e-9);
}

TEST(HurwitzSeries, ThreeByThreeGrid)
{
    for (double m : {2.0, 2.5, 3.0, 4.0})
        for (double r : {1.0, 2.0, 4.0})
            for (double s : {0.0, 1.0, -0.5}) {
                if (!(r - s > 0.0)) continue;
                auto res = hurwitz_series_lhs({m, r, s, 0}, 1e-10);
                double w = (r - s) / r, z = hurwitz_zeta_em(m, w);
                double rhs = (z * z + hurwitz_zeta_em(2 * m, w)) / (2 * std::pow(r, m));
                EXPECT_LT(std::abs(res.value - rhs), 1e-9) << m << " " << r << " " << s;
            }
}

TEST(HurwitzSeries, Domain)
{
    EXPECT_THROW(hurwitz_series_lhs({1.0, 1.0, 0.0, 0}, 1e-9), domain_error);
    EXPECT_THROW(hurwitz_series_lhs({2.0, 0.0, 0.0, 0}, 1e-9), domain_error);
    EXPECT_THROW(hurwitz_series_lhs({2.0, 1.0, 1.0, 0}, 1e-9), domain_error);
}

TEST(PolygammaSeries, MatchesHurwitzForm)
{
    for (auto [m, r, s] : {std::tuple{2, 4.0, 1.0}, std::tuple{3, 4.0, 1.0}}) {
        auto p = catalog_detail::polygamma_series(m, r, s, 1e-12);
        auto h = hurwitz_series_lhs({double(m), r, s, 0}, 1e-12);
        double sign = m % 2 == 0 ? 1.0 : -1.0;
        EXPECT_LT(std::abs(p.value - sign * detail::factorial(m - 1) * h.value), 1e-10) << m;
    }
}

TEST(HermiteFamily, BernoulliExampleIsTwiceThePrintedValue)
{
    auto r = hermite_family_lhs(2, 1.0, 0.0, 1e-12);
    EXPECT_NEAR(r.value.real(), 2 * (pi4 / 288 - constants::zeta3 / 4), 1e-10);
}

TEST(HermiteFamily, OddArgumentExample)
{
    auto r = hermite_family_lhs(2, 2.0, 1.0, 1e-12);
    double w = 0.5, z = hurwitz_zeta_em(2.0, w);
    double rhs = z * z / (4 * 64) - hurwitz_zeta_em(3.0, w) / (2 * 64);
    EXPECT_NEAR(r.value.real(), rhs, 1e-11);
    EXPECT_NEAR(rhs, pi4 / 1024 - 7 * constants::zeta3 / 128, 1e-13);
}

TEST(HermiteFamily, OrderThree)
{
    auto r = hermite_family_lhs(3, 1.0, 0.0, 1e-12);
    double z3 = constants::zeta3;
    EXPECT_NEAR(r.value.real(), z3 * z3 / 4 - riemann_zeta(5.0) / 4, 1e-11);
}

TEST(HermiteFamily, Domain) { EXPECT_THROW(hermite_family_lhs(1, 1.0, 0.0, 1e-9), domain_error); }

TEST(SinHalfPi, Period)
{
    EXPECT_EQ(sin_half_pi_int(0), 0);
    EXPECT_EQ(sin_half_pi_int(1), 1);
    EXPECT_EQ(sin_half_pi_int(6), 0);
    EXPECT_EQ(sin_half_pi_int(7), -1);
    EXPECT_EQ(sin_half_pi_int(-1), -1);
    for (int n = -20; n <= 20; ++n) EXPECT_NEAR(sin_half_pi_int(n), std::sin(pi * n / 2), 1e-12);
}

TEST(Summation, NeumaierCompensates)
{
    detail::neumaier acc;
    acc.add(1.0);
    for (int i = 0; i < 1000; ++i) acc.add(1e-16);
    acc.add(-1.0);
    EXPECT_NEAR(acc.value(), 1e-13, 1e-25);
}

TEST(Summation, CountsNumericEvaluations)
{
    auto before = detail::numeric_evaluations;
    sum_series([](long long k) { return std::pow(0.5, double(k)); }, [](long long k) { return std::pow(0.5, double(k)); }, 1e-10);
    EXPECT_EQ(detail::numeric_evaluations, before + 1);
}
