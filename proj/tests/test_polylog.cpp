#include <dilogid/polylog.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace dilogid;
using constants::pi;

namespace {

const double pi4 = std::pow(pi, 4);

complex series(int s, complex z, int terms)
{
    complex acc = 0.0, zk = 1.0;
    for (int k = 1; k <= terms; ++k) {
        zk *= z;
        acc += zk / std::pow(k, s);
    }
    return acc;
}

}  // namespace

TEST(Li, SpecialValues)
{
    EXPECT_NEAR(li(2, 1.0).real(), pi * pi / 6, 1e-15);
    EXPECT_NEAR(li(2, -1.0).real(), -pi * pi / 12, 1e-15);
    EXPECT_NEAR(li(3, 1.0).real(), constants::zeta3, 1e-15);
    EXPECT_NEAR(li(4, -1.0).real(), -7.0 * pi4 / 720, 1e-15);
    EXPECT_EQ(li(3, 0.0), complex(0.0));
}

TEST(Li, HalfAgainstSeries)
{
    complex v = li(4, 0.5);
    double s = 0.0;
    for (int k = 60; k >= 1; --k) s += std::pow(2.0, -k) / std::pow(k, 4);
    EXPECT_LT(std::abs(v - s), 1e-16);
    EXPECT_EQ(v.imag(), 0.0);
}

TEST(Li, DilogHalfClosedForm)
{
    double l = constants::ln2;
    EXPECT_NEAR(li(2, 0.5).real(), pi * pi / 12 - l * l / 2, 1e-15);
    EXPECT_NEAR(li(3, 0.5).real(), 7.0 / 8 * constants::zeta3 - pi * pi / 12 * l + l * l * l / 6, 1e-15);
}

TEST(Li, JonquiereAtTwo)
{
    double l = std::log(2.0);
    complex v = li(4, -2.0) + li(4, -0.5);
    EXPECT_NEAR(v.real(), -7.0 * pi4 / 360 - pi * pi / 12 * l * l - std::pow(l, 4) / 24, 1e-14);
}

TEST(Li, JonquiereGrid)
{
    for (int j = 0; j < 50; ++j) {
        double a = std::pow(10.0, -4.0 + 8.0 * j / 49.0);
        double l = std::log(a);
        complex v = li(4, -1.0 / a) + li(4, -a) + 7.0 * pi4 / 360 + pi * pi / 12 * l * l + l * l * l * l / 24;
        EXPECT_LT(std::abs(v), 1e-11) << a;
    }
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> mod(-3.0, 3.0), arg(-3.1, 3.1);
    for (int j = 0; j < 50; ++j) {
        complex a = std::polar(std::pow(10.0, mod(rng)), arg(rng));
        complex l = std::log(a);
        complex v = li(4, -1.0 / a) + li(4, -a) + 7.0 * pi4 / 360 + pi * pi / 12 * l * l + l * l * l * l / 24.0;
        EXPECT_LT(std::abs(v), 1e-11) << a;
    }
}

TEST(Li, ReflectionPairGrid)
{
    for (int k = 1; k <= 25; ++k) {
        double z = k / 26.0;
        double lz = std::log(z), l1 = std::log(1 - z);
        double rhs = -7 * pi4 / 360 - lz * lz * l1 * l1 / 4 - pi * pi / 12 * l1 * l1 - std::pow(l1, 4) / 24 + pi * pi / 6 * lz * l1 +
                     lz * std::pow(l1, 3) / 6 - pi * pi / 12 * lz * lz + std::pow(lz, 3) * l1 / 6 - std::pow(lz, 4) / 24;
        complex v = li(4, (z - 1) / z) + li(4, z / (z - 1));
        EXPECT_LT(std::abs(v - rhs), 1e-11) << z;
    }
}

TEST(Li, SeriesAgreementInsideHalfDisk)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int i = 0; i < 200; ++i) {
        complex z(u(rng), u(rng));
        if (std::abs(z) > 0.5) continue;
        for (int s = 2; s <= 4; ++s) EXPECT_LT(std::abs(li(s, z) - series(s, z, 80)), 1e-13) << s << " " << z;
    }
}

TEST(Li, ContinuityAcrossRegionBoundaries)
{
    for (double r : {0.5, 2.0})
        for (double t = -3.0; t <= 3.0; t += 0.37) {
            complex in = std::polar(r * (1 - 1e-12), t), out = std::polar(r * (1 + 1e-12), t);
            for (int s = 2; s <= 4; ++s) EXPECT_LT(std::abs(li(s, in) - li(s, out)), 1e-11) << s << " " << in;
        }
}

TEST(Li, BoseIntegralOracle)
{
    for (complex z : {complex(0.7, 0.2), complex(-3.0, 0.0), complex(0.9, -0.9), complex(-0.4, 2.5), complex(5.0, 1.0)})
        for (int s = 2; s <= 4; ++s) {
            auto q = polylog_integral(s, z, 1e-15);
            EXPECT_LT(std::abs(li(s, z) - q.value), 1e-12) << s << " " << z;
        }
}

TEST(Li, DerivativeRelation)
{
    // z d/dz Li_s(z) = Li_{s-1}(z)
    complex z(0.8, 0.6);
    double h = 1e-5;
    for (int s = 3; s <= 4; ++s) {
        complex d = (li(s, z + h) - li(s, z - h)) / (2 * h);
        EXPECT_LT(std::abs(z * d - li(s - 1, z)), 1e-8) << s;
    }
}

TEST(Li, ConjugateSymmetry)
{
    complex z(1.7, 0.4);
    for (int s = 2; s <= 4; ++s) EXPECT_LT(std::abs(li(s, std::conj(z)) - std::conj(li(s, z))), 1e-15);
}

TEST(Li, RejectsCutAndOrder)
{
    EXPECT_THROW(li(2, 1.5), domain_error);
    EXPECT_THROW(li(5, 0.5), unsupported_order);
    EXPECT_THROW(li(1, 0.5), unsupported_order);
    EXPECT_NO_THROW(li(2, complex(1.5, 1e-9)));
}

TEST(Li2Integral, Values)
{
    EXPECT_EQ(li2_integral(0.0), complex(0.0));
    EXPECT_LT(std::abs(li2_integral(0.7) - li(2, 0.7)), 1e-11);
    EXPECT_LT(std::abs(li2_integral(-3.0) - li(2, -3.0)), 1e-11);
    EXPECT_LT(std::abs(li2_integral(complex(2.0, 1.0)) - li(2, complex(2.0, 1.0))), 1e-11);
    EXPECT_THROW(li2_integral(2.0), domain_error);
}

TEST(Hurwitz, HermiteValues)
{
    EXPECT_NEAR(hurwitz_zeta(2, 1.0).real(), pi * pi / 6, 1e-14);
    EXPECT_NEAR(hurwitz_zeta(2, 0.5).real(), pi * pi / 2, 1e-14);
    EXPECT_LT(std::abs(hurwitz_zeta(3, 0.75) - hurwitz_zeta_em(3, 0.75)), 1e-11);
}

TEST(Hurwitz, EulerMaclaurinValues)
{
    EXPECT_NEAR(hurwitz_zeta_em(2.0, 1.0), pi * pi / 6, 1e-13);
    EXPECT_NEAR(hurwitz_zeta_em(4.0, 0.5), pi4 / 6, 1e-13);
    EXPECT_NEAR(hurwitz_zeta_em(2.0, 0.75), polygamma(1, 0.75), 1e-12);
}

TEST(Hurwitz, HermiteAgreesWithEulerMaclaurin)
{
    for (double s : {2.0, 3.0, 4.0, 5.0, 7.0})
        for (double z : {0.25, 0.5, 0.75, 1.0, 2.0}) EXPECT_LT(std::abs(hurwitz_zeta(s, z) - hurwitz_zeta_em(s, z)), 1e-11) << s << " " << z;
    for (complex z : {complex(0.5, 1.0), complex(2.0, -3.0)})
        EXPECT_LT(std::abs(hurwitz_zeta(2.5, z) - hurwitz_zeta_em(2.5, z)), 1e-11) << z;
}

TEST(Hurwitz, ShiftRecurrence)
{
    complex z(0.3, 0.8);
    for (double s : {2.0, 3.5})
        EXPECT_LT(std::abs(hurwitz_zeta(s, z) - hurwitz_zeta(s, z + 1.0) - std::pow(z, -s)), 1e-13) << s;
}

TEST(Hurwitz, ReportsQuadratureError)
{
    auto r = hurwitz_zeta_hermite(3.0, 0.75);
    EXPECT_TRUE(r.converged);
    EXPECT_GT(r.evaluations, 0);
    EXPECT_LT(r.error_estimate, 1e-12);
}

TEST(Hurwitz, Domain)
{
    EXPECT_THROW(hurwitz_zeta(1.0, 1.0), domain_error);
    EXPECT_THROW(hurwitz_zeta(2.0, -0.5), domain_error);
    EXPECT_THROW(hurwitz_zeta_em(0.5, 1.0), domain_error);
}

TEST(Lerch, Values)
{
    EXPECT_NEAR(lerch_phi(1.0, 2.0, 1.0).real(), pi * pi / 6, 1e-13);
    EXPECT_NEAR(lerch_phi(-1.0, 2.0, 1.0).real(), pi * pi / 12, 1e-13);
    EXPECT_LT(std::abs(0.4 * lerch_phi(0.4, 2.0, 1.0) - li(2, 0.4)), 1e-13);
    complex z = std::polar(1.0, 2.0);
    EXPECT_LT(std::abs(z * lerch_phi(z, 3.0, 1.0, 1e-12) - li(3, z)), 1e-10);
}

TEST(Lerch, HurwitzCase) { EXPECT_LT(std::abs(lerch_phi(1.0, 3.0, 0.75) - hurwitz_zeta_em(3.0, 0.75)), 1e-13); }

TEST(Lerch, Domain)
{
    EXPECT_THROW(lerch_phi(1.5, 2.0, 1.0), domain_error);
    EXPECT_THROW(lerch_phi(0.5, 2.0, -1.0), domain_error);
    EXPECT_THROW(lerch_phi(0.5, 1.0, 1.0), domain_error);
}
