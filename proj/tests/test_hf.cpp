#include <cmath>

#include <gtest/gtest.h>

#include "molpoly/hf.hpp"
#include "molpoly/reference.hpp"

using namespace molpoly;

namespace {

// Simpson's rule on [a, b] with n (even) panels.
template <class F>
double simpson(F f, double a, double b, int n = 20000) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4 : 2) * f(a + i * h);
    return s * h / 3;
}

}  // namespace

TEST(Hf, BoysFunction) {
    EXPECT_NEAR(hf::boys_f0(0), 1.0, 1e-14);
    EXPECT_NEAR(hf::boys_f0(1), 0.746824, 1e-6);
    // F0(t) = int_0^1 exp(-t u^2) du
    for (double t : {1e-8, 0.3, 4.0, 25.0, 80.0})
        EXPECT_NEAR(hf::boys_f0(t), simpson([&](double u) { return std::exp(-t * u * u); }, 0, 1), 1e-10) << t;
}

TEST(Hf, OverlapAgainstQuadrature) {
    const hf::Sto3gBasis b;
    const double R = 1.8;
    const auto A = b.contracted({0, 0, 0}), B = b.contracted({R, 0, 0});
    double quad = 0;
    for (const auto& p : A)
        for (const auto& q : B) {
            // separable: one 1-D integral along the bond, Gaussian factors across it
            const double along = simpson(
                [&](double x) { return std::exp(-p.b * x * x - q.b * (x - R) * (x - R)); }, -15, 15);
            quad += p.d * q.d * along * M_PI / (p.b + q.b);
        }
    double analytic = 0;
    for (const auto& p : A)
        for (const auto& q : B) analytic += hf::overlap(p, q);
    EXPECT_NEAR(analytic, quad, 1e-9);
    EXPECT_NEAR(hf::integrals(b, R).S[0][1], analytic, 1e-12);
}

TEST(Hf, ContractedFunctionIsNormalized) {
    const hf::Sto3gBasis b;
    double s = 0;
    for (const auto& p : b.contracted({0, 0, 0}))
        for (const auto& q : b.contracted({0, 0, 0})) s += hf::overlap(p, q);
    EXPECT_NEAR(s, 1.0, 2e-6);
}

TEST(Hf, SameCenterOneElectronIntegralsAgainstRadialQuadrature) {
    const hf::PrimitiveGaussian p{0.8, 1.0, {0, 0, 0}}, q{2.3, 1.0, {0, 0, 0}};
    const double g = p.b + q.b;
    // T = 1/2 int grad p . grad q = 1/2 int 4 pi r^2 (2 a r)(2 b r) e^{-g r^2}
    const double t = simpson([&](double r) { return 8 * M_PI * p.b * q.b * std::pow(r, 4) * std::exp(-g * r * r); }, 0, 12);
    EXPECT_NEAR(hf::kinetic(p, q), t, 1e-9);
    // unit nucleus at the center: -int 4 pi r e^{-g r^2}
    const double v = -simpson([&](double r) { return 4 * M_PI * r * std::exp(-g * r * r); }, 0, 12);
    EXPECT_NEAR(hf::nuclear_attraction(p, q, {0, 0, 0}), v, 1e-9);
}

TEST(Hf, SameCenterCoulombAgainstRadialQuadrature) {
    const hf::PrimitiveGaussian a{0.6, 1.0, {0, 0, 0}}, b{1.4, 1.0, {0, 0, 0}}, c{0.3, 1.0, {0, 0, 0}},
        d{2.0, 1.0, {0, 0, 0}};
    const double p = a.b + b.b, q = c.b + d.b;
    // potential of exp(-p r^2) is (pi/p)^{3/2} erf(sqrt(p) r) / r
    const double e = simpson(
        [&](double r) {
            if (r == 0) return 0.0;
            const double phi = std::pow(M_PI / p, 1.5) * std::erf(std::sqrt(p) * r) / r;
            return 4 * M_PI * r * r * std::exp(-q * r * r) * phi;
        },
        0, 14);
    EXPECT_NEAR(hf::two_electron(a, b, c, d), e, 1e-9);
}

TEST(Hf, IntegralSymmetries) {
    const auto I = hf::integrals(hf::Sto3gBasis{}, 1.8);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            EXPECT_NEAR(I.S[i][j], I.S[j][i], 1e-14);
            EXPECT_NEAR(I.K[i][j], I.K[j][i], 1e-14);
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    EXPECT_NEAR(I.eri[i][j][k][l], I.eri[k][l][i][j], 1e-12);
                    EXPECT_NEAR(I.eri[i][j][k][l], I.eri[j][i][l][k], 1e-12);
                }
        }
    // equilateral triangle: all off-diagonal overlaps agree
    EXPECT_NEAR(I.S[0][1], I.S[1][2], 1e-12);
    EXPECT_NEAR(I.S[0][1], I.S[0][2], 1e-12);
}

TEST(Hf, GenerateReproducesObjWithinOne) {
    const auto p = hf::expand_and_rationalize(hf::EnergyConfig{});
    const auto want = reference::obj();
    ASSERT_EQ(p.size(), want.size());
    for (const auto& [m, q] : want.terms()) EXPECT_LE(abs(p.coeff(m) - q), 1) << to_string(Polynomial::term(want.vars(), m, 1));
}

TEST(Hf, FloorRoundingReproducesObjExactly) {
    hf::EnergyConfig c;
    c.rounding = hf::Rounding::Floor;
    EXPECT_EQ(hf::expand_and_rationalize(c), reference::obj());
}

TEST(Hf, OrderZeroIsFreeOfR) {
    hf::EnergyConfig c;
    c.order = 0;
    const auto p = hf::expand_and_rationalize(c);
    const int r = p.var_index("R");
    for (const auto& [m, q] : p.terms()) EXPECT_EQ(r < 0 ? 0 : m[r], 0);
}

TEST(Hf, ScaleZeroKeepsTheShape) {
    hf::EnergyConfig c;
    c.scale_exp = 0;
    const auto p = hf::expand_and_rationalize(c), want = reference::obj();
    ASSERT_EQ(p.size(), want.size());
    for (const auto& [m, q] : want.terms()) EXPECT_NE(p.coeff(m), 0);
}

TEST(Hf, CurvesAgreeNearTheMinimum) {
    const auto pts = hf::energy_curves(hf::EnergyConfig{}, {1.8});
    ASSERT_EQ(pts.size(), 1u);
    EXPECT_NEAR(pts[0].exact, pts[0].taylor, 2e-3);
    EXPECT_NEAR(pts[0].exact, pts[0].rationalized, 2e-3);
    // the Taylor curve is exact at the expansion point
    EXPECT_NEAR(pts[0].exact, pts[0].taylor, 1e-9);
}

TEST(Hf, ConfigParsing) {
    const auto c = hf::parse_config("rc = 1.7\norder=2 # comment\nrounding=floor\n");
    EXPECT_DOUBLE_EQ(c.rc, 1.7);
    EXPECT_EQ(c.order, 2);
    EXPECT_EQ(c.rounding, hf::Rounding::Floor);
    EXPECT_THROW(hf::parse_config("bogus=1"), std::invalid_argument);
    EXPECT_THROW(hf::parse_config("rc"), std::invalid_argument);
}
