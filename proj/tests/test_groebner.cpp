#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "molpoly/groebner.hpp"

using namespace molpoly;
using namespace molpoly::groebner;

TEST(Groebner, LexBasisOfHyperbolaAndCircle) {
    // {x^2 - 1, x y - 1} under lex x > y reduces to {y^2 - 1, x - y}
    const auto sys = parse_system("x**2-1; x*y-1", {"x", "y"});
    const auto G = buchberger(PolySystem(sys, MonomialOrder::lex()));
    ASSERT_EQ(G.g.size(), 2u);
    std::vector<std::string> got{to_string(G.g[0]), to_string(G.g[1])};
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, (std::vector<std::string>{"x - y", "y**2 - 1"}));
}

TEST(Groebner, SPolynomial) {
    const std::vector<std::string> v{"x", "y"};
    const auto f = parse_polynomial("x**2*y - 1", v), g = parse_polynomial("x*y**2 - x", v);
    EXPECT_EQ(s_polynomial(f, g, MonomialOrder::grlex()), parse_polynomial("x**2 - y", v));
}

TEST(Groebner, NormalForm) {
    const auto G = buchberger(PolySystem(parse_system("x**2-2", {"x"})));
    EXPECT_EQ(normal_form(parse_polynomial("x**3 + x**2", {"x"}), G), parse_polynomial("2*x + 2", {"x"}));
}

TEST(Groebner, MultiplicationMatrixOfSqrtTwo) {
    const auto G = buchberger(PolySystem(parse_system("x**2-2", {"x"})));
    const auto b = quotient_basis(G);
    ASSERT_EQ(b.dim(), 2u);
    const auto M = mult_matrices(G, b);
    Eigen::MatrixXd want(2, 2);
    want << 0, 1, 2, 0;
    EXPECT_EQ(M["x"], want);
    const auto rs = solve_system(M);
    ASSERT_EQ(rs.size(), 2u);
    std::vector<double> xs{rs[0].values[0].real(), rs[1].values[0].real()};
    std::sort(xs.begin(), xs.end());
    EXPECT_NEAR(xs[0], -std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(xs[1], std::sqrt(2.0), 1e-12);
}

TEST(Groebner, PositiveDimensionalIsReported) {
    const auto G = buchberger(PolySystem(parse_system("x*y", {"x", "y"})));
    EXPECT_THROW(quotient_basis(G), PositiveDimensional);
}

TEST(Groebner, BilinearEqualsHermitianOnRealRoots) {
    const auto sys = parse_system("x**2-3*x+2; y-2*x+1", {"x", "y"});
    const auto G = buchberger(PolySystem(sys));
    const auto M = mult_matrices(G, quotient_basis(G));
    SolveOptions h, b;
    b.expectation = Expectation::Bilinear;
    const auto a = solve_system(M, h), c = solve_system(M, b);
    ASSERT_EQ(a.size(), c.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < 2; ++k) EXPECT_NEAR(std::abs(a[i].values[k] - c[i].values[k]), 0, 1e-10);
}

// Triangular systems with planted roots: (x - a)(x - b)(x - c), y = p x + q, z^2 = y + r.
TEST(GroebnerProperty, PlantedRootsAreRecovered) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> u(-4, 4);
    for (int trial = 0; trial < 12; ++trial) {
        int a = u(rng), b = u(rng), c = u(rng);
        while (b == a) b = u(rng);
        while (c == a || c == b) c = u(rng);
        const int p = u(rng) | 1, q = u(rng), r = 20;
        const std::vector<std::string> v{"x", "y", "z"};
        char buf[128];
        std::snprintf(buf, sizeof buf, "roots x=%d,%d,%d; y=%d x+%d", a, b, c, p, q);
        const auto X = Polynomial::variable(v, "x"), Y = Polynomial::variable(v, "y"), Z = Polynomial::variable(v, "z");
        auto k = [&](int n) { return Polynomial::constant(v, n); };
        const std::vector<Polynomial> sys{(X - k(a)) * (X - k(b)) * (X - k(c)), Y - k(p) * X - k(q), Z * Z - Y - k(r)};
        const auto G = buchberger(PolySystem(sys));
        const auto M = mult_matrices(G, quotient_basis(G));
        ASSERT_EQ(M.basis.dim(), 6u) << buf;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                EXPECT_LT((M.m[i] * M.m[j] - M.m[j] * M.m[i]).norm(), 1e-9 * (1 + M.m[i].norm() * M.m[j].norm()));
        SolveOptions so;
        so.generators = sys;
        // x is degenerate across the two z branches; z^2 = y + r > 0 separates all six roots
        so.pivot = "z";
        const auto rs = solve_system(M, so);
        ASSERT_EQ(rs.size(), 6u) << buf;
        std::vector<std::vector<cplx>> got, want;
        for (const auto& rec : rs) got.push_back(rec.values);
        for (int x : {a, b, c}) {
            const double y = p * x + q, z = std::sqrt(y + r);
            want.push_back({double(x), y, z});
            want.push_back({double(x), y, -z});
        }
        EXPECT_LT(multiset_distance(got, want), 1e-8) << buf;
        for (const auto& rec : rs) EXPECT_LT(rec.residual, 1e-10) << buf;
    }
}
