#include <random>

#include <gtest/gtest.h>

#include "molpoly/polyring.hpp"
#include "molpoly/reference.hpp"

using namespace molpoly;

namespace {

const std::vector<std::string> kXeR{"x", "e", "R"};

Polynomial random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int terms, int maxdeg) {
    std::uniform_int_distribution<int> c(-9, 9), d(0, maxdeg);
    Polynomial p(vars);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(vars.size());
        for (auto& x : e) x = d(rng);
        p.add_term(Monomial(e), Rational(c(rng), 1 + std::abs(c(rng))));
    }
    return p;
}

}  // namespace

TEST(Polyring, ObjRoundTripsThroughPrinter) {
    const auto& text = reference::table("OBJ").text;
    const auto p = parse_polynomial(text, kXeR);
    EXPECT_EQ(p.size(), 17u);
    EXPECT_EQ(to_string(p), text);
    EXPECT_EQ(parse_polynomial(to_string(p), kXeR), p);
}

TEST(Polyring, PartialInEOfObj) {
    const auto p = parse_polynomial(reference::table("OBJ").text, kXeR);
    const auto want = parse_polynomial(
        "-25940329*R**3*x**2 + 81961639*R**2*x**2 + 342231572*R*x**2 - 1960143305*x**2 + 200000000", kXeR);
    EXPECT_EQ(p.differentiate("e"), want);
}

TEST(Polyring, ArithmeticAndEvaluation) {
    const auto x = Polynomial::variable({"x", "y"}, "x");
    const auto one = Polynomial::constant({"x", "y"}, 1);
    EXPECT_EQ((x + one) * (x - one), parse_polynomial("x**2 - 1", {"x", "y"}));
    const auto p = parse_polynomial("3*x**2*y - 1/2*y + 7", {"x", "y"});
    EXPECT_NEAR(p.evaluate(std::vector<cplx>{2.0, -1.0}).real(), -12 + 0.5 + 7, 1e-12);
    EXPECT_EQ(p.total_degree(), 3);
    EXPECT_EQ(p.max_abs_coeff(), 7);
}

TEST(Polyring, DecimalLiteralsAreExact) {
    EXPECT_EQ(parse_rational("1.8"), Rational(9, 5));
    EXPECT_EQ(parse_rational("-2.5e-3"), Rational(-1, 400));
    EXPECT_EQ(parse_rational("7/3"), Rational(7, 3));
}

TEST(Polyring, RejectsGarbage) {
    EXPECT_THROW(parse_polynomial("x**", {"x"}), std::invalid_argument);
    EXPECT_THROW(parse_polynomial("z + 1", {"x"}), std::invalid_argument);
}

TEST(Polyring, RingMismatch) {
    const auto a = Polynomial::variable({"x"}, "x");
    const auto b = Polynomial::variable({"y"}, "y");
    EXPECT_THROW(a + b, RingMismatch);
}

TEST(Polyring, DegRevLexOnThreeVariables) {
    // x^2 > xy > y^2 > xz > yz > z^2
    const auto o = MonomialOrder::degrevlex();
    const std::vector<Monomial> desc{Monomial({2, 0, 0}), Monomial({1, 1, 0}), Monomial({0, 2, 0}),
                                     Monomial({1, 0, 1}), Monomial({0, 1, 1}), Monomial({0, 0, 2})};
    for (std::size_t i = 0; i + 1 < desc.size(); ++i) EXPECT_GT(o.compare(desc[i], desc[i + 1]), 0) << i;
    EXPECT_LT(MonomialOrder::lex().compare(Monomial({0, 3, 3}), Monomial({1, 0, 0})), 0);
    EXPECT_GT(MonomialOrder::grlex().compare(Monomial({0, 3, 3}), Monomial({1, 0, 0})), 0);
}

TEST(Polyring, MonomialsUpToCount) {
    // C(d + n, n)
    EXPECT_EQ(monomials_up_to(3, 2, MonomialOrder::degrevlex()).size(), 10u);
    EXPECT_EQ(monomials_up_to(3, 30, MonomialOrder::degrevlex()).size(), 5456u);
    EXPECT_EQ(monomials_up_to(2, 4, MonomialOrder::lex()).size(), 15u);
}

TEST(Polyring, InferVariablesOrder) {
    EXPECT_EQ(infer_variables("R*e + x*y + a"), (std::vector<std::string>{"x", "y", "e", "R", "a"}));
}

TEST(PolyringProperty, RingAxiomsOnRandomPolynomials) {
    std::mt19937 rng(11);
    const std::vector<std::string> v{"x", "y", "e"};
    for (int k = 0; k < 60; ++k) {
        const auto p = random_poly(rng, v, 4, 3), q = random_poly(rng, v, 4, 3), r = random_poly(rng, v, 3, 2);
        EXPECT_EQ((p + q) - q, p);
        EXPECT_EQ(p * (q + r), p * q + p * r);
        EXPECT_EQ(p * q, q * p);
        EXPECT_EQ(parse_polynomial(to_string(p), v), p);
        const std::vector<cplx> pt{{0.3, -0.2}, {1.1, 0.4}, {-0.7, 0.0}};
        EXPECT_LT(std::abs((p * q).evaluate(pt) - p.evaluate(pt) * q.evaluate(pt)), 1e-9);
        // product rule
        EXPECT_EQ((p * q).differentiate("y"), p.differentiate("y") * q + p * q.differentiate("y"));
    }
}
