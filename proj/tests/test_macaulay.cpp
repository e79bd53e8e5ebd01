#include <gtest/gtest.h>

#include "molpoly/macaulay.hpp"

using namespace molpoly;
using namespace molpoly::macaulay;

namespace {

const std::vector<std::string> kXYE{"x", "y", "e"};

std::vector<Polynomial> two_level() { return parse_system("x**2+y**2-1; e*y+x; e*x+y", kXYE); }

std::string names(const std::vector<Monomial>& ms) {
    std::string s;
    for (const auto& m : ms) s += to_string(Polynomial::term(kXYE, m, 1)) + " ";
    return s;
}

}  // namespace

TEST(Macaulay, ColumnOrder) {
    EXPECT_EQ(names(column_monomials(3, 2)), "1 x y e x**2 x*y e*x y**2 e*y e**2 ");
}

TEST(Macaulay, PrintedTwoLevelMatrixAtDegreeTwo) {
    const auto M = build(two_level(), 2);
    Eigen::MatrixXd want(3, 10);
    want << -1, 0, 0, 0, 1, 0, 0, 1, 0, 0,  //
        0, 1, 0, 0, 0, 0, 0, 0, 1, 0,       //
        0, 0, 1, 0, 0, 0, 1, 0, 0, 0;
    EXPECT_EQ(M.dense(), want);
}

TEST(Macaulay, PrintedShiftMatrices) {
    const auto S = shift_matrices(3, 2);
    auto ones = [](const SparseRM& s) {
        std::vector<int> cols;
        for (int r = 0; r < s.rows(); ++r)
            for (SparseRM::InnerIterator it(s, r); it; ++it) cols.push_back(int(it.col()));
        return cols;
    };
    EXPECT_EQ(ones(S.s1), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(ones(S.sg[0]), (std::vector<int>{1, 4, 5, 6}));  // times x
    EXPECT_EQ(ones(S.sg[1]), (std::vector<int>{2, 5, 7, 8}));  // times y
    EXPECT_EQ(ones(S.sg[2]), (std::vector<int>{3, 6, 8, 9}));  // times e
}

TEST(Macaulay, DimensionFormula) {
    // H3+ gradient degrees are 6, 5, 6 over three variables
    for (auto [d, r, q] : std::vector<std::tuple<int, long, long>>{{6, 6, 84}, {12, 288, 455}, {30, 9126, 5456}}) {
        const auto [rr, qq] = dims({6, 5, 6}, 3, d);
        EXPECT_EQ(rr, r) << d;
        EXPECT_EQ(qq, q) << d;
    }
    EXPECT_EQ(dims({2, 2, 2}, 3, 10), (std::pair<long, long>{495, 286}));
}

TEST(Macaulay, NullSpaceOfTwoLevel) {
    const auto ns = nullspace(build(two_level(), 4), 1e-4);
    EXPECT_EQ(ns.rank, 27);
    EXPECT_EQ(ns.nullity, 8);
    const auto M = build(two_level(), 4);
    EXPECT_LT((M.dense() * ns.z).norm(), 1e-10);
}

TEST(Macaulay, DegreeTwoIsInadmissible) {
    EXPECT_FALSE(solve(two_level(), 2).admissible);
}

TEST(Macaulay, TwoLevelRootsAtDegreeFour) {
    const auto res = solve(two_level(), 4);
    ASSERT_TRUE(res.admissible);
    std::vector<std::vector<cplx>> got;
    for (const auto& r : res.records) got.push_back(r.values);
    const double h = std::sqrt(0.5);
    const std::vector<std::vector<cplx>> want{{h, -h, 1}, {-h, h, 1}, {h, h, -1}, {-h, -h, -1}};
    EXPECT_LT(multiset_distance(got, want), 1e-8);
}

// Planted roots of a dense quadratic system, solved through the null space.
TEST(MacaulayProperty, PlantedQuadraticRoots) {
    const std::vector<std::string> v{"x", "y"};
    for (auto [a, b, c, d] : std::vector<std::array<int, 4>>{{1, 2, -1, 3}, {2, -3, 1, 1}, {-2, 1, 3, -1}}) {
        // (x - a)(x - c) = 0, (y - b)(y - d) = 0: four roots on a grid
        const auto X = Polynomial::variable(v, "x"), Y = Polynomial::variable(v, "y");
        auto k = [&](int n) { return Polynomial::constant(v, n); };
        const auto f = (X - k(a)) * (X - k(c)), g = (Y - k(b)) * (Y - k(d));
        const auto res = solve({f, g + f * Y}, 5);
        ASSERT_TRUE(res.admissible);
        std::vector<std::vector<cplx>> got;
        for (const auto& r : res.records) got.push_back(r.values);
        const std::vector<std::vector<cplx>> want{{double(a), double(b)}, {double(a), double(d)}, {double(c), double(b)},
                                                  {double(c), double(d)}};
        EXPECT_LT(multiset_distance(got, want), 1e-7) << a << b << c << d;
    }
}

TEST(Macaulay, SweepTableCsv) {
    const auto rows = degree_sweep(two_level(), {3}, SweepConfig{1e-4, false, {}});
    EXPECT_EQ(sweep_table_csv(rows).substr(0, 2), "d,");
    EXPECT_EQ(rows[0].rows, 12);
    EXPECT_EQ(rows[0].nnz, 28);
}
