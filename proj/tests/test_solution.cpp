#include <random>

#include <gtest/gtest.h>
#include <json.hpp>

#include "molpoly/solution.hpp"

using namespace molpoly;

TEST(Solution, RealPointTest) {
    EXPECT_TRUE(is_real_point({{1.0, 1e-9}, {-3.0, 0}}, 1e-6));
    EXPECT_FALSE(is_real_point({{1.0, 1e-3}, {-3.0, 0}}, 1e-6));
}

TEST(Solution, RelativeResidual) {
    const auto g = parse_system("x**2-2; 100*y-1", {"x", "y"});
    EXPECT_NEAR(relative_residual(g, {std::sqrt(2.0), 0.01}), 0, 1e-15);
    // second generator off by 1 at y = 0.02, scaled by its largest coefficient
    EXPECT_NEAR(relative_residual(g, {std::sqrt(2.0), 0.02}), 0.01, 1e-12);
}

TEST(SolutionProperty, MultisetDistanceIgnoresSymmetryAndOrder) {
    std::mt19937 rng(6);
    std::normal_distribution<double> nd;
    for (int k = 0; k < 20; ++k) {
        std::vector<std::vector<cplx>> a;
        for (int i = 0; i < 6; ++i) a.push_back({{nd(rng), nd(rng)}, {nd(rng), nd(rng)}, {nd(rng), 0}});
        auto b = a;
        std::shuffle(b.begin(), b.end(), rng);
        for (auto& p : b) {
            if (rng() % 2) p[0] = -p[0];
            if (rng() % 2)
                for (auto& z : p) z = std::conj(z);
        }
        EXPECT_LT(multiset_distance(a, b, 0), 1e-15);
        b[0][1] += 0.1;
        EXPECT_NEAR(multiset_distance(a, b, 0), 0.1, 1e-12);
        b.pop_back();
        EXPECT_TRUE(std::isinf(multiset_distance(a, b, 0)));
    }
}

TEST(Solution, CanonicalSortKey) {
    // (Re e, Re R, |x|, Im e) with x, e, R at indices 0, 1, 2
    std::vector<std::vector<cplx>> pts{{0.5, 2.0, 1.0}, {0.1, -1.0, 3.0}, {0.2, -1.0, 2.0}, {0.05, -1.0, 2.0}};
    const auto s = canonical_sort(pts, 0, 1, 2);
    EXPECT_EQ(s[0][0], cplx(0.05));
    EXPECT_EQ(s[1][0], cplx(0.2));
    EXPECT_EQ(s[2][0], cplx(0.1));
    EXPECT_EQ(s[3][0], cplx(0.5));
}

TEST(Solution, JsonRoundTrip) {
    SolutionRecord r;
    r.index = 3;
    r.vars = {"x", "e"};
    r.values = {{0.404984, 0}, {-1.14816, 1e-17}};
    r.energy = {-1.2469, 0};
    r.real = true;
    r.valid = true;
    r.residual = 1.25e-12;
    const auto text = records_to_json({r});
    const auto j = nlohmann::json::parse(text);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(nlohmann::json::parse(j.dump(2)).dump(2), j.dump(2));
    EXPECT_EQ(j.dump(2), text);
    EXPECT_EQ(r.value("e"), cplx(-1.14816, 1e-17));
    EXPECT_NE(records_to_csv({r}).find("x"), std::string::npos);
}
