#include <random>

#include <gtest/gtest.h>

#include "molpoly/spectra.hpp"

using cplx = std::complex<double>;
using namespace molpoly::spectra;

namespace {

MatrixXd random_matrix(std::mt19937& rng, int m, int n) {
    std::normal_distribution<double> nd;
    MatrixXd a(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = nd(rng);
    return a;
}

}  // namespace

TEST(Spectra, EigenvaluesOfCompanionMatrix) {
    MatrixXd c(3, 3);  // roots 1, 2, 3
    c << 0, 1, 0, 0, 0, 1, 6, -11, 6;
    const auto ed = eig(c);
    std::vector<double> re;
    for (int i = 0; i < 3; ++i) re.push_back(ed.values(i).real());
    std::sort(re.begin(), re.end());
    EXPECT_NEAR(re[0], 1, 1e-10);
    EXPECT_NEAR(re[1], 2, 1e-10);
    EXPECT_NEAR(re[2], 3, 1e-10);
    EXPECT_LT(ed.residuals.maxCoeff(), 1e-12);
}

TEST(SpectraProperty, SvdReconstructsAndPinvIsMoorePenrose) {
    std::mt19937 rng(3);
    for (int k = 0; k < 10; ++k) {
        const int m = 3 + k % 5, n = 2 + k % 4;
        const MatrixXd a = random_matrix(rng, m, n);
        const auto s = svd(a);
        EXPECT_LT((s.u * s.s.asDiagonal() * s.v.transpose() - a).norm(), 1e-10);
        const MatrixXd p = pinv(a);
        EXPECT_LT((a * p * a - a).norm(), 1e-10);
        EXPECT_LT((p * a * p - p).norm(), 1e-10);
        EXPECT_LT((a * p - (a * p).transpose()).norm(), 1e-10);
        for (int i = 0; i + 1 < s.s.size(); ++i) EXPECT_GE(s.s(i), s.s(i + 1));
    }
}

TEST(Spectra, RightSvdNullSpace) {
    std::mt19937 rng(4);
    // rank 3 matrix, 6 x 5, so the null space has dimension 2
    const MatrixXd a = random_matrix(rng, 6, 3) * random_matrix(rng, 3, 5);
    const auto r = right_svd(a);
    const MatrixXd z = null_space_from(r, 5, 1e-9);
    ASSERT_EQ(z.cols(), 2);
    EXPECT_LT((a * z).norm(), 1e-10);
    EXPECT_EQ(numerical_rank(r.s, 1e-9), 3);
    // wide input: missing singular values count as zero
    const MatrixXd w = random_matrix(rng, 2, 4);
    EXPECT_EQ(null_space_from(right_svd(w), 4, 1e-9).cols(), 2);
}

TEST(Spectra, ExpmOfDiagonalAndUnitarity) {
    MatrixXcd d = MatrixXcd::Zero(2, 2);
    d(0, 0) = 0.5;
    d(1, 1) = -1.25;
    const auto e = expm_scaled(d, 2.0);
    EXPECT_LT(std::abs(e(0, 0) - std::exp(cplx(0, -1.0))), 1e-13);
    EXPECT_LT(std::abs(e(1, 1) - std::exp(cplx(0, 2.5))), 1e-13);
    std::mt19937 rng(9);
    const MatrixXd h0 = random_matrix(rng, 5, 5);
    const MatrixXcd h = (h0 + h0.transpose()).cast<cplx>();
    const MatrixXcd u = expm_scaled(h, 0.7);
    EXPECT_LT((u.adjoint() * u - MatrixXcd::Identity(5, 5)).norm(), 1e-12);
}

TEST(Spectra, UnitPhaseNormalization) {
    VectorXcd v(3);
    v << cplx(0, 1), cplx(0, -3), cplx(1, 1);
    const auto u = unit_phase_normalized(v);
    EXPECT_NEAR(u.norm(), 1, 1e-14);
    EXPECT_NEAR(u(1).imag(), 0, 1e-14);
    EXPECT_GT(u(1).real(), 0);
}

TEST(Spectra, ConditionNumber) {
    MatrixXcd a = MatrixXcd::Identity(3, 3);
    a(2, 2) = 0.01;
    EXPECT_NEAR(condition_number(a), 100, 1e-9);
}
