#include <random>

#include <gtest/gtest.h>

#include "molpoly/macaulay.hpp"
#include "molpoly/qemu.hpp"

using namespace molpoly;
using namespace molpoly::qemu;

namespace {

MatrixXcd random_complex(std::mt19937& rng, int n) {
    std::normal_distribution<double> nd;
    MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = {nd(rng), nd(rng)};
    return a;
}

VectorXcd random_state(std::mt19937& rng, int n) {
    std::normal_distribution<double> nd;
    VectorXcd v(n);
    for (auto& z : v) z = {nd(rng), nd(rng)};
    return v / v.norm();
}

}  // namespace

TEST(Qemu, StatevectorPadsAndNormalizes) {
    VectorXcd v(3);
    v << 3, 0, 4;
    const auto s = Statevector::from(v);
    EXPECT_EQ(s.qubits, 2);
    EXPECT_EQ(s.amp.size(), 4);
    EXPECT_NEAR(s.amp(2).real(), 0.8, 1e-15);
    EXPECT_THROW(Statevector::from(VectorXcd::Zero(2)), ZeroResult);
}

TEST(QemuProperty, FableCircuitIsUnitaryAndEncodesA) {
    std::mt19937 rng(2);
    for (int n : {1, 2, 3, 5, 8}) {
        const MatrixXcd a = random_complex(rng, n);
        const auto enc = fable_encode(a);
        ASSERT_EQ(enc.mode, EncodingMode::Full);
        const MatrixXcd I = MatrixXcd::Identity(enc.u.rows(), enc.u.cols());
        EXPECT_LT((enc.u.adjoint() * enc.u - I).norm(), 1e-10) << n;
        const MatrixXcd bl = enc.leading_block().topLeftCorner(n, n) * enc.normalization();
        EXPECT_LT((bl - a).norm(), 1e-10) << n;
        // the circuit acts linearly on the full register
        const VectorXcd p = random_state(rng, int(enc.u.rows())), q = random_state(rng, int(enc.u.rows()));
        const cplx al(0.3, -1.2), be(-0.7, 0.4);
        EXPECT_LT((enc.apply(al * p + be * q) - al * enc.apply(p) - be * enc.apply(q)).norm(), 1e-12);
        EXPECT_LT((enc.apply(p) - enc.u * p).norm(), 1e-12);
    }
}

TEST(QemuProperty, ExpectationThroughTheCircuit) {
    std::mt19937 rng(8);
    for (int n : {2, 4, 6}) {
        const MatrixXcd a = random_complex(rng, n);
        const auto enc = fable_encode(a);
        const auto psi = Statevector::from(random_state(rng, n));
        const VectorXcd v = psi.amp.head(n);
        EXPECT_LT(std::abs(expectation(enc, psi) - v.dot(a * v)), 1e-9);
        EXPECT_LT(std::abs(expectation(a, v) - v.dot(a * v)), 1e-12);
        const auto ap = apply_encoded(enc, psi);
        const VectorXcd av = a * v;
        EXPECT_NEAR(ap.probability, av.squaredNorm() / std::pow(enc.normalization(), 2), 1e-12);
    }
}

TEST(Qemu, ActionModeMatchesFullMode) {
    std::mt19937 rng(12);
    const MatrixXcd a = random_complex(rng, 4);
    const auto full = fable_encode(a, EncodingMode::Full), act = fable_encode(a, EncodingMode::Action);
    const auto psi = Statevector::from(random_state(rng, 4));
    EXPECT_LT(std::abs(expectation(full, psi) - expectation(act, psi)), 1e-12);
}

TEST(Qemu, IpeaOnADiagonalMatrix) {
    // 0.8 exp(2 pi i 0.25): phase 0.0100 in binary
    MatrixXcd a = MatrixXcd::Zero(2, 2);
    a(0, 0) = std::polar(0.8, 2 * M_PI * 0.25);
    a(1, 1) = 0.3;
    const auto enc = fable_encode(a);
    IpeaOptions o;
    o.bits = 4;
    const auto r = ipea_complex(enc, Statevector::basis(1, 0), o);
    EXPECT_EQ(r.bits, (std::vector<int>{0, 1, 0, 0}));
    EXPECT_NEAR(r.phase, 0.25, 1e-15);
    EXPECT_NEAR(r.magnitude * enc.normalization(), 0.8, 1e-9);
}

TEST(QemuProperty, IpeaPhaseWithinResolution) {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> u(0, 1);
    for (int k = 0; k < 20; ++k) {
        const int n = 2 + k % 4;
        const MatrixXcd v = random_complex(rng, n);
        Eigen::VectorXcd d(n);
        for (int i = 0; i < n; ++i) d(i) = std::polar(0.2 + 0.8 * u(rng), 2 * M_PI * u(rng));
        const MatrixXcd a = v * d.asDiagonal() * v.inverse();
        const auto enc = fable_encode(a);
        const auto r = ipea_complex(enc, Statevector::from(v.col(0)), {8});
        double want = std::arg(d(0)) / (2 * M_PI);
        if (want < 0) want += 1;
        double err = std::abs(want - r.phase);
        err = std::min(err, 1 - err);
        EXPECT_LE(err, std::ldexp(1.0, -8) + 1e-6) << k;
        EXPECT_NEAR(r.magnitude * enc.normalization(), std::abs(d(0)), 1e-6) << k;
    }
}

TEST(Qemu, IpeaRejectsNonEigenvectors) {
    MatrixXcd a = MatrixXcd::Zero(2, 2);
    a(0, 0) = 0.5;
    a(1, 1) = -0.5;
    VectorXcd v(2);
    v << 1, 1;
    EXPECT_THROW(ipea_complex(fable_encode(a), Statevector::from(v)), std::invalid_argument);
}

TEST(Qemu, ProjectionFixedPoints) {
    Eigen::MatrixXd m(1, 2);
    m << 1, 1;
    VectorXcd in_null(2), in_row(2), mixed(2);
    in_null << 1, -1;
    in_row << 1, 1;
    mixed << 1, 0;
    const auto p = nullspace_projection(m, Statevector::from(in_null), 5);
    EXPECT_LT((p.state.amp - in_null / in_null.norm()).norm(), 1e-14);
    for (double b : p.branch) EXPECT_NEAR(b, 1, 1e-14);
    EXPECT_THROW(nullspace_projection(m, Statevector::from(in_row), 3), ZeroResult);
    // |1,0> is half null space and converges to it
    const auto q = nullspace_projection(m, Statevector::from(mixed), 40);
    EXPECT_LT((q.state.amp - in_null / in_null.norm()).norm(), 1e-10);
}

TEST(Qemu, QpeOnALinearSystemIsExact) {
    QpeConfig c;
    c.bits = 4;
    const auto rs = qpe_pipeline(parse_system("x-1", {"x"}), c);
    ASSERT_EQ(rs.size(), 1u);
    EXPECT_EQ(rs[0].record.values[0], cplx(1, 0));
}

TEST(Qemu, QpeOnSqrtTwo) {
    QpeConfig c;
    c.bits = 12;
    const auto rs = qpe_pipeline(parse_system("x**2-2", {"x"}), c);
    ASSERT_EQ(rs.size(), 2u);
    for (const auto& r : rs) EXPECT_NEAR(std::abs(r.record.values[0]), std::sqrt(2.0), 1e-3);
}

TEST(Qemu, TwoLevelMacaulayRoute) {
    QpeConfig c;
    c.route = "macaulay";
    c.degree = 3;
    const auto rs = qpe_pipeline(parse_system("e*y+x; e*x+y; x**2+y**2-1", {"x", "y", "e"}), c);
    ASSERT_EQ(rs.size(), 4u);
    for (const auto& r : rs) {
        for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(std::abs(r.record.values[k] - r.classical.values[k]), 0, 1e-2);
        EXPECT_LE(r.projection_error, 1e-4);
    }
}

TEST(Qemu, ConfigParsing) {
    const auto c = parse_qpe_config("route=macaulay\ndegree=4\nonly=1,3\n");
    EXPECT_EQ(c.route, "macaulay");
    EXPECT_EQ(c.degree, 4);
    EXPECT_EQ(c.only, (std::vector<int>{1, 3}));
    EXPECT_THROW(parse_qpe_config("route=simplex"), std::invalid_argument);
}
