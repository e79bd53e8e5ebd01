#include "molpoly/spectra.hpp"

#include <stdexcept>
#include <vector>

#include <lapacke.h>
#include <unsupported/Eigen/MatrixFunctions>

namespace molpoly::spectra {

namespace {

EigenDecomposition finish(const MatrixXcd& a, VectorXcd values, MatrixXcd vectors, bool ok) {
    EigenDecomposition out;
    const double an = std::max(a.operatorNorm(), 1e-300);
    for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
        double nv = vectors.col(j).norm();
        if (nv > 0) vectors.col(j) /= nv;
    }
    out.residuals.resize(values.size());
    for (Eigen::Index j = 0; j < values.size(); ++j)
        out.residuals(j) = (a * vectors.col(j) - values(j) * vectors.col(j)).norm() / an;
    out.values = std::move(values);
    out.vectors = std::move(vectors);
    out.converged = ok;
    return out;
}

}  // namespace

EigenDecomposition eig(const MatrixXd& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("eig: matrix must be square");
    Eigen::EigenSolver<MatrixXd> es(a, true);
    bool ok = es.info() == Eigen::Success;
    return finish(a.cast<std::complex<double>>(), es.eigenvalues(), es.eigenvectors(), ok);
}

EigenDecomposition eig(const MatrixXcd& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("eig: matrix must be square");
    Eigen::ComplexEigenSolver<MatrixXcd> es(a, true);
    bool ok = es.info() == Eigen::Success;
    return finish(a, es.eigenvalues(), es.eigenvectors(), ok);
}

namespace {

// Thin SVD through LAPACK gesdd; column-major copies are taken.
template <class M>
struct LapackSvd {
    M u, v;
    VectorXd s;
};

LapackSvd<MatrixXd> gesdd(MatrixXd a, bool vectors) {
    const lapack_int m = lapack_int(a.rows()), n = lapack_int(a.cols()), k = std::min(m, n);
    LapackSvd<MatrixXd> out;
    out.s.resize(k);
    if (k == 0) return out;
    MatrixXd vt;
    if (vectors) {
        out.u.resize(m, k);
        vt.resize(k, n);
    }
    const lapack_int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, vectors ? 'S' : 'N', m, n, a.data(), m, out.s.data(),
                                           vectors ? out.u.data() : nullptr, m, vectors ? vt.data() : nullptr,
                                           vectors ? k : 1);
    if (info != 0) throw std::runtime_error("svd: LAPACK dgesdd failed to converge");
    if (vectors) out.v = vt.transpose();
    return out;
}

LapackSvd<MatrixXcd> gesdd(MatrixXcd a, bool vectors) {
    const lapack_int m = lapack_int(a.rows()), n = lapack_int(a.cols()), k = std::min(m, n);
    LapackSvd<MatrixXcd> out;
    out.s.resize(k);
    if (k == 0) return out;
    MatrixXcd vt;
    if (vectors) {
        out.u.resize(m, k);
        vt.resize(k, n);
    }
    auto* ap = reinterpret_cast<lapack_complex_double*>(a.data());
    auto* up = vectors ? reinterpret_cast<lapack_complex_double*>(out.u.data()) : nullptr;
    auto* vp = vectors ? reinterpret_cast<lapack_complex_double*>(vt.data()) : nullptr;
    const lapack_int info =
        LAPACKE_zgesdd(LAPACK_COL_MAJOR, vectors ? 'S' : 'N', m, n, ap, m, out.s.data(), up, m, vp, vectors ? k : 1);
    if (info != 0) throw std::runtime_error("svd: LAPACK zgesdd failed to converge");
    if (vectors) out.v = vt.adjoint();
    return out;
}

template <class M>
M pinv_impl(const M& a, double rel_cutoff) {
    if (a.size() == 0) return M::Zero(a.cols(), a.rows());
    if (!a.allFinite()) throw std::invalid_argument("pinv: non-finite input");
    const auto s = gesdd(a, true);
    const double cut = rel_cutoff * (s.s.size() ? s.s(0) : 0.0);
    VectorXd inv(s.s.size());
    for (Eigen::Index i = 0; i < s.s.size(); ++i) inv(i) = s.s(i) > cut && s.s(i) > 0 ? 1.0 / s.s(i) : 0.0;
    return s.v * inv.asDiagonal() * s.u.adjoint();
}

}  // namespace

Svd svd(const MatrixXd& a) {
    if (!a.allFinite()) throw std::invalid_argument("svd: non-finite input");
    auto s = gesdd(a, true);
    return {std::move(s.u), std::move(s.s), std::move(s.v)};
}

VectorXd singular_values(const MatrixXd& a) {
    if (!a.allFinite()) throw std::invalid_argument("svd: non-finite input");
    return gesdd(a, false).s;
}

VectorXd singular_values(const MatrixXcd& a) {
    if (!a.allFinite()) throw std::invalid_argument("svd: non-finite input");
    return gesdd(a, false).s;
}

MatrixXd pinv(const MatrixXd& a, double rel_cutoff) { return pinv_impl(a, rel_cutoff); }
MatrixXcd pinv(const MatrixXcd& a, double rel_cutoff) { return pinv_impl(a, rel_cutoff); }

RightSvd right_svd(const MatrixXd& a_in, bool values_only) {
    const lapack_int m = lapack_int(a_in.rows()), n = lapack_int(a_in.cols());
    RightSvd out;
    if (m == 0 || n == 0) {
        out.s = VectorXd();
        if (!values_only) out.v = MatrixXd::Identity(n, n);
        return out;
    }
    MatrixXd work;  // column-major, LAPACK layout
    lapack_int k = std::min(m, n);
    if (m > n) {
        work = a_in;
        std::vector<double> tau(n);
        if (LAPACKE_dgeqrf(LAPACK_COL_MAJOR, m, n, work.data(), m, tau.data()) != 0)
            throw std::runtime_error("right_svd: QR failed");
        MatrixXd r = work.topRows(n).triangularView<Eigen::Upper>();
        work = std::move(r);
    } else {
        work = a_in;
    }
    const lapack_int wm = lapack_int(work.rows());
    out.s.resize(k);
    if (values_only) {
        if (LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'N', wm, n, work.data(), wm, out.s.data(), nullptr, 1, nullptr, 1) != 0)
            throw std::runtime_error("right_svd: SVD failed to converge");
        return out;
    }
    MatrixXd vt(n, n);
    lapack_int info;
    if (wm >= n) {
        // 'O' writes U over the input, so no second square buffer is needed
        double dummy = 0;
        info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'O', wm, n, work.data(), wm, out.s.data(), &dummy, 1, vt.data(), n);
    } else {
        MatrixXd u(wm, wm);
        info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'A', wm, n, work.data(), wm, out.s.data(), u.data(), wm, vt.data(), n);
    }
    if (info != 0) throw std::runtime_error("right_svd: SVD failed to converge");
    out.v = vt.transpose();
    return out;
}

int numerical_rank(const VectorXd& s, double cutoff) {
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) >= cutoff) ++r;
    return r;
}

MatrixXd null_space_from(const RightSvd& r, std::size_t ncols, double cutoff) {
    const int rank = numerical_rank(r.s, cutoff);
    return r.v.rightCols(Eigen::Index(ncols) - rank);
}

double condition_number(const MatrixXcd& a) {
    const VectorXd sv = singular_values(a);
    if (sv.size() == 0 || sv(sv.size() - 1) == 0) return std::numeric_limits<double>::infinity();
    return sv(0) / sv(sv.size() - 1);
}

VectorXcd unit_phase_normalized(const VectorXcd& v) {
    const double n = v.norm();
    if (n == 0) return v;
    Eigen::Index k = 0;
    for (Eigen::Index i = 1; i < v.size(); ++i)
        if (std::norm(v(i)) > std::norm(v(k))) k = i;
    return v * (std::conj(v(k)) / std::abs(v(k))) / n;
}

MatrixXcd expm_scaled(const MatrixXcd& a, double s) {
    if (a.rows() != a.cols()) throw std::invalid_argument("expm_scaled: matrix must be square");
    const std::complex<double> f(0.0, -s);
    if (a.size() == 0) return a;
    auto ed = eig(a);
    if (ed.converged && condition_number(ed.vectors) < 1e8) {
        VectorXcd ex = (f * ed.values.array()).exp().matrix();
        MatrixXcd r = ed.vectors * ex.asDiagonal() * ed.vectors.inverse();
        if (r.allFinite()) return r;
    }
    MatrixXcd r = (f * a).exp();
    if (!r.allFinite()) throw std::overflow_error("expm_scaled: result overflowed");
    return r;
}

}  // namespace molpoly::spectra
