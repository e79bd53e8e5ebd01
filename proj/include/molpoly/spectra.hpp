#pragma once

#include <complex>

#include <Eigen/Dense>

namespace molpoly::spectra {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

struct EigenDecomposition {
    VectorXcd values;
    MatrixXcd vectors;    // unit-norm right eigenvectors as columns
    VectorXd residuals;   // ||A v - lambda v|| / ||A||_2 per pair
    bool converged = true;
};

EigenDecomposition eig(const MatrixXd& a);
EigenDecomposition eig(const MatrixXcd& a);

struct Svd {
    MatrixXd u;
    VectorXd s;  // descending
    MatrixXd v;
};

// Thin SVD for general use.
Svd svd(const MatrixXd& a);
VectorXd singular_values(const MatrixXd& a);
VectorXd singular_values(const MatrixXcd& a);
MatrixXd pinv(const MatrixXd& a, double rel_cutoff = 1e-10);
MatrixXcd pinv(const MatrixXcd& a, double rel_cutoff = 1e-10);

// Singular values and the full right-singular basis of a possibly large dense matrix.
// Tall inputs go through a Householder QR first so only the square factor is decomposed.
struct RightSvd {
    VectorXd s;    // min(m, n) values, descending
    MatrixXd v;    // n x n, columns are right singular vectors (empty when values_only)
};
RightSvd right_svd(const MatrixXd& a, bool values_only = false);

// Columns of V whose singular value is below cutoff; missing values (n > m) count as zero.
MatrixXd null_space_from(const RightSvd& r, std::size_t ncols, double cutoff);
int numerical_rank(const VectorXd& s, double cutoff);

// Unit 2-norm with the entry of largest modulus (first on ties) rotated onto the real axis.
VectorXcd unit_phase_normalized(const VectorXcd& v);

// exp(-i s A)
MatrixXcd expm_scaled(const MatrixXcd& a, double s = 1.0);

double condition_number(const MatrixXcd& a);

}  // namespace molpoly::spectra
