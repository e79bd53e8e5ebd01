#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "molpoly/polyring.hpp"
#include "molpoly/solution.hpp"

namespace molpoly::macaulay {

using SparseRM = Eigen::SparseMatrix<double, Eigen::RowMajor>;

// Degree ascending, lex descending within a degree: 1, x, y, e, x^2, xy, ...
std::vector<Monomial> column_monomials(int nvars, int d);

struct MacaulayMatrix {
    struct RowLabel {
        int gen;
        Monomial multiplier;
    };
    int d = 0;
    std::vector<std::string> vars;
    std::vector<Monomial> cols;
    std::vector<RowLabel> rows;
    SparseRM m;

    Eigen::Index nrows() const { return m.rows(); }
    Eigen::Index ncols() const { return m.cols(); }
    Eigen::Index nnz() const { return m.nonZeros(); }
    int col_index(const Monomial& mono) const;
    Eigen::MatrixXd dense() const { return Eigen::MatrixXd(m); }

    std::map<Monomial, int> index;
};

// r(d) = sum_i C(d - d_i + n, n) over d_i <= d, q(d) = C(d + n, n)
std::pair<long, long> dims(const std::vector<int>& degrees, int n, int d);

MacaulayMatrix build(const std::vector<Polynomial>& gens, int d);

struct NullSpaceBasis {
    Eigen::MatrixXd z;     // q x k, orthonormal columns (empty when values only)
    Eigen::VectorXd sv;    // singular values, descending
    double threshold = 0;  // absolute cutoff used
    int rank = 0;
    int nullity = 0;
};

// Right singular vectors whose singular values fall below `threshold` (absolute).
NullSpaceBasis nullspace(const MacaulayMatrix& M, double threshold = 1e-4, bool with_basis = true);
NullSpaceBasis nullspace(const Eigen::MatrixXd& M, double threshold, bool with_basis = true);

struct ShiftMatrixSet {
    std::vector<Monomial> base;  // B
    SparseRM s1;
    std::vector<SparseRM> sg;    // one per variable
};

// Selections over the first C(d + n, n) columns with B = monomials of degree <= d - 1.
ShiftMatrixSet shift_matrices(int n, int d);

struct SolveConfig {
    std::vector<double> pivot_weights;  // generic combination of shifts; empty picks a default
    bool balance = true;                // rescale variables and rows before the SVD
    double null_rel_cutoff = 1e-10;     // relative to sigma_max of the balanced matrix
    double profile_rel_tol = 1e-10;
    double infinity_tol = 1e-6;         // |v_1| < tol * ||(v_1, v_x, ...)|| marks a point at infinity
    double relation_tol = 1e-6;
    double residual_tol = 1e-4;         // relative generator residual for reported roots
    RecordPolicy policy;
};

// Per-variable eigenproblem of the configuration that produced the roots.
struct Eigenproblem {
    Eigen::MatrixXd basis;             // columns span the solution vectors, v = basis * t
    std::vector<Eigen::MatrixXd> w;    // W_g = pinv(S_1 basis) (S_g basis)
    std::vector<Monomial> rows;        // monomial label of each basis row
    std::vector<Eigen::VectorXcd> t;   // eigenvector of each accepted record
    std::vector<double> scales;        // root coordinate g = eigenvalue of w[g] times scales[g]
};

struct MacaulayResult {
    int d = 0;
    bool admissible = false;
    std::string method;  // gap-zone, deflation, plain or none
    int nullity = 0;     // of the balanced matrix at the relative cutoff
    int gap = -1;
    int m_a = 0;
    std::vector<int> profile;
    std::vector<double> scales;
    std::vector<SolutionRecord> records;  // accepted affine roots
    Eigenproblem problem;
    double seconds = 0;
};

// Greatest-plateau gap-zone extraction with deflation and plain fallbacks.
MacaulayResult solve(const std::vector<Polynomial>& gens, int d, const SolveConfig& cfg = {});
MacaulayResult solve(const std::vector<Polynomial>& gens, const MacaulayMatrix& M, const SolveConfig& cfg = {});

// Least-squares balancing of log|coef| with one unknown per variable and per generator.
std::vector<double> balance_scales(const std::vector<Polynomial>& gens);

struct SweepRow {
    int d = 0;
    long rows = 0, cols = 0, nnz = 0;
    int rank = 0, nullity = 0;  // unbalanced matrix at the absolute threshold
    MacaulayResult result;
    // valid real root of lowest energy, or closest to the window center without an objective
    const SolutionRecord* best() const;
};

struct SweepConfig {
    double threshold = 1e-4;
    bool solve = true;
    SolveConfig solve_cfg;
};

std::vector<SweepRow> degree_sweep(const std::vector<Polynomial>& gens, const std::vector<int>& ds,
                                   const SweepConfig& cfg = {});

std::string sweep_table_csv(const std::vector<SweepRow>& rows);
std::string sweep_roots_csv(const std::vector<SweepRow>& rows);
void write_triplets(const MacaulayMatrix& M, std::ostream& out);

}  // namespace molpoly::macaulay
