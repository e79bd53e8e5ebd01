#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "molpoly/polyring.hpp"
#include "molpoly/solution.hpp"

namespace molpoly::groebner {

struct PolySystem {
    std::vector<Polynomial> gens;
    std::vector<std::string> vars;
    MonomialOrder order = MonomialOrder::degrevlex();

    PolySystem() = default;
    PolySystem(std::vector<Polynomial> g, MonomialOrder o = MonomialOrder::degrevlex());
};

struct GroebnerBasis {
    std::vector<Polynomial> g;  // reduced, monic, ascending by leading monomial
    std::vector<std::string> vars;
    MonomialOrder order;
};

struct QuotientBasis {
    std::vector<Monomial> b;  // ascending under the basis order
    std::size_t dim() const { return b.size(); }
    int index_of(const Monomial& m) const;
};

class PositiveDimensional : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

GroebnerBasis buchberger(const PolySystem& sys);
QuotientBasis quotient_basis(const GroebnerBasis& G);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G);
// S-polynomial of two nonzero polynomials under o.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& o);

// Row j of M_v holds the coordinates of normal_form(v * b_j) over b, so M_v b = v b
// and right eigenvectors are b evaluated at the roots.
struct MultiplicationMatrixSet {
    std::vector<std::string> vars;
    std::vector<Eigen::MatrixXd> m;
    QuotientBasis basis;

    const Eigen::MatrixXd& operator[](const std::string& v) const;
};

MultiplicationMatrixSet mult_matrices(const GroebnerBasis& G, const QuotientBasis& b);

// Hermitian: u^H M u / u^H u, exact for common eigenvectors (true roots).
// Bilinear: u^T M u on a unit-norm u whose largest entry is rotated real. Equal to the
// Hermitian value on real pairs; on complex pairs it is the root times u^T u, the
// convention behind the reference solution table.
enum class Expectation { Hermitian, Bilinear };

struct SolveOptions {
    std::string pivot = "x";
    Expectation expectation = Expectation::Hermitian;
    RecordPolicy policy;
    std::vector<Polynomial> generators;  // for residuals; may be empty
};

std::vector<SolutionRecord> solve_system(const MultiplicationMatrixSet& M, const SolveOptions& opt = {});
std::vector<double> residuals(const PolySystem& sys, const std::vector<SolutionRecord>& records);

}  // namespace molpoly::groebner
