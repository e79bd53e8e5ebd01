#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "molpoly/polyring.hpp"
#include "molpoly/solution.hpp"

namespace molpoly::qemu {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

struct Statevector {
    int qubits = 0;
    VectorXcd amp;

    static Statevector basis(int qubits, std::size_t index = 0);
    // Zero-pads v to the next power of two and normalizes.
    static Statevector from(const VectorXcd& v);
    double norm() const { return amp.norm(); }
    void normalize();
};

class ZeroResult : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class EncodingMode { Full, Action };

// Qubit layout: index = anc * 4^n + r1 * 2^n + r2, with the system on r2.
struct BlockEncoding {
    MatrixXcd a;  // padded target, 2^n x 2^n
    int n = 0;
    double s = 1;  // power of two with |a_ij| <= s
    EncodingMode mode = EncodingMode::Full;
    MatrixXcd u;   // materialized circuit (full mode only)

    int qubits() const { return 2 * n + 1; }
    int ancillas() const { return n + 1; }
    double normalization() const { return s * double(1u << n); }
    // Apply the circuit to a full register state.
    VectorXcd apply(const VectorXcd& state) const;
    // A / (s 2^n) as produced by the circuit: amplitudes with anc = 0 and r1 = 0.
    MatrixXcd leading_block() const;
};

constexpr int kMaxFullQubits = 11;

BlockEncoding fable_encode(const MatrixXcd& A, EncodingMode preferred = EncodingMode::Full);
inline BlockEncoding fable_encode(const Eigen::MatrixXd& A, EncodingMode preferred = EncodingMode::Full) {
    return fable_encode(MatrixXcd(A.cast<cplx>()), preferred);
}

struct Applied {
    Statevector state;   // normalized A psi (system register)
    double probability;  // ||A psi||^2 / (s 2^n)^2
};
Applied apply_encoded(const BlockEncoding& enc, const Statevector& psi);

// <psi|A|psi> read through the circuit; psi unit norm on the system register.
cplx expectation(const BlockEncoding& enc, const Statevector& psi);
cplx expectation(const MatrixXcd& A, const VectorXcd& psi);

struct IpeaOptions {
    int bits = 12;
    // Eigen-coefficients of psi below floor * max are treated as preparation noise.
    double floor = 1e-6;
    double eigen_tol = 1e-6;
};

struct IpeaResult {
    std::vector<int> bits;      // x_1 .. x_m, phase = 0.x_1 x_2 ... x_m
    double phase = 0;           // in turns, [0, 1)
    double magnitude = 0;       // |lambda| of the encoded block
    cplx lambda{0, 0};          // magnitude * exp(2 pi i phase)
    std::vector<double> gaps;   // |P0 - P1| / (P0 + P1) per bit, in extraction order
    double success = 0;         // P0 + P1 of the k = 0 real test
};

// Complex-eigenvalue iterative phase estimation on the leading block of `enc`.
IpeaResult ipea_complex(const BlockEncoding& enc, const Statevector& psi, const IpeaOptions& opt = {});

struct Projection {
    Statevector state;
    std::vector<double> branch;  // ||(I - P) psi||^2 per repetition, psi normalized
};

// Repeated Hadamard / controlled-P / Hadamard with P = M^H M / sigma_max^2, keeping the |1> branch.
Projection nullspace_projection(const MatrixXcd& M, const Statevector& psi, int repetitions);
inline Projection nullspace_projection(const Eigen::MatrixXd& M, const Statevector& psi, int repetitions) {
    return nullspace_projection(MatrixXcd(M.cast<cplx>()), psi, repetitions);
}

struct QpeConfig {
    std::string route = "groebner";  // groebner | macaulay
    int degree = 3;                  // macaulay only
    int bits = 12;
    int refine = 4;                  // second pass at up to 2^refine times the base evolution time, 0 disables
    int repetitions = 50;            // projection repetitions reported for the macaulay route
    std::uint64_t seed = 7;
    std::string pivot = "x";
    std::vector<int> only;           // record indices to run; empty runs all
    RecordPolicy policy;
};

QpeConfig parse_qpe_config(const std::string& text, QpeConfig base = {});

struct VariableEstimate {
    std::string var;
    double time = 0;  // evolution time t of exp(-i t M)
    IpeaResult coarse, fine;
    cplx value{0, 0};
};

struct QpeRecord {
    SolutionRecord record;
    SolutionRecord classical;  // the root the eigenvector came from
    std::vector<VariableEstimate> vars;
    double projection_error = -1;  // macaulay route: distance to the exact null-space projection
};

// Estimate each coordinate of the eigenvector's root from exp(-i t M_v) by IPEA.
VariableEstimate estimate_variable(const std::string& var, const MatrixXcd& Mv, const VectorXcd& psi,
                                   const QpeConfig& cfg);

std::vector<QpeRecord> qpe_pipeline(const std::vector<Polynomial>& gens, const QpeConfig& cfg = {});

std::string qpe_to_json(const std::vector<QpeRecord>& rs, int indent = 2);

}  // namespace molpoly::qemu
