#pragma once

#include <array>
#include <string>
#include <vector>

#include "molpoly/polyring.hpp"

namespace molpoly::hf {

using Vec3 = std::array<double, 3>;

struct PrimitiveGaussian {
    double b = 1.0;  // exponent, bohr^-2
    double d = 1.0;  // contraction weight including normalization
    Vec3 center{0, 0, 0};
};

struct Sto3gBasis {
    std::array<double, 3> c{0.444635, 0.535328, 0.154329};
    std::array<double, 3> a{0.109818, 0.405771, 2.22766};
    double zeta = 1.24;

    double exponent(int i) const { return a[i] * zeta * zeta; }
    double weight(int i) const;
    std::vector<PrimitiveGaussian> contracted(const Vec3& center) const;
};

// Equilateral triangle A=(0,0,0), B=(R,0,0), C=(R/2, R*sqrt(3)/2, 0).
struct Geometry {
    double R = 1.8;
    std::array<Vec3, 3> sites() const;
};

double boys_f0(double t);
double boys(int m, double t);

// Primitive integrals; the contraction weights d_p d_q... are folded in.
double overlap(const PrimitiveGaussian& p, const PrimitiveGaussian& q);
double kinetic(const PrimitiveGaussian& p, const PrimitiveGaussian& q);
double nuclear_attraction(const PrimitiveGaussian& p, const PrimitiveGaussian& q, const Vec3& u);
double two_electron(const PrimitiveGaussian& p, const PrimitiveGaussian& q, const PrimitiveGaussian& r,
                    const PrimitiveGaussian& s);

struct IntegralSet {
    double R = 0;
    double S[3][3]{};
    double K[3][3]{};
    double V[3][3][3]{};        // V[P][Q][U]
    double eri[3][3][3][3]{};   // [PQ|XY]
};

IntegralSet integrals(const Sto3gBasis& basis, double R);

enum class Rounding { Nearest, Floor };

struct EnergyConfig {
    Sto3gBasis basis;
    double rc = 1.8;
    int order = 3;
    int scale_exp = 8;
    Rounding rounding = Rounding::Nearest;
    // Normalization constraint uses S_PP = 1 instead of the computed diagonal overlap.
    bool unit_diagonal_overlap = true;
};

// key=value lines (c1..c3, a1..a3, zeta, rc, order, scale_exp, rounding, unit_diagonal_overlap).
EnergyConfig parse_config(const std::string& text, EnergyConfig base = {});
EnergyConfig load_config(const std::string& path, EnergyConfig base = {});

// Summed integrals that enter E_tot when all three MO coefficients are equal.
struct EnergySums {
    double H = 0;    // sum_PQ (K_PQ + sum_U V_PQ,U)
    double eri = 0;  // sum_PQXY [PQ|XY]
    double S = 0;    // constraint overlap sum
};

EnergySums energy_sums(const Sto3gBasis& basis, double R, bool unit_diagonal_overlap = true);
// Taylor coefficients of each sum around rc, index k holds d^k/dR^k / k!.
struct SumJets {
    std::vector<double> H, eri, S;
};
SumJets energy_sum_jets(const Sto3gBasis& basis, double rc, int order, bool unit_diagonal_overlap = true);

inline const std::vector<std::string>& energy_vars_xe() {
    static const std::vector<std::string> v{"x", "e"};
    return v;
}
inline const std::vector<std::string>& energy_vars() {
    static const std::vector<std::string> v{"x", "e", "R"};
    return v;
}

// E_tot(x, e) at fixed R with float coefficients held as exact rationals.
Polynomial total_energy(const Sto3gBasis& basis, double R, bool unit_diagonal_overlap = true);

// Cubic-in-R objective over (x, e, R). scale_exp > 0 scales by 10^n and rounds to integers.
Polynomial expand_and_rationalize(const EnergyConfig& cfg);

// x^2 from dE/de = 0, energy at e = 0; polynomial must be over (x, e, R).
double constrained_energy(const Polynomial& p, double R);

struct CurvePoint {
    double R, exact, taylor, rationalized;
};
std::vector<std::pair<double, double>> exact_energy_curve(const EnergyConfig& cfg, const std::vector<double>& Rs);
std::vector<CurvePoint> energy_curves(const EnergyConfig& cfg, const std::vector<double>& Rs);

}  // namespace molpoly::hf
