#include "molpoly/hf.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "jet.hpp"

namespace molpoly::hf {

using detail::Jet;
using std::numbers::pi;

double Sto3gBasis::weight(int i) const { return c[i] * std::pow(2.0 * exponent(i) / pi, 0.75); }

std::vector<PrimitiveGaussian> Sto3gBasis::contracted(const Vec3& center) const {
    std::vector<PrimitiveGaussian> out;
    for (int i = 0; i < 3; ++i) out.push_back({exponent(i), weight(i), center});
    return out;
}

std::array<Vec3, 3> Geometry::sites() const {
    return {Vec3{0, 0, 0}, Vec3{R, 0, 0}, Vec3{R / 2, R * std::sqrt(3.0) / 2, 0}};
}

double boys_f0(double t) {
    if (t < 0) throw std::domain_error("boys_f0: negative argument");
    if (t < 1e-8) return 1.0 - t / 3.0 + t * t / 10.0;
    double st = std::sqrt(t);
    return 0.5 * std::sqrt(pi) / st * std::erf(st);
}

double boys(int m, double t) {
    if (t < 0) throw std::domain_error("boys: negative argument");
    if (m == 0) return boys_f0(t);
    if (t < 30.0) {
        // all-positive series, no cancellation
        double term = 1.0 / (2 * m + 1), sum = term;
        for (int k = 1; k < 400; ++k) {
            term *= 2.0 * t / (2 * m + 2 * k + 1);
            sum += term;
            if (term < 1e-17 * sum) break;
        }
        return std::exp(-t) * sum;
    }
    double f = boys_f0(t), et = std::exp(-t);
    for (int j = 0; j < m; ++j) f = ((2 * j + 1) * f - et) / (2 * t);
    return f;
}

namespace {

template <class T>
using Point = std::array<T, 3>;

template <class T>
T dist2(const Point<T>& a, const Point<T>& b) {
    T dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
    return dx * dx + dy * dy + dz * dz;
}

double boys0_t(double t) { return boys_f0(t); }
Jet boys0_t(const Jet& t) {
    std::vector<double> d(t.size());
    for (int k = 0; k < t.size(); ++k) d[k] = (k % 2 ? -1.0 : 1.0) * boys(k, t.value());
    return t.compose(d);
}

using std::exp;

template <class T>
std::array<Point<T>, 3> sites_t(const T& R) {
    T z = R * 0.0;
    return {Point<T>{z, z, z}, Point<T>{R, z, z}, Point<T>{R * 0.5, R * (std::sqrt(3.0) / 2), z}};
}

template <class T>
struct SumsT {
    T H, eri, S;
};

template <class T>
SumsT<T> sums_t(const Sto3gBasis& basis, const T& R, bool unit_diag) {
    const auto site = sites_t(R);
    const T zero = R * 0.0;
    SumsT<T> out{zero, zero, zero};
    struct Prim {
        double p;
        T w;
        Point<T> c;
    };
    std::vector<Prim> prims;
    if (unit_diag) out.S += 3.0;
    for (int P = 0; P < 3; ++P)
        for (int Q = 0; Q < 3; ++Q)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    const double bi = basis.exponent(i), bj = basis.exponent(j);
                    const double p = bi + bj, mu = bi * bj / p;
                    const T r2 = dist2(site[P], site[Q]);
                    const T pre = exp(-mu * r2) * (basis.weight(i) * basis.weight(j));
                    const double ov = std::pow(pi / p, 1.5);
                    if (!(unit_diag && P == Q)) out.S += pre * ov;
                    out.H += pre * ((3.0 - 2.0 * mu * r2) * (mu * ov));
                    Point<T> c;
                    for (int a = 0; a < 3; ++a) c[a] = (site[P][a] * bi + site[Q][a] * bj) / p;
                    for (int U = 0; U < 3; ++U) out.H += pre * boys0_t(p * dist2(c, site[U])) * (-2.0 * pi / p);
                    prims.push_back({p, pre, c});
                }
    const double k = 2.0 * std::pow(pi, 2.5);
    for (const auto& a : prims)
        for (const auto& b : prims) {
            const double pq = a.p * b.p, s = a.p + b.p;
            out.eri += a.w * b.w * boys0_t(pq / s * dist2(a.c, b.c)) * (k / (pq * std::sqrt(s)));
        }
    return out;
}

}  // namespace

double overlap(const PrimitiveGaussian& p, const PrimitiveGaussian& q) {
    const double s = p.b + q.b, mu = p.b * q.b / s;
    const double r2 = dist2(p.center, q.center);
    return p.d * q.d * std::pow(pi / s, 1.5) * std::exp(-mu * r2);
}

double kinetic(const PrimitiveGaussian& p, const PrimitiveGaussian& q) {
    const double s = p.b + q.b, mu = p.b * q.b / s;
    const double r2 = dist2(p.center, q.center);
    return p.d * q.d * mu * (3.0 - 2.0 * mu * r2) * std::pow(pi / s, 1.5) * std::exp(-mu * r2);
}

static Vec3 product_center(const PrimitiveGaussian& p, const PrimitiveGaussian& q) {
    Vec3 c;
    for (int a = 0; a < 3; ++a) c[a] = (p.b * p.center[a] + q.b * q.center[a]) / (p.b + q.b);
    return c;
}

double nuclear_attraction(const PrimitiveGaussian& p, const PrimitiveGaussian& q, const Vec3& u) {
    const double s = p.b + q.b, mu = p.b * q.b / s;
    const double r2 = dist2(p.center, q.center);
    const Vec3 c = product_center(p, q);
    return -p.d * q.d * 2.0 * pi / s * std::exp(-mu * r2) * boys_f0(s * dist2(c, u));
}

double two_electron(const PrimitiveGaussian& p, const PrimitiveGaussian& q, const PrimitiveGaussian& r,
                    const PrimitiveGaussian& s) {
    const double a = p.b + q.b, b = r.b + s.b;
    const double e1 = std::exp(-p.b * q.b / a * dist2(p.center, q.center));
    const double e2 = std::exp(-r.b * s.b / b * dist2(r.center, s.center));
    const Vec3 P = product_center(p, q), Q = product_center(r, s);
    return p.d * q.d * r.d * s.d * 2.0 * std::pow(pi, 2.5) / (a * b * std::sqrt(a + b)) * e1 * e2 *
           boys_f0(a * b / (a + b) * dist2(P, Q));
}

IntegralSet integrals(const Sto3gBasis& basis, double R) {
    IntegralSet I;
    I.R = R;
    const auto site = Geometry{R}.sites();
    std::array<std::vector<PrimitiveGaussian>, 3> phi;
    for (int P = 0; P < 3; ++P) phi[P] = basis.contracted(site[P]);
    for (int P = 0; P < 3; ++P)
        for (int Q = 0; Q < 3; ++Q)
            for (const auto& p : phi[P])
                for (const auto& q : phi[Q]) {
                    I.S[P][Q] += overlap(p, q);
                    I.K[P][Q] += kinetic(p, q);
                    for (int U = 0; U < 3; ++U) I.V[P][Q][U] += nuclear_attraction(p, q, site[U]);
                }
    for (int P = 0; P < 3; ++P)
        for (int Q = 0; Q < 3; ++Q)
            for (int X = 0; X < 3; ++X)
                for (int Y = 0; Y < 3; ++Y) {
                    double v = 0;
                    for (const auto& p : phi[P])
                        for (const auto& q : phi[Q])
                            for (const auto& r : phi[X])
                                for (const auto& s : phi[Y]) v += two_electron(p, q, r, s);
                    I.eri[P][Q][X][Y] = v;
                }
    return I;
}

EnergyConfig parse_config(const std::string& text, EnergyConfig cfg) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto p = line.find('#'); p != std::string::npos) line.erase(p);
        auto eq = line.find('=');
        auto trim = [](std::string s) {
            const char* ws = " \t\r";
            s.erase(0, s.find_first_not_of(ws));
            s.erase(s.find_last_not_of(ws) + 1);
            return s;
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(lineno) + ": missing '='");
        const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        auto num = [&] { return std::stod(val); };
        if (key == "c1") cfg.basis.c[0] = num();
        else if (key == "c2") cfg.basis.c[1] = num();
        else if (key == "c3") cfg.basis.c[2] = num();
        else if (key == "a1") cfg.basis.a[0] = num();
        else if (key == "a2") cfg.basis.a[1] = num();
        else if (key == "a3") cfg.basis.a[2] = num();
        else if (key == "zeta") cfg.basis.zeta = num();
        else if (key == "rc") cfg.rc = num();
        else if (key == "order") cfg.order = std::stoi(val);
        else if (key == "scale_exp") cfg.scale_exp = std::stoi(val);
        else if (key == "rounding") {
            if (val == "nearest") cfg.rounding = Rounding::Nearest;
            else if (val == "floor") cfg.rounding = Rounding::Floor;
            else throw std::invalid_argument("config: rounding must be nearest or floor");
        } else if (key == "unit_diagonal_overlap") {
            cfg.unit_diagonal_overlap = val == "true" || val == "1" || val == "yes";
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }
    if (cfg.order < 0 || cfg.scale_exp < 0) throw std::invalid_argument("config: order and scale_exp must be >= 0");
    return cfg;
}

EnergyConfig load_config(const std::string& path, EnergyConfig base) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str(), base);
}

EnergySums energy_sums(const Sto3gBasis& basis, double R, bool unit_diag) {
    if (R <= 0) throw std::domain_error("bond length must be positive");
    auto s = sums_t(basis, R, unit_diag);
    return {s.H, s.eri, s.S};
}

SumJets energy_sum_jets(const Sto3gBasis& basis, double rc, int order, bool unit_diag) {
    if (rc <= 0) throw std::domain_error("expansion center must be positive");
    auto s = sums_t(basis, Jet::variable(order + 1, rc), unit_diag);
    return {s.H.coeffs(), s.eri.coeffs(), s.S.coeffs()};
}

Polynomial total_energy(const Sto3gBasis& basis, double R, bool unit_diag) {
    if (R <= 0) throw std::domain_error("bond length must be positive");
    const auto s = energy_sums(basis, R, unit_diag);
    const auto& v = energy_vars_xe();
    Polynomial E(v);
    E.add_term(Monomial({4, 0}), Rational(s.eri));
    E.add_term(Monomial({2, 0}), Rational(2 * s.H));
    E.add_term(Monomial({2, 1}), Rational(-2 * s.S));
    E.add_term(Monomial({0, 1}), 2);
    E.add_term(Monomial({0, 0}), Rational(3.0 / R));
    return E;
}

namespace {

// sum_k c_k (R - rc)^k as an exact polynomial in R over (x, e, R)
Polynomial series_in_R(const std::vector<Rational>& c, const Rational& rc) {
    const auto& v = energy_vars();
    Polynomial shift = Polynomial::variable(v, "R") - Polynomial::constant(v, rc);
    Polynomial out(v), pw = Polynomial::constant(v, 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        out = out + pw * c[k];
        pw = pw * shift;
    }
    return out;
}

std::vector<Rational> exact(const std::vector<double>& c) { return {c.begin(), c.end()}; }

Rational round_scaled(const Rational& q, Rounding mode) {
    mpz_class r;
    if (mode == Rounding::Floor) {
        mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    } else {
        Rational a = abs(q) + Rational(1, 2);
        mpz_fdiv_q(r.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
        if (q < 0) r = -r;
    }
    return Rational(r);
}

}  // namespace

Polynomial expand_and_rationalize(const EnergyConfig& cfg) {
    const auto jets = energy_sum_jets(cfg.basis, cfg.rc, cfg.order, cfg.unit_diagonal_overlap);
    const Rational rc = rational_from_double_decimal(cfg.rc);
    std::vector<Rational> nuc;
    Rational term = Rational(3) / rc;
    for (int k = 0; k <= cfg.order; ++k) {
        nuc.push_back(term);
        term *= Rational(-1) / rc;
    }
    const auto& v = energy_vars();
    auto mono = [&](int x, int e) { return Polynomial::term(v, Monomial({x, e, 0}), 1); };
    std::vector<Rational> h2 = exact(jets.H);
    for (auto& q : h2) q *= 2;
    std::vector<Rational> s2 = exact(jets.S);
    for (auto& q : s2) q *= -2;
    Polynomial E = mono(4, 0) * series_in_R(exact(jets.eri), rc) + mono(2, 0) * series_in_R(h2, rc) +
                   mono(2, 1) * series_in_R(s2, rc) + mono(0, 1) * Rational(2) + series_in_R(nuc, rc);
    if (cfg.scale_exp == 0) return E;
    mpz_class ten;
    mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(cfg.scale_exp));
    Polynomial out(v);
    for (const auto& [m, c] : E.terms()) out.add_term(m, round_scaled(c * Rational(ten), cfg.rounding));
    return out;
}

double constrained_energy(const Polynomial& p, double R) {
    // p = C(R) e x^2 + D(R) e + rest(x, R)
    const int xi = p.var_index("x"), ei = p.var_index("e"), ri = p.var_index("R");
    double C = 0, D = 0;
    for (const auto& [m, c] : p.terms()) {
        if (m[ei] != 1) continue;
        double t = c.get_d() * std::pow(R, m[ri]);
        if (m[xi] == 2) C += t;
        else if (m[xi] == 0) D += t;
        else throw std::invalid_argument("constrained_energy: unexpected e-term shape");
    }
    if (C == 0 || -D / C < 0) throw std::domain_error("constrained_energy: no real normalized x");
    std::vector<cplx> pt(p.nvars(), 0.0);
    pt[xi] = std::sqrt(-D / C);
    pt[ri] = R;
    return p.evaluate(pt).real();
}

std::vector<std::pair<double, double>> exact_energy_curve(const EnergyConfig& cfg, const std::vector<double>& Rs) {
    std::vector<std::pair<double, double>> out;
    for (double R : Rs) {
        const auto s = energy_sums(cfg.basis, R, cfg.unit_diagonal_overlap);
        const double x2 = 1.0 / s.S;
        out.emplace_back(R, 2 * x2 * s.H + x2 * x2 * s.eri + 3.0 / R);
    }
    return out;
}

std::vector<CurvePoint> energy_curves(const EnergyConfig& cfg, const std::vector<double>& Rs) {
    EnergyConfig raw = cfg;
    raw.scale_exp = 0;
    const Polynomial taylor = expand_and_rationalize(raw);
    const Polynomial rat = expand_and_rationalize(cfg);
    const double scale = std::pow(10.0, cfg.scale_exp);
    const auto ex = exact_energy_curve(cfg, Rs);
    std::vector<CurvePoint> out;
    for (std::size_t i = 0; i < Rs.size(); ++i)
        out.push_back({Rs[i], ex[i].second, constrained_energy(taylor, Rs[i]), constrained_energy(rat, Rs[i]) / scale});
    return out;
}

}  // namespace molpoly::hf
