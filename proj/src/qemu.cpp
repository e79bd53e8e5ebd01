#include "molpoly/qemu.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "molpoly/groebner.hpp"
#include "molpoly/macaulay.hpp"
#include "molpoly/spectra.hpp"

namespace molpoly::qemu {

namespace {

constexpr double kPi = std::numbers::pi;

int qubits_for(Eigen::Index dim) {
    int q = 0;
    while ((Eigen::Index(1) << q) < dim) ++q;
    return q;
}

// Walsh-Hadamard on the n qubits starting at bit `lo`.
void hadamard_register(VectorXcd& s, int lo, int n) {
    const double h = std::sqrt(0.5);
    for (int q = lo; q < lo + n; ++q) {
        const Eigen::Index bit = Eigen::Index(1) << q;
        for (Eigen::Index i = 0; i < s.size(); ++i)
            if (!(i & bit)) {
                const cplx a = s(i), b = s(i | bit);
                s(i) = h * (a + b);
                s(i | bit) = h * (a - b);
            }
    }
}

}  // namespace

Statevector Statevector::basis(int qubits, std::size_t index) {
    Statevector s;
    s.qubits = qubits;
    s.amp = VectorXcd::Zero(Eigen::Index(1) << qubits);
    if (Eigen::Index(index) >= s.amp.size()) throw std::out_of_range("Statevector::basis: index out of range");
    s.amp(Eigen::Index(index)) = 1;
    return s;
}

Statevector Statevector::from(const VectorXcd& v) {
    Statevector s;
    s.qubits = qubits_for(std::max<Eigen::Index>(v.size(), 1));
    s.amp = VectorXcd::Zero(Eigen::Index(1) << s.qubits);
    s.amp.head(v.size()) = v;
    s.normalize();
    return s;
}

void Statevector::normalize() {
    const double n = amp.norm();
    if (!(n > 0)) throw ZeroResult("Statevector: zero vector cannot be normalized");
    amp /= n;
}

VectorXcd BlockEncoding::apply(const VectorXcd& state) const {
    const Eigen::Index N = Eigen::Index(1) << n, NN = N * N;
    if (state.size() != 2 * NN) throw std::invalid_argument("BlockEncoding::apply: wrong register size");
    if (mode == EncodingMode::Full && u.size() > 0) return u * state;
    VectorXcd v = state;
    hadamard_register(v, n, n);
    for (Eigen::Index i = 0; i < N; ++i)
        for (Eigen::Index j = 0; j < N; ++j) {
            const cplx x = a(i, j) / s;
            const double y = std::sqrt(std::max(0.0, 1.0 - std::norm(x)));
            const Eigen::Index k0 = i * N + j, k1 = NN + k0;
            const cplx v0 = v(k0), v1 = v(k1);
            v(k0) = x * v0 - y * v1;
            v(k1) = y * v0 + std::conj(x) * v1;
        }
    for (Eigen::Index b = 0; b < 2; ++b)
        for (Eigen::Index i = 0; i < N; ++i)
            for (Eigen::Index j = i + 1; j < N; ++j) std::swap(v(b * NN + i * N + j), v(b * NN + j * N + i));
    hadamard_register(v, n, n);
    return v;
}

MatrixXcd BlockEncoding::leading_block() const {
    const Eigen::Index N = Eigen::Index(1) << n;
    if (mode == EncodingMode::Full && u.size() > 0) return u.topLeftCorner(N, N);
    MatrixXcd out(N, N);
    for (Eigen::Index j = 0; j < N; ++j) {
        VectorXcd e = VectorXcd::Zero(2 * N * N);
        e(j) = 1;
        out.col(j) = apply(e).head(N);
    }
    return out;
}

BlockEncoding fable_encode(const MatrixXcd& A, EncodingMode preferred) {
    if (A.rows() != A.cols()) throw std::invalid_argument("fable_encode: matrix must be square");
    if (!A.allFinite()) throw std::invalid_argument("fable_encode: non-finite entry");
    BlockEncoding enc;
    enc.n = qubits_for(std::max<Eigen::Index>(A.rows(), 1));
    const Eigen::Index N = Eigen::Index(1) << enc.n;
    enc.a = MatrixXcd::Zero(N, N);
    enc.a.topLeftCorner(A.rows(), A.cols()) = A;
    const double big = A.size() ? A.cwiseAbs().maxCoeff() : 0.0;
    enc.s = big > 0 ? std::exp2(std::ceil(std::log2(big))) : 1.0;
    enc.mode = preferred == EncodingMode::Full && enc.qubits() <= kMaxFullQubits ? EncodingMode::Full
                                                                                 : EncodingMode::Action;
    if (enc.mode == EncodingMode::Full) {
        const Eigen::Index D = 2 * N * N;
        MatrixXcd u(D, D);
        for (Eigen::Index c = 0; c < D; ++c) {
            VectorXcd e = VectorXcd::Zero(D);
            e(c) = 1;
            u.col(c) = enc.apply(e);
        }
        enc.u = std::move(u);
    }
    return enc;
}

Applied apply_encoded(const BlockEncoding& enc, const Statevector& psi) {
    const Eigen::Index N = Eigen::Index(1) << enc.n;
    if (psi.amp.size() != N) throw std::invalid_argument("apply_encoded: state does not match the system register");
    VectorXcd full = VectorXcd::Zero(2 * N * N);
    full.head(N) = psi.amp;
    VectorXcd phi = enc.apply(full).head(N);
    const double p = phi.squaredNorm();
    if (!(p > 1e-300)) throw ZeroResult("apply_encoded: post-selected branch has zero amplitude");
    Statevector out;
    out.qubits = enc.n;
    out.amp = phi / std::sqrt(p);
    return {std::move(out), p};
}

cplx expectation(const BlockEncoding& enc, const Statevector& psi) {
    const Eigen::Index N = Eigen::Index(1) << enc.n;
    if (psi.amp.size() != N) throw std::invalid_argument("expectation: state does not match the system register");
    VectorXcd full = VectorXcd::Zero(2 * N * N);
    full.head(N) = psi.amp;
    return enc.normalization() * psi.amp.dot(enc.apply(full).head(N));
}

cplx expectation(const MatrixXcd& A, const VectorXcd& psi) { return psi.dot(A * psi) / psi.squaredNorm(); }

IpeaResult ipea_complex(const BlockEncoding& enc, const Statevector& psi, const IpeaOptions& opt) {
    if (opt.bits < 1 || opt.bits > 40) throw std::invalid_argument("ipea_complex: bits must be in [1, 40]");
    const MatrixXcd B = enc.leading_block();
    if (psi.amp.size() != B.rows()) throw std::invalid_argument("ipea_complex: state does not match the system register");
    const VectorXcd v = psi.amp / psi.amp.norm();
    const cplx mu = v.dot(B * v);
    if ((B * v - mu * v).norm() > opt.eigen_tol * std::max(B.norm(), 1e-300))
        throw std::invalid_argument("ipea_complex: input is not an eigenvector of the encoded block");

    // Controlled powers act on the eigen-coefficients of the input; coefficients below the floor are
    // rounding residue of the preparation and would otherwise be amplified by the non-unitary powers.
    const auto ed = spectra::eig(B);
    VectorXcd c = ed.vectors.partialPivLu().solve(v);
    const double cmax = c.cwiseAbs().maxCoeff();
    for (Eigen::Index j = 0; j < c.size(); ++j)
        if (std::abs(c(j)) < opt.floor * cmax) c(j) = 0;

    auto test = [&](double power, double omega, double renorm, double& p0, double& p1) {
        VectorXcd lp(c.size());
        for (Eigen::Index j = 0; j < c.size(); ++j)
            lp(j) = c(j) == 0.0 ? cplx(0) : c(j) * std::pow(ed.values(j) / renorm, power);
        const VectorXcd up = std::polar(1.0, omega) * (ed.vectors * lp);
        p0 = (v + up).squaredNorm() / 4;
        p1 = (v - up).squaredNorm() / 4;
    };

    IpeaResult r;
    double p0, p1;
    // real and imaginary Hadamard tests; P0 - P1 avoids the cancellation in 2 (P0 + P1) - 1 for small |lambda|
    test(1, 0, 1, p0, p1);
    r.success = p0 + p1;
    const double re = p0 - p1;
    test(1, -kPi / 2, 1, p0, p1);
    r.magnitude = std::hypot(re, p0 - p1);
    r.bits.assign(std::size_t(opt.bits), 0);
    if (r.magnitude < 1e-150) return r;

    double frac = 0;  // 0.x_{j+1} ... x_m
    for (int j = opt.bits; j >= 1; --j) {
        test(std::ldexp(1.0, j - 1), -kPi * frac, r.magnitude, p0, p1);
        const int x = p1 > p0 ? 1 : 0;
        r.bits[std::size_t(j - 1)] = x;
        r.gaps.push_back(std::abs(p0 - p1) / (p0 + p1));
        frac = (frac + x) / 2;
    }
    r.phase = frac;
    r.lambda = std::polar(r.magnitude, 2 * kPi * r.phase);
    return r;
}

Projection nullspace_projection(const MatrixXcd& M, const Statevector& psi, int repetitions) {
    if (M.cols() > psi.amp.size()) throw std::invalid_argument("nullspace_projection: state is shorter than M");
    MatrixXcd Mp = MatrixXcd::Zero(M.rows(), psi.amp.size());
    Mp.leftCols(M.cols()) = M;
    const auto sv = spectra::singular_values(Mp);
    MatrixXcd P = Mp.adjoint() * Mp;
    if (sv.size() && sv(0) > 0) P /= sv(0) * sv(0);
    Projection out;
    out.state = psi;
    out.state.normalize();
    for (int k = 0; k < repetitions; ++k) {
        // |1> branch of H . controlled-P . H on |0>|psi>
        const VectorXcd one = (out.state.amp - P * out.state.amp) / 2;
        const double b = 4 * one.squaredNorm();
        out.branch.push_back(b);
        // psi is unit norm, so b is a probability; below 1e-20 it is rounding noise
        if (!(b > 1e-20)) throw ZeroResult("nullspace_projection: state has no null-space component");
        out.state.amp = one / one.norm();
    }
    return out;
}

QpeConfig parse_qpe_config(const std::string& text, QpeConfig c) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        const auto eq = line.find('=');
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos) throw std::invalid_argument("qpe config: expected key=value: " + line);
        const std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
        if (k == "route") {
            if (v != "groebner" && v != "macaulay") throw std::invalid_argument("qpe config: unknown route " + v);
            c.route = v;
        } else if (k == "degree") c.degree = std::stoi(v);
        else if (k == "bits") c.bits = std::stoi(v);
        else if (k == "refine") c.refine = std::stoi(v);
        else if (k == "repetitions") c.repetitions = std::stoi(v);
        else if (k == "seed") c.seed = std::stoull(v);
        else if (k == "pivot") c.pivot = v;
        else if (k == "only") {
            c.only.clear();
            std::istringstream l(v);
            std::string t;
            while (std::getline(l, t, ',')) c.only.push_back(std::stoi(t));
        } else throw std::invalid_argument("qpe config: unknown key " + k);
    }
    return c;
}

namespace {

constexpr double kMaxGrowth = 2.0;

double wrapped_angle(double phase) {
    double th = 2 * kPi * phase;
    if (th > kPi) th -= 2 * kPi;
    return th;
}

}  // namespace

VariableEstimate estimate_variable(const std::string& var, const MatrixXcd& Mv, const VectorXcd& psi,
                                   const QpeConfig& cfg) {
    VariableEstimate est;
    est.var = var;
    const auto vals = spectra::eig(Mv).values;
    const double rho = vals.size() ? vals.cwiseAbs().maxCoeff() : 0.0;
    const double im_max = vals.size() ? vals.imag().cwiseAbs().maxCoeff() : 0.0;
    // |Re xi| < bound keeps t Re xi inside (-pi, pi)
    const double bound = rho > 0 ? std::exp2(std::ceil(std::log2(1.01 * rho))) : 1.0;
    const IpeaOptions io{cfg.bits};
    const Statevector s = Statevector::from(psi);

    auto pass = [&](double t, IpeaResult& out) {
        const BlockEncoding enc = fable_encode(spectra::expm_scaled(Mv, t));
        out = ipea_complex(enc, s, io);
        return std::log(out.magnitude * enc.normalization()) / t;  // Im xi
    };
    est.time = kPi / bound;
    const double im0 = pass(est.time, est.coarse);
    const double re0 = -wrapped_angle(est.coarse.phase) / est.time;
    est.value = {re0, im0};
    // longer times sharpen Re xi but exp(-i t M) grows like exp(t max|Im xi|); stop where that stays modest
    double k = std::exp2(cfg.refine);
    while (k > 1 && k * est.time * im_max > kMaxGrowth) k /= 2;
    if (k > 1) {
        const double t1 = est.time * k;
        const double im1 = pass(t1, est.fine);
        const double base = -wrapped_angle(est.fine.phase) / t1, period = 2 * kPi / t1;
        est.value = {base + period * std::round((re0 - base) / period), im1};
    }
    return est;
}

std::vector<QpeRecord> qpe_pipeline(const std::vector<Polynomial>& gens, const QpeConfig& cfg) {
    if (gens.empty()) throw std::invalid_argument("qpe_pipeline: empty system");
    const auto vars = gens.front().vars();
    auto wanted = [&](int i) {
        return cfg.only.empty() || std::find(cfg.only.begin(), cfg.only.end(), i) != cfg.only.end();
    };
    std::vector<QpeRecord> out;
    auto finish = [&](QpeRecord& q, const SolutionRecord& classical) {
        q.classical = classical;
        q.record.index = classical.index;
        q.record.vars = vars;
        for (const auto& e : q.vars) q.record.values.push_back(e.value);
        finish_record(q.record, gens, cfg.policy);
    };

    if (cfg.route == "groebner") {
        const auto G = groebner::buchberger(groebner::PolySystem(gens));
        const auto M = groebner::mult_matrices(G, groebner::quotient_basis(G));
        groebner::SolveOptions so;
        so.pivot = cfg.pivot;
        so.policy = cfg.policy;
        so.generators = gens;
        const auto records = groebner::solve_system(M, so);
        const auto ed = spectra::eig(M[cfg.pivot]);
        for (const auto& r : records) {
            if (!wanted(r.index)) continue;
            QpeRecord q;
            const VectorXcd psi = ed.vectors.col(r.index);
            for (std::size_t g = 0; g < M.vars.size(); ++g)
                q.vars.push_back(estimate_variable(M.vars[g], M.m[g].cast<cplx>(), psi, cfg));
            finish(q, r);
            out.push_back(std::move(q));
        }
        return out;
    }
    if (cfg.route != "macaulay") throw std::invalid_argument("qpe_pipeline: unknown route " + cfg.route);

    macaulay::SolveConfig sc;
    sc.policy = cfg.policy;
    const auto mm = macaulay::build(gens, cfg.degree);
    const auto res = macaulay::solve(gens, mm, sc);
    if (!res.admissible || res.records.empty())
        throw std::runtime_error("qpe_pipeline: degree " + std::to_string(cfg.degree) + " yields no roots");

    // projection circuit on a seeded random start, against the exact SVD projection
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> nd;
    VectorXcd start(mm.ncols());
    for (auto& z : start) z = nd(rng);
    Eigen::MatrixXd md = mm.dense();
    for (Eigen::Index i = 0; i < md.rows(); ++i)
        if (const double nr = md.row(i).norm(); nr > 0) md.row(i) /= nr;
    const auto proj = nullspace_projection(md, Statevector::from(start), cfg.repetitions);
    const auto ns = macaulay::nullspace(mm, 1e-4, true);
    const VectorXcd st = Statevector::from(start).amp.head(mm.ncols());
    VectorXcd exact = ns.z.cast<cplx>() * (ns.z.cast<cplx>().adjoint() * st);
    exact /= exact.norm();
    const double perr = (proj.state.amp.head(mm.ncols()) - exact).norm();

    for (std::size_t i = 0; i < res.records.size(); ++i) {
        if (!wanted(res.records[i].index)) continue;
        QpeRecord q;
        const VectorXcd& t = res.problem.t[i];
        for (std::size_t g = 0; g < vars.size(); ++g) {
            auto e = estimate_variable(vars[g], res.problem.w[g].cast<cplx>(), t, cfg);
            e.value *= res.problem.scales[g];
            q.vars.push_back(std::move(e));
        }
        q.projection_error = perr;
        finish(q, res.records[i]);
        out.push_back(std::move(q));
    }
    return out;
}

std::string qpe_to_json(const std::vector<QpeRecord>& rs, int indent) {
    using nlohmann::json;
    auto cj = [](cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; };
    auto bits = [](const std::vector<int>& b) {
        std::string s;
        for (int x : b) s += char('0' + x);
        return s;
    };
    json arr = json::array();
    for (const auto& q : rs) {
        json j;
        j["index"] = q.record.index;
        for (const auto& e : q.vars) {
            json v{{"estimate", cj(e.value)}, {"classical", cj(q.classical.value(e.var))}, {"time", e.time},
                   {"bits", bits(e.coarse.bits)}, {"magnitude", e.coarse.magnitude}};
            if (!e.fine.bits.empty()) v["fine_bits"] = bits(e.fine.bits);
            double g = 1;
            for (double x : e.coarse.gaps) g = std::min(g, x);
            v["min_gap"] = g;
            j[e.var] = std::move(v);
        }
        j["energy"] = cj(q.record.energy);
        j["kind"] = q.record.real ? "real" : "complex";
        j["valid"] = q.record.valid;
        j["residual"] = q.record.residual;
        if (q.projection_error >= 0) j["projection_error"] = q.projection_error;
        arr.push_back(std::move(j));
    }
    return arr.dump(indent);
}

}  // namespace molpoly::qemu
