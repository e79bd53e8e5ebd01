#include "molpoly/macaulay.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <cmath>
#include <ostream>
#include <sstream>

#include "molpoly/spectra.hpp"

namespace molpoly::macaulay {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

std::vector<Monomial> column_monomials(int nvars, int d) {
    std::vector<Monomial> out;
    for (int t = 0; t <= d; ++t) {
        std::vector<Monomial> deg;
        std::vector<int> e(nvars, 0);
        // all compositions of t, generated in descending lex order
        std::function<void(int, int)> rec = [&](int k, int left) {
            if (k == nvars - 1) {
                e[k] = left;
                deg.emplace_back(e);
                return;
            }
            for (int a = left; a >= 0; --a) {
                e[k] = a;
                rec(k + 1, left - a);
            }
        };
        if (nvars == 0) {
            if (t == 0) out.emplace_back(std::vector<int>{});
            continue;
        }
        rec(0, t);
        out.insert(out.end(), deg.begin(), deg.end());
    }
    return out;
}

int MacaulayMatrix::col_index(const Monomial& mono) const {
    auto it = index.find(mono);
    return it == index.end() ? -1 : it->second;
}

static long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::pair<long, long> dims(const std::vector<int>& degrees, int n, int d) {
    long r = 0;
    for (int di : degrees)
        if (di <= d) r += binom(d - di + n, n);
    return {r, binom(d + n, n)};
}

MacaulayMatrix build(const std::vector<Polynomial>& gens, int d) {
    if (gens.empty()) throw std::invalid_argument("macaulay build: empty system");
    MacaulayMatrix M;
    M.d = d;
    M.vars = gens.front().vars();
    const int n = int(M.vars.size());
    int maxdeg = 0;
    for (const auto& g : gens) {
        if (g.vars() != M.vars) throw RingMismatch("macaulay build: generators in different rings");
        maxdeg = std::max(maxdeg, g.total_degree());
    }
    if (d < maxdeg) throw std::invalid_argument("macaulay build: d below the largest generator degree");
    M.cols = column_monomials(n, d);
    for (std::size_t i = 0; i < M.cols.size(); ++i) M.index.emplace(M.cols[i], int(i));

    std::vector<Eigen::Triplet<double>> trip;
    int row = 0;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const auto& g = gens[gi];
        for (const auto& mult : column_monomials(n, d - g.total_degree())) {
            for (const auto& [m, c] : g.terms()) trip.emplace_back(row, M.index.at(m * mult), c.get_d());
            M.rows.push_back({int(gi), mult});
            ++row;
        }
    }
    M.m.resize(row, Eigen::Index(M.cols.size()));
    M.m.setFromTriplets(trip.begin(), trip.end());
    M.m.makeCompressed();
    return M;
}

NullSpaceBasis nullspace(const MatrixXd& M, double threshold, bool with_basis) {
    NullSpaceBasis out;
    out.threshold = threshold;
    auto r = spectra::right_svd(M, !with_basis);
    out.sv = r.s;
    out.rank = spectra::numerical_rank(r.s, threshold);
    out.nullity = int(M.cols()) - out.rank;
    if (with_basis) out.z = spectra::null_space_from(r, std::size_t(M.cols()), threshold);
    return out;
}

NullSpaceBasis nullspace(const MacaulayMatrix& M, double threshold, bool with_basis) {
    return nullspace(M.dense(), threshold, with_basis);
}

ShiftMatrixSet shift_matrices(int n, int d) {
    if (d < 1) throw std::invalid_argument("shift_matrices: d must be >= 1");
    ShiftMatrixSet S;
    const auto cols = column_monomials(n, d);
    std::map<Monomial, int> idx;
    for (std::size_t i = 0; i < cols.size(); ++i) idx.emplace(cols[i], int(i));
    S.base = column_monomials(n, d - 1);
    const auto nb = Eigen::Index(S.base.size()), nc = Eigen::Index(cols.size());
    auto make = [&](int g) {
        std::vector<Eigen::Triplet<double>> t;
        for (std::size_t i = 0; i < S.base.size(); ++i) {
            Monomial m = S.base[i];
            if (g >= 0) ++m.exp[g];
            t.emplace_back(int(i), idx.at(m), 1.0);
        }
        SparseRM s(nb, nc);
        s.setFromTriplets(t.begin(), t.end());
        return s;
    };
    S.s1 = make(-1);
    for (int g = 0; g < n; ++g) S.sg.push_back(make(g));
    return S;
}

std::vector<double> balance_scales(const std::vector<Polynomial>& gens) {
    const int n = int(gens.front().nvars()), ng = int(gens.size());
    std::vector<std::pair<std::vector<double>, double>> eqs;
    for (int i = 0; i < ng; ++i)
        for (const auto& [m, c] : gens[i].terms()) {
            std::vector<double> row(n + ng, 0.0);
            for (int v = 0; v < n; ++v) row[v] = m[v];
            row[n + i] = 1.0;
            eqs.emplace_back(row, -std::log(std::abs(c.get_d())));
        }
    MatrixXd A(Eigen::Index(eqs.size()), n + ng);
    VectorXd b(Eigen::Index(eqs.size()));
    for (std::size_t k = 0; k < eqs.size(); ++k) {
        for (int j = 0; j < n + ng; ++j) A(Eigen::Index(k), j) = eqs[k].first[j];
        b(Eigen::Index(k)) = eqs[k].second;
    }
    const VectorXd sol = A.completeOrthogonalDecomposition().solve(b);
    std::vector<double> s(n);
    for (int v = 0; v < n; ++v) s[v] = std::exp(sol(v));
    return s;
}

namespace {

struct Layout {
    const std::map<Monomial, int>* idx;
    int n;
};

// Rows of `basis` at m * x_g (g < 0: m itself) for m in B, weighted sum over g when several.
MatrixXd select(const MatrixXd& basis, const Layout& L, const std::vector<Monomial>& B,
                const std::vector<double>& w) {
    MatrixXd out = MatrixXd::Zero(Eigen::Index(B.size()), basis.cols());
    for (std::size_t i = 0; i < B.size(); ++i)
        for (int g = 0; g < L.n; ++g) {
            if (w[g] == 0) continue;
            Monomial m = B[i];
            ++m.exp[g];
            out.row(Eigen::Index(i)) += w[g] * basis.row(L.idx->at(m));
        }
    return out;
}

MatrixXd select_one(const MatrixXd& basis, const Layout& L, const std::vector<Monomial>& B) {
    MatrixXd out(Eigen::Index(B.size()), basis.cols());
    for (std::size_t i = 0; i < B.size(); ++i) out.row(Eigen::Index(i)) = basis.row(L.idx->at(B[i]));
    return out;
}

std::vector<double> unit(int n, int g) {
    std::vector<double> w(n, 0.0);
    w[g] = 1.0;
    return w;
}

std::vector<Monomial> up_to(const std::vector<Monomial>& cols, int deg) {
    std::vector<Monomial> out;
    for (const auto& m : cols)
        if (m.degree() <= deg) out.push_back(m);
    return out;
}

int rank_of(const MatrixXd& a, double rel) {
    if (a.size() == 0) return 0;
    const VectorXd sv = spectra::singular_values(a);
    if (sv.size() == 0 || sv(0) == 0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > rel * sv(0)) ++r;
    return r;
}

struct Attempt {
    std::vector<SolutionRecord> records;
    Eigenproblem problem;
};

// Solve the pencil (A, P) with A = S_1 basis, P = S_c basis over base set B and keep affine roots.
Attempt extract(const std::vector<Polynomial>& gens, const MatrixXd& basis, const std::vector<Monomial>& rows,
                const Layout& L, const std::vector<Monomial>& B, const std::vector<double>& weights,
                const std::vector<double>& scales, const SolveConfig& cfg) {
    Attempt out;
    const MatrixXd A = select_one(basis, L, B);
    const MatrixXd P = select(basis, L, B, weights);
    const MatrixXd Ainv = spectra::pinv(A, 1e-10);
    const auto ed = spectra::eig(MatrixXd(Ainv * P));
    const Monomial one = Monomial::one(std::size_t(L.n));
    const int i1 = L.idx->at(one);
    for (Eigen::Index j = 0; j < ed.values.size(); ++j) {
        const VectorXcd t = ed.vectors.col(j);
        const cplx lam = ed.values(j);
        VectorXcd v = basis.cast<cplx>() * t;
        // a point at infinity has v_1 = 0 with nonzero linear entries
        double lin = std::norm(v(i1));
        for (int g = 0; g < L.n; ++g) {
            Monomial m = one;
            ++m.exp[g];
            lin += std::norm(v(L.idx->at(m)));
        }
        if (std::abs(v(i1)) < cfg.infinity_tol * std::sqrt(lin)) continue;
        const VectorXcd Pt = P.cast<cplx>() * t;
        const double rel = (A.cast<cplx>() * t * lam - Pt).norm();
        if (rel > cfg.relation_tol * std::max(Pt.norm(), 1e-300)) continue;
        v /= v(i1);
        SolutionRecord r;
        r.vars = gens.front().vars();
        for (int g = 0; g < L.n; ++g) {
            Monomial m = one;
            ++m.exp[g];
            r.values.push_back(v(L.idx->at(m)) * scales[g]);
        }
        finish_record(r, gens, cfg.policy);
        if (!(r.residual <= cfg.residual_tol)) continue;
        r.index = int(out.records.size());
        out.records.push_back(std::move(r));
        out.problem.t.push_back(t);
    }
    out.problem.basis = basis;
    out.problem.rows = rows;
    out.problem.scales = scales;
    // Per-variable operators on B. Where a shift row disagrees with the accepted roots (extra null vectors
    // can leak into high-degree rows after deflation), rebuild W_g from all basis rows that agree.
    auto deviation = [&](const MatrixXd& W, int g) {
        double dev = 0;
        for (std::size_t i = 0; i < out.records.size(); ++i) {
            const VectorXcd& ti = out.problem.t[i];
            const cplx xg = out.records[i].values[std::size_t(g)] / scales[g];
            dev = std::max(dev, (W.cast<cplx>() * ti - xg * ti).norm() / ti.norm() / std::max(1.0, std::abs(xg)));
        }
        return dev;
    };
    for (int g = 0; g < L.n; ++g) {
        MatrixXd W = Ainv * select(basis, L, B, unit(L.n, g));
        if (deviation(W, g) > cfg.relation_tol) {
            int rtop = 0;
            for (const auto& m : rows) rtop = std::max(rtop, m.degree());
            std::vector<Monomial> good;
            for (const auto& m : rows) {
                if (m.degree() >= rtop) continue;
                Monomial s = m;
                ++s.exp[g];
                bool ok = true;
                for (std::size_t i = 0; ok && i < out.records.size(); ++i) {
                    const VectorXcd vi = basis.cast<cplx>() * out.problem.t[i];
                    const cplx xg = out.records[i].values[std::size_t(g)] / scales[g];
                    ok = std::abs(vi(L.idx->at(s)) - xg * vi(L.idx->at(m))) <=
                         cfg.relation_tol * vi.norm() * std::max(1.0, std::abs(xg));
                }
                if (ok) good.push_back(m);
            }
            const MatrixXd Ag = select_one(basis, L, good);
            if (!good.empty() && rank_of(Ag, 1e-10) == basis.cols()) {
                const MatrixXd Wg = spectra::pinv(Ag, 1e-10) * select(basis, L, good, unit(L.n, g));
                if (deviation(Wg, g) <= deviation(W, g)) W = Wg;
            }
        }
        out.problem.w.push_back(std::move(W));
    }
    return out;
}

}  // namespace

MacaulayResult solve(const std::vector<Polynomial>& gens, int d, const SolveConfig& cfg) {
    return solve(gens, build(gens, d), cfg);
}

MacaulayResult solve(const std::vector<Polynomial>& gens, const MacaulayMatrix& M, const SolveConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    MacaulayResult res;
    res.d = M.d;
    const int n = int(M.vars.size());
    std::vector<double> w = cfg.pivot_weights;
    if (w.empty()) {
        const double base[] = {0.57, 0.31, 0.12, 0.07, 0.05, 0.03};
        for (int g = 0; g < n; ++g) w.push_back(g < 6 ? base[g] : 1.0 / (g + 2));
    }
    if (int(w.size()) != n) throw std::invalid_argument("macaulay solve: one pivot weight per variable");
    res.scales = cfg.balance ? balance_scales(gens) : std::vector<double>(n, 1.0);

    MatrixXd Mb = M.dense();
    for (Eigen::Index j = 0; j < Mb.cols(); ++j) {
        double s = 1;
        for (int g = 0; g < n; ++g) s *= std::pow(res.scales[g], M.cols[j][g]);
        Mb.col(j) *= s;
    }
    for (Eigen::Index i = 0; i < Mb.rows(); ++i) {
        const double nr = Mb.row(i).norm();
        if (nr > 0) Mb.row(i) /= nr;
    }
    MatrixXd Z;
    {
        auto r = spectra::right_svd(Mb);
        Mb.resize(0, 0);
        const double cut = cfg.null_rel_cutoff * (r.s.size() ? r.s(0) : 0.0);
        Z = spectra::null_space_from(r, M.cols.size(), cut);
    }
    res.nullity = int(Z.cols());
    const Layout L{&M.index, n};

    auto finish = [&](Attempt&& a, std::string method) {
        res.records = std::move(a.records);
        res.problem = std::move(a.problem);
        res.method = std::move(method);
        res.admissible = !res.records.empty();
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return res;
    };

    // rank profile of the null space rows by degree
    res.profile.assign(M.d + 1, 0);
    for (int delta = 0; delta <= M.d; ++delta) {
        const auto len = Eigen::Index(dims({}, n, delta).second);
        res.profile[delta] = rank_of(Z.topRows(len), cfg.profile_rel_tol);
    }
    for (int delta = 1; delta <= M.d; ++delta)
        if (res.profile[delta] == res.profile[delta - 1]) res.gap = delta;

    if (res.gap >= 1 && res.profile[res.gap] > 0) {
        res.m_a = res.profile[res.gap];
        const auto len = Eigen::Index(dims({}, n, res.gap).second);
        const MatrixXd top = Z.topRows(len);
        const MatrixXd W11 = top * spectra::svd(top).v.leftCols(res.m_a);
        auto a = extract(gens, W11, up_to(M.cols, res.gap), L, up_to(M.cols, res.gap - 1), w, res.scales, cfg);
        if (!a.records.empty()) return finish(std::move(a), "gap-zone");
    }

    // deflate the pencil onto the row space of [S_1 Z; S_c Z] and look for a regular one
    const std::vector<std::vector<double>> combos = [&] {
        std::vector<std::vector<double>> c{w};
        if (n == 3) {
            c.push_back({w[0], w[1], 0});
            c.push_back({w[0], 0, w[1]});
            c.push_back({0, w[0], w[1]});
        }
        return c;
    }();
    for (int b = M.d - 1; b >= 1; --b) {
        const auto B = up_to(M.cols, b);
        for (const auto& c : combos) {
            const MatrixXd A = select_one(Z, L, B), P = select(Z, L, B, c);
            MatrixXd st(A.rows() + P.rows(), Z.cols());
            st << A, P;
            const auto s = spectra::svd(st);
            const auto& sv = s.s;
            if (sv.size() == 0 || sv(0) == 0) continue;
            int r = 0;
            for (Eigen::Index i = 0; i < sv.size(); ++i)
                if (sv(i) > 1e-8 * sv(0)) ++r;
            const MatrixXd N = s.v.leftCols(r);
            const MatrixXd A2 = A * N;
            if (rank_of(A2, 1e-8) < r) continue;
            auto a = extract(gens, MatrixXd(Z * N), M.cols, L, B, c, res.scales, cfg);
            if (!a.records.empty()) return finish(std::move(a), "deflation");
        }
    }

    auto a = extract(gens, Z, M.cols, L, up_to(M.cols, M.d - 1), w, res.scales, cfg);
    const char* method = a.records.empty() ? "none" : "plain";
    return finish(std::move(a), method);
}

const SolutionRecord* SweepRow::best() const {
    const SolutionRecord* b = nullptr;
    for (const auto& r : result.records) {
        if (!r.real || !r.valid) continue;
        if (!b || r.energy.real() < b->energy.real()) b = &r;
    }
    return b;
}

std::vector<SweepRow> degree_sweep(const std::vector<Polynomial>& gens, const std::vector<int>& ds,
                                   const SweepConfig& cfg) {
    std::vector<SweepRow> out;
    for (int d : ds) {
        SweepRow row;
        row.d = d;
        const auto M = build(gens, d);
        row.rows = M.nrows();
        row.cols = M.ncols();
        row.nnz = M.nnz();
        {
            const auto ns = nullspace(M, cfg.threshold, false);
            row.rank = ns.rank;
            row.nullity = ns.nullity;
        }
        if (cfg.solve) row.result = solve(gens, M, cfg.solve_cfg);
        row.result.d = d;
        out.push_back(std::move(row));
    }
    return out;
}

std::string sweep_table_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "d,rows,cols,nonzeros,cells,rank,nullity\n";
    for (const auto& r : rows)
        out << r.d << "," << r.rows << "," << r.cols << "," << r.nnz << "," << r.rows * r.cols << "," << r.rank
            << "," << r.nullity << "\n";
    return out.str();
}

std::string sweep_roots_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out.precision(9);
    bool header = false;
    for (const auto& r : rows) {
        if (!header && !r.result.records.empty()) {
            out << "d,method,index";
            for (const auto& v : r.result.records.front().vars) out << "," << v;
            out << ",energy,valid,residual\n";
            header = true;
        }
    }
    if (!header) out << "d,method,index\n";
    for (const auto& r : rows) {
        if (r.result.records.empty()) {
            out << r.d << "," << r.result.method << ",\n";
            continue;
        }
        for (const auto& s : r.result.records) {
            if (!s.real) continue;
            out << r.d << "," << r.result.method << "," << s.index;
            for (const auto& z : s.values) out << "," << z.real();
            out << "," << s.energy.real() << "," << (s.valid ? "true" : "false") << "," << s.residual << "\n";
        }
    }
    return out.str();
}

void write_triplets(const MacaulayMatrix& M, std::ostream& out) {
    out.precision(17);
    for (Eigen::Index i = 0; i < M.m.outerSize(); ++i)
        for (SparseRM::InnerIterator it(M.m, i); it; ++it) out << it.row() << " " << it.col() << " " << it.value() << "\n";
}

}  // namespace molpoly::macaulay
