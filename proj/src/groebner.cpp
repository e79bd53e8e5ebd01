#include "molpoly/groebner.hpp"

#include <algorithm>
#include <map>

#include "molpoly/spectra.hpp"

namespace molpoly::groebner {

namespace {

struct Desc {
    const MonomialOrder* o;
    bool operator()(const Monomial& a, const Monomial& b) const { return o->compare(a, b) > 0; }
};

using Work = std::map<Monomial, Rational, Desc>;

// Polynomial as terms sorted descending; front() is the leading term.
struct Sorted {
    std::vector<std::pair<Monomial, Rational>> t;
    const Monomial& lm() const { return t.front().first; }
};

Sorted sorted(const Polynomial& p, const MonomialOrder& o) { return {p.sorted_terms(o)}; }

Sorted from_work(const Work& w) { return {{w.begin(), w.end()}}; }

void make_monic(Sorted& s) {
    const Rational lc = s.t.front().second;
    for (auto& [m, c] : s.t) c /= lc;
}

// w -= c * m * g, with g monic and m*lm(g) present in w
void subtract_multiple(Work& w, const Rational& c, const Monomial& m, const Sorted& g) {
    for (const auto& [gm, gc] : g.t) {
        Monomial t = gm * m;
        auto it = w.find(t);
        if (it == w.end()) {
            w.emplace(std::move(t), -c * gc);
        } else {
            it->second -= c * gc;
            if (it->second == 0) w.erase(it);
        }
    }
}

int find_divisor(const Monomial& m, const std::vector<Sorted>& G, const std::vector<bool>* alive = nullptr,
                 int skip = -1) {
    for (std::size_t k = 0; k < G.size(); ++k) {
        if (int(k) == skip || (alive && !(*alive)[k])) continue;
        if (G[k].lm().divides(m)) return int(k);
    }
    return -1;
}

// Full reduction; G monic.
Sorted reduce(Work w, const std::vector<Sorted>& G, const MonomialOrder& o, const std::vector<bool>* alive = nullptr,
              int skip = -1) {
    Work rem(Desc{&o});
    while (!w.empty()) {
        auto it = w.begin();
        const int k = find_divisor(it->first, G, alive, skip);
        if (k < 0) {
            rem.insert(rem.end(), *it);
            w.erase(it);
            continue;
        }
        const Rational c = it->second;
        const Monomial q = it->first.quotient(G[k].lm());
        subtract_multiple(w, c, q, G[k]);
    }
    return from_work(rem);
}

Work to_work(const Sorted& s, const MonomialOrder& o) {
    Work w(Desc{&o});
    for (const auto& t : s.t) w.insert(w.end(), t);
    return w;
}

Work spoly_work(const Sorted& f, const Sorted& g, const MonomialOrder& o) {
    const Monomial l = f.lm().lcm(g.lm());
    Work w(Desc{&o});
    const Monomial mf = l.quotient(f.lm()), mg = l.quotient(g.lm());
    const Rational cf = 1 / f.t.front().second, cg = 1 / g.t.front().second;
    for (const auto& [m, c] : f.t) w[m * mf] += c * cf;
    for (const auto& [m, c] : g.t) {
        auto& slot = w[m * mg];
        slot -= c * cg;
    }
    for (auto it = w.begin(); it != w.end();) it = it->second == 0 ? w.erase(it) : std::next(it);
    return w;
}

Polynomial to_poly(const Sorted& s, const std::vector<std::string>& vars) {
    Polynomial p(vars);
    for (const auto& [m, c] : s.t) p.add_term(m, c);
    return p;
}

}  // namespace

PolySystem::PolySystem(std::vector<Polynomial> g, MonomialOrder o) : gens(std::move(g)), order(std::move(o)) {
    if (gens.empty()) throw std::invalid_argument("empty polynomial system");
    vars = gens.front().vars();
    for (const auto& p : gens)
        if (p.vars() != vars) throw RingMismatch("system generators live in different rings");
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& o) {
    if (f.vars() != g.vars()) throw RingMismatch("s_polynomial: ring mismatch");
    Polynomial out(f.vars());
    for (const auto& [m, c] : spoly_work(sorted(f, o), sorted(g, o), o)) out.add_term(m, c);
    return out;
}

GroebnerBasis buchberger(const PolySystem& sys) {
    const MonomialOrder& o = sys.order;
    std::vector<Sorted> G;
    struct Pair {
        int i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;
    // pending[i][j]: pair (i,j) still queued
    std::vector<std::vector<bool>> pending;

    auto add = [&](Sorted h) {
        make_monic(h);
        const int n = int(G.size());
        G.push_back(std::move(h));
        for (auto& row : pending) row.push_back(false);
        pending.emplace_back(n + 1, false);
        for (int k = 0; k < n; ++k) {
            pairs.push_back({k, n, G[k].lm().lcm(G[n].lm())});
            pending[k][n] = pending[n][k] = true;
        }
    };

    for (const auto& f : sys.gens) {
        if (f.vars() != sys.vars) throw RingMismatch("buchberger: generator ring mismatch");
        if (f.is_zero()) continue;
        Sorted r = reduce(to_work(sorted(f, o), o), G, o);
        if (!r.t.empty()) add(std::move(r));
    }

    while (!pairs.empty()) {
        // normal selection: smallest lcm, ties by insertion order
        auto best = pairs.begin();
        for (auto it = std::next(best); it != pairs.end(); ++it)
            if (o.compare(it->lcm, best->lcm) < 0) best = it;
        const Pair p = *best;
        pairs.erase(best);
        pending[p.i][p.j] = pending[p.j][p.i] = false;

        if (G[p.i].lm().coprime(G[p.j].lm())) continue;
        bool chain = false;
        for (int k = 0; k < int(G.size()) && !chain; ++k) {
            if (k == p.i || k == p.j) continue;
            if (G[k].lm().divides(p.lcm) && !pending[p.i][k] && !pending[p.j][k]) chain = true;
        }
        if (chain) continue;

        Sorted h = reduce(spoly_work(G[p.i], G[p.j], o), G, o);
        if (!h.t.empty()) add(std::move(h));
    }

    // minimal, then fully inter-reduced
    std::vector<bool> alive(G.size(), true);
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = 0; j < G.size() && alive[i]; ++j)
            if (i != j && alive[j] && G[j].lm().divides(G[i].lm()) && (G[j].lm() != G[i].lm() || j < i))
                alive[i] = false;
    std::vector<Sorted> red;
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (!alive[i]) continue;
        Sorted r = reduce(to_work(G[i], o), G, o, &alive, int(i));
        make_monic(r);
        red.push_back(std::move(r));
    }
    std::sort(red.begin(), red.end(), [&](const Sorted& a, const Sorted& b) { return o.compare(a.lm(), b.lm()) < 0; });

    GroebnerBasis out{{}, sys.vars, o};
    for (const auto& s : red) out.g.push_back(to_poly(s, sys.vars));
    return out;
}

int QuotientBasis::index_of(const Monomial& m) const {
    auto it = std::find(b.begin(), b.end(), m);
    return it == b.end() ? -1 : int(it - b.begin());
}

QuotientBasis quotient_basis(const GroebnerBasis& G) {
    const std::size_t n = G.vars.size();
    std::vector<Monomial> lms;
    for (const auto& g : G.g) lms.push_back(g.leading_term(G.order).first);
    for (const auto& m : lms)
        if (m.degree() == 0) return {};  // unit ideal
    // bound per variable from pure-power leading terms
    std::vector<int> bound(n, -1);
    for (const auto& m : lms) {
        int nz = 0, v = -1;
        for (std::size_t k = 0; k < n; ++k)
            if (m[k]) ++nz, v = int(k);
        if (nz == 1 && (bound[v] < 0 || m[v] < bound[v])) bound[v] = m[v];
    }
    for (std::size_t k = 0; k < n; ++k)
        if (bound[k] < 0) throw PositiveDimensional("ideal is not zero-dimensional (no pure power of " + G.vars[k] + ")");

    QuotientBasis q;
    std::vector<int> e(n, 0);
    for (;;) {
        Monomial m(e);
        if (std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); })) q.b.push_back(m);
        std::size_t k = 0;
        while (k < n && ++e[k] >= bound[k]) e[k++] = 0;
        if (k == n) break;
    }
    std::sort(q.b.begin(), q.b.end(), [&](const Monomial& a, const Monomial& b) { return G.order.less(a, b); });
    return q;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) {
    if (p.vars() != G.vars) throw RingMismatch("normal_form: ring mismatch");
    std::vector<Sorted> gs;
    for (const auto& g : G.g) {
        gs.push_back(sorted(g, G.order));
        make_monic(gs.back());
    }
    Work w(Desc{&G.order});
    for (const auto& [m, c] : p.terms()) w.emplace(m, c);
    return to_poly(reduce(std::move(w), gs, G.order), G.vars);
}

const Eigen::MatrixXd& MultiplicationMatrixSet::operator[](const std::string& v) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == v) return m[i];
    throw std::invalid_argument("no multiplication matrix for '" + v + "'");
}

MultiplicationMatrixSet mult_matrices(const GroebnerBasis& G, const QuotientBasis& b) {
    const std::size_t N = b.dim(), n = G.vars.size();
    MultiplicationMatrixSet out{G.vars, {}, b};
    std::vector<Sorted> gs;
    for (const auto& g : G.g) gs.push_back(sorted(g, G.order));
    for (std::size_t v = 0; v < n; ++v) {
        Eigen::MatrixXd M = Eigen::MatrixXd::Zero(Eigen::Index(N), Eigen::Index(N));
        for (std::size_t j = 0; j < N; ++j) {
            Monomial m = b.b[j];
            ++m.exp[v];
            Work w(Desc{&G.order});
            w.emplace(m, 1);
            for (const auto& [t, c] : reduce(std::move(w), gs, G.order).t) {
                const int k = b.index_of(t);
                if (k < 0) throw std::logic_error("normal form left the quotient basis");
                M(Eigen::Index(j), k) = c.get_d();
            }
        }
        out.m.push_back(std::move(M));
    }
    return out;
}

std::vector<SolutionRecord> solve_system(const MultiplicationMatrixSet& M, const SolveOptions& opt) {
    const auto ed = spectra::eig(M[opt.pivot]);
    std::vector<SolutionRecord> out;
    for (Eigen::Index j = 0; j < ed.vectors.cols(); ++j) {
        Eigen::VectorXcd u = ed.vectors.col(j);
        SolutionRecord r;
        r.index = int(j);
        r.vars = M.vars;
        if (opt.expectation == Expectation::Hermitian) {
            const cplx nn = u.squaredNorm();
            for (const auto& mv : M.m) r.values.push_back(u.dot(mv.cast<cplx>() * u) / nn);
        } else {
            u = spectra::unit_phase_normalized(u);
            for (const auto& mv : M.m) r.values.push_back(u.transpose() * (mv.cast<cplx>() * u));
        }
        finish_record(r, opt.generators, opt.policy);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<double> residuals(const PolySystem& sys, const std::vector<SolutionRecord>& records) {
    std::vector<double> out;
    for (const auto& r : records) {
        std::vector<cplx> pt;
        for (const auto& v : sys.vars) pt.push_back(r.value(v));
        double worst = 0;
        for (const auto& g : sys.gens) worst = std::max(worst, std::abs(g.evaluate(pt)));
        out.push_back(worst);
    }
    return out;
}

}  // namespace molpoly::groebner
