#include "molpoly/solution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace molpoly {

cplx SolutionRecord::value(const std::string& var) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == var) return values[i];
    throw std::invalid_argument("no variable '" + var + "' in record");
}

bool is_real_point(const std::vector<cplx>& v, double rel_tol) {
    double big = 0, im = 0;
    for (const auto& z : v) {
        big = std::max(big, std::abs(z));
        im = std::max(im, std::abs(z.imag()));
    }
    return im <= rel_tol * std::max(big, 1e-300);
}

double relative_residual(const std::vector<Polynomial>& gens, const std::vector<cplx>& point) {
    double worst = 0;
    for (const auto& g : gens) {
        const double scale = g.is_zero() ? 1.0 : g.max_abs_coeff().get_d();
        const double r = std::abs(g.evaluate(point)) / scale;
        if (!std::isfinite(r)) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, r);
    }
    return worst;
}

void finish_record(SolutionRecord& r, const std::vector<Polynomial>& gens, const RecordPolicy& p) {
    r.real = is_real_point(r.values, p.real_tol);
    // without the window variable every root is in range
    r.valid = std::find(r.vars.begin(), r.vars.end(), p.window_var) == r.vars.end();
    for (std::size_t i = 0; i < r.vars.size(); ++i)
        if (r.vars[i] == p.window_var) r.valid = std::abs(r.values[i].real() - p.center) <= p.window;
    if (p.objective) {
        std::vector<cplx> pt(p.objective->nvars());
        for (std::size_t i = 0; i < pt.size(); ++i) pt[i] = r.value(p.objective->vars()[i]);
        r.energy = p.objective->evaluate(pt) / p.energy_scale;
    }
    r.residual = gens.empty() ? 0.0 : relative_residual(gens, r.values);
}

std::vector<std::vector<cplx>> orbit(const std::vector<cplx>& p, int flip_var) {
    std::vector<std::vector<cplx>> out{p};
    std::vector<cplx> c(p.size());
    std::transform(p.begin(), p.end(), c.begin(), [](cplx z) { return std::conj(z); });
    out.push_back(c);
    if (flip_var >= 0) {
        auto a = p, b = c;
        a[flip_var] = -a[flip_var];
        b[flip_var] = -b[flip_var];
        out.push_back(a);
        out.push_back(b);
    }
    return out;
}

static double point_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max({d, std::abs(a[i].real() - b[i].real()), std::abs(a[i].imag() - b[i].imag())});
    return d;
}

double multiset_distance(const std::vector<std::vector<cplx>>& a, const std::vector<std::vector<cplx>>& b,
                         int flip_var) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    const std::size_t n = a.size();
    std::vector<std::vector<double>> d(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& g : orbit(a[i], flip_var)) best = std::min(best, point_distance(g, b[j]));
            d[i][j] = best;
        }
    // repeatedly commit the globally closest remaining pair
    std::vector<bool> ua(n), ub(n);
    double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (!ua[i])
                for (std::size_t j = 0; j < n; ++j)
                    if (!ub[j] && d[i][j] < best) best = d[i][j], bi = i, bj = j;
        ua[bi] = ub[bj] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

std::vector<std::vector<cplx>> canonical_sort(std::vector<std::vector<cplx>> pts, int xi, int ei, int ri) {
    auto key = [&](const std::vector<cplx>& p) {
        return std::make_tuple(p[ei].real(), p[ri].real(), std::abs(p[xi]), p[ei].imag());
    };
    std::stable_sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    return pts;
}

std::string records_to_json(const std::vector<SolutionRecord>& rs, int indent) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) {
        nlohmann::json j;
        j["index"] = r.index;
        for (std::size_t i = 0; i < r.vars.size(); ++i) j[r.vars[i]] = {{"re", r.values[i].real()}, {"im", r.values[i].imag()}};
        j["energy"] = {{"re", r.energy.real()}, {"im", r.energy.imag()}};
        j["kind"] = r.real ? "real" : "complex";
        j["valid"] = r.valid;
        j["residual"] = r.residual;
        arr.push_back(std::move(j));
    }
    return arr.dump(indent);
}

static std::string fmt_c(cplx z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%11.6f%+.6fj", z.real(), z.imag());
    return buf;
}

std::string records_to_table(const std::vector<SolutionRecord>& rs) {
    std::ostringstream out;
    if (rs.empty()) return "(no solutions)\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-4s", "i");
    out << buf;
    for (const auto& v : rs.front().vars) {
        std::snprintf(buf, sizeof buf, " %23s", v.c_str());
        out << buf;
    }
    std::snprintf(buf, sizeof buf, " %23s %8s %6s %10s\n", "E_TOTAL", "type", "valid", "residual");
    out << buf;
    for (const auto& r : rs) {
        std::snprintf(buf, sizeof buf, "%-4d", r.index);
        out << buf;
        for (const auto& z : r.values) out << " " << fmt_c(z);
        out << " " << fmt_c(r.energy);
        std::snprintf(buf, sizeof buf, " %8s %6s %10.2e\n", r.real ? "real" : "complex", r.valid ? "yes" : "no",
                      r.residual);
        out << buf;
    }
    return out.str();
}

std::string records_to_csv(const std::vector<SolutionRecord>& rs) {
    std::ostringstream out;
    out.precision(12);
    out << "index";
    if (!rs.empty())
        for (const auto& v : rs.front().vars) out << "," << v << "_re," << v << "_im";
    out << ",energy_re,energy_im,kind,valid,residual\n";
    for (const auto& r : rs) {
        out << r.index;
        for (const auto& z : r.values) out << "," << z.real() << "," << z.imag();
        out << "," << r.energy.real() << "," << r.energy.imag() << "," << (r.real ? "real" : "complex") << ","
            << (r.valid ? "true" : "false") << "," << r.residual << "\n";
    }
    return out.str();
}

}  // namespace molpoly
