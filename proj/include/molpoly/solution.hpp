#pragma once

#include <optional>
#include <string>
#include <vector>

#include "molpoly/polyring.hpp"

namespace molpoly {

struct SolutionRecord {
    int index = 0;
    std::vector<std::string> vars;
    std::vector<cplx> values;  // one per variable
    cplx energy{0, 0};
    bool real = false;
    bool valid = false;
    double residual = 0;  // max_k |f_k(root)| / max|coef f_k|

    cplx value(const std::string& var) const;
};

// Settings shared by every route that turns eigenpairs into records.
struct RecordPolicy {
    double real_tol = 1e-6;  // relative to the largest component magnitude
    std::string window_var = "R";
    double center = 1.8;
    double window = 1.2;
    std::optional<Polynomial> objective;  // energy = objective(root) / energy_scale
    double energy_scale = 1e8;
};

bool is_real_point(const std::vector<cplx>& v, double rel_tol);

// Fills kind, validity, energy and residual against the generators.
void finish_record(SolutionRecord& r, const std::vector<Polynomial>& gens, const RecordPolicy& p);

// max_k |f_k(point)| / max|coef f_k|
double relative_residual(const std::vector<Polynomial>& gens, const std::vector<cplx>& point);

// Symmetry images used when comparing root sets: sign of `flip_var` and complex conjugation.
std::vector<std::vector<cplx>> orbit(const std::vector<cplx>& p, int flip_var);

// Greedy one-to-one matching of two point multisets modulo orbit(); returns the worst
// per-component deviation, or +inf if sizes differ.
double multiset_distance(const std::vector<std::vector<cplx>>& a, const std::vector<std::vector<cplx>>& b,
                         int flip_var = -1);

// Points sorted by (Re e, Re R, |x|, Im e) with the given indices; for display.
std::vector<std::vector<cplx>> canonical_sort(std::vector<std::vector<cplx>> pts, int xi, int ei, int ri);

std::string records_to_json(const std::vector<SolutionRecord>& rs, int indent = 2);
std::string records_to_table(const std::vector<SolutionRecord>& rs);
std::string records_to_csv(const std::vector<SolutionRecord>& rs);

}  // namespace molpoly
