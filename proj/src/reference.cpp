#include "molpoly/reference.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace molpoly::reference {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) out.push_back(cell);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l))
        if (!l.empty()) out.push_back(l);
    return out;
}

const char* const kT1 = R"(i,x,e,R,E,type
0,-0.0000+0.2451j,25.1507+0.0000j,-4.4726-0.0000j,170.3683+0.0000j,complex
1,-0.0000-0.2451j,25.1507-0.0000j,-4.4726+0.0000j,170.3683-0.0000j,complex
2,0.6014+0.0000j,-1.8051+0.0000j,-3.8703+0.0000j,8.1743+0.0000j,real
3,-0.6014+0.0000j,-1.8051+0.0000j,-3.8703+0.0000j,8.1743+0.0000j,real
4,0.3703+0.0000j,-11.7442+0.0000j,-3.1022+0.0000j,21.7662+0.0000j,real
5,-0.3703+0.0000j,-11.7442+0.0000j,-3.1022+0.0000j,21.7662+0.0000j,real
6,0.1137+0.1795j,-0.6013-1.1800j,0.1264-1.6890j,0.9417+3.7454j,complex
7,0.1137-0.1795j,-0.6013+1.1800j,0.1264+1.6890j,0.9417-3.7454j,complex
8,-0.1137-0.1795j,-0.6013-1.1800j,0.1264-1.6890j,0.9417+3.7454j,complex
9,-0.1137+0.1795j,-0.6013+1.1800j,0.1264+1.6890j,0.9417-3.7454j,complex
10,0.4050+0.0000j,-1.1482+0.0000j,1.8272+0.0000j,-1.2469+0.0000j,real
11,-0.4050+0.0000j,-1.1482+0.0000j,1.8272+0.0000j,-1.2469+0.0000j,real
12,-0.4580+0.0000j,-0.8673+0.0000j,2.6811+0.0000j,-1.1895+0.0000j,real
13,0.4580+0.0000j,-0.8673+0.0000j,2.6811+0.0000j,-1.1895+0.0000j,real
14,-0.4790-0.0187j,-0.9176-0.5313j,2.8486-0.6587j,-1.2421+0.0174j,complex
15,-0.4790+0.0187j,-0.9176+0.5313j,2.8486+0.6587j,-1.2421-0.0174j,complex
16,0.4790+0.0187j,-0.9176-0.5313j,2.8486-0.6587j,-1.2421+0.0174j,complex
17,0.4790-0.0187j,-0.9176+0.5313j,2.8486+0.6587j,-1.2421-0.0174j,complex
18,-0.1775-0.3575j,-0.5221+0.8834j,2.9857-0.4501j,1.6144+2.1018j,complex
19,-0.1775+0.3575j,-0.5221-0.8834j,2.9857+0.4501j,1.6144-2.1018j,complex
20,0.1775+0.3575j,-0.5221+0.8834j,2.9857-0.4501j,1.6144+2.1018j,complex
21,0.1775-0.3575j,-0.5221-0.8834j,2.9857+0.4501j,1.6144-2.1018j,complex
)";

const char* const kT2 = R"(op,residual
m_x,1.938105e-24
m_e,7.236860e-22
m_r,2.597125e-22
exp(-i m_x),1.800854e-24
exp(-i m_e),3.391753e-21
exp(-i m_r),3.794574e-21
)";

const char* const kT4 = R"(op,ket10,ket11
m_x,0.4050-0.0000j,-0.4050+0.0000j
m_e,-1.1482-0.0000j,-1.1482-0.0000j
m_r,1.8272-0.0000j,1.8272-0.0000j
exp(-i m_x),0.9191-0.3940j,0.9191+0.3940j
exp(-i m_e),0.4102+0.9120j,0.4102+0.9120j
exp(-i m_r),-0.2536-0.9673j,-0.2536-0.9673j
)";

const char* const kT5 = R"(d,rows,cols,nnz,rank,nullity
2,3,10,7,3,7
3,12,20,28,12,8
4,30,35,70,27,8
8,252,165,588,157,8
10,495,286,1155,278,8
)";

const char* const kT6 = R"(d,x1,y1,e1,x2,y2,e2
3,0.707107,-0.707107,1.000000,0.707107,0.707107,-1.000000
4,0.707107,-0.707107,1.000000,0.707107,0.707107,-1.000000
8,0.707107,-0.707107,1.000000,0.707107,0.707107,-1.000000
10,0.707107,-0.707107,1.000000,0.707107,0.707107,-1.000000
)";

const char* const kT7 = R"(d,rows,cols,nnz,rank,nullity
6,6,84,44,6,78
8,40,165,340,40,125
10,126,286,1120,126,160
12,288,455,2616,275,180
16,936,969,8684,749,220
20,2176,1771,20400,1511,260
30,9126,5456,86580,5096,360
)";

const char* const kT8 = R"(d,x,e,R
10,0.388666,-1.204776,1.613305
12,0.398934,-1.173845,1.743218
16,0.403710,-1.154682,1.807660
20,0.404719,-1.149509,1.823148
30,0.404978,-1.148190,1.827109
)";

const char* const kObj =
    "-25940329*R**3*e*x**2 - 61451313*R**3*x**4 + 65640150*R**3*x**2 - 28577961*R**3 + 81961639*R**2*e*x**2 + "
    "1099859207*R**2*x**4 - 811868595*R**2*x**2 + 205761316*R**2 + 342231572*R*e*x**2 - 5233649558*R*x**4 + "
    "3595948148*R*x**2 - 555555556*R - 1960143305*e*x**2 + 200000000*e + 8467967598*x**4 - 6382868964*x**2 + "
    "666666666";

}  // namespace

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::vector<std::string> ReferenceTable::columns() const {
    const auto ls = lines(text);
    return ls.empty() ? std::vector<std::string>{} : split(ls.front(), ',');
}

std::vector<std::vector<std::string>> ReferenceTable::rows() const {
    std::vector<std::vector<std::string>> out;
    const auto ls = lines(text);
    for (std::size_t i = 1; i < ls.size(); ++i) out.push_back(split(ls[i], ','));
    return out;
}

bool ReferenceTable::intact() const { return fnv1a(text) == checksum; }

namespace {

std::vector<ReferenceTable>& registry() {
    static std::vector<ReferenceTable> t{
        {"T1", "H3+ solutions from multiplication matrices", kT1, {0, 1e-3, 1e-3, 1e-3, 1e-3, 0}, 0xaf302ddc012ba80full},
        {"T2", "block-encoding residuals", kT2, {0, 1e-10}, 0x24cba0384b74b1bbull},
        {"T4", "block-encoded expectations on the ground pair", kT4, {0, 1e-3, 1e-3}, 0x366ac30832a52b56ull},
        {"T5", "two-level Macaulay matrices", kT5, {0, 0, 0, 0, 1, 0}, 0x3784d0df91c228d8ull},
        {"T6", "two-level roots", kT6, {0, 1e-6, 1e-6, 1e-6, 1e-6, 1e-6, 1e-6}, 0xf2dca21be4c885e2ull},
        {"T7", "H3+ Macaulay matrices", kT7, {0, 0, 0, 0, 2, 2}, 0x1cf0920b53b02237ull},
        {"T8", "H3+ ground root by degree", kT8, {0, 1e-4, 1e-4, 1e-4}, 0x779be621fa699b8cull},
        {"OBJ", "objective polynomial", kObj, {1}, 0x9b9c811decebd722ull},
    };
    return t;
}

}  // namespace

const std::vector<ReferenceTable>& tables() { return registry(); }

void override_text(const std::string& id, std::string text) {
    for (auto& t : registry())
        if (t.id == id) {
            t.text = std::move(text);
            return;
        }
    throw std::invalid_argument("unknown reference table " + id);
}

const ReferenceTable& table(const std::string& id) {
    for (const auto& t : tables())
        if (t.id == id) return t;
    throw std::invalid_argument("unknown reference table " + id);
}

cplx parse_complex(const std::string& s_in) {
    std::string s;
    for (char c : s_in)
        if (c != ' ') s += c;
    static const std::regex re(R"(^([+-]?[0-9.]+(?:[eE][+-]?[0-9]+)?)(?:([+-][0-9.]+(?:[eE][+-]?[0-9]+)?)j)?$)");
    static const std::regex im_only(R"(^([+-]?[0-9.]+(?:[eE][+-]?[0-9]+)?)j$)");
    std::smatch m;
    if (std::regex_match(s, m, re)) return {std::stod(m[1]), m[2].matched ? std::stod(m[2]) : 0.0};
    if (std::regex_match(s, m, im_only)) return {0.0, std::stod(m[1])};
    throw std::invalid_argument("not a number: '" + s_in + "'");
}

std::vector<cplx> column(const ReferenceTable& t, const std::string& name) {
    const auto cols = t.columns();
    std::size_t k = cols.size();
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (cols[i] == name) k = i;
    if (k == cols.size()) throw std::invalid_argument("table " + t.id + " has no column " + name);
    std::vector<cplx> out;
    for (const auto& r : t.rows()) out.push_back(parse_complex(r.at(k)));
    return out;
}

std::string locate_diff(const std::string& expected, const std::string& actual) {
    const auto a = lines(expected), b = lines(actual);
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        if (i >= a.size()) return "line " + std::to_string(i + 1) + ": unexpected '" + b[i] + "'";
        if (i >= b.size()) return "line " + std::to_string(i + 1) + ": missing '" + a[i] + "'";
        if (a[i] == b[i]) continue;
        const auto x = split(a[i], ','), y = split(b[i], ',');
        const auto head = split(a.front(), ',');
        for (std::size_t j = 0; j < std::max(x.size(), y.size()); ++j) {
            const std::string u = j < x.size() ? x[j] : "", v = j < y.size() ? y[j] : "";
            if (u != v)
                return "line " + std::to_string(i + 1) + ", column " + (j < head.size() ? head[j] : std::to_string(j)) +
                       ": expected '" + u + "', found '" + v + "'";
        }
        return "line " + std::to_string(i + 1) + " differs";
    }
    return "";
}

std::vector<std::string> compare(const ReferenceTable& t, const std::vector<std::vector<std::string>>& actual) {
    std::vector<std::string> out;
    const auto cols = t.columns();
    if (!t.intact()) out.push_back(t.id + ": checksum mismatch");
    for (const auto& want : t.rows()) {
        const auto it = std::find_if(actual.begin(), actual.end(),
                                     [&](const auto& r) { return !r.empty() && r.front() == want.front(); });
        const std::string where = t.id + " row " + cols.front() + "=" + want.front();
        if (it == actual.end()) {
            out.push_back(where + ": missing");
            continue;
        }
        for (std::size_t j = 1; j < want.size(); ++j) {
            const std::string got = j < it->size() ? (*it)[j] : "";
            const double tol = j < t.tolerance.size() ? t.tolerance[j] : 0;
            bool ok = got == want[j];
            if (!ok) {
                try {
                    const cplx a = parse_complex(want[j]), b = parse_complex(got);
                    ok = std::max(std::abs(a.real() - b.real()), std::abs(a.imag() - b.imag())) <= tol;
                } catch (const std::invalid_argument&) {
                }
            }
            if (!ok)
                out.push_back(where + ", column " + cols[j] + ": expected " + want[j] + ", got " + got +
                              " (tolerance " + std::to_string(tol) + ")");
        }
    }
    return out;
}

Polynomial obj() { return parse_polynomial(table("OBJ").text, {"x", "e", "R"}); }

}  // namespace molpoly::reference
