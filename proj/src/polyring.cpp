#include "molpoly/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

namespace molpoly {

int Monomial::degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += o.exp[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exp.size(); ++i)
        if (exp[i] > o.exp[i]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] -= o.exp[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] = std::max(exp[i], o.exp[i]);
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < exp.size(); ++i)
        if (exp[i] > 0 && o.exp[i] > 0) return false;
    return true;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.size();
    auto var = [&](std::size_t k) { return precedence.empty() ? k : std::size_t(precedence[k]); };
    if (kind != OrderKind::Lex) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
    }
    if (kind == OrderKind::DegRevLex) {
        for (std::size_t k = n; k-- > 0;) {
            int ea = a[var(k)], eb = b[var(k)];
            if (ea != eb) return ea < eb ? 1 : -1;
        }
        return 0;
    }
    for (std::size_t k = 0; k < n; ++k) {
        int ea = a[var(k)], eb = b[var(k)];
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

Polynomial Polynomial::constant(std::vector<std::string> vars, const Rational& c) {
    Polynomial p(std::move(vars));
    p.add_term(Monomial::one(p.nvars()), c);
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> vars, const std::string& name) {
    Polynomial p(std::move(vars));
    Monomial m = Monomial::one(p.nvars());
    m.exp[p.var_index(name)] = 1;
    p.add_term(m, 1);
    return p;
}

Polynomial Polynomial::term(std::vector<std::string> vars, Monomial m, const Rational& c) {
    Polynomial p(std::move(vars));
    p.add_term(m, c);
    return p;
}

int Polynomial::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw std::invalid_argument("unknown variable: " + name);
    return int(it - vars_.begin());
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::max_abs_coeff() const {
    Rational best = 0;
    for (const auto& [m, c] : terms_) best = std::max<Rational>(best, abs(c));
    return best;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != vars_.size()) throw RingMismatch("monomial arity does not match ring");
    if (c == 0) return;
    Rational v = c;
    v.canonicalize();
    auto [it, fresh] = terms_.try_emplace(m, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_ring(const Polynomial& o) const {
    if (vars_ != o.vars_) throw RingMismatch("polynomials live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_ring(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_ring(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_ring(o);
    Polynomial r(vars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(vars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::differentiate(const std::string& var) const { return differentiate(var_index(var)); }

Polynomial Polynomial::differentiate(int v) const {
    if (v < 0 || std::size_t(v) >= vars_.size()) throw std::invalid_argument("unknown variable index");
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[v] == 0) continue;
        Monomial d = m;
        d.exp[v] -= 1;
        r.add_term(d, c * m[v]);
    }
    return r;
}

cplx Polynomial::evaluate(const std::vector<cplx>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("point has wrong number of coordinates");
    // Power tables keep each term to a handful of multiplications.
    std::vector<std::vector<cplx>> pw(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) pw[i].push_back(1.0);
    cplx sum = 0;
    for (const auto& [m, c] : terms_) {
        cplx t = c.get_d();
        for (std::size_t i = 0; i < m.size(); ++i) {
            while (int(pw[i].size()) <= m[i]) pw[i].push_back(pw[i].back() * point[i]);
            t *= pw[i][m[i]];
        }
        sum += t;
    }
    return sum;
}

cplx Polynomial::evaluate(const std::map<std::string, cplx>& point) const {
    std::vector<cplx> pt;
    for (const auto& v : vars_) {
        auto it = point.find(v);
        if (it == point.end()) throw std::invalid_argument("missing value for variable " + v);
        pt.push_back(it->second);
    }
    return evaluate(pt);
}

std::vector<std::pair<Monomial, Rational>> Polynomial::sorted_terms(const MonomialOrder& o) const {
    std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return o.compare(a.first, b.first) > 0; });
    return out;
}

std::pair<Monomial, Rational> Polynomial::leading_term(const MonomialOrder& o) const {
    if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
        if (o.compare(it->first, best->first) > 0) best = it;
    return *best;
}

Polynomial Polynomial::in_ring(const std::vector<std::string>& vars) const {
    std::vector<int> map(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        map[i] = it == vars.end() ? -1 : int(it - vars.begin());
    }
    Polynomial r(vars);
    for (const auto& [m, c] : terms_) {
        Monomial nm = Monomial::one(vars.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (map[i] < 0) throw RingMismatch("variable " + vars_[i] + " missing from target ring");
            nm.exp[map[i]] = m[i];
        }
        r.add_term(nm, c);
    }
    return r;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

std::vector<Monomial> monomials_up_to(int nvars, int d, const MonomialOrder& o) {
    std::vector<Monomial> out;
    std::vector<int> e(nvars, 0);
    // odometer over exponent vectors with bounded total degree
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == nvars) {
            out.emplace_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return o.less(a, b); });
    return out;
}

namespace {

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() {
        skip();
        return i_ >= s_.size();
    }
    char peek() {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool accept(const std::string& tok) {
        skip();
        if (s_.compare(i_, tok.size(), tok) == 0) {
            i_ += tok.size();
            return true;
        }
        return false;
    }
    std::string number() {
        skip();
        std::size_t st = i_;
        while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) ++i_;
        if (i_ < s_.size() && (s_[i_] == 'e' || s_[i_] == 'E') && i_ + 1 < s_.size() &&
            (std::isdigit(static_cast<unsigned char>(s_[i_ + 1])) || s_[i_ + 1] == '-' || s_[i_ + 1] == '+')) {
            ++i_;
            if (s_[i_] == '-' || s_[i_] == '+') ++i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        }
        return s_.substr(st, i_ - st);
    }
    std::string ident() {
        skip();
        std::size_t st = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        return s_.substr(st, i_ - st);
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(i_) + ": " + what);
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

Rational decimal_to_rational(const std::string& lit) {
    std::string mant = lit;
    long exp10 = 0;
    if (auto p = lit.find_first_of("eE"); p != std::string::npos) {
        mant = lit.substr(0, p);
        exp10 = std::stol(lit.substr(p + 1));
    }
    std::string digits;
    long frac = 0;
    bool seen_dot = false;
    for (char ch : mant) {
        if (ch == '.') {
            if (seen_dot) throw std::invalid_argument("malformed number: " + lit);
            seen_dot = true;
        } else {
            digits += ch;
            if (seen_dot) ++frac;
        }
    }
    if (digits.empty()) throw std::invalid_argument("malformed number: " + lit);
    Rational q(mpz_class(digits), 1);
    long shift = exp10 - frac;
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
    if (shift >= 0)
        q *= ten_pow;
    else
        q /= ten_pow;
    q.canonicalize();
    return q;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
    Polynomial p(vars);
    Lexer lx(text);
    if (lx.done()) lx.fail("empty input");
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        if (lx.accept("+")) {
        } else if (lx.accept("-")) {
            sign = -1;
        } else if (!first) {
            lx.fail("expected '+' or '-'");
        }
        first = false;
        Rational coef(sign);
        Monomial m = Monomial::one(vars.size());
        bool need_factor = true;
        while (need_factor) {
            char ch = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
                Rational num = decimal_to_rational(lx.number());
                if (lx.accept("/")) {
                    Rational den = decimal_to_rational(lx.number());
                    if (den == 0) lx.fail("division by zero");
                    num /= den;
                }
                coef *= num;
            } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                std::string name = lx.ident();
                auto it = std::find(vars.begin(), vars.end(), name);
                if (it == vars.end()) lx.fail("unknown variable '" + name + "'");
                int power = 1;
                if (lx.accept("**") || lx.accept("^")) {
                    std::string k = lx.number();
                    if (k.empty() || k.find('.') != std::string::npos) lx.fail("bad exponent");
                    power = std::stoi(k);
                }
                m.exp[it - vars.begin()] += power;
            } else {
                lx.fail("expected a coefficient or variable");
            }
            need_factor = lx.accept("*");
        }
        p.add_term(m, coef);
    }
    return p;
}

std::vector<std::string> infer_variables(const std::string& text) {
    std::set<std::string> found;
    for (std::size_t i = 0; i < text.size();) {
        unsigned char ch = text[i];
        bool after_digit = i > 0 && (std::isdigit(static_cast<unsigned char>(text[i - 1])) || text[i - 1] == '.');
        if ((std::isalpha(ch) || ch == '_') && !(after_digit && (ch == 'e' || ch == 'E'))) {
            std::size_t st = i;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
            found.insert(text.substr(st, i - st));
        } else {
            ++i;
        }
    }
    std::vector<std::string> out;
    for (const char* pref : {"x", "y", "z", "e", "R"})
        if (found.erase(pref)) out.emplace_back(pref);
    out.insert(out.end(), found.begin(), found.end());
    return out;
}

std::vector<Polynomial> parse_system(const std::string& text, std::vector<std::string> vars) {
    std::string clean;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        if (auto p = line.find('#'); p != std::string::npos) line.erase(p);
        clean += line + ";";
    }
    if (vars.empty()) vars = infer_variables(clean);
    std::vector<Polynomial> out;
    std::istringstream parts(clean);
    for (std::string piece; std::getline(parts, piece, ';');) {
        if (std::all_of(piece.begin(), piece.end(), [](unsigned char c) { return std::isspace(c); })) continue;
        out.push_back(parse_polynomial(piece, vars));
    }
    return out;
}

Rational parse_rational(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    int sign = 1;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        sign = t[0] == '-' ? -1 : 1;
        t.erase(0, 1);
    }
    Rational q;
    if (auto p = t.find('/'); p != std::string::npos) {
        Rational den = decimal_to_rational(t.substr(p + 1));
        if (den == 0) throw std::invalid_argument("division by zero in " + text);
        q = decimal_to_rational(t.substr(0, p)) / den;
    } else {
        q = decimal_to_rational(t);
    }
    return sign < 0 ? Rational(-q) : q;
}

Rational rational_from_double_decimal(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return parse_rational(std::string(buf, res.ptr));
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const auto& vars = p.vars();
    std::vector<int> ascii(vars.size());
    std::iota(ascii.begin(), ascii.end(), 0);
    std::sort(ascii.begin(), ascii.end(), [&](int a, int b) { return vars[a] < vars[b]; });
    MonomialOrder o{OrderKind::Lex, ascii};
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.sorted_terms(o)) {
        Rational a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool any = false;
        if (a != 1 || m.degree() == 0) {
            os << rational_to_string(a);
            any = true;
        }
        for (int v : ascii) {
            if (m[v] == 0) continue;
            os << (any ? "*" : "") << vars[v];
            if (m[v] > 1) os << "**" << m[v];
            any = true;
        }
    }
    return os.str();
}

}  // namespace molpoly
