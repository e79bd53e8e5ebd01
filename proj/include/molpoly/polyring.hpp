#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace molpoly {

using Rational = mpq_class;
using cplx = std::complex<double>;

struct Monomial {
    std::vector<int> exp;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exp(std::move(e)) {}
    static Monomial one(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }

    std::size_t size() const { return exp.size(); }
    int degree() const;
    int operator[](std::size_t i) const { return exp[i]; }
    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial quotient(const Monomial& o) const;  // this / o, requires o | this
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;
};

enum class OrderKind { Lex, GrLex, DegRevLex };

// precedence[0] is the most significant variable; empty means ring order.
struct MonomialOrder {
    OrderKind kind = OrderKind::DegRevLex;
    std::vector<int> precedence;

    static MonomialOrder lex() { return {OrderKind::Lex, {}}; }
    static MonomialOrder grlex() { return {OrderKind::GrLex, {}}; }
    static MonomialOrder degrevlex() { return {OrderKind::DegRevLex, {}}; }

    // -1, 0, +1 as a < b, a == b, a > b
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Polynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Polynomial constant(std::vector<std::string> vars, const Rational& c);
    static Polynomial variable(std::vector<std::string> vars, const std::string& name);
    static Polynomial term(std::vector<std::string> vars, Monomial m, const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    int var_index(const std::string& name) const;
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int total_degree() const;
    Rational coeff(const Monomial& m) const;
    Rational max_abs_coeff() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    Polynomial differentiate(const std::string& var) const;
    Polynomial differentiate(int var) const;

    cplx evaluate(const std::vector<cplx>& point) const;
    cplx evaluate(const std::map<std::string, cplx>& point) const;

    // Terms sorted descending under o.
    std::vector<std::pair<Monomial, Rational>> sorted_terms(const MonomialOrder& o) const;
    std::pair<Monomial, Rational> leading_term(const MonomialOrder& o) const;

    // Same polynomial over a different variable list; every used variable must exist there.
    Polynomial in_ring(const std::vector<std::string>& vars) const;

private:
    void check_ring(const Polynomial& o) const;

    std::vector<std::string> vars_;
    Terms terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

// All C(d+n, n) monomials of degree <= d, ascending under o.
std::vector<Monomial> monomials_up_to(int nvars, int d, const MonomialOrder& o);

// Text form `-25940329*R**3*e*x**2 + ...`. Decimal literals become exact rationals.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);
// Variables found in the text, ordered x, y, z, e, R first and the rest alphabetically.
std::vector<std::string> infer_variables(const std::string& text);
std::vector<Polynomial> parse_system(const std::string& text, std::vector<std::string> vars = {});

// Variables inside a term print in ASCII order; terms print in descending lex order over
// ASCII-sorted variables. This is the layout of the reference objective.
std::string to_string(const Polynomial& p);
std::string rational_to_string(const Rational& q);
// Exact value of a decimal literal such as "1.8", "-2.5e-3" or "7/3".
Rational parse_rational(const std::string& text);
// Shortest decimal that round-trips the double, as an exact rational.
Rational rational_from_double_decimal(double v);

}  // namespace molpoly
