#pragma once

// Truncated power series in one variable, c[k] = f^(k)(x0) / k!.

#include <cmath>
#include <vector>

namespace molpoly::detail {

class Jet {
public:
    explicit Jet(int n = 1, double v = 0.0) : c_(n, 0.0) { c_[0] = v; }
    static Jet variable(int n, double x0) {
        Jet j(n, x0);
        if (n > 1) j.c_[1] = 1.0;
        return j;
    }

    int size() const { return int(c_.size()); }
    double operator[](int k) const { return c_[k]; }
    double& operator[](int k) { return c_[k]; }
    double value() const { return c_[0]; }
    const std::vector<double>& coeffs() const { return c_; }

    Jet& operator+=(const Jet& o) {
        for (int k = 0; k < size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (int k = 0; k < size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Jet& operator+=(double v) {
        c_[0] += v;
        return *this;
    }
    Jet& operator*=(double v) {
        for (auto& x : c_) x *= v;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator+(Jet a, double v) { return a += v; }
    friend Jet operator+(double v, Jet a) { return a += v; }
    friend Jet operator-(Jet a, double v) { return a += -v; }
    friend Jet operator-(double v, const Jet& a) { return -a + v; }
    friend Jet operator*(Jet a, double v) { return a *= v; }
    friend Jet operator*(double v, Jet a) { return a *= v; }
    friend Jet operator/(Jet a, double v) { return a *= 1.0 / v; }
    Jet operator-() const {
        Jet r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r(a.size());
        for (int i = 0; i < a.size(); ++i)
            for (int j = 0; i + j < a.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }

    friend Jet operator/(const Jet& a, const Jet& b) {
        Jet r(a.size());
        for (int k = 0; k < a.size(); ++k) {
            double s = a.c_[k];
            for (int j = 1; j <= k; ++j) s -= b.c_[j] * r.c_[k - j];
            r.c_[k] = s / b.c_[0];
        }
        return r;
    }
    friend Jet operator/(double v, const Jet& b) { return Jet(b.size(), v) / b; }

    friend Jet exp(const Jet& a) {
        Jet r(a.size());
        r.c_[0] = std::exp(a.c_[0]);
        for (int k = 1; k < a.size(); ++k) {
            double s = 0;
            for (int j = 1; j <= k; ++j) s += j * a.c_[j] * r.c_[k - j];
            r.c_[k] = s / k;
        }
        return r;
    }

    friend Jet sqrt(const Jet& a) {
        Jet r(a.size());
        r.c_[0] = std::sqrt(a.c_[0]);
        for (int k = 1; k < a.size(); ++k) {
            double s = a.c_[k];
            for (int j = 1; j < k; ++j) s -= r.c_[j] * r.c_[k - j];
            r.c_[k] = s / (2 * r.c_[0]);
        }
        return r;
    }

    // f(a) given f^(k)(a0) for k < size.
    Jet compose(const std::vector<double>& derivs) const {
        Jet h = *this;
        h.c_[0] = 0;
        Jet r(size(), derivs[0]);
        Jet p(size(), 1.0);
        double fact = 1;
        for (int k = 1; k < size(); ++k) {
            p = p * h;
            fact *= k;
            r += p * (derivs[k] / fact);
        }
        return r;
    }

private:
    std::vector<double> c_;
};

}  // namespace molpoly::detail
