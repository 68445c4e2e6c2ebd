#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "arakelov/context.hpp"

namespace arakelov {

// Truncated power series in q with exact rational coefficients, known
// through q^order.
class QSeries {
public:
    explicit QSeries(int order = 0);
    explicit QSeries(std::vector<mpq_class> coeffs);

    static QSeries theta(int order);  // 1 + 2 sum q^{n^2}
    static QSeries one(int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const mpq_class& operator[](int m) const { return c_[static_cast<size_t>(m)]; }
    mpq_class& operator[](int m) { return c_[static_cast<size_t>(m)]; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    QSeries truncated(int order) const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const mpq_class& k);
    friend bool operator==(const QSeries& a, const QSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<mpq_class> c_;
};

// Require constant term 1 (log), 0 (exp), nonzero (pow). series_pow accepts
// any integer exponent.
QSeries series_log(const QSeries& a);
QSeries series_exp(const QSeries& a);
QSeries series_pow(const QSeries& a, long e);

// Dense polynomial in w with exact rational coefficients; coeffs[j] is the
// coefficient of w^j.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<mpq_class> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    mpq_class coeff(int j) const;
    const std::vector<mpq_class>& coeffs() const { return c_; }

    mpq_class operator()(const mpq_class& w) const;
    double operator()(double w) const;

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.c_ == b.c_;
    }
    std::string to_string(const std::string& var = "w") const;

private:
    std::vector<mpq_class> c_;
};

// c_m(w): coefficient of q^m in theta^w, a degree-m polynomial in w.
RationalPolynomial c_poly(int m);
// All c_0 .. c_{m_max}; cached across calls.
std::vector<RationalPolynomial> c_poly_table(int m_max);
// c*_m(w) = (-1)^m m! c_m(-w), which has nonnegative integer coefficients.
RationalPolynomial c_star(int m);
// c'_m = 2 s(m) - 5 s(m/2) + 2 s(m/4), s = sigma_{-1}; the q^m coefficient of log theta.
mpq_class c_prime(long m);

// Numeric c_0(u) .. c_M(u) for real u.
std::vector<double> theta_power_coefficients(double u, long M);

// D_u(s) = sum_{m >= 1} c_m(u) m^{-s}, truncated where a coefficient-bound
// tail estimate drops below ctx.tol.
cplx dirichlet_D(double u, cplx s, const EvalContext& ctx);

// c~_m(w) = c_m(w)/(2w), and (1/2) dc_m/dw at w = 0.
mpq_class ctilde(const RationalPolynomial& cm, const mpq_class& w);
// Closed forms of c~_m(w) for w in {0, 1, 2, 4, 8}; nullopt otherwise.
std::optional<mpq_class> ctilde_closed_form(long w, long m);
// c~_m(6) = (4/3) sum chi(m/d) d^2 - (1/3) sum chi(d) d^2, chi = chi_{-4}.
mpq_class ctilde6_closed_form(long m);

struct EulerReport {
    mpq_class w;
    int M = 0;
    bool multiplicative = true;
    long fail_m = 0, fail_n = 0;  // first coprime pair with c~_{mn} != c~_m c~_n
    bool closed_form_checked = false;
    bool closed_form_match = true;
    long closed_form_fail = 0;
    bool pass() const { return multiplicative && closed_form_match; }
    std::string summary() const;
};
EulerReport euler_check(const mpq_class& w, int M);

// Main term of c_m(-u): (-1)^m pi 2^{-u} (u/4m)^{(1+u/2)/2} I_{1+u/2}(pi sqrt(u m)).
// The remainder is exponentially smaller.
double bessel_main_term(double u, long m, const EvalContext& ctx);

}  // namespace arakelov
