#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "arakelov/context.hpp"
#include "arakelov/psi_polynomial.hpp"

namespace arakelov {

// rho_{u,v}(x) = (1/2pi) theta(1)^u Z(-u, -(u+v)/2 + ix), for u > 0, |v| < u.
// v = 0 gives the symmetric density P_u(x).
cplx density(double u, double v, double x, const EvalContext& ctx);

struct DensityGrid {
    double u = 0.0, v = 0.0;
    double spacing = 0.0;
    std::vector<std::pair<double, cplx>> samples;
    cplx mass() const;  // trapezoid sum
    cplx moment(int k) const;
};

// Samples on |x| <= extent; spacing defaults to 0.05 sqrt(u).
DensityGrid density_grid(double u, double v, const EvalContext& ctx, double extent = 40.0, double spacing = 0.0);

// |int rho_{u,v}(x) e^{ixr} dx - f(r)^u e^{vr/2}|.
double char_function_check(double u, double v, double r, const EvalContext& ctx);

// M(x) = (1/pi) xi(0, ix), and the same measure from the completed zeta
// product (1/8pi) x^2 |1 - 2^{1+ix/2}|^2 |zeta_hat(ix/2)|^2.
double canonical_density(double x, const EvalContext& ctx);
double canonical_density_closed(double x, const EvalContext& ctx);
// pi^2 theta(1)^8 / 8 - 1/2.
double canonical_mass();
// Trapezoid integral of canonical_density over |x| <= extent.
double canonical_mass_quadrature(const EvalContext& ctx, double extent = 80.0);

// g(r) = (log f)''(r); g(0) equals minus the canonical mass.
double log_char_curvature(double r);

struct FellerMean {
    cplx quadrature;   // (1/2pi) int xi(w, w/2 + ix) dx
    cplx closed_form;  // theta(1)^w (psi2^2/16 - w/8 - 1/4)
    double difference = 0.0;
};
FellerMean feller_mean_integral(cplx w, const EvalContext& ctx);

// Gaussian-rational polynomial in psi2: re + i im.
struct GaussPsi {
    PsiPolynomial re, im;
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    cplx evaluate(double psi2) const { return {re.evaluate(psi2), im.evaluate(psi2)}; }
    std::string to_string() const;
    friend bool operator==(const GaussPsi& a, const GaussPsi& b) { return a.re == b.re && a.im == b.im; }
};

// kappa_k = u * u_coeff + v * v_coeff.
struct CumulantEntry {
    int k = 0;
    GaussPsi u_coeff;
    GaussPsi v_coeff;
};

struct CumulantTable {
    std::vector<CumulantEntry> entries;  // k = 1..k_max
    const CumulantEntry& at(int k) const { return entries.at(size_t(k - 1)); }
    // c_k for even k: kappa_k = c_k u at v = 0.
    PsiPolynomial c(int k) const { return at(k).u_coeff.re; }
};

CumulantTable cumulants(int k_max);

// Polynomial in (u, v) with GaussPsi coefficients; key (i, j) is u^i v^j.
struct MomentPolynomial {
    std::map<std::pair<int, int>, GaussPsi> terms;
    cplx evaluate(double u, double v, double psi2) const;
    std::string to_string() const;
};

// M_0..M_{k_max} from the cumulant table.
std::vector<MomentPolynomial> moments(int k_max);
// Numeric moments from a density grid.
std::vector<cplx> moments_numeric(int k_max, double u, double v, const EvalContext& ctx);

// |(rho_{u1,v1} * rho_{u2,v2})(x) - rho_{u1+u2, v1+v2}(x)|.
double convolution_check(double u1, double v1, double u2, double v2, double x, const EvalContext& ctx);

struct PositivityReport {
    double min_value = 0.0;
    double t_at_min = 0.0;
    long samples = 0;
};
// Minimum of Z(-u, -u/2 + it) over |t| <= t_max.
PositivityReport positivity_scan(double u, double t_max, const EvalContext& ctx);

}  // namespace arakelov
