#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "arakelov/context.hpp"
#include "arakelov/field.hpp"
#include "arakelov/psi_polynomial.hpp"

namespace arakelov {

using mpreal = boost::multiprecision::mpfr_float;

struct ThetaValue {
    double value = 0.0;
    double truncation_error_bound = 0.0;
};

// theta(t) = sum_{n in Z} exp(-pi n^2 t). Arguments t < 1 go through
// theta(t) = theta(1/t) / sqrt(t).
ThetaValue theta(double t, const EvalContext& ctx);

// Same series at ctx.precision_bits. The precision of the returned number is
// set on entry; callers should not rely on the thread default.
mpreal theta_mp(const mpreal& t, const EvalContext& ctx);

// psi2 = pi * theta(1)^4 = pi^2 / Gamma(3/4)^4.
double psi2();
mpreal psi2_mp(const EvalContext& ctx);
// theta(1), cached.
double theta_one();

// Jacobi theta_3(z, q) = sum exp(2 pi i n z) q^{n^2}, and its product form.
cplx jacobi_theta3(cplx z, cplx q, const EvalContext& ctx);
cplx triple_product(cplx z, cplx q, const EvalContext& ctx);

// f(r) = theta(1) e^{r/2} / theta(e^{-2r}); characteristic function of P_1.
double f_char(double r, const EvalContext& ctx);

// phi(z) = log theta(e^{2z}) with its first two z-derivatives, on the
// continuous branch that is real on the real axis. Requires |Im z| < pi/4.
// dg1 = phi' + 1 is carried separately: on the left half-plane phi' -> -1
// and forming dg + 1 there cancels.
struct LogJet {
    cplx g, dg, d2g, dg1;
};
LogJet log_theta_jet(cplx z);

// gamma(w, z) = (d^2/dz^2 + w d/dz) (theta(e^{2z})^w - 1) / w, evaluated as
// e^{w phi} (phi'' + w phi' (phi' + 1)) from a jet of phi.
cplx gamma_from_jet(cplx w, const LogJet& j);
cplx gamma_kernel(cplx w, cplx z, const EvalContext& ctx);

// R_k = d^k/dt^k log theta(t) at t = 1, by termwise differentiation of the
// q-expansion of log theta.
double log_theta_deriv(int k, const EvalContext& ctx);

// Exact R_k in Q[psi2] from the derivation ring Q[x, y, z].
PsiPolynomial R_symbolic(int k);

// Theta_K(t) = sum_{alpha in O_K} exp(-2 pi N(alpha) t / sqrt|D|), which
// satisfies Theta_K(1/t) = t Theta_K(t).
double norm_form_theta(const FieldDescriptor& K, double t, const EvalContext& ctx);

}  // namespace arakelov
