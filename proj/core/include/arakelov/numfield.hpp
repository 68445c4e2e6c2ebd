#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arakelov/context.hpp"
#include "arakelov/field.hpp"

namespace arakelov {

// Z_K(w, s) = -1/s + 1/(s - w) + int_0^inf (G(x)^w - 1)(e^{sx} + e^{(w-s)x}) dx
// with G(x) = Theta_K(e^x). No 2/w(K) prefactor.
cplx Z_K(const FieldDescriptor& K, cplx w, cplx s, const EvalContext& ctx);

// xi_K(w, s) = s (s - w) Z_K(w, s) / (2w), entire; double precision.
cplx xi_K(const FieldDescriptor& K, cplx w, cplx s, const EvalContext& ctx);

// xi_K(u, u/2 + it) for real u and t, computed in multiprecision so that its
// sign is reliable where |xi_K| ~ e^{-pi t / 2} is far below double epsilon.
double xi_K_critical(const FieldDescriptor& K, double u, double t, const EvalContext& ctx);

// xi_K(0, it).
double xi_K0(const FieldDescriptor& K, double t, const EvalContext& ctx);

// Brackets [a, b] of width <= 1e-3 in which xi_K(0, it) changes sign.
std::vector<std::pair<double, double>> sign_scan(const FieldDescriptor& K, double t0, double t1, double step,
                                                 const EvalContext& ctx);

struct LineMinimum {
    double min_value = 0.0;
    double t_at_min = 0.0;
};
// Minimum of Z_K(-u, -u/2 + it) over 0 <= t <= t_max.
LineMinimum critical_line_scan(const FieldDescriptor& K, double u, double t_max, const EvalContext& ctx,
                               double step = 0.05);

struct FieldInvariants {
    double eta_K = 0.0;        // H^0(O_K)
    double genus_g = 0.0;      // log(eta_K sqrt|D|)
    double genus_tilde = 0.0;  // 1 + log|D| / 2
};
FieldInvariants invariants(const FieldDescriptor& K, const EvalContext& ctx);
// The rational field: eta = theta(1), g = log theta(1), g~ = 1.
FieldInvariants rational_invariants(const EvalContext& ctx);

}  // namespace arakelov
