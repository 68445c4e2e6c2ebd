#pragma once

#include <string>
#include <vector>

#include "arakelov/context.hpp"
#include "arakelov/kernel_profile.hpp"

namespace arakelov {

// Convergence regions of the Heaviside-corrected integral, by the signs of
// Re s and Re(w - s):
//   I   Re w < Re s < 0          integrand theta^w
//   II  Re(w - s) < 0 < Re s     theta^w - 1
//   III 0 < Re s < Re w          theta^w - 1 - t^{-w}
//   IV  Re s < 0 < Re(w - s)     theta^w - t^{-w}
enum class RegionTag { I, II, III, IV, BOUNDARY };
std::string to_string(RegionTag r);

struct Zeta2Value {
    cplx value;
    double quadrature_error_estimate = 0.0;
    RegionTag region = RegionTag::BOUNDARY;
};

// 1, 1/2 or 0 by the sign of Re s.
double heaviside(cplx s);
RegionTag classify_region(cplx w, cplx s);

// Z(w, s) from the real-line integral with Heaviside corrections.
// Throws RegionError on Re s in {0, Re w} and DegenerateError at w = 0.
Zeta2Value Z(cplx w, cplx s, const EvalContext& ctx);

// Z(w, s) from the half-line continuation; valid for s not in {0, w}.
Zeta2Value Z_continued(cplx w, cplx s, const EvalContext& ctx);

// Z(w, s) = 2 w xi(w, s) / (s (s - w)); valid for w != 0, s not in {0, w}.
Zeta2Value Z_from_xi(cplx w, cplx s, const EvalContext& ctx);

// The entire function xi(w, s) = s (s - w) Z(w, s) / (2 w).
cplx xi(cplx w, cplx s, const EvalContext& ctx);
Zeta2Value xi_value(cplx w, cplx s, const EvalContext& ctx);
// Same function integrated along Im z = y, |y| < pi/4.
Zeta2Value xi_on_contour(cplx w, cplx s, double y, const EvalContext& ctx);

// pi^{-s/2} Gamma(s/2) zeta(s).
cplx completed_zeta(cplx s, const EvalContext& ctx);

// xi(0, s) from the product of two completed zeta values.
cplx xi0_closed(cplx s, const EvalContext& ctx);

// Q(-d/dz) applied to theta(e^{2z})^w - H(sigma) - H(w - sigma) e^{-wz}.
// Q holds coefficients in increasing degree.
cplx moment_transform(const std::vector<cplx>& Q, cplx w, double sigma, cplx z, const EvalContext& ctx);

// (1/2pi) int Q(sigma+it) Z(w, sigma+it) e^{-(sigma+it) z} dt, the other side
// of the same identity.
cplx moment_transform_fourier(const std::vector<cplx>& Q, cplx w, double sigma, cplx z,
                              const EvalContext& ctx);

}  // namespace arakelov
