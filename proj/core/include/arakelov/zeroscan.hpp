#pragma once

#include <string>
#include <vector>

#include "arakelov/context.hpp"

namespace arakelov {

// Axis-aligned rectangle [re0, re1] x [im0, im1] in the s-plane.
struct Rect {
    double re0 = 0, re1 = 0, im0 = 0, im1 = 0;
    bool contains(cplx s) const { return s.real() > re0 && s.real() < re1 && s.imag() > im0 && s.imag() < im1; }
    double width() const { return re1 - re0; }
    double height() const { return im1 - im0; }
    cplx center() const { return {0.5 * (re0 + re1), 0.5 * (im0 + im1)}; }
};

struct ZeroRecord {
    double u = 0.0;
    cplx s;
    double residual = 0.0;  // |xi(u, s)|
    int multiplicity = 1;
    Rect contour;           // certifying rectangle
    bool converged = true;
};

struct CountReport {
    double u = 0.0;
    double T = 0.0;          // height actually used after nudging
    long N_u_T = 0;          // zeros with |Im| <= T
    double main_term = 0.0;  // T/2pi log(T/2pi) - T/2pi + 7/8
    double S_u_T = 0.0;      // N/2 - main_term
};

// xi(u, s) for real u, evaluated on the side Re s >= u/2.
cplx xi_slice(double u, cplx s, const EvalContext& ctx);

// Winding of arg xi(u, .) around the rectangle. Throws ConvergenceError if
// the boundary passes too close to a zero.
int winding_number(double u, const Rect& r, const EvalContext& ctx);

// Every zero in the region, sorted by (Im, Re). Multiplicities sum to the
// winding of the region.
std::vector<ZeroRecord> find_zeros(double u, const Rect& region, const EvalContext& ctx);

// Zeros with |Im s| <= T inside the strip |Re s - u/2| <= u/2 + 8.
CountReport count_zeros(double u, double T, const EvalContext& ctx);
double count_main_term(double T);

// True iff every zero lies in |Re s - u/2| < u/2 + 8.
bool strip_certificate(double u, const std::vector<ZeroRecord>& zeros);

// Zeros of the w = 0 closed form with |Im s| <= T: the (1 - 2^{1 +- s/2})
// families at +-2 + 4 pi i k / log 2 (k != 0) and +-2 rho for zeta zeros rho.
std::vector<cplx> closed_form_zeros_u0(double T, const EvalContext& ctx);

enum class TrackEventKind { COALESCE, OFF_LINE, ON_LINE, LOST };
std::string to_string(TrackEventKind k);

struct TrackEvent {
    TrackEventKind kind;
    double u = 0.0;      // where the event was detected
    double u_end = 0.0;  // OFF_LINE: end of the off-line interval
    std::vector<int> zeros;  // indices of the tracked zeros involved
    cplx s;
};

struct TrackPoint {
    double u = 0.0;
    std::vector<cplx> s;  // one entry per tracked zero
    std::vector<bool> on_line;
};

struct TrackResult {
    std::vector<TrackPoint> path;
    std::vector<TrackEvent> events;
    bool truncated = false;
    std::string diagnostic;
};

// Follow zeros of xi(u, .) from u_start to u_end in `steps` equal steps.
// Seeds are first snapped to the nearest certified zero at u_start.
TrackResult track_zeros(double u_start, double u_end, const std::vector<ZeroRecord>& seeds, int steps,
                        const EvalContext& ctx);
TrackResult track_zero(double u_start, double u_end, const ZeroRecord& seed, int steps, const EvalContext& ctx);

}  // namespace arakelov
