#include "arakelov/zeroscan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "arakelov/zeta2.hpp"

namespace arakelov {

namespace {

constexpr double kPi = std::numbers::pi;

struct Seg {
    cplx a, fa, b, fb;
};

// Phase change along [a, b], subdividing until each step is small.
double phase_along(double u, cplx a, cplx fa, cplx b, cplx fb, const EvalContext& ctx) {
    double total = 0.0;
    std::vector<Seg> stack{{a, fa, b, fb}};
    while (!stack.empty()) {
        Seg g = stack.back();
        stack.pop_back();
        const double d = std::arg(g.fb / g.fa);
        const double lo = std::min(std::abs(g.fa), std::abs(g.fb));
        if (std::abs(d) <= kPi / 4 && std::abs(g.fb - g.fa) <= 0.7 * lo) {
            total += d;
            continue;
        }
        if (std::abs(g.b - g.a) < 1e-9 * (1.0 + std::abs(g.a)))
            throw ConvergenceError("winding: contour passes too close to a zero near " +
                                   std::to_string(g.a.real()) + (g.a.imag() < 0 ? "" : "+") +
                                   std::to_string(g.a.imag()) + "i");
        const cplx m = 0.5 * (g.a + g.b);
        const cplx fm = xi_slice(u, m, ctx);
        stack.push_back({m, fm, g.b, g.fb});
        stack.push_back({g.a, g.fa, m, fm});
    }
    return total;
}

double lambda(double u, double t, const EvalContext& ctx) { return xi_slice(u, {0.5 * u, t}, ctx).real(); }

// Newton iteration with a central-difference derivative; false if it leaves r
// or stalls.
bool newton(double u, cplx& s, const Rect& r, const EvalContext& ctx) {
    const double hstep = std::cbrt(ctx.tol);
    cplx f = xi_slice(u, s, ctx);
    for (int it = 0; it < 60; ++it) {
        const double h = hstep * (1.0 + std::abs(s));
        const cplx df = (xi_slice(u, s + h, ctx) - xi_slice(u, s - h, ctx)) / (2.0 * h);
        if (df == cplx(0.0)) return false;
        cplx step = f / df;
        cplx next = s - step;
        cplx fn = xi_slice(u, next, ctx);
        for (int damp = 0; damp < 8 && std::abs(fn) > std::abs(f); ++damp) {
            step *= 0.5;
            next = s - step;
            fn = xi_slice(u, next, ctx);
        }
        s = next;
        f = fn;
        if (!r.contains(s)) return false;
        if (std::abs(step) < 1e-13 * (1.0 + std::abs(s)) || f == cplx(0.0)) return true;
    }
    return false;
}

void scan(double u, const Rect& r, int wind, const EvalContext& ctx, std::vector<ZeroRecord>& out, int depth) {
    if (wind == 0) return;
    if (wind < 0) throw ConvergenceError("find_zeros: negative winding, xi evaluation is unreliable here");
    const double size = std::max(r.width(), r.height());
    if (wind == 1 && size <= 2.0) {
        cplx s = r.center();
        if (newton(u, s, r, ctx)) {
            const double edge = std::min({s.real() - r.re0, r.re1 - s.real(), s.imag() - r.im0, r.im1 - s.imag()});
            const double h = std::min(1e-4 * (1.0 + std::abs(s)), 0.5 * edge);
            const Rect c{s.real() - h, s.real() + h, s.imag() - h, s.imag() + h};
            bool ok = false;
            try {
                ok = h > 1e-10 && winding_number(u, c, ctx) == 1;
            } catch (const ConvergenceError&) {
            }
            if (ok) {
                out.push_back({u, s, std::abs(xi_slice(u, s, ctx)), 1, c, true});
                return;
            }
        }
    }
    if ((wind >= 2 && size < 1e-6) || depth > 80) {
        const cplx s = r.center();
        out.push_back({u, s, std::abs(xi_slice(u, s, ctx)), wind, r, depth <= 80});
        return;
    }
    const bool vertical_cut = r.width() >= r.height();
    for (int attempt = 0; attempt < 8; ++attempt) {
        const double frac = 0.5 + ((attempt % 2) ? -1.0 : 1.0) * 0.0617 * ((attempt + 1) / 2);
        Rect a = r, b = r;
        if (vertical_cut) {
            a.re1 = b.re0 = r.re0 + frac * r.width();
        } else {
            a.im1 = b.im0 = r.im0 + frac * r.height();
        }
        int wa, wb;
        try {
            wa = winding_number(u, a, ctx);
            wb = winding_number(u, b, ctx);
        } catch (const ConvergenceError&) {
            continue;
        }
        if (wa + wb != wind || wa < 0 || wb < 0) continue;
        scan(u, a, wa, ctx, out, depth + 1);
        scan(u, b, wb, ctx, out, depth + 1);
        return;
    }
    throw ConvergenceError("find_zeros: could not split region around " + std::to_string(r.center().real()) + "+" +
                           std::to_string(r.center().imag()) + "i");
}

bool on_critical_line(double u, cplx s, const EvalContext& ctx) {
    const double d = std::abs(s.real() - 0.5 * u);
    if (d <= 10.0 * ctx.tol) return true;
    if (d > 1e-3) return false;
    // A simple zero on the line makes the real function xi(u, u/2 + it)
    // change sign; an off-line mirror pair does not.
    const double eta = std::max(1e-7 * (1.0 + std::abs(s.imag())), 4.0 * d);
    const double a = lambda(u, s.imag() - eta, ctx), b = lambda(u, s.imag() + eta, ctx);
    return (a < 0) != (b < 0);
}

}  // namespace

cplx xi_slice(double u, cplx s, const EvalContext& ctx) {
    return s.real() < 0.5 * u ? xi(u, u - s, ctx) : xi(u, s, ctx);
}

int winding_number(double u, const Rect& r, const EvalContext& ctx) {
    if (!(r.re1 > r.re0 && r.im1 > r.im0)) throw DomainError("winding: degenerate rectangle");
    const cplx corners[5] = {{r.re0, r.im0}, {r.re1, r.im0}, {r.re1, r.im1}, {r.re0, r.im1}, {r.re0, r.im0}};
    double total = 0.0;
    for (int e = 0; e < 4; ++e) {
        const cplx a = corners[e], b = corners[e + 1];
        const double len = std::abs(b - a);
        const double spacing = std::min(e % 2 ? 0.1 : 0.25, len / 4.0);
        const int n = std::max(2, int(std::ceil(len / spacing)));
        cplx prev = a, fprev = xi_slice(u, a, ctx);
        if (fprev == cplx(0.0)) throw ConvergenceError("winding: zero on the contour");
        for (int k = 1; k <= n; ++k) {
            const cplx p = a + (b - a) * (double(k) / n);
            const cplx fp = xi_slice(u, p, ctx);
            if (fp == cplx(0.0)) throw ConvergenceError("winding: zero on the contour");
            total += phase_along(u, prev, fprev, p, fp, ctx);
            prev = p;
            fprev = fp;
        }
    }
    const double w = total / (2.0 * kPi);
    const double rounded = std::round(w);
    if (std::abs(w - rounded) > 0.1) throw ConvergenceError("winding: phase total is not an integer multiple of 2pi");
    return int(rounded);
}

std::vector<ZeroRecord> find_zeros(double u, const Rect& region, const EvalContext& ctx) {
    ctx.validate();
    std::vector<ZeroRecord> out;
    const int w = winding_number(u, region, ctx);
    scan(u, region, w, ctx, out, 0);
    std::sort(out.begin(), out.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
        return a.s.imag() != b.s.imag() ? a.s.imag() < b.s.imag() : a.s.real() < b.s.real();
    });
    return out;
}

double count_main_term(double T) {
    const double x = T / (2.0 * kPi);
    return x * std::log(x) - x + 7.0 / 8.0;
}

CountReport count_zeros(double u, double T, const EvalContext& ctx) {
    ctx.validate();
    if (!(T > 0)) throw DomainError("count_zeros: T must be positive");
    const double half = 0.5 * u + 8.0;
    double Tn = T;
    for (int nudge = 0;; ++nudge) {
        try {
            const Rect r{0.5 * u - half, 0.5 * u + half, -Tn, Tn};
            CountReport c;
            c.u = u;
            c.T = Tn;
            c.N_u_T = winding_number(u, r, ctx);
            c.main_term = count_main_term(Tn);
            c.S_u_T = 0.5 * double(c.N_u_T) - c.main_term;
            return c;
        } catch (const ConvergenceError&) {
            if (nudge >= 5) throw;
            Tn += 0.01;
        }
    }
}

bool strip_certificate(double u, const std::vector<ZeroRecord>& zeros) {
    return std::all_of(zeros.begin(), zeros.end(),
                       [u](const ZeroRecord& z) { return std::abs(z.s.real() - 0.5 * u) < 0.5 * u + 8.0; });
}

std::vector<cplx> closed_form_zeros_u0(double T, const EvalContext& ctx) {
    std::vector<cplx> out;
    const double period = 4.0 * kPi / std::log(2.0);
    for (int k = 1; k * period <= T; ++k)
        for (double re : {-2.0, 2.0})
            for (double sg : {-1.0, 1.0}) out.push_back({re, sg * k * period});
    if (T / 2.0 > 14.0) {
        double top = T / 2.0;
        std::vector<ZeroRecord> rho;
        for (int nudge = 0;; ++nudge) {
            try {
                rho = find_zeros(1.0, {0.0, 1.0, 1.0, top}, ctx);
                break;
            } catch (const ConvergenceError&) {
                if (nudge >= 5) throw;
                top += 0.01;
            }
        }
        for (const auto& z : rho) {
            if (2.0 * z.s.imag() > T) continue;
            const cplx r2 = 2.0 * z.s;
            for (cplx c : {r2, std::conj(r2), -r2, -std::conj(r2)}) out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end(), [](cplx a, cplx b) { return a.imag() != b.imag() ? a.imag() < b.imag() : a.real() < b.real(); });
    return out;
}

std::string to_string(TrackEventKind k) {
    switch (k) {
        case TrackEventKind::COALESCE: return "COALESCE";
        case TrackEventKind::OFF_LINE: return "OFF_LINE";
        case TrackEventKind::ON_LINE: return "ON_LINE";
        default: return "LOST";
    }
}

TrackResult track_zeros(double u_start, double u_end, const std::vector<ZeroRecord>& seeds, int steps,
                        const EvalContext& ctx) {
    ctx.validate();
    if (seeds.empty()) throw DomainError("track: no seeds");
    if (steps < 1) throw DomainError("track: steps must be >= 1");
    const size_t n = seeds.size();
    TrackResult res;

    // Snap seeds to certified zeros at u_start.
    std::vector<cplx> cur(n);
    std::vector<bool> used;
    std::vector<ZeroRecord> pool;
    for (size_t i = 0; i < n; ++i) {
        const cplx s = seeds[i].s;
        const double dre = std::max(1.0, std::abs(s.real() - 0.5 * u_start) + 0.5);
        auto found = find_zeros(u_start, {0.5 * u_start - dre, 0.5 * u_start + dre + 0.0137, s.imag() - 1.5, s.imag() + 1.5}, ctx);
        for (auto& f : found) {
            bool dup = false;
            for (auto& p : pool) dup = dup || std::abs(p.s - f.s) < 1e-8;
            if (!dup) {
                pool.push_back(f);
                used.push_back(false);
            }
        }
        double best = 1e300;
        int pick = -1;
        for (size_t j = 0; j < pool.size(); ++j) {
            const double d = std::abs(pool[j].s - s);
            if (!used[j] && d < best) {
                best = d;
                pick = int(j);
            }
        }
        if (pick < 0) throw ConvergenceError("track: no certified zero near seed");
        used[size_t(pick)] = true;
        cur[i] = pool[size_t(pick)].s;
    }

    auto status = [&](double u, const std::vector<cplx>& s) {
        std::vector<bool> on(s.size());
        for (size_t i = 0; i < s.size(); ++i) on[i] = on_critical_line(u, s[i], ctx);
        return on;
    };
    res.path.push_back({u_start, cur, status(u_start, cur)});
    if (u_end == u_start) return res;

    const double du = (u_end - u_start) / steps;
    std::vector<cplx> prev = cur;
    double hprev = 0.0;
    double u = u_start;
    std::vector<int> off_event(n, -1);  // open OFF_LINE event per zero
    std::vector<bool> coalesced(n, false);

    auto done = [&](double x) { return du > 0 ? x >= u_end - 1e-12 : x <= u_end + 1e-12; };
    while (!done(u)) {
        double h = du;
        bool ok = false;
        std::vector<cplx> next(n);
        std::vector<int> owner(n, -1);
        std::vector<ZeroRecord> found;
        double un = u;
        for (int halving = 0; halving < 7 && !ok; ++halving, h *= 0.5) {
            un = u + h;
            if (du > 0 ? un > u_end : un < u_end) un = u_end;
            const double hs = un - u;
            std::vector<cplx> pred(n);
            double move = 0.0;
            for (size_t i = 0; i < n; ++i) {
                pred[i] = hprev != 0.0 ? cur[i] + (cur[i] - prev[i]) * (hs / hprev) : cur[i];
                move = std::max(move, std::abs(pred[i] - cur[i]));
            }
            const double margin = 0.35 + 2.0 * move;
            double dre = 0.0, lo = 1e300, hi = -1e300;
            for (size_t i = 0; i < n; ++i) {
                for (cplx p : {pred[i], cur[i]}) {
                    dre = std::max(dre, std::abs(p.real() - 0.5 * un));
                    lo = std::min(lo, p.imag());
                    hi = std::max(hi, p.imag());
                }
            }
            bool scanned = false;
            for (int tweak = 0; tweak < 4 && !scanned; ++tweak) {
                const double m = margin + 0.0371 * tweak;
                try {
                    found = find_zeros(un, {0.5 * un - dre - m, 0.5 * un + dre + m + 0.011, lo - m, hi + m}, ctx);
                    scanned = true;
                } catch (const ConvergenceError&) {
                }
            }
            if (!scanned) continue;
            // Greedy nearest matching; a record of multiplicity k takes k zeros.
            std::vector<std::tuple<double, size_t, size_t>> pairs;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < found.size(); ++j) pairs.emplace_back(std::abs(pred[i] - found[j].s), i, j);
            std::sort(pairs.begin(), pairs.end());
            std::vector<int> cap(found.size());
            for (size_t j = 0; j < found.size(); ++j) cap[j] = found[j].multiplicity;
            std::fill(owner.begin(), owner.end(), -1);
            const double limit = std::max(0.3, 3.0 * move);
            for (auto& [d, i, j] : pairs) {
                if (owner[i] >= 0 || cap[j] == 0 || d > limit) continue;
                owner[i] = int(j);
                --cap[j];
                next[i] = found[j].s;
            }
            ok = std::all_of(owner.begin(), owner.end(), [](int o) { return o >= 0; });
        }
        if (!ok) {
            res.truncated = true;
            std::ostringstream msg;
            msg << "lost a tracked zero between u = " << u << " and u = " << un;
            res.diagnostic = msg.str();
            res.events.push_back({TrackEventKind::LOST, u, u, {}, cur[0]});
            break;
        }
        const auto on_before = res.path.back().on_line;
        const auto on_now = status(un, next);
        // Coalescence: a shared multiplicity-2 record, or two on-line zeros
        // turning into an off-line mirror pair.
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                const bool shared = owner[i] == owner[j];
                const bool mirror = on_before[i] && on_before[j] && !on_now[i] && !on_now[j] &&
                                    std::abs(next[i] - (un - std::conj(next[j]))) < 1e-3 * (1.0 + std::abs(next[i]));
                if ((shared || mirror) && !(coalesced[i] && coalesced[j])) {
                    const double uc = shared ? un : 0.5 * (u + un);
                    res.events.push_back({TrackEventKind::COALESCE, uc, uc, {int(i), int(j)}, 0.5 * (next[i] + next[j])});
                    coalesced[i] = coalesced[j] = true;
                }
            }
        }
        for (size_t i = 0; i < n; ++i) {
            if (on_before[i] && !on_now[i]) {
                off_event[i] = int(res.events.size());
                res.events.push_back({TrackEventKind::OFF_LINE, un, u_end, {int(i)}, next[i]});
            } else if (!on_before[i] && on_now[i]) {
                if (off_event[i] >= 0) res.events[size_t(off_event[i])].u_end = un;
                off_event[i] = -1;
                coalesced[i] = false;
                res.events.push_back({TrackEventKind::ON_LINE, un, un, {int(i)}, next[i]});
            }
        }
        prev = cur;
        cur = next;
        hprev = un - u;
        u = un;
        res.path.push_back({u, cur, on_now});
    }
    return res;
}

TrackResult track_zero(double u_start, double u_end, const ZeroRecord& seed, int steps, const EvalContext& ctx) {
    return track_zeros(u_start, u_end, {seed}, steps, ctx);
}

}  // namespace arakelov
