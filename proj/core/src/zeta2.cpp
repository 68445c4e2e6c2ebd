#include "arakelov/zeta2.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "arakelov/theta_kernel.hpp"

namespace arakelov {

namespace {

constexpr double kPi = std::numbers::pi;
using Series = std::vector<cplx>;

// Integrate a complex function over [a, b] with adaptive Gauss-Kronrod on
// unit panels, real and imaginary parts separately.
template <class F>
QuadratureResult panel_integrate(F&& f, double a, double b, double rtol) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    QuadratureResult r;
    double l1 = 0.0;
    for (double lo = a; lo < b; lo += 1.0) {
        const double hi = std::min(b, lo + 1.0);
        double er = 0.0, ei = 0.0, lr = 0.0, li = 0.0;
        const double re = GK::integrate([&](double x) { return f(x).real(); }, lo, hi, 12, rtol, &er, &lr);
        const double im = GK::integrate([&](double x) { return f(x).imag(); }, lo, hi, 12, rtol, &ei, &li);
        r.value += cplx(re, im);
        r.error += er + ei;
        l1 += lr + li;
    }
    r.rounding = 1e-16 * l1;
    r.error += r.rounding;
    return r;
}

Series ser_mul(const Series& a, const Series& b) {
    Series c(a.size(), 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// exp of a series with zero constant term.
Series ser_exp0(const Series& a) {
    Series b(a.size(), 0.0);
    b[0] = 1.0;
    for (size_t k = 1; k < a.size(); ++k) {
        cplx acc = 0.0;
        for (size_t j = 1; j <= k; ++j) acc += double(j) * a[j] * b[k - j];
        b[k] = acc / double(k);
    }
    return b;
}

// log(a / a_0), zero constant term.
Series ser_log_ratio(const Series& a) {
    Series l(a.size(), 0.0);
    for (size_t k = 1; k < a.size(); ++k) {
        cplx acc = a[k];
        for (size_t j = 1; j < k; ++j) acc -= double(j) / double(k) * l[j] * a[k - j];
        l[k] = acc / a[0];
    }
    return l;
}

// Taylor coefficients of theta(e^{2(z + e)}) in e, for Re z >= 0.
Series theta_series_right(cplx z, size_t n) {
    const cplx tau = std::exp(2.0 * z);
    Series em1(n, 0.0);  // e^{2e} - 1
    double c = 1.0;
    for (size_t k = 1; k < n; ++k) {
        c *= 2.0 / double(k);
        em1[k] = c;
    }
    Series out(n, 0.0);
    out[0] = 1.0;
    for (long m = 1;; ++m) {
        const double m2 = double(m) * double(m);
        const cplx lead = std::exp(-kPi * m2 * tau);
        if (std::abs(lead) * std::pow(kPi * m2 * std::abs(tau) + 2.0, double(n)) < 1e-22) break;
        Series a(n);
        for (size_t k = 0; k < n; ++k) a[k] = -kPi * m2 * tau * em1[k];
        const Series e = ser_exp0(a);
        for (size_t k = 0; k < n; ++k) out[k] += 2.0 * lead * e[k];
    }
    return out;
}

Series theta_series(cplx z, size_t n) {
    if (z.real() >= 0.0) return theta_series_right(z, n);
    // theta(e^{2z}) = e^{-z} theta(e^{-2z}).
    Series p = theta_series_right(-z, n);
    Series ex(n);
    double c = 1.0;
    for (size_t k = 0; k < n; ++k) {
        if (k) c /= double(k);
        if (k % 2) p[k] = -p[k];
        ex[k] = std::exp(-z) * c * ((k % 2) ? -1.0 : 1.0);
    }
    return ser_mul(p, ex);
}

cplx poly_eval(const std::vector<cplx>& Q, cplx x) {
    cplx r = 0.0;
    for (size_t i = Q.size(); i-- > 0;) r = r * x + Q[i];
    return r;
}

}  // namespace

std::string to_string(RegionTag r) {
    switch (r) {
        case RegionTag::I: return "I";
        case RegionTag::II: return "II";
        case RegionTag::III: return "III";
        case RegionTag::IV: return "IV";
        default: return "BOUNDARY";
    }
}

double heaviside(cplx s) {
    if (s.real() > 0.0) return 1.0;
    if (s.real() < 0.0) return 0.0;
    return 0.5;
}

RegionTag classify_region(cplx w, cplx s) {
    const double a = s.real(), b = (w - s).real();
    if (a == 0.0 || b == 0.0) return RegionTag::BOUNDARY;
    if (a < 0.0) return b < 0.0 ? RegionTag::I : RegionTag::IV;
    return b < 0.0 ? RegionTag::II : RegionTag::III;
}

Zeta2Value Z(cplx w, cplx s, const EvalContext& ctx) {
    ctx.validate();
    if (w == cplx(0.0)) throw DegenerateError("Z: w = 0, where Z vanishes identically; use xi");
    const RegionTag region = classify_region(w, s);
    if (region == RegionTag::BOUNDARY)
        throw RegionError("Z: Re s lies on {0, Re w}; evaluate xi(w, s) instead");
    const double Hs = heaviside(s), Hws = heaviside(w - s);

    auto body = [&](double x) -> cplx {
        if (x >= 0.0) {
            const cplx a = cexpm1(w * log_theta_jet(x).g);
            return (a + (1.0 - Hs)) * std::exp(s * x) - Hws * std::exp((s - w) * x);
        }
        const cplx a = cexpm1(w * log_theta_jet(-x).g);
        return (a + (1.0 - Hws)) * std::exp((s - w) * x) - Hs * std::exp(s * x);
    };
    // Beyond +-X0 only the pure exponentials survive; those tails are exact.
    auto super = [&](double x) {
        const cplx a = cexpm1(w * log_theta_jet(std::abs(x)).g);
        return std::abs(a * (x >= 0 ? std::exp(s * x) : std::exp((s - w) * x)));
    };
    double X0 = 1.0;
    for (int side : {+1, -1}) {
        double peak = 0.0;
        for (double x = 0.0;; x += 0.125) {
            if (x > 40.0) throw AccuracyError("Z: integrand does not decay");
            const double m = super(side * x);
            peak = std::max(peak, m);
            if (x >= 1.0 && m < 1e-22 * peak) {
                X0 = std::max(X0, x);
                break;
            }
        }
    }
    const double rtol = std::max(1e-15, std::min(1e-10, 0.01 * ctx.tol));
    QuadratureResult q = panel_integrate(body, -X0, X0, rtol);
    cplx tails = -(1.0 - Hs) * std::exp(s * X0) / s + Hws * std::exp((s - w) * X0) / (s - w) +
                 (1.0 - Hws) * std::exp(-(s - w) * X0) / (s - w) - Hs * std::exp(-s * X0) / s;
    return {q.value + tails, q.error, region};
}

Zeta2Value Z_continued(cplx w, cplx s, const EvalContext& ctx) {
    ctx.validate();
    const auto r = continued_integral(*rational_profile(), w, s, ctx);
    return {r.value, r.error, classify_region(w, s)};
}

Zeta2Value Z_from_xi(cplx w, cplx s, const EvalContext& ctx) {
    if (w == cplx(0.0)) throw DegenerateError("Z: w = 0, where Z vanishes identically; use xi");
    if (s == cplx(0.0) || s == w) throw DomainError("Z: pole at s = 0 or s = w");
    const Zeta2Value x = xi_value(w, s, ctx);
    const cplx f = 2.0 * w / (s * (s - w));
    return {f * x.value, std::abs(f) * x.quadrature_error_estimate, x.region};
}

Zeta2Value xi_value(cplx w, cplx s, const EvalContext& ctx) {
    ctx.validate();
    const auto r = (*cached_evaluator(rational_profile(), w, ctx.tol))(s);
    return {r.value, r.error, classify_region(w, s)};
}

cplx xi(cplx w, cplx s, const EvalContext& ctx) { return xi_value(w, s, ctx).value; }

Zeta2Value xi_on_contour(cplx w, cplx s, double y, const EvalContext& ctx) {
    ctx.validate();
    if (!(std::abs(y) < kPi / 4)) throw DomainError("xi: contour offset must satisfy |y| < pi/4");
    const auto r = cached_evaluator(rational_profile(), w, ctx.tol)->on_contour(s, y);
    return {r.value, r.error, classify_region(w, s)};
}

cplx completed_zeta(cplx s, const EvalContext& ctx) {
    if (s == cplx(0.0) || s == cplx(1.0)) throw DomainError("completed_zeta: pole at s = 0 or 1");
    const double rate = std::max({0.0, 0.5 * s.real(), 0.5 * (1.0 - s.real())});
    auto psi = [](double v) {
        const double t = std::exp(v);
        double acc = 0.0;
        for (long n = 1;; ++n) {
            const double e = std::exp(-kPi * double(n) * double(n) * t);
            acc += e;
            if (e < 1e-19 * acc) break;
        }
        return acc;
    };
    double V = 1.0;
    while (std::exp(-kPi * std::exp(V) + rate * V) > 1e-22) V += 0.25;
    auto body = [&](double v) { return psi(v) * (std::exp(0.5 * s * v) + std::exp(0.5 * (1.0 - s) * v)); };
    boost::math::quadrature::tanh_sinh<double> ts(15);
    const double rtol = std::max(1e-15, std::min(1e-10, 0.01 * ctx.tol));
    const double re = ts.integrate([&](double v) { return body(v).real(); }, 0.0, V, rtol);
    const double im = ts.integrate([&](double v) { return body(v).imag(); }, 0.0, V, rtol);
    return cplx(re, im) - 1.0 / s - 1.0 / (1.0 - s);
}

cplx xi0_closed(cplx s, const EvalContext& ctx) {
    auto direct = [&](cplx z) {
        const cplx a = 1.0 - std::pow(2.0, 1.0 + 0.5 * z);
        const cplx b = 1.0 - std::pow(2.0, 1.0 - 0.5 * z);
        return -(z * z / 8.0) * a * b * completed_zeta(0.5 * z, ctx) * completed_zeta(-0.5 * z, ctx);
    };
    if (s == cplx(0.0)) return 0.5;
    for (double p : {0.0, 2.0, -2.0}) {
        if (std::abs(s - p) < 0.05) {
            // Cauchy integral over a circle around the removable point.
            const double r = 0.2;
            const int n = 32;
            cplx acc = 0.0;
            for (int k = 0; k < n; ++k) {
                const cplx e = std::polar(r, 2.0 * kPi * (k + 0.5) / n);
                acc += direct(p + e) * e / (p + e - s);
            }
            return acc / double(n);
        }
    }
    return direct(s);
}

cplx moment_transform(const std::vector<cplx>& Q, cplx w, double sigma, cplx z, const EvalContext& ctx) {
    ctx.validate();
    if (sigma == 0.0 || sigma == w.real()) throw DomainError("moment_transform: sigma must avoid {0, Re w}");
    if (!(std::abs(z.imag()) < kPi / 4)) throw DomainError("moment_transform: |Im z| must be < pi/4");
    const size_t n = std::max<size_t>(Q.size(), 1);
    const Series th = theta_series(z, n);
    Series lr = ser_log_ratio(th);
    for (auto& c : lr) c *= w;
    Series pw = ser_exp0(lr);
    const cplx lead = std::exp(w * log_theta_jet(z).g);
    cplx acc = 0.0;
    double fact = 1.0;
    for (size_t j = 0; j < Q.size(); ++j) {
        if (j) fact *= double(j);
        acc += Q[j] * ((j % 2) ? -1.0 : 1.0) * fact * lead * pw[j];
    }
    const cplx q0 = Q.empty() ? cplx(0.0) : Q[0];
    acc -= q0 * heaviside(sigma);
    acc -= poly_eval(Q, w) * heaviside(w - sigma) * std::exp(-w * z);
    return acc;
}

cplx moment_transform_fourier(const std::vector<cplx>& Q, cplx w, double sigma, cplx z,
                              const EvalContext& ctx) {
    ctx.validate();
    if (sigma == 0.0 || sigma == w.real()) throw DomainError("moment_transform: sigma must avoid {0, Re w}");
    const double rate = kPi / 4 - std::abs(z.imag());
    if (!(rate > 0.0)) throw DomainError("moment_transform: |Im z| must be < pi/4");
    if (w == cplx(0.0)) return 0.0;
    // Poles of 1/(s(s-w)) sit at distance |sigma| and |Re w - sigma| from
    // the integration line; the step keeps aliasing below e^{-40}.
    const double d = std::min(std::abs(sigma), std::abs(w.real() - sigma));
    const double h = std::min(0.2, 2.0 * kPi * d / 40.0);
    const double T = (45.0 + 2.0 * double(Q.size()) * std::log(60.0)) / rate;
    auto f = [&](double t) {
        const cplx s(sigma, t);
        const cplx zeta = 2.0 * w * xi(w, s, ctx) / (s * (s - w));
        return poly_eval(Q, s) * zeta * std::exp(-s * z);
    };
    cplx acc = f(0.0);
    for (double t = h; t <= T; t += h) acc += f(t) + f(-t);
    return acc * h / (2.0 * kPi);
}

}  // namespace arakelov
