#include "arakelov/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "arakelov/theta_kernel.hpp"
#include "arakelov/zeta2.hpp"

namespace arakelov {

namespace {

constexpr double kPi = std::numbers::pi;

void check_cone(double u, double v) {
    if (!(u > 0.0) || !(std::abs(v) < u))
        throw DomainError("semigroup: (u, v) must satisfy u > 0 and |v| < u");
}

GaussPsi mul(const GaussPsi& a, const GaussPsi& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussPsi scale(const GaussPsi& a, const mpq_class& c) { return {a.re * c, a.im * c}; }

void add_to(GaussPsi& a, const GaussPsi& b) {
    a.re += b.re;
    a.im += b.im;
}

using RSeries = std::vector<mpq_class>;

RSeries rmul(const RSeries& a, const RSeries& b) {
    RSeries c(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

}  // namespace

cplx density(double u, double v, double x, const EvalContext& ctx) {
    check_cone(u, v);
    const cplx w = -u;
    const cplx s(-0.5 * (u + v), x);
    return std::exp(u * std::log(theta_one())) / (2.0 * kPi) * Z_from_xi(w, s, ctx).value;
}

cplx DensityGrid::mass() const {
    cplx acc = 0.0;
    for (const auto& [x, f] : samples) acc += f;
    return acc * spacing;
}

cplx DensityGrid::moment(int k) const {
    cplx acc = 0.0;
    for (const auto& [x, f] : samples) acc += std::pow(x, k) * f;
    return acc * spacing;
}

DensityGrid density_grid(double u, double v, const EvalContext& ctx, double extent, double spacing) {
    check_cone(u, v);
    DensityGrid g;
    g.u = u;
    g.v = v;
    g.spacing = spacing > 0.0 ? spacing : 0.05 * std::sqrt(u);
    const long K = long(std::floor(extent / g.spacing));
    g.samples.resize(size_t(2 * K + 1));
    parallel_for(2 * K + 1, ctx.threads, [&](long i) {
        const double x = double(i - K) * g.spacing;
        g.samples[size_t(i)] = {x, density(u, v, x, ctx)};
    });
    return g;
}

double char_function_check(double u, double v, double r, const EvalContext& ctx) {
    const DensityGrid g = density_grid(u, v, ctx);
    cplx acc = 0.0;
    for (const auto& [x, f] : g.samples) acc += f * std::exp(cplx(0.0, x * r));
    acc *= g.spacing;
    const cplx expect = std::pow(f_char(r, ctx), u) * std::exp(0.5 * v * r);
    return std::abs(acc - expect);
}

double canonical_density(double x, const EvalContext& ctx) { return xi(0.0, cplx(0.0, x), ctx).real() / kPi; }

double canonical_density_closed(double x, const EvalContext& ctx) {
    if (std::abs(x) < 0.1) return xi0_closed(cplx(0.0, x), ctx).real() / kPi;
    const cplx a = 1.0 - std::pow(2.0, cplx(1.0, 0.5 * x));
    const cplx z = completed_zeta(cplx(0.0, 0.5 * x), ctx);
    return x * x / (8.0 * kPi) * std::norm(a) * std::norm(z);
}

double canonical_mass() {
    const double t = theta_one();
    return kPi * kPi * std::pow(t, 8) / 8.0 - 0.5;
}

double canonical_mass_quadrature(const EvalContext& ctx, double extent) {
    const double h = 0.1;
    const long K = long(extent / h);
    std::vector<double> f(size_t(K + 1));
    parallel_for(K + 1, ctx.threads, [&](long k) { f[size_t(k)] = canonical_density(double(k) * h, ctx); });
    double acc = f[0];
    for (long k = 1; k <= K; ++k) acc += 2.0 * f[size_t(k)];
    return acc * h;
}

double log_char_curvature(double r) { return -log_theta_jet(cplx(-r, 0.0)).d2g.real(); }

FellerMean feller_mean_integral(cplx w, const EvalContext& ctx) {
    FellerMean m;
    const double h = 0.1;
    auto f = [&](double x) { return xi(w, 0.5 * w + cplx(0.0, x), ctx); };
    cplx acc = f(0.0);
    double peak = std::abs(acc);
    for (long k = 1;; ++k) {
        const double x = double(k) * h;
        const cplx a = f(x), b = f(-x);
        acc += a + b;
        peak = std::max({peak, std::abs(a), std::abs(b)});
        if (x > 10.0 && std::abs(a) + std::abs(b) < 1e-18 * peak) break;
        if (x > 200.0) throw AccuracyError("feller_mean_integral: integrand does not decay");
    }
    m.quadrature = acc * h / (2.0 * kPi);
    const double p2 = psi2();
    m.closed_form = std::exp(w * std::log(theta_one())) * (p2 * p2 / 16.0 - w / 8.0 - 0.25);
    m.difference = std::abs(m.quadrature - m.closed_form);
    return m;
}

std::string GaussPsi::to_string() const {
    if (im.is_zero()) return re.to_string();
    if (re.is_zero()) return "i*(" + im.to_string() + ")";
    return re.to_string() + " + i*(" + im.to_string() + ")";
}

CumulantTable cumulants(int k_max) {
    if (k_max < 1) throw DomainError("cumulants: k_max must be >= 1");
    const size_t n = size_t(k_max) + 1;
    // E = e^{-2r} - 1 and P_j = E^j / j!.
    RSeries E(n, 0);
    {
        mpq_class c = 1;
        for (size_t k = 1; k < n; ++k) {
            c *= mpq_class(-2, long(k));
            E[k] = c;
        }
    }
    std::vector<PsiPolynomial> a(n);  // [r^k] log f(r)
    a[1] = PsiPolynomial::constant(mpq_class(1, 2));
    RSeries P(n, 0);
    P[0] = 1;
    for (int j = 1; j <= k_max; ++j) {
        P = rmul(P, E);
        for (auto& c : P) c /= j;
        const PsiPolynomial R = R_symbolic(j);
        for (size_t k = size_t(j); k < n; ++k)
            if (P[k] != 0) a[k] -= R * P[k];
    }
    CumulantTable t;
    mpz_class fact = 1;
    for (int k = 1; k <= k_max; ++k) {
        fact *= k;
        CumulantEntry e;
        e.k = k;
        const PsiPolynomial base = a[size_t(k)] * mpq_class(fact);
        // i^{-k}
        switch (k % 4) {
            case 0: e.u_coeff.re = base; break;
            case 1: e.u_coeff.im = base * mpq_class(-1); break;
            case 2: e.u_coeff.re = base * mpq_class(-1); break;
            default: e.u_coeff.im = base; break;
        }
        if (k == 1) e.v_coeff.im = PsiPolynomial::constant(mpq_class(-1, 2));
        t.entries.push_back(std::move(e));
    }
    return t;
}

cplx MomentPolynomial::evaluate(double u, double v, double p2) const {
    cplx acc = 0.0;
    for (const auto& [ij, c] : terms) acc += c.evaluate(p2) * std::pow(u, ij.first) * std::pow(v, ij.second);
    return acc;
}

std::string MomentPolynomial::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ij, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (ij.first) os << "*u^" << ij.first;
        if (ij.second) os << "*v^" << ij.second;
    }
    return os.str();
}

std::vector<MomentPolynomial> moments(int k_max) {
    if (k_max < 0) throw DomainError("moments: k_max must be >= 0");
    std::vector<MomentPolynomial> M(size_t(k_max) + 1);
    M[0].terms[{0, 0}] = GaussPsi{PsiPolynomial::constant(1), {}};
    if (k_max == 0) return M;
    const CumulantTable kt = cumulants(k_max);
    for (int n = 1; n <= k_max; ++n) {
        MomentPolynomial out;
        mpz_class binom = 1;  // C(n-1, k-1)
        for (int k = 1; k <= n; ++k) {
            if (k > 1) binom = binom * (n - k + 1) / (k - 1);
            const auto& e = kt.at(k);
            for (const auto& [ij, c] : M[size_t(n - k)].terms) {
                if (!e.u_coeff.is_zero()) add_to(out.terms[{ij.first + 1, ij.second}], scale(mul(e.u_coeff, c), mpq_class(binom)));
                if (!e.v_coeff.is_zero()) add_to(out.terms[{ij.first, ij.second + 1}], scale(mul(e.v_coeff, c), mpq_class(binom)));
            }
        }
        for (auto it = out.terms.begin(); it != out.terms.end();) it = it->second.is_zero() ? out.terms.erase(it) : std::next(it);
        M[size_t(n)] = std::move(out);
    }
    return M;
}

std::vector<cplx> moments_numeric(int k_max, double u, double v, const EvalContext& ctx) {
    const DensityGrid g = density_grid(u, v, ctx, 60.0);
    std::vector<cplx> out;
    for (int k = 0; k <= k_max; ++k) out.push_back(g.moment(k));
    return out;
}

double convolution_check(double u1, double v1, double u2, double v2, double x, const EvalContext& ctx) {
    check_cone(u1, v1);
    check_cone(u2, v2);
    const double h = 0.05 * std::sqrt(std::min(u1, u2));
    const long K = long(40.0 / h);
    std::vector<cplx> terms(size_t(2 * K + 1));
    parallel_for(2 * K + 1, ctx.threads, [&](long i) {
        const double y = double(i - K) * h;
        terms[size_t(i)] = density(u1, v1, y, ctx) * density(u2, v2, x - y, ctx);
    });
    cplx acc = 0.0;
    for (const auto& t : terms) acc += t;
    return std::abs(acc * h - density(u1 + u2, v1 + v2, x, ctx));
}

PositivityReport positivity_scan(double u, double t_max, const EvalContext& ctx) {
    if (!(u > 0.0)) throw DomainError("positivity_scan: u must be positive");
    auto Zline = [&](double t) { return Z_from_xi(-u, cplx(-0.5 * u, t), ctx).value.real(); };
    const double step = 0.05;
    const long K = long(std::ceil(t_max / step));
    std::vector<double> vals(size_t(2 * K + 1));
    parallel_for(2 * K + 1, ctx.threads, [&](long i) { vals[size_t(i)] = Zline(std::clamp(double(i - K) * step, -t_max, t_max)); });
    PositivityReport rep;
    rep.samples = long(vals.size());
    const auto it = std::min_element(vals.begin(), vals.end());
    rep.min_value = *it;
    rep.t_at_min = std::clamp(double(it - vals.begin() - K) * step, -t_max, t_max);
    // Golden-section refinement around the grid minimum.
    double a = std::max(-t_max, rep.t_at_min - step), b = std::min(t_max, rep.t_at_min + step);
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = Zline(c), fd = Zline(d);
    for (int i = 0; i < 40; ++i) {
        if (fc < fd) {
            b = d; d = c; fd = fc; c = b - g * (b - a); fc = Zline(c);
        } else {
            a = c; c = d; fc = fd; d = a + g * (b - a); fd = Zline(d);
        }
    }
    rep.samples += 42;
    const double tm = 0.5 * (a + b), fm = Zline(tm);
    if (fm < rep.min_value) {
        rep.min_value = fm;
        rep.t_at_min = tm;
    }
    return rep;
}

}  // namespace arakelov
