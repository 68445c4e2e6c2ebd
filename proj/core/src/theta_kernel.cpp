#include "arakelov/theta_kernel.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numbers>

#include "arakelov/qseries.hpp"

namespace arakelov {

namespace {

constexpr double kPi = std::numbers::pi;

// Smallest N with 2 e^{-pi N^2 t} / (1 - e^{-pi (2N+1) t}) < tol.
long theta_terms(double t, double tol, long max_terms, double* bound) {
    for (long N = 1;; ++N) {
        double b = 2.0 * std::exp(-kPi * double(N) * N * t) /
                   (-std::expm1(-kPi * (2.0 * N + 1.0) * t));
        if (b < tol) {
            if (bound) *bound = b;
            return N;
        }
        if (N >= max_terms) throw TruncationError("theta: more than max_terms terms required");
    }
}

// log(1 + x) without losing the low bits of small x.
cplx clog1p(cplx x) {
    cplx u = 1.0 + x;
    if (u == 1.0) return x;
    return std::log(u) * x / (u - 1.0);
}

LogJet jet_right_half(cplx z) {
    const cplx tau = std::exp(2.0 * z);
    const double re = tau.real();
    cplx s0 = 0.0, s1 = 0.0, s2 = 0.0;
    for (long n = 1;; ++n) {
        const double n2 = double(n) * n;
        const double mag = std::exp(-kPi * n2 * re);
        const cplx e = std::exp(-kPi * n2 * tau);
        s0 += e;
        s1 += n2 * e;
        s2 += n2 * n2 * e;
        if (mag * n2 * n2 < 1e-19 * (std::abs(s2) + 1e-300) || mag < 1e-300) break;
    }
    const cplx th = 1.0 + 2.0 * s0;
    const cplx th_t = -2.0 * kPi * s1;
    const cplx th_tt = 2.0 * kPi * kPi * s2;
    const cplx dz = 2.0 * tau * th_t;
    const cplx d2z = 4.0 * tau * th_t + 4.0 * tau * tau * th_tt;
    LogJet j;
    j.dg = dz / th;
    j.d2g = d2z / th - j.dg * j.dg;
    j.dg1 = j.dg + 1.0;
    if (re >= 1.0) {
        j.g = clog1p(2.0 * s0);
    } else {
        // Triple product: log theta = sum log(1 - q^{2n}) + 2 log(1 + q^{2n-1}).
        const cplx q = std::exp(-kPi * tau);
        const cplx q2 = q * q;
        cplx odd = q, even = q2, acc = 0.0;
        while (std::abs(odd) > 1e-19) {
            acc += clog1p(-even) + 2.0 * clog1p(odd);
            odd *= q2;
            even *= q2;
        }
        j.g = acc;
    }
    return j;
}

}  // namespace

ThetaValue theta(double t, const EvalContext& ctx) {
    if (!(t > 0.0)) throw DomainError("theta: t must be positive");
    if (t < 1.0) {
        ThetaValue big = theta(1.0 / t, ctx);
        const double r = 1.0 / std::sqrt(t);
        return {big.value * r, big.truncation_error_bound * r};
    }
    double bound = 0.0;
    const long N = theta_terms(t, ctx.tol, ctx.max_terms, &bound);
    double sum = 0.0;
    for (long n = N; n >= 1; --n) sum += std::exp(-kPi * double(n) * n * t);
    return {1.0 + 2.0 * sum, bound};
}

mpreal theta_mp(const mpreal& t_in, const EvalContext& ctx) {
    const unsigned digits10 = static_cast<unsigned>(ctx.precision_bits * 0.30103) + 2;
    mpreal::default_precision(digits10);
    mpreal t(t_in, digits10);
    if (t <= 0) throw DomainError("theta_mp: t must be positive");
    if (t < 1) {
        mpreal inv = 1 / t;
        return theta_mp(inv, ctx) / sqrt(t);
    }
    const mpreal pi = boost::math::constants::pi<mpreal>();
    const mpreal eps = ldexp(mpreal(1), -ctx.precision_bits - 8);
    mpreal sum = 0;
    for (long n = 1; n <= ctx.max_terms; ++n) {
        mpreal term = exp(-pi * n * n * t);
        sum += term;
        if (term < eps) return 1 + 2 * sum;
    }
    throw TruncationError("theta_mp: more than max_terms terms required");
}

mpreal psi2_mp(const EvalContext& ctx) {
    const unsigned digits10 = static_cast<unsigned>(ctx.precision_bits * 0.30103) + 2;
    mpreal::default_precision(digits10);
    const mpreal pi = boost::math::constants::pi<mpreal>();
    mpreal th = theta_mp(mpreal(1), ctx);
    return pi * th * th * th * th;
}

double theta_one() {
    static const double v = [] {
        EvalContext c;
        c.tol = 1e-18;
        return theta(1.0, c).value;
    }();
    return v;
}

double psi2() {
    static const double v = [] {
        const double t = theta_one();
        return kPi * t * t * t * t;
    }();
    return v;
}

cplx jacobi_theta3(cplx z, cplx q, const EvalContext& ctx) {
    const double aq = std::abs(q);
    if (!(aq < 1.0)) throw DomainError("jacobi_theta3: |q| must be < 1");
    if (aq == 0.0) return 1.0;
    const cplx e = std::exp(2.0 * kPi * cplx(0, 1) * z);
    const double grow = std::exp(2.0 * kPi * std::abs(z.imag()));
    cplx sum = 1.0, ep = 1.0, em = 1.0;
    for (long n = 1; n <= ctx.max_terms; ++n) {
        ep *= e;
        em /= e;
        const double mag = std::pow(aq, double(n) * n) * std::pow(grow, double(n));
        sum += std::pow(q, double(n) * n) * (ep + em);
        // Terms decay once n exceeds the peak of |q|^{n^2} grow^n.
        if (double(n) > std::log(grow) / (-2.0 * std::log(aq)) + 1.0 &&
            mag < 1e-3 * ctx.tol * std::max(1.0, std::abs(sum)))
            return sum;
    }
    throw TruncationError("jacobi_theta3: more than max_terms terms required");
}

cplx triple_product(cplx z, cplx q, const EvalContext& ctx) {
    const double aq = std::abs(q);
    if (!(aq < 1.0)) throw DomainError("triple_product: |q| must be < 1");
    if (aq == 0.0) return 1.0;
    const cplx e = std::exp(2.0 * kPi * cplx(0, 1) * z);
    const double big = std::max(std::abs(e), 1.0 / std::abs(e));
    const cplx q2 = q * q;
    cplx prod = 1.0, odd = q, even = q2;
    for (long n = 1; n <= ctx.max_terms; ++n) {
        prod *= (1.0 - even) * (1.0 + e * odd) * (1.0 + odd / e);
        if (std::pow(aq, 2.0 * n - 1.0) * big < 1e-3 * ctx.tol) return prod;
        odd *= q2;
        even *= q2;
    }
    throw TruncationError("triple_product: more than max_terms factors required");
}

double f_char(double r, const EvalContext& ctx) {
    // theta(1)/sqrt(theta(e^{-2r}) theta(e^{2r})) written without overflow:
    // theta(e^{-2|r|}) = e^{|r|} theta(e^{2|r|}).
    const double a = std::abs(r);
    const double big = theta(std::exp(2.0 * a), ctx).value;
    return theta_one() * std::exp(-0.5 * a) / big;
}

LogJet log_theta_jet(cplx z) {
    if (!(std::abs(z.imag()) < kPi / 4)) throw DomainError("log_theta_jet: |Im z| must be < pi/4");
    if (z.real() >= 0.0) return jet_right_half(z);
    // phi(z) = -z + phi(-z).
    LogJet r = jet_right_half(-z);
    return {-z + r.g, -1.0 - r.dg, r.d2g, -r.dg};
}

cplx gamma_from_jet(cplx w, const LogJet& j) {
    return std::exp(w * j.g) * (j.d2g + w * j.dg * j.dg1);
}

cplx gamma_kernel(cplx w, cplx z, const EvalContext&) {
    if (!(std::abs(z.imag()) < kPi / 4)) throw DomainError("gamma_kernel: |Im z| must be < pi/4");
    return gamma_from_jet(w, log_theta_jet(z));
}

double log_theta_deriv(int k, const EvalContext& ctx) {
    if (k < 1) throw DomainError("log_theta_deriv: k must be >= 1");
    // d^k/dt^k sum c'_m e^{-pi m t} at t = 1.
    double sum = 0.0;
    for (long m = 1; m <= ctx.max_terms; ++m) {
        const double pm = kPi * double(m);
        const double mag = std::exp(double(k) * std::log(pm) - pm);
        const double term = c_prime(m).get_d() * mag * ((k % 2) ? -1.0 : 1.0);
        sum += term;
        if (pm > k && 4.0 * mag * std::log(double(m) + 2.0) < 1e-3 * ctx.tol) return sum;
    }
    throw TruncationError("log_theta_deriv: series did not converge within max_terms");
}

namespace {

using Mono = std::array<int, 3>;  // exponents of x, y, z
using Poly3 = std::map<Mono, mpq_class>;

void add_term(Poly3& p, const Mono& m, const mpq_class& c) {
    if (c == 0) return;
    auto& slot = p[m];
    slot += c;
    if (slot == 0) p.erase(m);
}

Poly3 multiply(const Poly3& a, const Poly3& b) {
    Poly3 out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
            add_term(out, {ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    return out;
}

// Derivation with x' = x(z - y), y' = -y^2/2 + x^2/24 + z^2/8,
// z' = x^2/6 - yz - z^2/2.
Poly3 derive(const Poly3& p) {
    static const Poly3 dx = {{{1, 0, 1}, mpq_class(1)}, {{1, 1, 0}, mpq_class(-1)}};
    static const Poly3 dy = {{{0, 2, 0}, mpq_class(-1, 2)},
                             {{2, 0, 0}, mpq_class(1, 24)},
                             {{0, 0, 2}, mpq_class(1, 8)}};
    static const Poly3 dz = {{{2, 0, 0}, mpq_class(1, 6)},
                             {{0, 1, 1}, mpq_class(-1)},
                             {{0, 0, 2}, mpq_class(-1, 2)}};
    const Poly3* d[3] = {&dx, &dy, &dz};
    Poly3 out;
    for (const auto& [m, c] : p) {
        for (int v = 0; v < 3; ++v) {
            if (m[v] == 0) continue;
            Mono rest = m;
            rest[v] -= 1;
            Poly3 partial = {{rest, c * m[v]}};
            for (const auto& [mm, cc] : multiply(partial, *d[v])) add_term(out, mm, cc);
        }
    }
    return out;
}

}  // namespace

PsiPolynomial R_symbolic(int k) {
    if (k < 1) throw DomainError("R_symbolic: k must be >= 1");
    // d/dt log theta = (z - y)/4.
    Poly3 r = {{{0, 0, 1}, mpq_class(1, 4)}, {{0, 1, 0}, mpq_class(-1, 4)}};
    for (int i = 1; i < k; ++i) r = derive(r);
    // Evaluate at (x, y, z) = (psi2, 1, 0).
    std::vector<mpq_class> coeffs;
    for (const auto& [m, c] : r) {
        if (m[2] != 0) continue;
        if (static_cast<int>(coeffs.size()) <= m[0]) coeffs.resize(m[0] + 1, mpq_class(0));
        coeffs[m[0]] += c;
    }
    return PsiPolynomial(std::move(coeffs));
}

double norm_form_theta(const FieldDescriptor& K, double t, const EvalContext& ctx) {
    if (!(t > 0.0)) throw DomainError("norm_form_theta: t must be positive");
    const FieldDescriptor F = FieldDescriptor::from_discriminant(K.discriminant);
    if (t < 1.0) return norm_form_theta(F, 1.0 / t, ctx) / t;
    const double k = 2.0 * kPi / F.sqrt_abs_disc * t;
    // r(N) <= 6 (2 sqrt N + 1); bound the tail geometrically.
    long B = 1;
    while (6.0 * (2.0 * std::sqrt(double(B)) + 3.0) * std::exp(-k * B) / (-std::expm1(-k)) >= 1e-2 * ctx.tol) {
        if (++B > ctx.max_terms) throw TruncationError("norm_form_theta: more than max_terms terms");
    }
    const std::vector<long> r = representation_counts(F, B);
    double sum = 0.0;
    for (long N = B; N >= 0; --N)
        if (r[N]) sum += double(r[N]) * std::exp(-k * double(N));
    return sum;
}

}  // namespace arakelov
