#include "arakelov/numfield.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <tuple>

#include "arakelov/kernel_profile.hpp"
#include "arakelov/theta_kernel.hpp"

namespace arakelov {

namespace {

constexpr double kPi = std::numbers::pi;

// Samples f(kh) = gamma_K(w, kh) e^{w kh / 2}, k >= 0, at a fixed precision.
// f is even, so xi_K(w, w/2 + it) = h [f(0)/2 + sum_k f(kh) cos(t k h)].
struct CriticalSlice {
    unsigned digits = 0;
    double h = 0.0;
    std::vector<mpreal> f;
};

class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits) : saved_(mpreal::default_precision()) {
        mpreal::default_precision(digits);
    }
    ~PrecisionScope() { mpreal::default_precision(saved_); }

private:
    unsigned saved_;
};

std::shared_ptr<const CriticalSlice> build_slice(const FieldDescriptor& K, double w, int bits, double h) {
    auto sl = std::make_shared<CriticalSlice>();
    sl->digits = unsigned(std::ceil(bits * std::log10(2.0))) + 2;
    sl->h = h;
    PrecisionScope scope(sl->digits);
    const mpreal pi = boost::math::constants::pi<mpreal>();
    const mpreal k = 2 * pi / sqrt(mpreal(std::abs(K.discriminant)));
    const double kd = k.convert_to<double>();
    const double cutoff = bits * std::log(2.0) + 60.0 + 2.0 * std::abs(w);
    const long n_max = long(std::ceil(cutoff / kd)) + 1;
    const auto r = representation_counts(K, n_max);
    const double X = std::log(cutoff / kd) + 0.75;
    const long n = long(std::ceil(X / h));
    sl->f.reserve(size_t(n) + 1);
    const mpreal W = w;
    for (long i = 0; i <= n; ++i) {
        const mpreal x = mpreal(h) * i;
        const mpreal t = exp(x);
        mpreal s0 = 0, s1 = 0, s2 = 0;
        for (long N = 1; N <= n_max; ++N) {
            if (!r[size_t(N)]) continue;
            const mpreal a = k * N * t;
            if (a > cutoff) break;
            const mpreal e = r[size_t(N)] * exp(-a);
            s0 += e;
            s1 += a * e;
            s2 += a * a * e;
        }
        const mpreal G = 1 + s0;
        const mpreal dg = -s1 / G;
        const mpreal d2g = (s2 - s1) / G - dg * dg;
        const mpreal g = log1p(s0);
        sl->f.push_back(exp(W * g + W * x / 2) * (d2g + W * dg * (dg + 1)));
    }
    return sl;
}

std::shared_ptr<const CriticalSlice> critical_slice(const FieldDescriptor& K, double w, double t,
                                                    const EvalContext& ctx) {
    double t_hi = 25.0;
    while (t_hi < std::abs(t)) t_hi *= 2.0;
    const int bits = std::max(ctx.precision_bits, int(std::ceil(kPi * t_hi / (2.0 * std::log(2.0)))) + 64);
    const double h = 0.01;
    using Key = std::tuple<int, double, int>;
    static std::mutex mu;
    static std::map<Key, std::shared_ptr<const CriticalSlice>> cache;
    const Key key{K.discriminant, w, bits};
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto sl = build_slice(K, w, bits, h);
    std::lock_guard lock(mu);
    return cache.emplace(key, std::move(sl)).first->second;
}

}  // namespace

cplx Z_K(const FieldDescriptor& K, cplx w, cplx s, const EvalContext& ctx) {
    ctx.validate();
    const FieldDescriptor F = FieldDescriptor::from_discriminant(K.discriminant);
    return continued_integral(*field_profile(F), w, s, ctx).value;
}

cplx xi_K(const FieldDescriptor& K, cplx w, cplx s, const EvalContext& ctx) {
    ctx.validate();
    const FieldDescriptor F = FieldDescriptor::from_discriminant(K.discriminant);
    return (*cached_evaluator(field_profile(F), w, ctx.tol))(s).value;
}

double xi_K_critical(const FieldDescriptor& K, double w, double t, const EvalContext& ctx) {
    ctx.validate();
    const FieldDescriptor F = FieldDescriptor::from_discriminant(K.discriminant);
    const auto sl = critical_slice(F, w, t, ctx);
    PrecisionScope scope(sl->digits);
    const mpreal c1 = cos(mpreal(t) * sl->h);
    mpreal prev = 1, cur = c1;
    mpreal acc = sl->f[0] / 2;
    for (size_t k = 1; k < sl->f.size(); ++k) {
        acc += sl->f[k] * cur;
        const mpreal next = 2 * c1 * cur - prev;
        prev = cur;
        cur = next;
    }
    return (acc * sl->h).convert_to<double>();
}

double xi_K0(const FieldDescriptor& K, double t, const EvalContext& ctx) { return xi_K_critical(K, 0.0, t, ctx); }

std::vector<std::pair<double, double>> sign_scan(const FieldDescriptor& K, double t0, double t1, double step,
                                                 const EvalContext& ctx) {
    if (!(step > 0.0)) throw DomainError("sign_scan: step must be positive");
    if (!(t1 > t0)) throw DomainError("sign_scan: empty range");
    const long n = long(std::ceil((t1 - t0) / step));
    std::vector<double> ts(size_t(n) + 1), vs(size_t(n) + 1);
    for (long i = 0; i <= n; ++i) ts[size_t(i)] = std::min(t1, t0 + double(i) * step);
    parallel_for(n + 1, ctx.threads, [&](long i) { vs[size_t(i)] = xi_K0(K, ts[size_t(i)], ctx); });
    std::vector<std::pair<double, double>> out;
    for (long i = 0; i < n; ++i) {
        double a = ts[size_t(i)], b = ts[size_t(i) + 1];
        double fa = vs[size_t(i)], fb = vs[size_t(i) + 1];
        if (fa == 0.0) {
            out.emplace_back(a, a);
            continue;
        }
        if ((fa < 0) == (fb < 0) || fb == 0.0) continue;
        while (b - a > 1e-3) {
            const double m = 0.5 * (a + b);
            const double fm = xi_K0(K, m, ctx);
            if ((fm < 0) == (fa < 0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        out.emplace_back(a, b);
    }
    return out;
}

LineMinimum critical_line_scan(const FieldDescriptor& K, double u, double t_max, const EvalContext& ctx,
                               double step) {
    if (!(u > 0.0)) throw DomainError("critical_line_scan: u must be positive");
    if (!(step > 0.0) || !(t_max > 0.0)) throw DomainError("critical_line_scan: bad range");
    // Z_K(-u, -u/2 + it) = 2u xi_K / (u^2/4 + t^2).
    auto Zline = [&](double t) { return 2.0 * u * xi_K_critical(K, -u, t, ctx) / (0.25 * u * u + t * t); };
    const long n = long(std::ceil(t_max / step));
    std::vector<double> vs(size_t(n) + 1);
    parallel_for(n + 1, ctx.threads, [&](long i) { vs[size_t(i)] = Zline(std::min(t_max, double(i) * step)); });
    const auto it = std::min_element(vs.begin(), vs.end());
    LineMinimum m{*it, std::min(t_max, double(it - vs.begin()) * step)};
    double a = std::max(0.0, m.t_at_min - step), b = std::min(t_max, m.t_at_min + step);
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a), d = a + g * (b - a), fc = Zline(c), fd = Zline(d);
    for (int i = 0; i < 40; ++i) {
        if (fc < fd) {
            b = d; d = c; fd = fc; c = b - g * (b - a); fc = Zline(c);
        } else {
            a = c; c = d; fc = fd; d = a + g * (b - a); fd = Zline(d);
        }
    }
    const double tm = 0.5 * (a + b), fm = Zline(tm);
    if (fm < m.min_value) m = {fm, tm};
    return m;
}

FieldInvariants invariants(const FieldDescriptor& K, const EvalContext& ctx) {
    const FieldDescriptor F = FieldDescriptor::from_discriminant(K.discriminant);
    FieldInvariants inv;
    // Theta_K(sqrt|D|) = sum_alpha exp(-2 pi N(alpha)).
    inv.eta_K = norm_form_theta(F, F.sqrt_abs_disc, ctx);
    inv.genus_g = std::log(inv.eta_K * F.sqrt_abs_disc);
    inv.genus_tilde = 1.0 + 0.5 * std::log(double(std::abs(F.discriminant)));
    return inv;
}

FieldInvariants rational_invariants(const EvalContext&) {
    FieldInvariants inv;
    inv.eta_K = theta_one();
    inv.genus_g = std::log(inv.eta_K);
    inv.genus_tilde = 1.0;
    return inv;
}

}  // namespace arakelov
