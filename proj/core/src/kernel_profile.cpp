#include "arakelov/kernel_profile.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <sstream>

namespace arakelov {

namespace {

constexpr double kPi = std::numbers::pi;

class RationalProfile final : public KernelProfile {
public:
    LogJet jet(cplx z) const override { return log_theta_jet(z); }
    double max_shift() const override { return kPi / 4; }
    std::string id() const override { return "Q"; }
};

// G(x) = Theta_K(e^x) = sum_N r(N) exp(-k N e^x), k = 2 pi / sqrt|D|.
class FieldProfile final : public KernelProfile {
public:
    explicit FieldProfile(const FieldDescriptor& K) : K_(K), k_(2.0 * kPi / K.sqrt_abs_disc) {
        const long n_max = long(std::ceil(52.0 / k_)) + 1;
        const auto r = representation_counts(K, n_max);
        for (long n = 1; n <= n_max; ++n)
            if (r[n] != 0) terms_.push_back({double(n), double(r[n])});
    }

    LogJet jet(cplx z) const override {
        if (z.imag() != 0.0) throw DomainError("field profile: real arguments only");
        const double x = z.real();
        if (x >= 0.0) return right(x);
        const LogJet r = right(-x);
        return {-x + r.g, -1.0 - r.dg, r.d2g, -r.dg};
    }
    double max_shift() const override { return 0.0; }
    std::string id() const override { return "K" + std::to_string(K_.discriminant); }

private:
    LogJet right(double x) const {
        const double t = std::exp(x);
        double s0 = 0.0, s1 = 0.0, s2 = 0.0;
        for (const auto& [n, r] : terms_) {
            const double a = k_ * n * t;
            if (a > 745.0) break;
            const double e = r * std::exp(-a);
            s0 += e;
            s1 += a * e;
            s2 += a * a * e;
        }
        const double G = 1.0 + s0;
        const double dg = -s1 / G;
        return {std::log1p(s0), dg, (s2 - s1) / G - dg * dg, dg + 1.0};
    }

    FieldDescriptor K_;
    double k_;
    std::vector<std::pair<double, double>> terms_;
};

// Distance from the real axis at which |gamma| e^{cap |x|} has dropped
// below 1e-22 of its running peak, scanning outward on one side.
double truncation_point(const KernelProfile& p, cplx w, double y, double cap, int side) {
    double peak = 0.0;
    double last = 0.0;
    for (double x = 0.0; x <= 40.0; x += 0.125) {
        const cplx g = gamma_from_jet(w, p.jet(cplx(side * x, y)));
        const double m = std::abs(g) * std::exp(cap * x);
        if (!std::isfinite(m)) throw AccuracyError("xi: kernel overflow while truncating");
        peak = std::max(peak, m);
        if (x >= 1.0 && m < 1e-22 * peak && m <= last) return x;
        last = m;
    }
    throw AccuracyError("xi: kernel does not decay within |x| <= 40");
}

}  // namespace

cplx cexpm1(cplx z) {
    const double a = z.real(), b = z.imag();
    const double sh = std::sin(0.5 * b);
    return {std::expm1(a) * std::cos(b) - 2.0 * sh * sh, std::exp(a) * std::sin(b)};
}

std::shared_ptr<const KernelProfile> rational_profile() {
    static const auto p = std::make_shared<const RationalProfile>();
    return p;
}

std::shared_ptr<const KernelProfile> field_profile(const FieldDescriptor& K) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const KernelProfile>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[K.discriminant];
    if (!slot) slot = std::make_shared<const FieldProfile>(K);
    return slot;
}

XiSlice::XiSlice(const KernelProfile& p, cplx w, double y, double h, double sigma_cap)
    : y_(y), h_(h), cap_(sigma_cap) {
    const double X = std::max(truncation_point(p, w, y, sigma_cap, +1),
                              truncation_point(p, w, y, sigma_cap, -1));
    const long half = long(std::ceil(X / h));
    x0_ = -double(half) * h;
    const long n = 4 * half + 1;
    gam_.resize(size_t(n));
    for (long k = 0; k < n; ++k) gam_[size_t(k)] = gamma_from_jet(w, p.jet(cplx(x0_ + 0.5 * h * double(k), y)));
}

QuadratureResult XiSlice::evaluate(cplx s) const {
    const double h2 = 0.5 * h_;
    const cplx step = std::exp(h2 * s);
    cplx e = std::exp(x0_ * s);
    cplx fine = 0.0, coarse = 0.0;
    double l1 = 0.0;
    const size_t n = gam_.size();
    for (size_t k = 0; k < n; ++k) {
        if (k % 32 == 0 && k) e = std::exp((x0_ + h2 * double(k)) * s);
        const cplx term = gam_[k] * e;
        fine += term;
        if (k % 2 == 0) coarse += term;
        l1 += std::abs(term);
        e *= step;
    }
    fine *= h2;
    coarse *= h_;
    l1 *= h2;
    const cplx pref = 0.5 * std::exp(cplx(0.0, y_) * s);
    const double ap = std::abs(pref);
    QuadratureResult r;
    r.value = pref * fine;
    r.rounding = ap * l1 * 4e-16;
    r.error = std::max(ap * std::abs(fine - coarse), r.rounding);
    return r;
}

XiEvaluator::XiEvaluator(std::shared_ptr<const KernelProfile> p, cplx w, double tol)
    : profile_(std::move(p)), w_(w), tol_(tol) {}

std::shared_ptr<const XiSlice> XiEvaluator::slice(double y, double h, double cap) const {
    const auto key = std::make_tuple(y, h, cap);
    {
        std::lock_guard lock(mu_);
        auto it = slices_.find(key);
        if (it != slices_.end()) return it->second;
    }
    // Built outside the lock; a racing duplicate is harmless.
    auto s = std::make_shared<const XiSlice>(*profile_, w_, y, h, cap);
    std::lock_guard lock(mu_);
    return slices_.emplace(key, std::move(s)).first->second;
}

QuadratureResult XiEvaluator::run(cplx s, double y, double h) const {
    const double cap = 10.0 * std::ceil((std::abs(s.real()) + 0.5) / 10.0);
    for (int refine = 0; refine < 3; ++refine) {
        const auto r = slice(y, std::ldexp(h, -refine), cap)->evaluate(s);
        if (!std::isfinite(r.value.real()) || !std::isfinite(r.value.imag()))
            throw AccuracyError("xi: non-finite quadrature result");
        // Rounding-limited results are accepted; they cannot improve.
        if (r.error <= tol_ || r.error <= 10.0 * r.rounding) return r;
    }
    throw AccuracyError("xi: quadrature did not reach tolerance after refinement");
}

QuadratureResult XiEvaluator::operator()(cplx s) const {
    const double t = s.imag();
    const double at = std::abs(t);
    if (profile_->max_shift() > 0.0) {
        if (at <= 10.0) return run(s, 0.0, 0.103 * kPi / 4);
        // Level j shifts to within delta_j of the singular line and covers
        // |t| <= 8 / delta_j.
        const int j = std::max(1, int(std::ceil(2.0 * std::log2(kPi * at / 32.0))));
        const double delta = kPi / 4 * std::pow(2.0, -0.5 * j);
        const double y = std::copysign(kPi / 4 - delta, t);
        return run(s, y, 0.103 * delta);
    }
    int j = 0;
    while (10.0 * std::ldexp(1.0, j) < at) ++j;
    const double t_hi = 10.0 * std::ldexp(1.0, j);
    return run(s, 0.0, std::min(0.05, 2.0 * kPi / (1.5 * t_hi + 60.0)));
}

QuadratureResult XiEvaluator::on_contour(cplx s, double y) const {
    const double d = profile_->max_shift() - std::abs(y);
    if (y != 0.0 && !(d > 0.0)) throw DomainError("xi: contour offset outside the kernel strip");
    double h = profile_->max_shift() > 0.0 ? 0.103 * d : 0.05;
    h = std::min(h, 2.0 * kPi / (1.3 * std::abs(s.imag()) + 40.0));
    return run(s, y, h);
}

std::shared_ptr<const XiEvaluator> cached_evaluator(std::shared_ptr<const KernelProfile> p, cplx w,
                                                    double tol) {
    using Key = std::tuple<std::string, double, double, double>;
    static std::mutex mu;
    static std::map<Key, std::shared_ptr<const XiEvaluator>> cache;
    static std::deque<Key> order;
    const Key key{p->id(), w.real(), w.imag(), tol};
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    if (order.size() >= 64) {
        cache.erase(order.front());
        order.pop_front();
    }
    order.push_back(key);
    return cache.emplace(key, std::make_shared<const XiEvaluator>(std::move(p), w, tol)).first->second;
}

QuadratureResult continued_integral(const KernelProfile& p, cplx w, cplx s, const EvalContext& ctx) {
    if (s == cplx(0.0) || s == w) throw DomainError("continued integral: s is a pole (s = 0 or s = w)");
    const double rho = std::max({0.0, s.real(), (w - s).real()});
    auto body = [&](double x) {
        const cplx a = cexpm1(w * p.jet(cplx(x, 0.0)).g);
        return a * (std::exp(s * x) + std::exp((w - s) * x));
    };
    double peak = 0.0, X = 0.0;
    for (double x = 0.0;; x += 0.125) {
        if (x > 40.0) throw AccuracyError("continued integral: integrand does not decay");
        const double m = std::abs(body(x));
        peak = std::max(peak, m);
        if (x >= 1.0 && m < 1e-22 * std::max(peak, 1e-300) * std::exp(-rho)) {
            X = x;
            break;
        }
    }
    boost::math::quadrature::tanh_sinh<double> ts(15);
    const double rtol = std::max(1e-15, std::min(1e-10, 0.01 * ctx.tol));
    double er = 0.0, ei = 0.0, l1r = 0.0, l1i = 0.0;
    // Split at 1 so the super-exponential tail has its own panel.
    double re = 0.0, im = 0.0;
    for (auto [a, b] : {std::pair{0.0, std::min(1.0, X)}, std::pair{std::min(1.0, X), X}}) {
        if (b <= a) continue;
        double e1 = 0.0, e2 = 0.0, l1 = 0.0, l2 = 0.0;
        re += ts.integrate([&](double x) { return body(x).real(); }, a, b, rtol, &e1, &l1);
        im += ts.integrate([&](double x) { return body(x).imag(); }, a, b, rtol, &e2, &l2);
        er += e1 * l1;
        ei += e2 * l2;
        l1r += l1;
        l1i += l2;
    }
    QuadratureResult r;
    r.value = -1.0 / s + 1.0 / (s - w) + cplx(re, im);
    r.rounding = 1e-16 * (l1r + l1i);
    r.error = er + ei + r.rounding;
    return r;
}

}  // namespace arakelov
