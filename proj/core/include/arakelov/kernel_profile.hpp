#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "arakelov/context.hpp"
#include "arakelov/field.hpp"
#include "arakelov/theta_kernel.hpp"

namespace arakelov {

// A theta-type profile F on the real line with F(-x) = e^x F(x) and F -> 1
// super-exponentially as x -> +inf. Both theta(e^{2x}) and Theta_K(e^x)
// have this shape, so the continuation and the Fourier-Laplace
// representation are shared.
class KernelProfile {
public:
    virtual ~KernelProfile() = default;
    // log F and its first two derivatives at z (reflection handled inside).
    virtual LogJet jet(cplx z) const = 0;
    // Largest |Im z| at which jet() may be called; 0 means real axis only.
    virtual double max_shift() const = 0;
    virtual std::string id() const = 0;
};

std::shared_ptr<const KernelProfile> rational_profile();
std::shared_ptr<const KernelProfile> field_profile(const FieldDescriptor& K);

struct QuadratureResult {
    cplx value;
    double error = 0.0;     // max of discretisation and rounding estimates
    double rounding = 0.0;  // eps-level floor from the absolute sum
};

// gamma(w, x + iy) sampled at spacing h/2 on the contour Im z = y, so that
// 1/2 e^{iys} int gamma(w, x+iy) e^{xs} dx is a weighted sum for any s with
// |Re s| <= sigma_cap.
class XiSlice {
public:
    XiSlice(const KernelProfile& p, cplx w, double y, double h, double sigma_cap);
    QuadratureResult evaluate(cplx s) const;
    double y() const { return y_; }
    double h() const { return h_; }
    double sigma_cap() const { return cap_; }
    size_t nodes() const { return gam_.size(); }

private:
    double y_, h_, cap_, x0_;
    std::vector<cplx> gam_;
};

// xi(w, .) for one w, with contour and step picked from Im s and slices
// cached. Thread-safe.
class XiEvaluator {
public:
    XiEvaluator(std::shared_ptr<const KernelProfile> p, cplx w, double tol);

    QuadratureResult operator()(cplx s) const;
    QuadratureResult on_contour(cplx s, double y) const;
    cplx w() const { return w_; }
    const KernelProfile& profile() const { return *profile_; }

private:
    QuadratureResult run(cplx s, double y, double h) const;
    std::shared_ptr<const XiSlice> slice(double y, double h, double cap) const;

    std::shared_ptr<const KernelProfile> profile_;
    cplx w_;
    double tol_;
    mutable std::mutex mu_;
    mutable std::map<std::tuple<double, double, double>, std::shared_ptr<const XiSlice>> slices_;
};

// Shared evaluator for (profile, w), kept in a bounded process-wide cache.
std::shared_ptr<const XiEvaluator> cached_evaluator(std::shared_ptr<const KernelProfile> p, cplx w,
                                                    double tol);

// e^z - 1 without cancellation for small z.
cplx cexpm1(cplx z);

// -1/s + 1/(s-w) + int_0^inf (F(x)^w - 1)(e^{sx} + e^{(w-s)x}) dx.
QuadratureResult continued_integral(const KernelProfile& p, cplx w, cplx s, const EvalContext& ctx);

}  // namespace arakelov
