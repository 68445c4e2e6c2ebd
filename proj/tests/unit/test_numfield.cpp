#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "arakelov/field.hpp"
#include "arakelov/numfield.hpp"
#include "arakelov/theta_kernel.hpp"
#include "arakelov/zeta2.hpp"
#include "reference_values.hpp"

using namespace arakelov;

namespace {

constexpr double kPi = std::numbers::pi;
const EvalContext ctx;

long brute_count(const FieldDescriptor& K, long N) {
    long c = 0;
    for (long m = -40; m <= 40; ++m)
        for (long n = -40; n <= 40; ++n) c += K.norm(m, n) == N;
    return c;
}

}  // namespace

TEST(Fields, Descriptors) {
    const auto Qi = FieldDescriptor::from_discriminant(-4);
    EXPECT_EQ(Qi.w_K, 4);
    EXPECT_EQ(FieldDescriptor::from_discriminant(-3).w_K, 6);
    EXPECT_EQ(FieldDescriptor::from_discriminant(-11).w_K, 2);
    EXPECT_THROW(FieldDescriptor::from_discriminant(-15), ConfigurationError);
    EXPECT_THROW(FieldDescriptor::from_discriminant(5), ConfigurationError);
    for (int d : FieldDescriptor::supported_discriminants()) {
        const auto K = FieldDescriptor::from_discriminant(d);
        EXPECT_EQ(K.b * K.b - 4 * K.a * K.c, d);
        const auto r = representation_counts(K, 60);
        for (long N = 0; N <= 60; ++N) EXPECT_EQ(r[size_t(N)], brute_count(K, N)) << d << " " << N;
    }
}

TEST(Fields, NormThetaIsIsodual) {
    for (int d : {-3, -4, -7, -11}) {
        const auto K = FieldDescriptor::from_discriminant(d);
        for (double t : {0.4, 1.0, 2.3})
            EXPECT_NEAR(norm_form_theta(K, 1.0 / t, ctx), t * norm_form_theta(K, t, ctx), 1e-12 * t) << d << " " << t;
    }
}

TEST(Fields, GaussianIdentity) {
    const auto Qi = FieldDescriptor::from_discriminant(-4);
    for (auto [w, s] : {std::pair<cplx, cplx>{1.0, 2.0}, {cplx(0.5, 1), cplx(-1, 2)}, {-2.0, cplx(0.3, -0.7)}})
        EXPECT_LT(std::abs(Z_K(Qi, w, s, ctx) - 2.0 * Z_from_xi(2.0 * w, 2.0 * s, ctx).value), 1e-10) << w << s;
    for (double t : {0.5, 3.0, 7.5}) EXPECT_NEAR(xi_K0(Qi, t, ctx), xi(0.0, cplx(0.0, 2.0 * t), ctx).real(), 1e-12);
}

TEST(Fields, FunctionalEquationAndReality) {
    const auto K = FieldDescriptor::from_discriminant(-7);
    const cplx w(1.3, 0.2), s(0.4, 2.0);
    EXPECT_LT(std::abs(xi_K(K, w, s, ctx) - xi_K(K, w, w - s, ctx)), 1e-10);
    EXPECT_LT(std::abs(xi_K(K, 0.0, cplx(0.0, 3.3), ctx).imag()), 1e-12);
}

TEST(Fields, MultiprecisionSliceMatchesDouble) {
    const auto K = FieldDescriptor::from_discriminant(-11);
    for (double t : {0.5, 3.0, 6.0}) EXPECT_NEAR(xi_K_critical(K, 0.0, t, ctx), xi_K0(K, t, ctx), 1e-12) << t;
    // Deep in the tail the double evaluation is meaningless but the sign is still resolved.
    EXPECT_NE(xi_K_critical(K, 0.0, 40.0, ctx), 0.0);
}

TEST(Fields, SignChanges) {
    const auto K11 = FieldDescriptor::from_discriminant(-11);
    const auto br = sign_scan(K11, 0.0, 5.0, 0.05, ctx);
    ASSERT_FALSE(br.empty());
    EXPECT_GT(br[0].first, 3.10);
    EXPECT_LT(br[0].second, 3.15);
    EXPECT_LE(br[0].second - br[0].first, 1e-3 + 1e-12);
    EXPECT_TRUE(sign_scan(FieldDescriptor::from_discriminant(-4), 0.0, 30.0, 0.1, ctx).empty());
    const LineMinimum m = critical_line_scan(K11, 1.0, 8.0, ctx);
    EXPECT_LT(m.min_value, 0.0);
    const LineMinimum qi = critical_line_scan(FieldDescriptor::from_discriminant(-4), 1.0, 8.0, ctx);
    EXPECT_GT(qi.min_value, 0.0);
}

TEST(Fields, Invariants) {
    const double t2 = theta(2.0, ctx).value;
    const auto inv = invariants(FieldDescriptor::from_discriminant(-4), ctx);
    EXPECT_NEAR(inv.eta_K, t2 * t2, 1e-14);
    EXPECT_NEAR(inv.genus_tilde, 1.0 + std::log(2.0), 1e-15);
    EXPECT_NEAR(inv.genus_g, std::log(2.0 * t2 * t2), 1e-14);
    const auto q = rational_invariants(ctx);
    EXPECT_NEAR(q.eta_K, oracle::theta_one, 1e-14);
    EXPECT_NEAR(q.genus_g, std::log(oracle::theta_one), 1e-14);
    EXPECT_EQ(q.genus_tilde, 1.0);
    // eta for Q(sqrt-3) by direct lattice summation.
    double eta3 = 0.0;
    for (long m = -10; m <= 10; ++m)
        for (long n = -10; n <= 10; ++n) eta3 += std::exp(-2.0 * kPi * double(m * m + m * n + n * n));
    EXPECT_NEAR(invariants(FieldDescriptor::from_discriminant(-3), ctx).eta_K, eta3, 1e-14);
}
