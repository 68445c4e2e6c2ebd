#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <boost/math/constants/constants.hpp>

#include "arakelov/theta_kernel.hpp"
#include "reference_values.hpp"

using namespace arakelov;

namespace {
constexpr double kPi = std::numbers::pi;
const EvalContext ctx;
}  // namespace

TEST(Theta, ValueAtOne) {
    EXPECT_NEAR(theta(1.0, ctx).value, oracle::theta_one, 1e-14);
    EXPECT_NEAR(theta_one(), oracle::theta_one, 1e-14);
    EXPECT_NEAR(psi2(), oracle::psi2, 1e-13);
}

TEST(Theta, ModularRelation) {
    for (double t : {0.05, 0.3, 0.77, 2.5, 9.0})
        EXPECT_NEAR(theta(1.0 / t, ctx).value, std::sqrt(t) * theta(t, ctx).value, 1e-13 * std::sqrt(t)) << t;
}

TEST(Theta, LargeArgumentIsOne) {
    EXPECT_EQ(theta(50.0, ctx).value, 1.0);
    EXPECT_LE(theta(50.0, ctx).truncation_error_bound, 1e-60);
}

TEST(Theta, MultiprecisionAgreesWithOracle) {
    EvalContext c = ctx;
    c.precision_bits = 256;
    const mpreal th = theta_mp(mpreal(1), c);
    EXPECT_NEAR(th.convert_to<double>(), oracle::theta_one, 1e-16);
    mpreal::default_precision(80);
    const mpreal pi = boost::math::constants::pi<mpreal>();
    const mpreal closed = pow(pi, mpreal(0.25)) / tgamma(mpreal(0.75));
    EXPECT_LT(boost::multiprecision::abs(th - closed).convert_to<double>(), 1e-60);
}

TEST(Theta, TripleProductMatchesSeries) {
    for (cplx z : {cplx(0.0), cplx(0.5), cplx(0.13, 0.02), cplx(-0.31, -0.05)})
        for (cplx q : {cplx(0.0), cplx(0.2), cplx(0.5, 0.3), cplx(-0.4, 0.1)})
            EXPECT_LT(std::abs(jacobi_theta3(z, q, ctx) - triple_product(z, q, ctx)), 1e-13) << z << q;
    // theta_4 at z = 1/2.
    const double q = 0.3;
    double t4 = 1.0;
    for (int n = 1; n < 30; ++n) t4 += 2.0 * ((n % 2) ? -1.0 : 1.0) * std::pow(q, n * n);
    EXPECT_NEAR(jacobi_theta3(0.5, q, ctx).real(), t4, 1e-14);
    EXPECT_THROW(jacobi_theta3(0.0, 1.0, ctx), DomainError);
}

TEST(Theta, CharacteristicFunction) {
    EXPECT_NEAR(f_char(0.0, ctx), 1.0, 1e-15);
    for (double r : {0.3, 1.7, 4.0}) EXPECT_NEAR(f_char(r, ctx), f_char(-r, ctx), 1e-14);
    EXPECT_LT(f_char(20.0, ctx), 1e-3);
    const double asym = oracle::theta_one * std::exp(-5.0);
    EXPECT_NEAR(f_char(10.0, ctx) / asym, 1.0, 1e-12);
}

TEST(Kernel, MatchesHighPrecisionDerivatives) {
    // Oracle: (d^2 + w d)((theta(e^{2x})^w - 1)/w) differentiated numerically at 30 digits.
    for (const auto& [w, x, want] : oracle::gamma_kernel)
        EXPECT_NEAR(gamma_kernel(w, x, ctx).real(), want, 1e-13 * std::abs(want)) << w << " " << x;
}

TEST(Kernel, WeightZeroIsLogThetaCurvature) {
    for (double x : {-1.0, 0.0, 0.6}) EXPECT_NEAR(gamma_kernel(0.0, x, ctx).real(), log_theta_jet(x).d2g.real(), 1e-15);
    EXPECT_LT(std::abs(gamma_kernel(0.0, 3.0, ctx)), 1e-300);
}

TEST(Kernel, JetIsContinuousAcrossImaginaryAxis) {
    const auto a = log_theta_jet(cplx(-1e-12, 0.2)), b = log_theta_jet(cplx(1e-12, 0.2));
    EXPECT_LT(std::abs(a.g - b.g), 1e-11);
    EXPECT_LT(std::abs(a.dg - b.dg), 1e-11);
    EXPECT_LT(std::abs(a.d2g - b.d2g), 1e-10);
    EXPECT_LT(std::abs(a.dg1 - (a.dg + 1.0)), 1e-15);
}

TEST(Kernel, LeftTailKeepsRelativeAccuracy) {
    // phi' + 1 ~ 2 pi e^{-2x} e^{-pi e^{-2x}} at x = -1.5; forming it from phi' would lose everything.
    const auto j = log_theta_jet(-1.5);
    const double y = std::exp(3.0);
    const double expected = 2.0 * kPi * y * std::exp(-kPi * y) * 2.0 / (1.0 + 2.0 * std::exp(-kPi * y));
    EXPECT_NEAR(j.dg1.real() / expected, 1.0, 1e-10);
}

TEST(Kernel, StripBoundary) {
    EXPECT_THROW(gamma_kernel(1.0, cplx(0.0, kPi / 4), ctx), DomainError);
    EXPECT_NO_THROW(gamma_kernel(1.0, cplx(0.0, kPi / 4 - 0.01), ctx));
}

TEST(LogTheta, SymbolicDerivativeConstants) {
    EXPECT_EQ(R_symbolic(1).to_string(), "-1/4");
    EXPECT_EQ(R_symbolic(2), PsiPolynomial({mpq_class(1, 8), 0, mpq_class(1, 32)}));
    for (int k = 1; k <= 6; ++k) {
        const double num = log_theta_deriv(k, ctx);
        const double sym = R_symbolic(k).evaluate(oracle::psi2);
        EXPECT_NEAR(num, sym, 1e-10 * (1.0 + std::abs(sym))) << k;
    }
}
