#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "arakelov/semigroup.hpp"
#include "arakelov/theta_kernel.hpp"
#include "reference_values.hpp"

using namespace arakelov;

namespace {
constexpr double kPi = std::numbers::pi;
const EvalContext ctx;
}  // namespace

TEST(Density, MassAndSymmetry) {
    for (auto [u, v] : {std::pair{1.0, 0.0}, std::pair{2.0, 0.5}, std::pair{0.5, -0.2}})
        EXPECT_NEAR(std::abs(density_grid(u, v, ctx).mass() - 1.0), 0.0, 1e-6) << u << " " << v;
    for (double x : {0.3, 1.1, 4.0}) {
        EXPECT_NEAR(density(1.5, 0.0, x, ctx).real(), density(1.5, 0.0, -x, ctx).real(), 1e-14);
        EXPECT_NEAR(density(1.5, 0.0, x, ctx).imag(), 0.0, 1e-14);
    }
}

TEST(Density, ConeIsEnforced) {
    EXPECT_THROW(density(0.0, 0.0, 1.0, ctx), DomainError);
    EXPECT_THROW(density(1.0, 1.0, 1.0, ctx), DomainError);
    EXPECT_THROW(density(1.0, -1.5, 1.0, ctx), DomainError);
}

TEST(Density, CharacteristicFunction) {
    EXPECT_LT(char_function_check(1.0, 0.0, 0.0, ctx), 1e-9);
    EXPECT_LT(char_function_check(2.0, 0.0, 0.5, ctx), 1e-6);
    EXPECT_LT(char_function_check(3.0, 1.0, -0.3, ctx), 1e-6);
}

TEST(Density, Convolution) {
    EXPECT_LT(convolution_check(1.0, 0.5, 2.0, -1.0, 0.0, ctx), 1e-5);
    EXPECT_LT(convolution_check(0.25, 0.0, 0.25, 0.0, 0.4, ctx), 1e-5);
}

TEST(CanonicalMeasure, ValuesAndMass) {
    EXPECT_NEAR(canonical_density(0.0, ctx), 1.0 / (2.0 * kPi), 1e-14);
    EXPECT_NEAR(canonical_density_closed(0.0, ctx), 1.0 / (2.0 * kPi), 1e-12);
    for (double x : {0.05, 0.7, 9.3, 18.13, 31.0})
        EXPECT_NEAR(canonical_density(x, ctx), canonical_density_closed(x, ctx), 1e-12) << x;
    EXPECT_NEAR(canonical_mass(), oracle::feller_mass, 1e-13);
    EXPECT_NEAR(canonical_mass_quadrature(ctx), oracle::feller_mass, 1e-8);
    EXPECT_NEAR(log_char_curvature(0.0), -oracle::feller_mass, 1e-10);
}

TEST(CanonicalMeasure, CurvatureMatchesCharacteristicFunction) {
    // g(r) = (log f)''(r) by central differences of f_char.
    for (double r : {0.0, 0.8, -2.0}) {
        const double h = 1e-3;
        auto lf = [&](double x) { return std::log(f_char(x, ctx)); };
        const double d2 = (lf(r + h) - 2 * lf(r) + lf(r - h)) / (h * h);
        EXPECT_NEAR(log_char_curvature(r), d2, 1e-5) << r;
    }
}

TEST(Feller, GeneralWeight) {
    for (cplx w : {cplx(0.0), cplx(2.0), cplx(-1.0, 0.5)}) {
        const FellerMean f = feller_mean_integral(w, ctx);
        EXPECT_LT(f.difference, 1e-8) << w;
        const cplx expect = std::pow(cplx(oracle::theta_one), w) *
                            (oracle::psi2 * oracle::psi2 / 16.0 - w / 8.0 - 0.25);
        EXPECT_LT(std::abs(f.closed_form - expect), 1e-12);
    }
}

TEST(Cumulants, ExactTable) {
    const CumulantTable t = cumulants(8);
    EXPECT_TRUE(t.at(1).u_coeff.is_zero());
    EXPECT_EQ(t.at(1).v_coeff.im, PsiPolynomial({mpq_class(-1, 2)}));
    EXPECT_EQ(t.c(2), PsiPolynomial({mpq_class(-1, 2), 0, mpq_class(1, 8)}));
    EXPECT_EQ(t.c(4), PsiPolynomial({-1, 0, 1, 0, mpq_class(1, 16)}));
    for (int k : {3, 5, 7}) EXPECT_TRUE(t.at(k).u_coeff.is_zero() && t.at(k).v_coeff.is_zero()) << k;
    for (int k : {2, 4, 6, 8}) EXPECT_TRUE(t.c(k).is_even()) << k;
    EXPECT_NEAR(t.c(2).evaluate(oracle::psi2), oracle::feller_mass, 1e-13);
}

TEST(Cumulants, MomentsMatchGridIntegration) {
    const auto exact = moments(4);
    const double u = 1.5, v = 0.3;
    const auto num = moments_numeric(4, u, v, ctx);
    for (int k = 0; k <= 4; ++k) {
        const cplx e = exact[size_t(k)].evaluate(u, v, oracle::psi2);
        EXPECT_LT(std::abs(num[size_t(k)] - e), 1e-6 * (1.0 + std::abs(e))) << k << ": " << num[size_t(k)] << " vs " << e;
    }
}

TEST(Positivity, CriticalLine) {
    for (double u : {0.1, 1.0, 10.0}) {
        const PositivityReport r = positivity_scan(u, 50.0, ctx);
        EXPECT_GT(r.min_value, 0.0) << u;
        EXPECT_GT(r.samples, 100);
    }
}
