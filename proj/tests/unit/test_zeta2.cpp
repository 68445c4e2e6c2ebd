#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "arakelov/zeta2.hpp"
#include "reference_values.hpp"

using namespace arakelov;

namespace {

constexpr double kPi = std::numbers::pi;
const EvalContext ctx;

void expect_table(double u, const std::vector<std::pair<cplx, cplx>>& table) {
    for (const auto& [s, want] : table) {
        const cplx got = xi(u, s, ctx);
        EXPECT_LT(std::abs(got - want), 1e-12 + 1e-8 * std::abs(want)) << "u=" << u << " s=" << s << " got " << got;
    }
}

}  // namespace

TEST(Regions, Heaviside) {
    EXPECT_EQ(heaviside(cplx(3, -2)), 1.0);
    EXPECT_EQ(heaviside(cplx(0, 5)), 0.5);
    EXPECT_EQ(heaviside(-1.0), 0.0);
}

TEST(Regions, Classification) {
    EXPECT_EQ(classify_region(-3.0, -1.0), RegionTag::I);
    EXPECT_EQ(classify_region(1.0, 2.0), RegionTag::II);
    EXPECT_EQ(classify_region(3.0, 1.0), RegionTag::III);
    EXPECT_EQ(classify_region(-1.0, -2.0), RegionTag::IV);
    EXPECT_EQ(classify_region(1.0, cplx(0.0, 3.0)), RegionTag::BOUNDARY);
    EXPECT_EQ(classify_region(2.0, 2.0), RegionTag::BOUNDARY);
}

TEST(Z, SpecialValue) {
    const Zeta2Value z = Z(1.0, 2.0, ctx);
    EXPECT_NEAR(z.value.real(), kPi / 6, 1e-12);
    EXPECT_EQ(z.region, RegionTag::II);
    EXPECT_LT(z.quadrature_error_estimate, 1e-10);
}

TEST(Z, Errors) {
    EXPECT_THROW(Z(1.0, cplx(0.0, 5.0), ctx), RegionError);
    EXPECT_THROW(Z(0.0, 2.0, ctx), DegenerateError);
    EXPECT_THROW(Z_continued(1.0, 0.0, ctx), DomainError);
}

TEST(Z, ThreeRoutesAgree) {
    const std::pair<cplx, cplx> pts[] = {{1.0, 2.0},       {cplx(3, 1), cplx(1, 2)}, {-1.0, -2.5}, {-2.0, 0.7},
                                         {cplx(0.5, -1), cplx(-1.3, 0.4)}, {4.0, cplx(1, 6)}};
    for (auto [w, s] : pts) {
        const cplx a = Z(w, s, ctx).value, b = Z_continued(w, s, ctx).value, c = Z_from_xi(w, s, ctx).value;
        EXPECT_LT(std::abs(a - b), 1e-10) << w << s;
        EXPECT_LT(std::abs(a - c), 1e-10) << w << s;
    }
}

TEST(Xi, RiemannSlice) { expect_table(1.0, oracle::riemann_xi); }
TEST(Xi, GaussianSlice) { expect_table(2.0, oracle::xi_u2); }
TEST(Xi, QuaternionSlice) { expect_table(4.0, oracle::xi_u4); }
TEST(Xi, OctaveSlice) { expect_table(8.0, oracle::xi_u8); }
TEST(Xi, WeightZeroSlice) { expect_table(0.0, oracle::xi_u0); }

TEST(Xi, NormalizationAtOrigin) {
    EXPECT_NEAR(xi(0.0, 0.0, ctx).real(), 0.5, 1e-14);
    EXPECT_NEAR(xi(1.0, 0.0, ctx).real(), 0.5, 1e-14);
}

TEST(Xi, FunctionalEquationFarFromAxis) {
    // Re(w - s) ~ 14: the reflected kernel tail is large before cancellation.
    const cplx w(7.35474, 4.61365), s(-6.44571, 3.14622);
    EXPECT_LT(std::abs(xi(w, s, ctx) - xi(w, w - s, ctx)), 1e-10);
    const cplx w2(-6.0, 2.0), s2(4.0, -3.0);
    EXPECT_LT(std::abs(xi(w2, s2, ctx) - xi(w2, w2 - s2, ctx)), 1e-10);
}

TEST(Xi, ShiftedContoursAgree) {
    for (double y : {-0.5, 0.2, 0.6}) {
        const cplx s(0.4, 8.0);
        EXPECT_LT(std::abs(xi_on_contour(1.5, s, y, ctx).value - xi(1.5, s, ctx)), 1e-11) << y;
    }
    EXPECT_THROW(xi_on_contour(1.0, 2.0, kPi / 4, ctx), DomainError);
}

TEST(ClosedForm, CompletedZetaAndWeightZero) {
    EXPECT_NEAR(completed_zeta(0.5, ctx).real(), oracle::completed_zeta_half, 1e-10);
    EXPECT_LT(completed_zeta(0.5, ctx).real(), 0.0);
    EXPECT_NEAR(xi0_closed(0.0, ctx).real(), 0.5, 1e-14);
    EXPECT_NEAR(xi0_closed(2.0, ctx).real(), oracle::xi0_at_2, 1e-10);
    EXPECT_NEAR(xi0_closed(-2.0, ctx).real(), oracle::xi0_at_2, 1e-10);
    for (cplx s : {cplx(3.0), cplx(1, 4), cplx(0, 17.3), cplx(-7, 3)})
        EXPECT_LT(std::abs(xi0_closed(s, ctx) - xi(0.0, s, ctx)), 1e-10) << s;
}

TEST(MomentIdentity, BothSidesAgree) {
    const std::vector<cplx> Q = {1.0, 0.5, cplx(0.25, 0.1)};
    for (auto [w, sigma, z] : {std::tuple<cplx, double, cplx>{2.0, 0.7, cplx(0.1, 0.05)},
                               std::tuple<cplx, double, cplx>{1.0, 0.5, cplx(-0.3, 0.0)},
                               std::tuple<cplx, double, cplx>{-1.0, -0.5, cplx(0.2, -0.1)}}) {
        const cplx a = moment_transform(Q, w, sigma, z, ctx);
        const cplx b = moment_transform_fourier(Q, w, sigma, z, ctx);
        EXPECT_LT(std::abs(a - b), 1e-8) << w << " " << sigma << " " << z << ": " << a << " vs " << b;
    }
}
