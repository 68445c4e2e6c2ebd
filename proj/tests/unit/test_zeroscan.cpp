#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "arakelov/zeroscan.hpp"
#include "arakelov/zeta2.hpp"
#include "reference_values.hpp"

using namespace arakelov;

namespace {
const EvalContext ctx;
}

TEST(Winding, SmallRectangles) {
    EXPECT_EQ(winding_number(1.0, {0, 1, 14, 15}, ctx), 1);
    EXPECT_EQ(winding_number(1.0, {0, 1, 2, 3}, ctx), 0);
    EXPECT_EQ(winding_number(0.0, {-1.5, 1.5, -1, 1}, ctx), 0);
    EXPECT_EQ(winding_number(0.0, {1.5, 2.5, -0.5, 0.5}, ctx), 0);
    EXPECT_EQ(winding_number(0.0, {1.5, 2.5, 17.5, 18.5}, ctx), 1);
    EXPECT_EQ(winding_number(1.0, {0, 1, 14, 22}, ctx), 2);
}

TEST(Winding, BoundaryThroughZeroIsRejected) {
    const double t = oracle::zeta_zeros[0];
    EXPECT_THROW(winding_number(1.0, {0.5, 1.0, t - 0.5, t + 0.5}, ctx), ConvergenceError);
}

TEST(FindZeros, RiemannSlice) {
    const auto zs = find_zeros(1.0, {0, 1, 0, 100}, ctx);
    ASSERT_EQ(zs.size(), 29u);
    for (size_t k = 0; k < zs.size(); ++k) {
        EXPECT_NEAR(zs[k].s.imag(), oracle::zeta_zeros[k], 1e-9) << k;
        EXPECT_NEAR(zs[k].s.real(), 0.5, 1e-9);
        EXPECT_EQ(zs[k].multiplicity, 1);
        EXPECT_TRUE(zs[k].contour.contains(zs[k].s));
    }
}

TEST(FindZeros, GaussianSlice) {
    const auto zs = find_zeros(2.0, {0.5, 1.5, 0, 100}, ctx);
    ASSERT_EQ(zs.size(), oracle::u2_zeros.size());
    for (size_t k = 0; k < zs.size(); ++k) EXPECT_NEAR(zs[k].s.imag(), oracle::u2_zeros[k], 1e-8) << k;
}

TEST(FindZeros, OffLinePairAtWeightFour) {
    const auto zs = find_zeros(4.0, {0.5, 3.5, 26, 29}, ctx);
    ASSERT_EQ(zs.size(), 3u);
    const cplx rho = 2.0 * cplx(0.5, oracle::zeta_zeros[0]);
    EXPECT_LT(std::abs(zs[0].s - cplx(2.0, 27.194)), 2e-3);  // on the line, from the 2-Euler factor
    int off = 0;
    for (const auto& z : zs)
        if (std::abs(z.s.imag() - rho.imag()) < 1e-8) {
            ++off;
            EXPECT_NEAR(std::abs(z.s.real() - 2.0), 1.0, 1e-8);
        }
    EXPECT_EQ(off, 2);
}

TEST(Count, MatchesZeroLists) {
    const CountReport r = count_zeros(1.0, 100.0, ctx);
    EXPECT_EQ(r.N_u_T, 58);
    EXPECT_NEAR(r.S_u_T, 29.0 - count_main_term(r.T), 1e-12);
    EXPECT_EQ(count_zeros(2.0, 30.0, ctx).N_u_T, 8);
    EXPECT_EQ(count_zeros(0.0, 10.0, ctx).N_u_T, 0);
    EXPECT_EQ(count_zeros(0.0, 20.0, ctx).N_u_T, 4);
    EXPECT_EQ(closed_form_zeros_u0(20.0, ctx).size(), 4u);
}

TEST(Strip, Certificate) {
    ZeroRecord z;
    z.u = 4.0;
    z.s = {1.0, 28.27};
    EXPECT_TRUE(strip_certificate(4.0, {z}));
    z.s = {-9.0, 5.0};
    EXPECT_FALSE(strip_certificate(4.0, {z}));
}

TEST(Track, ZeroCoalescence) {
    ZeroRecord a, b;
    a.u = b.u = 1.0;
    a.s = {0.5, 42.04};
    b.s = {0.5, 42.90};
    const TrackResult tr = track_zeros(1.0, 2.0, {a, b}, 100, ctx);
    ASSERT_FALSE(tr.truncated) << tr.diagnostic;
    ASSERT_GE(tr.events.size(), 2u);
    EXPECT_EQ(tr.events[0].kind, TrackEventKind::COALESCE);
    EXPECT_NEAR(tr.events[0].u, 1.395, 0.02);
    bool covered = false;
    for (const auto& e : tr.events)
        covered = covered || (e.kind == TrackEventKind::OFF_LINE && e.u <= 1.5 && e.u_end >= 1.5);
    EXPECT_TRUE(covered);
    // Seeds are snapped to the actual 7th and 8th zeta zeros; the end points are the u = 2 zeros.
    EXPECT_NEAR(tr.path.front().s[0].imag(), oracle::zeta_zeros[6], 1e-8);
    EXPECT_NEAR(tr.path.front().s[1].imag(), oracle::zeta_zeros[7], 1e-8);
    // The pair swaps order while off the line, so compare as a set.
    const std::pair<double, double> ends = std::minmax(tr.path.back().s[0].imag(), tr.path.back().s[1].imag());
    EXPECT_NEAR(ends.first, oracle::u2_zeros[6], 1e-6);
    EXPECT_NEAR(ends.second, oracle::u2_zeros[7], 1e-6);
}

TEST(Track, SingleZeroStaysOnLine) {
    ZeroRecord a;
    a.u = 1.0;
    a.s = {0.5, 14.13};
    const TrackResult tr = track_zero(1.0, 2.0, a, 20, ctx);
    ASSERT_FALSE(tr.truncated);
    EXPECT_TRUE(tr.events.empty());
    EXPECT_NEAR(tr.path.back().s[0].real(), 1.0, 1e-8);
    EXPECT_NEAR(tr.path.back().s[0].imag(), oracle::u2_zeros[0], 1e-6);
}
