#include <gtest/gtest.h>

#include <cmath>

#include "arakelov/qseries.hpp"
#include "reference_values.hpp"

using namespace arakelov;

namespace {

const EvalContext ctx;

// Number of (a_1..a_k) in Z^k with sum a_i^2 = m, by enumeration.
long lattice_count(int k, long m) {
    if (k == 0) return m == 0 ? 1 : 0;
    long total = 0;
    long r = 0;
    while ((r + 1) * (r + 1) <= m) ++r;
    for (long a = -r; a <= r; ++a) total += lattice_count(k - 1, m - a * a);
    return total;
}

// c_m(w) = sum_j w^j [q^m] L^j / j!, L = log theta. Independent of the
// power recurrence used by the library.
RationalPolynomial via_exp_log(int m) {
    const QSeries L = series_log(QSeries::theta(m));
    std::vector<mpq_class> out(size_t(m) + 1);
    QSeries power = QSeries::one(m);
    mpz_class fact = 1;
    for (int j = 0; j <= m; ++j) {
        if (j > 0) {
            power = power * L;
            fact *= j;
        }
        out[size_t(j)] = power[m] / fact;
    }
    return RationalPolynomial(out);
}

}  // namespace

TEST(QSeries, LogExpRoundTrip) {
    const QSeries th = QSeries::theta(30);
    EXPECT_EQ(series_exp(series_log(th)), th);
    EXPECT_EQ(series_pow(th, -1) * th, QSeries::one(30));
    EXPECT_THROW(series_log(th * mpq_class(2)), DomainError);
}

TEST(QSeries, ThetaCubeCountsLatticePoints) {
    const QSeries cube = series_pow(QSeries::theta(40), 3);
    for (int m = 0; m <= 40; ++m) EXPECT_EQ(cube[m], oracle::r3[size_t(m)]) << m;
}

TEST(CoefficientPolynomials, LowOrders) {
    EXPECT_EQ(c_poly(0), RationalPolynomial({1}));
    EXPECT_EQ(c_poly(1), RationalPolynomial({0, 2}));
    EXPECT_EQ(c_poly(2), RationalPolynomial({0, -2, 2}));
}

TEST(CoefficientPolynomials, AgreeWithExpLog) {
    for (int m = 1; m <= 24; ++m) EXPECT_EQ(c_poly(m), via_exp_log(m)) << m;
}

TEST(CoefficientPolynomials, IntegerWeightsCountRepresentations) {
    for (int k : {1, 2, 4, 5})
        for (long m = 1; m <= 25; ++m) EXPECT_EQ(c_poly(int(m))(mpq_class(k)), lattice_count(k, m)) << k << " " << m;
}

TEST(CoefficientPolynomials, StarForm) {
    for (int m = 1; m <= 30; ++m) {
        const RationalPolynomial cs = c_star(m);
        const RationalPolynomial cm = c_poly(m);
        mpz_class fact = 1;
        for (int k = 2; k <= m; ++k) fact *= k;
        for (int j = 0; j <= m; ++j) {
            const mpq_class sign = ((m + j) % 2) ? -1 : 1;
            EXPECT_EQ(cs.coeff(j), sign * fact * cm.coeff(j)) << m << " " << j;
        }
    }
}

TEST(CoefficientPolynomials, LogThetaCoefficients) {
    const QSeries L = series_log(QSeries::theta(60));
    for (long m = 1; m <= 60; ++m) EXPECT_EQ(c_prime(m), L[int(m)]) << m;
}

TEST(CoefficientPolynomials, NumericRealWeights) {
    for (double u : {0.5, 1.0, 2.5}) {
        const auto c = theta_power_coefficients(u, 60);
        for (int m = 0; m <= 60; ++m) {
            const double exact = c_poly(m)(mpq_class(u)).get_d();
            EXPECT_NEAR(c[size_t(m)], exact, 1e-11 * (1.0 + std::abs(exact))) << u << " " << m;
        }
    }
}

TEST(Dirichlet, KnownValues) {
    const EvalContext loose = ctx.with_tol(1e-9);
    EXPECT_NEAR(dirichlet_D(2.0, 4.0, loose).real(), oracle::D2_at_4, 1e-8);
    EXPECT_NEAR(dirichlet_D(1.0, 4.0, loose).real(), oracle::D1_at_4, 1e-8);
    EXPECT_THROW(dirichlet_D(1.0, 4.0, ctx.with_tol(1e-15)), ConvergenceError);
    EXPECT_THROW(dirichlet_D(1.0, 1.0, ctx), ConvergenceError);
}

TEST(Euler, ExamplesAndCounterexample) {
    const EulerReport three = euler_check(3, 6);
    EXPECT_FALSE(three.multiplicative);
    EXPECT_EQ(three.fail_m, 2);
    EXPECT_EQ(three.fail_n, 3);
    EXPECT_TRUE(euler_check(4, 100).pass());
    EXPECT_TRUE(euler_check(1, 100).pass());
    const EulerReport zero = euler_check(0, 60);
    EXPECT_TRUE(zero.pass()) << zero.summary();
    // c~_p(0) = 1 + 1/p at odd primes.
    for (long p : {3, 5, 7, 11, 13}) EXPECT_EQ(ctilde(c_poly(int(p)), 0), mpq_class(p + 1, p));
    EXPECT_FALSE(euler_check(mpq_class(1, 2), 30).multiplicative);
}

TEST(Bessel, MainTermAsymptotics) {
    const mpq_class m1 = -1;
    const double rel = std::abs(c_poly(400)(m1).get_d() / bessel_main_term(1.0, 400, ctx) - 1.0);
    EXPECT_LT(rel, 1e-12);
    // c_m(-u) for non-integer u from the exact polynomial.
    const double c25 = c_poly(100)(mpq_class(-5, 2)).get_d();
    EXPECT_NEAR(c25 / bessel_main_term(2.5, 100, ctx), 1.0, 1e-12);
    const mpq_class u = mpq_class(-5, 2);
    EXPECT_GT(c_poly(50)(u), 0);
    EXPECT_LT(c_poly(51)(u), 0);
    EXPECT_THROW(bessel_main_term(0.0, 3, ctx), DomainError);
}
