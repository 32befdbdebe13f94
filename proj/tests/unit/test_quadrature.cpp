#include <gtest/gtest.h>

#include <cmath>

#include "dynfrac/quadrature.hpp"

using namespace dynfrac;

TEST(Quadrature, GaussWeightsSumToTwo) {
    for (int n : {8, 16, 32}) {
        const GaussRule g = gauss_legendre(n);
        double sum = 0.0;
        for (double w : g.w) sum += w;
        EXPECT_NEAR(sum, 2.0, 1e-12) << n;
    }
}

TEST(Quadrature, GaussExactForPolynomials) {
    const int n = 12;
    const GaussRule g = gauss_legendre(n);
    for (int k = 0; k < 2 * n; ++k) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += g.w[i] * std::pow(g.x[i], k);
        const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
        EXPECT_NEAR(sum, exact, 1e-14) << k;
    }
}

TEST(Quadrature, NodesAscendingAndSymmetric) {
    const GaussRule g = gauss_legendre(9);
    for (int i = 1; i < 9; ++i) EXPECT_LT(g.x[i - 1], g.x[i]);
    for (int i = 0; i < 9; ++i) EXPECT_NEAR(g.x[i], -g.x[8 - i], 1e-15);
}

TEST(Quadrature, AdaptiveRealAndComplex) {
    EXPECT_NEAR(integrate(RealFn([](double x) { return std::exp(x); }), 0.0, 1.0), std::exp(1.0) - 1, 1e-13);
    const auto z = integrate(ComplexFn([](double x) { return std::exp(std::complex<double>(0, 3 * x)); }), 0.0, 2.0);
    const auto ref = (std::exp(std::complex<double>(0, 6.0)) - 1.0) / std::complex<double>(0, 3.0);
    EXPECT_LT(std::abs(z - ref), 1e-13);
}
