#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dynfrac/errors.hpp"
#include "dynfrac/laplace.hpp"
#include "dynfrac/plane.hpp"

using namespace dynfrac;
using C = std::complex<double>;

TEST(Euler, AbscissaeLayout) {
    const InversionConfig cfg;
    const auto s = euler_abscissae(2.0, cfg);
    ASSERT_EQ(s.size(), 41u);
    EXPECT_NEAR(s[0].real(), cfg.A / 4.0, 1e-15);
    EXPECT_NEAR(s[1].imag() - s[0].imag(), std::numbers::pi / 2.0, 1e-15);
    EXPECT_NEAR(cfg.A, 8 * std::log(10.0), 1e-15);
}

TEST(Euler, TransformPairs) {
    const InversionConfig cfg;
    for (double t : {0.1, 1.0, 7.5}) {
        EXPECT_NEAR(invert_euler([](C s) { return 1.0 / s; }, t, cfg), 1.0, 1e-7);
        EXPECT_NEAR(invert_euler([](C s) { return 1.0 / (s * s); }, t, cfg) / t, 1.0, 1e-7);
        EXPECT_NEAR(invert_euler([](C s) { return 1.0 / (s + 1.0); }, t, cfg) / std::exp(-t), 1.0, 1e-6);
        const double ref = 1.0 / std::sqrt(std::numbers::pi * t);
        EXPECT_NEAR(invert_euler([](C s) { return 1.0 / std::sqrt(s); }, t, cfg) / ref, 1.0, 1e-7);
        const double sine = invert_euler([](C s) { return 1.0 / (s * s + 1.0); }, t, cfg);
        EXPECT_NEAR(sine, std::sin(t), 1e-6);
    }
}

TEST(Euler, DelayedSingularTransform) {
    // the jump at the delay needs more terms than the default
    InversionConfig cfg;
    cfg.m = 80;
    cfg.euler_terms = 20;
    const double ref = 1.0 / std::sqrt(std::numbers::pi * 0.7);
    const double v = invert_euler([](C s) { return std::exp(-0.3 * s) / std::sqrt(s); }, 1.0, cfg);
    EXPECT_NEAR(v / ref, 1.0, 1e-6);
}

TEST(Euler, PlaneWeightPipeline) {
    const Material m = Material::from_speed(0.3, 1.0);
    const CrackSetup cs = make_setup(m, 0.5 * m.c_R, INFINITY);
    for (Mode mode : {Mode::I, Mode::II})
        for (double t = 0.2; t <= 10.0; t += 0.7) {
            const double num =
                invert_euler([&](C s) { return plane_weight_transform(mode, 0.0, s, cs); }, t);
            const double ref = plane_weight_function(mode, 0.0, t, cs);
            EXPECT_NEAR(num / ref, 1.0, 1e-3) << t;
        }
}

TEST(Euler, SumMatchesDirectInversion) {
    const InversionConfig cfg;
    const auto s = euler_abscissae(1.5, cfg);
    std::vector<C> v;
    for (C z : s) v.push_back(1.0 / (z + 2.0));
    EXPECT_DOUBLE_EQ(euler_sum(v, 1.5, cfg), invert_euler([](C z) { return 1.0 / (z + 2.0); }, 1.5, cfg));
    v.pop_back();
    EXPECT_THROW(euler_sum(v, 1.5, cfg), InputError);
}

TEST(Euler, Validation) {
    EXPECT_THROW(invert_euler([](C s) { return 1.0 / s; }, 0.0), DomainError);
    InversionConfig bad;
    bad.m = 10;
    bad.euler_terms = 12;
    EXPECT_THROW(bad.validate(), InputError);
}

TEST(Trapezoid, CosineAndSineForms) {
    // F = 1/(s+1); error ~ e^{-2 sigma T} aliasing plus slow truncation
    auto F = [](C s) { return 1.0 / (s + 1.0); };
    const double t = 1.0, sigma = 1.0, h = 0.01;
    const int m = 200000;
    EXPECT_NEAR(invert_trapezoid(F, t, sigma, h, m), std::exp(-t), 1e-3);
    EXPECT_NEAR(invert_trapezoid(F, t, sigma, h, m, InversionForm::Sine), std::exp(-t), 1e-3);
}

TEST(Forward, CallableTransforms) {
    for (C s : {C(1.0), C(2.0, 5.0), C(0.5, -3.0)}) {
        const C a = forward_laplace([](double t) { return std::exp(-t); }, 200.0, s);
        EXPECT_LT(std::abs(a - 1.0 / (s + 1.0)), 1e-10) << s;
        const C b = forward_laplace([](double t) { return 1.0 / std::sqrt(t); }, 400.0, s);
        if (s.real() >= 1.0) EXPECT_LT(std::abs(b - std::sqrt(std::numbers::pi / s)), 1e-8) << s;
    }
}

TEST(Forward, TabulatedTransform) {
    std::vector<double> t, f;
    for (int i = 0; i <= 4000; ++i) {
        t.push_back(0.01 * i);
        f.push_back(0.01 * i);
    }
    const C s(1.5, 2.0);
    EXPECT_LT(std::abs(forward_laplace(t, f, s) - 1.0 / (s * s)), 1e-10);
    EXPECT_THROW(forward_laplace(t, f, C(0.0, 1.0)), DomainError);
}

TEST(Forward, RoundTrip) {
    auto f = [](double t) { return t * std::exp(-0.5 * t); };
    for (double t : {0.5, 2.0, 6.0}) {
        const double v = invert_euler([&](C s) { return forward_laplace(f, 120.0, s); }, t);
        EXPECT_NEAR(v, f(t), 1e-6) << t;
    }
}
