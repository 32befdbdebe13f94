#include <gtest/gtest.h>

#include <cmath>

#include "dynfrac/errors.hpp"
#include "dynfrac/plane.hpp"
#include "dynfrac/weights.hpp"

using namespace dynfrac;
using C = std::complex<double>;

namespace {

CrackSetup setup(double delta, double ratio = 0.5) {
    const Material m = Material::from_speed(0.3, 1.0);
    return make_setup(m, ratio * m.c_R, delta);
}

}  // namespace

TEST(Reflection, Timing) {
    const ReflectionTiming r = reflection_timing(setup(1.0));
    EXPECT_NEAR(2 * r.t_l, 2.0644, 1e-4);
    EXPECT_NEAR(r.theta, 1.8213, 1e-4);
    EXPECT_NEAR(reflection_timing(setup(2.0)).t_l, 2 * r.t_l, 1e-14);
    CrackSetup still = setup(1.5);
    still.V = 0.0;
    EXPECT_NEAR(reflection_timing(still).t_l, 1.5, 1e-15);
    EXPECT_NEAR(reflection_timing(still).theta, std::acos(0.0), 1e-15);
}

TEST(Weights, PlaneFastPath) {
    const CrackSetup cs = setup(INFINITY);
    const WeightModel model(cs);
    const double wI = plane_weight_scalar(Mode::I, cs), wII = plane_weight_scalar(Mode::II, cs);
    for (double t : {0.3, 4.0}) {
        const auto w = model.dimensionless(0.0, t);
        EXPECT_NEAR(w[0][0], wI, 1e-6);
        EXPECT_NEAR(w[1][1], wII, 1e-6);
        EXPECT_EQ(w[0][1], 0.0);
        EXPECT_EQ(w[1][0], 0.0);
    }
}

TEST(Weights, ShiftMatchesIndependentSolve) {
    const CrackSetup cs = setup(1.0);
    const WeightModel model(cs, {}, {}, 1);
    for (double x0 : {-0.2, -0.7})
        for (C s : {C(1.0, 0.0), C(0.8, 4.0)}) {
            const auto W = model.transform(x0, s);
            const auto n = solve_system(s, LoadSpec::normal(x0), cs);
            const auto t = solve_system(s, LoadSpec::shear(x0), cs);
            EXPECT_LT(std::abs(W[0][0] - n.K_I) / std::abs(n.K_I), 1e-6);
            EXPECT_LT(std::abs(W[1][0] - n.K_II) / std::abs(n.K_II), 1e-6);
            EXPECT_LT(std::abs(W[0][1] - t.K_I) / std::abs(t.K_I), 1e-6);
            EXPECT_LT(std::abs(W[1][1] - t.K_II) / std::abs(t.K_II), 1e-6);
        }
}

TEST(Weights, ShiftedTimeFunction) {
    const CrackSetup cs = setup(INFINITY);
    const WeightModel model(cs);
    for (double x0 : {-0.1, -0.5})
        for (double t : {1.0, 3.0}) {
            const auto a = model.function(x0, t);
            const auto b = model.function(0.0, t - x0 / cs.V);
            EXPECT_NEAR(a[0][0], b[0][0], 1e-12);
        }
    EXPECT_THROW(model.function(0.0, 0.0), DomainError);
}

TEST(Weights, CacheAndConjugateSymmetry) {
    const CrackSetup cs = setup(1.0);
    const WeightModel model(cs, {}, {}, 1);
    const C s(0.9, 3.0);
    const auto a = model.transform(0.0, s);
    EXPECT_EQ(model.cache_size(), 1u);
    model.transform(-0.4, s);
    EXPECT_EQ(model.cache_size(), 1u);
    const auto c = model.transform(0.0, std::conj(s));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) EXPECT_LT(std::abs(c[i][j] - std::conj(a[i][j])), 1e-8 * std::abs(a[0][0]));
}

TEST(Weights, DeepCrackTransformsApproachPlane) {
    const CrackSetup cs = setup(20.0);
    const C s(1.0, 0.0);
    const double ref = std::abs(plane_weight_transform(Mode::I, 0.0, s, cs));
    EXPECT_LT(std::abs(weight_transform(1, 1, 0.0, s, cs) - plane_weight_transform(Mode::I, 0.0, s, cs)) / ref, 1e-3);
    EXPECT_LT(std::abs(weight_transform(1, 2, 0.0, s, cs)) / ref, 1e-3);
    EXPECT_THROW(weight_transform(3, 1, 0.0, s, cs), InputError);
}

TEST(Weights, BoundaryNotFeltBeforeReflection) {
    const CrackSetup cs = setup(1.0);
    const WeightModel model(cs);
    const auto w = model.dimensionless(0.0, 1.0);
    const double wI = plane_weight_scalar(Mode::I, cs), wII = plane_weight_scalar(Mode::II, cs);
    EXPECT_LT(std::abs(w[0][1]), 5e-3);
    EXPECT_LT(std::abs(w[1][0]), 5e-3);
    EXPECT_LT(std::abs(w[0][0] - wI) / wI, 0.02);
    EXPECT_LT(std::abs(w[1][1] - wII) / wII, 0.02);
}

TEST(Weights, SpeedSweepOnPlane) {
    const CrackSetup base = setup(INFINITY);
    const auto coords = linspace_step(0.02, 0.98, 0.24);
    ASSERT_EQ(coords.size(), 5u);
    const WeightTable t = sweep(SweepAxis::Speed, coords, base, 5.0);
    ASSERT_EQ(t.samples.size(), 5u);
    EXPECT_NEAR(t.samples.front().w[0][0], 1.0, 0.02);
    EXPECT_LT(t.samples.back().w[0][0], 0.1);
    for (std::size_t k = 1; k < 5; ++k) EXPECT_LT(t.samples[k].w[0][0], t.samples[k - 1].w[0][0]);
}

TEST(Weights, RangeHelper) {
    const auto v = linspace_step(0.1, 0.4, 0.1);
    ASSERT_EQ(v.size(), 4u);
    EXPECT_NEAR(v.back(), 0.4, 1e-15);
    EXPECT_THROW(linspace_step(1.0, 0.0, 0.1), InputError);
}
