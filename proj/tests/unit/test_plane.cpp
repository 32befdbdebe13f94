#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dynfrac/errors.hpp"
#include "dynfrac/plane.hpp"

using namespace dynfrac;
using C = std::complex<double>;

namespace {

CrackSetup setup(double ratio, double delta = INFINITY) {
    const Material m = Material::from_speed(0.3, 1.0);
    return make_setup(m, ratio * m.c_R, delta);
}

}  // namespace

TEST(Plane, CothFactorPairs) {
    for (double p : {-2.3, -0.4, 0.7, 1.9, 15.0}) {
        const C ref = 1.0 / std::tanh(std::numbers::pi * p);
        const auto [a, b] = coth_factors(p);
        const auto [c, d] = coth_factors_alt(p);
        EXPECT_LT(std::abs(C(0, 1) * a / b - ref), 1e-12) << p;
        EXPECT_LT(std::abs(C(0, 1) * c / d - ref), 1e-12) << p;
    }
}

TEST(Plane, SplitSymbolLimits) {
    const CrackSetup cs = setup(0.5);
    for (int j = 1; j <= 2; ++j) {
        EXPECT_LT(std::abs(plane_split_symbol(j, 1e6, cs) - 1.0), 1e-5);
        EXPECT_LT(std::abs(plane_split_symbol(j, -1e6, cs) - 1.0), 1e-5);
        EXPECT_TRUE(std::isfinite(std::abs(plane_split_symbol(j, 0.0, cs))));
        EXPECT_LT(std::abs(plane_split_symbol(j, 1e-9, cs) - plane_split_symbol(j, 0.0, cs)), 1e-6);
        EXPECT_THROW(plane_coefficient(j, 0.0, cs), DomainError);
    }
}

TEST(Plane, WeightScalarsAtHalfRayleigh) {
    // independent reference values for the opening and shear modes
    const CrackSetup cs = setup(0.5);
    EXPECT_NEAR(plane_weight_scalar(Mode::I, cs), 0.659882, 1e-4);
    EXPECT_NEAR(plane_weight_scalar(Mode::II, cs), 0.781473, 1e-4);
}

TEST(Plane, WeightScalarLimits) {
    for (Mode m : {Mode::I, Mode::II}) {
        EXPECT_NEAR(plane_weight_scalar(m, setup(0.02)), 1.0, 0.02);
        EXPECT_LT(plane_weight_scalar(m, setup(0.98)), 0.15);
    }
    EXPECT_LT(plane_weight_scalar(Mode::I, setup(0.98)), 0.1);
}

TEST(Plane, WeightScalarDecreasesWithSpeed) {
    double prev = 2.0;
    for (double r = 0.05; r < 0.96; r += 0.1) {
        const double w = plane_weight_scalar(Mode::I, setup(r));
        EXPECT_LT(w, prev);
        prev = w;
    }
}

TEST(Plane, TransformAndFunctionAreConsistent) {
    const CrackSetup cs = setup(0.5);
    const double w = plane_weight_scalar(Mode::I, cs);
    const C s(1.3, 0.4);
    EXPECT_LT(std::abs(plane_weight_transform(Mode::I, 0.0, s, cs) - w * std::sqrt(2.0 / (cs.V * s))), 1e-14);
    EXPECT_NEAR(plane_weight_function(Mode::I, 0.0, 2.0, cs), w * std::sqrt(1.0 / (std::numbers::pi * cs.V)), 1e-14);
    EXPECT_EQ(plane_weight_function(Mode::I, -1.0, 1.0, cs), plane_weight_function(Mode::I, 0.0, 1.0 + 1.0 / cs.V, cs));
    EXPECT_EQ(plane_weight_function(Mode::I, 0.5, 1.0, cs), 0.0);
}

TEST(Plane, ContourIntegralReproducesClosedForm) {
    const CrackSetup cs = setup(0.5);
    const PlaneFactorization pf(cs, 400);
    for (double sp : {0.5, 1.0, 3.0})
        for (double x0 : {0.0, -0.4}) {
            const auto q = point_load_transform(x0, sp, cs);
            for (Mode m : {Mode::I, Mode::II}) {
                const C k = plane_sif_transform(symbol_index(m), q, sp, pf);
                const C ref = plane_weight_transform(m, x0, C(sp), cs);
                EXPECT_LT(std::abs(k - ref) / std::abs(ref), 1e-8) << sp << ' ' << x0;
            }
        }
}

TEST(Plane, ContourInvariance) {
    const CrackSetup cs = setup(0.5);
    const PlaneFactorization pf(cs, 400);
    const double cases[5][3] = {{2, 0.0, 1.0}, {2, -0.5, 0.5}, {1, 0.0, 2.0}, {1, -0.3, 1.0}, {2, -1.0, 3.0}};
    for (const auto& c : cases) {
        const auto q = point_load_transform(c[1], c[2], cs);
        EXPECT_LT(contour_crosscheck(static_cast<int>(c[0]), q, c[2], pf).rel_diff(), 1e-6);
    }
}

TEST(Plane, InteriorFactorMatchesCauchyIntegral) {
    const CrackSetup cs = setup(0.5);
    const PlaneFactorization pf(cs, 400);
    for (C z : {C(0.0, 1.0 / cs.v_l()), C(0.7, 0.5)})
        for (int j = 1; j <= 2; ++j)
            EXPECT_LT(std::abs(pf.interior(j, z) - omega_plus_plane(j, z, cs)), 1e-6) << j << z;
    EXPECT_THROW(omega_plus_plane(1, C(0.3, -1.0), cs), DomainError);
}
